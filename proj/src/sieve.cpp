#include "addtop/sieve.hpp"

namespace addtop {

bool Sieve::isMaximal() const {
    for (std::size_t b = 0; b < spans.size(); ++b)
        if (spans[b].cols() != cat->dim(static_cast<int>(b), apex)) return false;
    return true;
}

bool Sieve::isZeroSieve() const {
    for (const auto& m : spans)
        if (m.cols() != 0) return false;
    return true;
}

Sieve maximalSieve(const CatPtr& c, int apex) {
    Sieve s{c, apex, {}};
    for (int b = 0; b < static_cast<int>(c->numObjects()); ++b)
        s.spans.push_back(Matrix::identity(c->field, c->dim(b, apex)));
    return s;
}

Sieve zeroSieve(const CatPtr& c, int apex) {
    Sieve s{c, apex, {}};
    for (int b = 0; b < static_cast<int>(c->numObjects()); ++b)
        s.spans.push_back(Matrix::zero(c->field, c->dim(b, apex), 0));
    return s;
}

Sieve generatedSieve(const CatPtr& c, int apex, const std::vector<Morphism>& v) {
    for (const auto& m : v)
        if (m.tgt != apex) throw TargetMismatch("generatedSieve: generator target != apex");
    Sieve s{c, apex, {}};
    for (int b = 0; b < static_cast<int>(c->numObjects()); ++b) {
        Matrix acc(c->field, c->dim(b, apex), 0);
        for (const auto& m : v) acc = acc.hstack(c->postcompositionMatrix(m, b));
        s.spans.push_back(colSpanBasis(acc));
    }
    return s;
}

Sieve pullbackSieve(const Sieve& R, const Morphism& f) {
    if (f.tgt != R.apex) throw TargetMismatch("pullbackSieve: target(f) != apex");
    const CatPtr& c = R.cat;
    Sieve s{c, f.src, {}};
    for (int b = 0; b < static_cast<int>(c->numObjects()); ++b)
        s.spans.push_back(preimage(c->postcompositionMatrix(f, b), R.spans[b]));
    return s;
}

bool sieveContains(const Sieve& sub, const Sieve& sup) {
    if (sub.apex != sup.apex) throw ApexMismatch("sieveContains: apex mismatch");
    for (std::size_t b = 0; b < sub.spans.size(); ++b)
        if (!spanContains(sub.spans[b], sup.spans[b])) return false;
    return true;
}

Sieve sieveIntersection(const Sieve& R, const Sieve& S) {
    if (R.apex != S.apex) throw ApexMismatch("sieveIntersection: apex mismatch");
    Sieve out{R.cat, R.apex, {}};
    for (std::size_t b = 0; b < R.spans.size(); ++b)
        out.spans.push_back(spanOps(R.spans[b], S.spans[b]).intersection);
    return out;
}

Sieve sieveSum(const Sieve& R, const Sieve& S) {
    if (R.apex != S.apex) throw ApexMismatch("sieveSum: apex mismatch");
    Sieve out{R.cat, R.apex, {}};
    for (std::size_t b = 0; b < R.spans.size(); ++b)
        out.spans.push_back(colSpanBasis(R.spans[b].hstack(S.spans[b])));
    return out;
}

SieveOps sieveOps(const Sieve& R, const Sieve& S) {
    SieveOps out{sieveIntersection(R, S), sieveContains(R, S), false};
    out.equals = out.contains && sieveContains(S, R);
    return out;
}

bool sieveMember(const Sieve& R, const Morphism& f) {
    if (f.tgt != R.apex) throw TargetMismatch("sieveMember: target != apex");
    return spanContains(f.coords, R.spans[f.src]);
}

bool isClosedSieve(const Sieve& R) {
    const CatPtr& c = R.cat;
    int n = static_cast<int>(c->numObjects());
    for (int b = 0; b < n; ++b)
        for (int cc = 0; cc < n; ++cc)
            for (std::size_t k = 0; k < c->dim(cc, b); ++k) {
                Matrix pre = c->precompositionMatrix(c->basisMorphism(cc, b, k), R.apex);
                if (!spanContains(pre * R.spans[b], R.spans[cc])) return false;
            }
    return true;
}

std::vector<Sieve> enumerateSieves(const CatPtr& c, int X, std::size_t cap) {
    if (c->field.kind != Field::Kind::Fp) throw Unsupported("enumerateSieves over Q");
    int n = static_cast<int>(c->numObjects());
    std::vector<std::vector<Matrix>> cands;
    std::size_t total = 1;
    for (int b = 0; b < n; ++b) {
        cands.push_back(allSubspaces(c->field, c->dim(b, X)));
        total *= cands.back().size();
        if (total > cap) throw TooLarge("enumerateSieves: cap exceeded");
    }
    std::vector<Sieve> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Sieve s{c, X, {}};
        for (int b = 0; b < n; ++b) s.spans.push_back(cands[b][idx[b]]);
        if (isClosedSieve(s)) out.push_back(s);
        int i = 0;
        while (i < n && idx[i] + 1 == cands[i].size()) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
    }
    return out;
}

SievePresheaf sieveAsPresheaf(const Sieve& R) {
    const CatPtr& c = R.cat;
    int n = static_cast<int>(c->numObjects());
    SievePresheaf out;
    out.F.cat = c;
    for (int b = 0; b < n; ++b) {
        out.F.dims.push_back(R.spans[b].cols());
        out.incl.comp.push_back(R.spans[b]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Matrix> mats;
            for (std::size_t k = 0; k < c->dim(a, b); ++k) {
                Matrix pre = c->precompositionMatrix(c->basisMorphism(a, b, k), R.apex);
                auto x = solve(R.spans[a], pre * R.spans[b]);
                if (!x) throw Error("sieveAsPresheaf: sieve not closed");
                mats.push_back(*x);
            }
            out.F.act[{a, b}] = std::move(mats);
        }
    return out;
}

std::vector<Morphism> sieveGenerators(const Sieve& R) {
    std::vector<Morphism> gens;
    for (int b = 0; b < static_cast<int>(R.spans.size()); ++b)
        for (std::size_t j = 0; j < R.spans[b].cols(); ++j)
            gens.push_back(Morphism{b, R.apex, R.spans[b].col(j)});
    return gens;
}

} // namespace addtop
