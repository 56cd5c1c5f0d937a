#include "addtop/monoidal.hpp"

namespace addtop {

UClass classifyU(const CatPtr& c, const std::vector<Morphism>& u) {
    if (!c->monoidal) throw Unsupported("classifyU: no monoidal structure");
    int unit = c->monoidal->unit;
    for (const auto& ui : u)
        if (ui.tgt != unit) throw TargetMismatch("classifyU: component does not target the unit");
    bool zero = true;
    for (const auto& ui : u)
        if (!ui.isZero()) zero = false;
    if (zero) return UClass::Zero;

    int n = static_cast<int>(c->numObjects());
    for (int a = 0; a < n; ++a) {
        Matrix m(c->field, 0, c->dim(unit, a));
        for (const auto& ui : u) m = m.vstack(c->precompositionMatrix(ui, a));
        if (kernelBasis(m).cols() != 0) return UClass::InU;
    }

    // the (Ex) test needs the pairwise tensors; WindowOverflow propagates
    std::vector<std::vector<Morphism>> lhs(u.size()), rhs(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            lhs[i].push_back(c->tensorMor(u[i], c->identity(u[j].src))); // u_i⊗U_j
            rhs[i].push_back(c->tensorMor(c->identity(u[i].src), u[j])); // U_i⊗u_j
        }
    for (int a = 0; a < n; ++a) {
        Matrix m1(c->field, 0, c->dim(unit, a));
        std::vector<std::size_t> coff{0};
        for (const auto& ui : u) {
            m1 = m1.vstack(c->precompositionMatrix(ui, a));
            coff.push_back(coff.back() + c->dim(ui.src, a));
        }
        std::size_t rows = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j) rows += c->dim(lhs[i][j].src, a);
        Matrix t(c->field, rows, coff.back());
        std::size_t ro = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j) {
                Matrix bl = c->precompositionMatrix(lhs[i][j], a);
                Matrix br = c->precompositionMatrix(rhs[i][j], a);
                for (std::size_t r = 0; r < bl.rows(); ++r) {
                    for (std::size_t k = 0; k < bl.cols(); ++k)
                        t.at(ro + r, coff[j] + k) = t.at(ro + r, coff[j] + k) + bl.at(r, k);
                    for (std::size_t k = 0; k < br.cols(); ++k)
                        t.at(ro + r, coff[i] + k) = t.at(ro + r, coff[i] + k) - br.at(r, k);
                }
                ro += bl.rows();
            }
        if (kernelBasis(t).cols() != rank(m1)) return UClass::InUep;
    }
    return UClass::InUex;
}

FormalSequence sigmaSequence(const CatPtr& c, const std::vector<Morphism>& u, int X) {
    if (!c->monoidal) throw Unsupported("sigmaSequence: no monoidal structure");
    FormalSequence s;
    s.cat = c;
    s.target = c->tensorObjOrThrow(c->monoidal->unit, X);
    Morphism idX = c->identity(X);
    for (const auto& ui : u) {
        Morphism q = c->tensorMor(ui, idX);
        s.middle.push_back(q.src);
        s.q.push_back(q);
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            Morphism a = c->tensorMor(c->tensorMor(u[i], c->identity(u[j].src)), idX);
            Morphism b = c->tensorMor(c->tensorMor(c->identity(u[i].src), u[j]), idX);
            std::vector<Morphism> row;
            for (std::size_t k = 0; k < u.size(); ++k)
                row.push_back(c->zeroMorphism(a.src, s.middle[k]));
            row[j].coords = row[j].coords + a.coords;
            row[i].coords = row[i].coords - b.coords;
            s.left.push_back(a.src);
            s.p.push_back(std::move(row));
        }
    validateSequence(s);
    return s;
}

TvResult tvPretopology(const CatPtr& c, const std::vector<std::vector<Morphism>>& V) {
    if (!c->monoidal) throw Unsupported("tvPretopology: no monoidal structure");
    TvResult out;
    out.pretopology = Pretopology{
        c, {}, 8, "tensor translate of a unit sequence; both axioms hold by translation"};
    for (int x = 0; x < static_cast<int>(c->numObjects()); ++x)
        for (std::size_t i = 0; i < V.size(); ++i) {
            try {
                out.pretopology.sequences.push_back(sigmaSequence(c, V[i], x));
            } catch (const WindowOverflow&) {
                out.clips.push_back("family " + std::to_string(i) + " at " + c->objects[x]);
            }
        }
    return out;
}

MonoidalCheckResult monoidalCheck(const Topology& t) {
    const CatPtr& c = t.cat;
    if (!c->monoidal) throw Unsupported("monoidalCheck: no monoidal structure");
    MonoidalCheckResult out;
    int n = static_cast<int>(c->numObjects());
    // -⊗A truncates the covering data of the topology whenever some object
    // leaves the window under it; a failed comparison there is a clip, not
    // a counterexample
    std::vector<bool> truncated(n, false);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j)
            if (!c->monoidal->tensorObj(j, a)) truncated[a] = true;
    for (int x = 0; x < n; ++x) {
        auto gens = sieveGenerators(t.minSieve[x]);
        for (int a = 0; a < n; ++a) {
            auto xa = c->monoidal->tensorObj(x, a);
            bool clipped = !xa;
            std::vector<Morphism> tens;
            for (const auto& g : gens) {
                if (clipped) break;
                if (!c->monoidal->tensorObj(g.src, a)) {
                    clipped = true;
                    break;
                }
                tens.push_back(c->tensorMor(g, c->identity(a)));
            }
            if (!clipped && !covers(t, generatedSieve(c, *xa, tens))) {
                if (truncated[a]) {
                    clipped = true;
                } else {
                    out.ok = false;
                    out.witness = "minimal covering of " + c->objects[x] +
                                  " not covering after (x) " + c->objects[a];
                    return out;
                }
            }
            if (clipped) out.clips.push_back(c->objects[x] + " (x) " + c->objects[a]);
        }
    }
    return out;
}

ShHomResult projHom(unsigned n, int d, int window, std::size_t maxStage) {
    if (window < 3) throw ShapeError("projHom: window must be at least 3");
    int lo = std::min(d, 0);
    int hi = std::max(d, 0) + window;
    CatPtr c = gradedWindow(Field::rationals(), n, lo, hi);
    int s1 = c->objIndex(gradedLabel(1));
    int s0 = c->objIndex(gradedLabel(0));
    std::vector<Morphism> v;
    for (std::size_t k = 0; k < c->dim(s1, s0); ++k) v.push_back(c->basisMorphism(s1, s0, k));
    TvResult tv = tvPretopology(c, {v});
    return shHomVia(tv.pretopology, c->objIndex(gradedLabel(d)), s0, maxStage);
}

} // namespace addtop
