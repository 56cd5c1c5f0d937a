#pragma once

// Independent brute-force oracles for the acceptance suite. These avoid the
// library's minimal-sieve representation on purpose: covering systems are
// handled as literal up-closed families of sieves, with the axioms checked
// by direct quantification over all morphisms of the (finite) F_p category.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "addtop/lincat.hpp"

namespace oracle {

using addtop::allSubspaces;
using addtop::allVectors;
using addtop::CatPtr;
using addtop::colSpanBasis;
using addtop::Matrix;
using addtop::Morphism;
using addtop::spanContains;

struct OSieve {
    int apex = -1;
    std::vector<Matrix> spans; // canonical per object

    bool operator==(const OSieve& o) const { return apex == o.apex && spans == o.spans; }
    bool operator<(const OSieve& o) const {
        if (apex != o.apex) return apex < o.apex;
        for (std::size_t b = 0; b < spans.size(); ++b) {
            if (spans[b].cols() != o.spans[b].cols()) return spans[b].cols() < o.spans[b].cols();
            for (std::size_t i = 0; i < spans[b].rows(); ++i)
                for (std::size_t j = 0; j < spans[b].cols(); ++j) {
                    long a = spans[b].at(i, j).residue(), bb = o.spans[b].at(i, j).residue();
                    if (a != bb) return a < bb;
                }
        }
        return false;
    }
};

inline bool oMember(const CatPtr& c, const OSieve& R, const Morphism& f) {
    (void)c;
    return spanContains(f.coords, R.spans[f.src]);
}

// all subfunctors of hom(-, X), by raw closure check over all morphisms
inline std::vector<OSieve> oracleSieves(const CatPtr& c, int X) {
    int n = static_cast<int>(c->numObjects());
    std::vector<std::vector<Matrix>> perObj;
    for (int b = 0; b < n; ++b) perObj.push_back(allSubspaces(c->field, c->dim(b, X)));
    std::vector<OSieve> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        OSieve s{X, {}};
        for (int b = 0; b < n; ++b) s.spans.push_back(perObj[b][idx[b]]);
        bool closed = true;
        for (int b = 0; b < n && closed; ++b)
            for (int cc = 0; cc < n && closed; ++cc)
                for (const auto& gv : allVectors(c->field, c->dim(cc, b))) {
                    Morphism g{cc, b, gv};
                    for (std::size_t j = 0; j < s.spans[b].cols(); ++j) {
                        Morphism f{b, X, s.spans[b].col(j)};
                        if (!spanContains(c->compose(f, g).coords, s.spans[cc])) {
                            closed = false;
                            break;
                        }
                    }
                    if (!closed) break;
                }
        if (closed) out.push_back(std::move(s));
        int i = 0;
        while (i < n && idx[i] + 1 == perObj[i].size()) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
    }
    return out;
}

inline OSieve oPullback(const CatPtr& c, const OSieve& R, const Morphism& f) {
    // {g : f∘g ∈ R}, by enumerating all g (desk-scale F_p instances only)
    int n = static_cast<int>(c->numObjects());
    OSieve out{f.src, {}};
    for (int cc = 0; cc < n; ++cc) {
        Matrix acc(c->field, c->dim(cc, f.src), 0);
        for (const auto& gv : allVectors(c->field, c->dim(cc, f.src))) {
            Morphism g{cc, f.src, gv};
            Morphism comp = c->compose(f, g);
            if (spanContains(comp.coords, R.spans[cc])) acc = acc.hstack(gv);
        }
        out.spans.push_back(colSpanBasis(acc));
    }
    return out;
}

inline OSieve oMaximal(const CatPtr& c, int X) {
    OSieve s{X, {}};
    for (int b = 0; b < static_cast<int>(c->numObjects()); ++b)
        s.spans.push_back(Matrix::identity(c->field, c->dim(b, X)));
    return s;
}

// A covering system candidate: one set of sieves per object.
using OFamily = std::vector<std::set<OSieve>>;

// Enumerate all Grothendieck topologies as literal up-closed families with
// (T1)-(T3) checked directly; no minimal-sieve shortcut anywhere.
inline std::vector<OFamily> oracleTopologies(const CatPtr& c) {
    int n = static_cast<int>(c->numObjects());
    std::vector<std::vector<OSieve>> sieves;
    for (int x = 0; x < n; ++x) sieves.push_back(oracleSieves(c, x));

    auto containsSieve = [](const OSieve& sub, const OSieve& sup) {
        for (std::size_t b = 0; b < sub.spans.size(); ++b)
            if (!spanContains(sub.spans[b], sup.spans[b])) return false;
        return true;
    };

    // up-closed subsets containing the maximal sieve, per object
    std::vector<std::vector<std::set<OSieve>>> upSets(n);
    for (int x = 0; x < n; ++x) {
        std::size_t m = sieves[x].size();
        for (std::size_t mask = 0; mask < (1u << m); ++mask) {
            std::set<OSieve> fam;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) fam.insert(sieves[x][i]);
            if (!fam.count(oMaximal(c, x))) continue;
            bool upClosed = true;
            for (const auto& r : fam)
                for (const auto& s : sieves[x])
                    if (containsSieve(r, s) && !fam.count(s)) upClosed = false;
            if (upClosed) upSets[x].push_back(std::move(fam));
        }
    }

    std::vector<OFamily> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        OFamily fam;
        for (int x = 0; x < n; ++x) fam.push_back(upSets[x][idx[x]]);
        bool ok = true;
        // (T2)
        for (int a = 0; a < n && ok; ++a)
            for (const auto& R : fam[a])
                for (int b = 0; b < n && ok; ++b)
                    for (const auto& fv : allVectors(c->field, c->dim(b, a))) {
                        Morphism f{b, a, fv};
                        if (!fam[b].count(oPullback(c, R, f))) { ok = false; break; }
                    }
        // (T3)
        for (int a = 0; a < n && ok; ++a)
            for (const auto& S : sieves[a]) {
                if (fam[a].count(S)) continue;
                for (const auto& R : fam[a]) {
                    bool premise = true;
                    for (int b = 0; b < n && premise; ++b)
                        for (const auto& coef : allVectors(c->field, R.spans[b].cols())) {
                            Morphism f{b, a, R.spans[b] * coef};
                            if (!fam[b].count(oPullback(c, S, f))) { premise = false; break; }
                        }
                    if (premise) { ok = false; break; }
                }
                if (!ok) break;
            }
        if (ok) out.push_back(std::move(fam));
        int i = 0;
        while (i < n && idx[i] + 1 == upSets[i].size()) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
    }
    return out;
}

// Čech H^0 of the degree-d twist on projective n-space, on the standard
// affine cover. Sections are Laurent monomial spans with the negative
// exponent truncated at -B; the kernel of the difference map on double
// overlaps has no truncation artifacts, so it equals the global sections
// once B exceeds |d|.
inline void cechEnum(const std::vector<long>& lo, long d, std::size_t k, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
    long rest = d;
    for (long c : cur) rest -= c;
    if (k + 1 == lo.size()) {
        if (rest >= lo[k]) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    long tail = 0;
    for (std::size_t j = k + 1; j < lo.size(); ++j) tail += lo[j];
    for (long v = lo[k]; v <= rest - tail; ++v) {
        cur.push_back(v);
        cechEnum(lo, d, k + 1, cur, out);
        cur.pop_back();
    }
}

inline std::size_t cechH0(unsigned n, long d, long B = 4) {
    using addtop::Field;
    Field f = Field::rationals();
    std::vector<std::vector<std::vector<long>>> c0(n + 1);
    std::vector<std::size_t> off0{0};
    for (unsigned i = 0; i <= n; ++i) {
        std::vector<long> lo(n + 1, 0);
        lo[i] = -B;
        std::vector<long> cur;
        cechEnum(lo, d, 0, cur, c0[i]);
        off0.push_back(off0.back() + c0[i].size());
    }
    std::size_t rows = 0;
    std::vector<std::map<std::vector<long>, std::size_t>> rowIdx;
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
            std::vector<long> lo(n + 1, 0);
            lo[i] = lo[j] = -B;
            std::vector<std::vector<long>> mono;
            std::vector<long> cur;
            cechEnum(lo, d, 0, cur, mono);
            std::map<std::vector<long>, std::size_t> idx;
            for (const auto& m : mono) idx[m] = rows + idx.size();
            rows += mono.size();
            rowIdx.push_back(std::move(idx));
            pairs.push_back({i, j});
        }
    Matrix m(f, rows, off0.back());
    auto one = addtop::Scalar::one(f);
    for (unsigned i = 0; i <= n; ++i)
        for (std::size_t k = 0; k < c0[i].size(); ++k)
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (pairs[p].first != i && pairs[p].second != i) continue;
                std::size_t r = rowIdx[p].at(c0[i][k]);
                auto v = (pairs[p].second == i) ? one : -one;
                m.at(r, off0[i] + k) = m.at(r, off0[i] + k) + v;
            }
    return addtop::kernelBasis(m).cols();
}

} // namespace oracle
