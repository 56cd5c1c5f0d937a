#include "addtop/presheaf.hpp"

#include <cmath>

namespace addtop {

Matrix Presheaf::action(const Morphism& f) const {
    Matrix out = Matrix::zero(cat->field, dims[f.src], dims[f.tgt]);
    auto it = act.find({f.src, f.tgt});
    if (it == act.end()) return out;
    for (std::size_t k = 0; k < it->second.size(); ++k)
        if (!f.coords.at(k, 0).isZero())
            out = out + it->second[k].scaled(f.coords.at(k, 0));
    return out;
}

Presheaf Presheaf::zero(const CatPtr& c) {
    Presheaf F;
    F.cat = c;
    F.dims.assign(c->numObjects(), 0);
    for (int a = 0; a < static_cast<int>(c->numObjects()); ++a)
        for (int b = 0; b < static_cast<int>(c->numObjects()); ++b)
            F.act[{a, b}].assign(c->dim(a, b), Matrix::zero(c->field, 0, 0));
    return F;
}

bool Presheaf::isZeroPresheaf() const {
    for (std::size_t d : dims)
        if (d != 0) return false;
    return true;
}

ValidationReport validatePresheaf(const Presheaf& F) {
    ValidationReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    const auto& c = *F.cat;
    int n = static_cast<int>(c.numObjects());
    for (int o = 0; o < n; ++o)
        if (!(F.action(c.identity(o)) == Matrix::identity(c.field, F.dims[o])))
            fail("F(id) != id at " + c.objects[o]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                for (std::size_t i = 0; i < c.dim(a, b); ++i)
                    for (std::size_t j = 0; j < c.dim(b, d); ++j) {
                        Morphism f = c.basisMorphism(a, b, i);
                        Morphism g = c.basisMorphism(b, d, j);
                        Matrix lhs = F.action(c.compose(g, f));
                        Matrix rhs = F.basisAction(a, b, i) * F.basisAction(b, d, j);
                        if (!(lhs == rhs))
                            fail("functoriality fails on (" + c.basisLabel(a, b, i) + ", " +
                                 c.basisLabel(b, d, j) + ")");
                    }
    return rep;
}

ValidationReport validateMap(const Presheaf& F, const Presheaf& G, const PresheafMap& phi) {
    ValidationReport rep;
    const auto& c = *F.cat;
    int n = static_cast<int>(c.numObjects());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (std::size_t k = 0; k < c.dim(a, b); ++k)
                if (!(phi.comp[a] * F.basisAction(a, b, k) ==
                      G.basisAction(a, b, k) * phi.comp[b])) {
                    rep.ok = false;
                    rep.violations.push_back("naturality fails at " + c.basisLabel(a, b, k));
                }
    return rep;
}

Presheaf representable(const CatPtr& c, int X) {
    if (X < 0 || X >= static_cast<int>(c->numObjects()))
        throw UnknownObject("representable: bad object index");
    Presheaf F;
    F.cat = c;
    int n = static_cast<int>(c->numObjects());
    for (int b = 0; b < n; ++b) F.dims.push_back(c->dim(b, X));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Matrix> mats;
            for (std::size_t k = 0; k < c->dim(a, b); ++k)
                mats.push_back(c->precompositionMatrix(c->basisMorphism(a, b, k), X));
            F.act[{a, b}] = std::move(mats);
        }
    return F;
}

namespace {

std::vector<std::size_t> natOffsets(const Presheaf& F, const Presheaf& G, std::size_t& total) {
    std::vector<std::size_t> off;
    total = 0;
    for (std::size_t o = 0; o < F.dims.size(); ++o) {
        off.push_back(total);
        total += F.dims[o] * G.dims[o];
    }
    return off;
}

PresheafMap unflatten(const Presheaf& F, const Presheaf& G, const Matrix& v,
                      const std::vector<std::size_t>& off) {
    PresheafMap m;
    for (std::size_t o = 0; o < F.dims.size(); ++o) {
        Matrix t(F.cat->field, G.dims[o], F.dims[o]);
        for (std::size_t i = 0; i < G.dims[o]; ++i)
            for (std::size_t j = 0; j < F.dims[o]; ++j)
                t.at(i, j) = v.at(off[o] + i * F.dims[o] + j, 0);
        m.comp.push_back(std::move(t));
    }
    return m;
}

} // namespace

NatSpace natSpace(const Presheaf& F, const Presheaf& G) {
    const auto& c = *F.cat;
    const Field& f = c.field;
    std::size_t total = 0;
    auto off = natOffsets(F, G, total);

    // rows: one block per basis morphism a->b, of size dims_G(a) * dims_F(b)
    std::vector<std::tuple<int, int, std::size_t>> basisMors;
    int n = static_cast<int>(c.numObjects());
    std::size_t nRows = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (std::size_t k = 0; k < c.dim(a, b); ++k) {
                basisMors.emplace_back(a, b, k);
                nRows += G.dims[a] * F.dims[b];
            }

    Matrix sys(f, nRows, total);
    std::size_t row = 0;
    for (auto& [a, b, k] : basisMors) {
        const Matrix& Ff = F.basisAction(a, b, k); // F(b) -> F(a)
        const Matrix& Gf = G.basisAction(a, b, k); // G(b) -> G(a)
        // t_a * Ff - Gf * t_b = 0
        for (std::size_t i = 0; i < G.dims[a]; ++i)
            for (std::size_t j = 0; j < F.dims[b]; ++j) {
                for (std::size_t m = 0; m < F.dims[a]; ++m)
                    sys.at(row, off[a] + i * F.dims[a] + m) =
                        sys.at(row, off[a] + i * F.dims[a] + m) + Ff.at(m, j);
                for (std::size_t m = 0; m < G.dims[b]; ++m)
                    sys.at(row, off[b] + m * F.dims[b] + j) =
                        sys.at(row, off[b] + m * F.dims[b] + j) - Gf.at(i, m);
                ++row;
            }
    }

    Matrix k = kernelBasis(sys);
    NatSpace out;
    out.dim = k.cols();
    for (std::size_t j = 0; j < k.cols(); ++j) out.basis.push_back(unflatten(F, G, k.col(j), off));
    return out;
}

PresheafMap zeroMap(const Presheaf& F, const Presheaf& G) {
    PresheafMap m;
    for (std::size_t o = 0; o < F.dims.size(); ++o)
        m.comp.push_back(Matrix::zero(F.cat->field, G.dims[o], F.dims[o]));
    return m;
}

PresheafMap identityMap(const Presheaf& F) {
    PresheafMap m;
    for (std::size_t o = 0; o < F.dims.size(); ++o)
        m.comp.push_back(Matrix::identity(F.cat->field, F.dims[o]));
    return m;
}

PresheafMap composeMaps(const PresheafMap& g, const PresheafMap& f) {
    PresheafMap m;
    for (std::size_t o = 0; o < f.comp.size(); ++o) m.comp.push_back(g.comp[o] * f.comp[o]);
    return m;
}

PresheafMap addMaps(const PresheafMap& a, const PresheafMap& b) {
    PresheafMap m;
    for (std::size_t o = 0; o < a.comp.size(); ++o) m.comp.push_back(a.comp[o] + b.comp[o]);
    return m;
}

PresheafMap scaleMap(const PresheafMap& a, const Scalar& c) {
    PresheafMap m;
    for (std::size_t o = 0; o < a.comp.size(); ++o) m.comp.push_back(a.comp[o].scaled(c));
    return m;
}

bool mapsEqual(const PresheafMap& a, const PresheafMap& b) {
    if (a.comp.size() != b.comp.size()) return false;
    for (std::size_t o = 0; o < a.comp.size(); ++o)
        if (!(a.comp[o] == b.comp[o])) return false;
    return true;
}

bool isIsoMap(const Presheaf& F, const Presheaf& G, const PresheafMap& phi) {
    for (std::size_t o = 0; o < F.dims.size(); ++o) {
        if (F.dims[o] != G.dims[o]) return false;
        if (rank(phi.comp[o]) != F.dims[o]) return false;
    }
    return true;
}

bool isMonoMap(const PresheafMap& phi) {
    for (const auto& m : phi.comp)
        if (kernelBasis(m).cols() != 0) return false;
    return true;
}

namespace {

// Greedy extension of span(base) by columns of ext; returns the chosen
// columns of ext as a matrix (deterministic: first-fit order).
Matrix extendSpan(const Matrix& base, const Matrix& ext) {
    Matrix acc = base;
    Matrix picked(base.field(), base.rows(), 0);
    for (std::size_t j = 0; j < ext.cols(); ++j) {
        Matrix v = ext.col(j);
        if (rank(acc.hstack(v)) > rank(acc)) {
            acc = acc.hstack(v);
            picked = picked.hstack(v);
        }
    }
    return picked;
}

// Quotient data at one object: reps (ambient coords) and the solver basis
// [reps | killed]; quotient coords of v = first reps.cols() rows of the
// solution of [reps | killed] x = v.
struct QuotientData {
    Matrix reps;
    Matrix solveBasis;
};

Matrix quotientCoords(const QuotientData& qd, const Matrix& v) {
    auto x = solve(qd.solveBasis, v);
    if (!x) throw Error("quotientCoords: vector outside subspace");
    Matrix out(v.field(), qd.reps.cols(), v.cols());
    for (std::size_t i = 0; i < qd.reps.cols(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) out.at(i, j) = x->at(i, j);
    return out;
}

} // namespace

KernelResult kernelPresheaf(const Presheaf& F, const Presheaf& G, const PresheafMap& phi) {
    KernelResult out;
    out.ker.cat = F.cat;
    const Field& f = F.cat->field;
    std::vector<Matrix> bases; // kernel basis per object, in F(o) coords
    for (std::size_t o = 0; o < F.dims.size(); ++o) {
        Matrix k = kernelBasis(phi.comp[o]);
        out.ker.dims.push_back(k.cols());
        bases.push_back(k);
        out.incl.comp.push_back(k);
    }
    int n = static_cast<int>(F.cat->numObjects());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Matrix> mats;
            for (std::size_t k = 0; k < F.cat->dim(a, b); ++k) {
                // F(f) maps ker_b into ker_a; express in the kernel bases
                Matrix img = F.basisAction(a, b, k) * bases[b];
                auto x = solve(bases[a], img);
                if (!x) throw Error("kernelPresheaf: action does not preserve kernel");
                mats.push_back(*x);
            }
            out.ker.act[{a, b}] = std::move(mats);
        }
    (void)f;
    return out;
}

Presheaf homology(const Presheaf& F, const Presheaf& G, const Presheaf& H, const PresheafMap& p,
                  const PresheafMap& q) {
    const Field& f = F.cat->field;
    std::vector<QuotientData> qds;
    Presheaf out;
    out.cat = F.cat;
    for (std::size_t o = 0; o < G.dims.size(); ++o) {
        if (!(q.comp[o] * p.comp[o]).isZero()) throw NotAComplex("homology: q∘p != 0");
        Matrix K = kernelBasis(q.comp[o]);
        Matrix I = colSpanBasis(p.comp[o]);
        Matrix reps = extendSpan(I, K);
        qds.push_back(QuotientData{reps, reps.hstack(I)});
        out.dims.push_back(reps.cols());
    }
    (void)H;
    int n = static_cast<int>(F.cat->numObjects());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Matrix> mats;
            for (std::size_t k = 0; k < F.cat->dim(a, b); ++k) {
                Matrix img = G.basisAction(a, b, k) * qds[b].reps;
                mats.push_back(out.dims[a] == 0 && img.cols() == 0
                                   ? Matrix::zero(f, 0, 0)
                                   : quotientCoords(qds[a], img));
            }
            out.act[{a, b}] = std::move(mats);
        }
    ValidationReport rep = validatePresheaf(out);
    if (!rep.ok) throw ValidationError("homology: induced action invalid: " + rep.violations.front());
    return out;
}

Presheaf cokernelPresheaf(const Presheaf& F, const Presheaf& G, const PresheafMap& phi) {
    const Field& f = G.cat->field;
    std::vector<QuotientData> qds;
    Presheaf out;
    out.cat = G.cat;
    for (std::size_t o = 0; o < G.dims.size(); ++o) {
        Matrix I = colSpanBasis(phi.comp[o]);
        Matrix reps = extendSpan(I, Matrix::identity(f, G.dims[o]));
        qds.push_back(QuotientData{reps, reps.hstack(I)});
        out.dims.push_back(reps.cols());
    }
    int n = static_cast<int>(G.cat->numObjects());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Matrix> mats;
            for (std::size_t k = 0; k < G.cat->dim(a, b); ++k) {
                Matrix img = G.basisAction(a, b, k) * qds[b].reps;
                mats.push_back(quotientCoords(qds[a], img));
            }
            out.act[{a, b}] = std::move(mats);
        }
    ValidationReport rep = validatePresheaf(out);
    if (!rep.ok)
        throw ValidationError("cokernel: induced action invalid: " + rep.violations.front());
    return out;
}

std::vector<Presheaf> enumeratePresheaves(const CatPtr& c, std::size_t maxDim, std::size_t cap) {
    if (c->field.kind != Field::Kind::Fp) throw Unsupported("enumeratePresheaves over Q");
    unsigned p = c->field.p;
    int n = static_cast<int>(c->numObjects());
    std::vector<std::tuple<int, int, std::size_t>> basisMors;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (std::size_t k = 0; k < c->dim(a, b); ++k) basisMors.emplace_back(a, b, k);

    std::vector<Presheaf> out;
    std::vector<std::size_t> dims(n, 0);
    while (true) {
        // candidate count for this dim tuple
        double logTotal = 0;
        for (auto& [a, b, k] : basisMors) logTotal += static_cast<double>(dims[a] * dims[b]);
        if (logTotal * std::log2(static_cast<double>(p)) <= 52) {
            std::size_t total = 1;
            for (auto& [a, b, k] : basisMors) {
                for (std::size_t e = 0; e < dims[a] * dims[b]; ++e) {
                    total *= p;
                    if (total > cap) throw TooLarge("enumeratePresheaves: candidate cap");
                }
            }
            for (std::size_t code = 0; code < total; ++code) {
                Presheaf F;
                F.cat = c;
                F.dims = dims;
                std::size_t cc = code;
                for (auto& [a, b, k] : basisMors) {
                    Matrix m(c->field, dims[a], dims[b]);
                    for (std::size_t e = 0; e < dims[a] * dims[b]; ++e) {
                        m.at(e / dims[b], e % dims[b]) =
                            Scalar::ofInt(c->field, static_cast<long>(cc % p));
                        cc /= p;
                    }
                    F.act[{a, b}].push_back(std::move(m));
                }
                // fill empty hom entries
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (!F.act.count({a, b}))
                            F.act[{a, b}] = {};
                if (validatePresheaf(F).ok) out.push_back(std::move(F));
            }
        } else {
            throw TooLarge("enumeratePresheaves: candidate cap");
        }
        // next dim tuple (mixed radix, maxDim+1)
        int i = 0;
        while (i < n && dims[i] == maxDim) dims[i++] = 0;
        if (i == n) break;
        ++dims[i];
    }
    return out;
}

} // namespace addtop
