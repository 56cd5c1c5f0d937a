#include "addtop/sheafify.hpp"

namespace addtop {

namespace {

// hstack of (v_a ∘ -): ⊕_a hom(W,V_a) -> hom(W,X)
Matrix factorMatrix(const CatPtr& c, const std::vector<Morphism>& gens, int W, int X) {
    Matrix phi(c->field, c->dim(W, X), 0);
    for (const auto& v : gens) phi = phi.hstack(c->postcompositionMatrix(v, W));
    return phi;
}

} // namespace

NatPres natSieve(const Sieve& R, const Presheaf& F) {
    const CatPtr& c = R.cat;
    int n = static_cast<int>(c->numObjects());
    NatPres np;
    np.sieve = R;
    // any generating family presents the same Nat space; greedily drop the
    // echelon generators that are already composites of earlier ones
    {
        Sieve partial = zeroSieve(c, R.apex);
        for (const auto& g : sieveGenerators(R)) {
            if (sieveMember(partial, g)) continue;
            np.gens.push_back(g);
            partial = generatedSieve(c, R.apex, np.gens);
        }
    }
    np.offsets.push_back(0);
    for (const auto& v : np.gens) np.offsets.push_back(np.offsets.back() + F.dim(v.src));
    std::size_t total = np.offsets.back();

    Matrix constraints(c->field, 0, total);
    for (int w = 0; w < n; ++w) {
        Matrix phi = factorMatrix(c, np.gens, w, R.apex);
        Matrix rel = kernelBasis(phi);
        for (std::size_t j = 0; j < rel.cols(); ++j) {
            Matrix row(c->field, F.dim(w), total);
            std::size_t off = 0;
            for (std::size_t a = 0; a < np.gens.size(); ++a) {
                std::size_t hd = c->dim(w, np.gens[a].src);
                Matrix h(c->field, hd, 1);
                for (std::size_t i = 0; i < hd; ++i) h.at(i, 0) = rel.at(off + i, j);
                off += hd;
                Matrix block = F.action(Morphism{w, np.gens[a].src, h});
                for (std::size_t i = 0; i < row.rows(); ++i)
                    for (std::size_t jj = 0; jj < block.cols(); ++jj)
                        row.at(i, np.offsets[a] + jj) = block.at(i, jj);
            }
            constraints = constraints.vstack(row);
        }
    }
    np.basis = kernelBasis(constraints);
    return np;
}

Matrix evalNat(const NatPres& np, const Presheaf& F, const Morphism& w, const Matrix& y) {
    const CatPtr& c = F.cat;
    if (w.tgt != np.sieve.apex) throw TargetMismatch("evalNat: target != apex");
    Matrix phi = factorMatrix(c, np.gens, w.src, np.sieve.apex);
    auto h = solve(phi, w.coords);
    if (!h) throw Error("evalNat: morphism is not a member of the sieve");
    Matrix out(c->field, F.dim(w.src), 1);
    std::size_t off = 0;
    for (std::size_t a = 0; a < np.gens.size(); ++a) {
        std::size_t hd = c->dim(w.src, np.gens[a].src);
        Matrix ha(c->field, hd, 1);
        for (std::size_t i = 0; i < hd; ++i) ha.at(i, 0) = h->at(off + i, 0);
        off += hd;
        Matrix ya(c->field, F.dim(np.gens[a].src), 1);
        for (std::size_t i = 0; i < ya.rows(); ++i) ya.at(i, 0) = y.at(np.offsets[a] + i, 0);
        out = out + F.action(Morphism{w.src, np.gens[a].src, ha}) * ya;
    }
    return out;
}

namespace {

// tuple (F(v_a) x)_a for every column x of the identity on F(X), i.e. the
// matrix of the restriction F(X) -> Nat(R,F) in generator coordinates
Matrix restrictionTuple(const NatPres& np, const Presheaf& F, int X) {
    const Field& f = F.cat->field;
    Matrix out(f, np.offsets.back(), F.dim(X));
    for (std::size_t a = 0; a < np.gens.size(); ++a) {
        Matrix block = F.action(np.gens[a]);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                out.at(np.offsets[a] + i, j) = block.at(i, j);
    }
    return out;
}

Matrix sigmaComponent(const NatPres& np, const Presheaf& F, int X) {
    auto coords = solve(np.basis, restrictionTuple(np, F, X));
    if (!coords) throw ValidationError("sigma: restriction violates the relations");
    return *coords;
}

} // namespace

SigmaResult sigma(const Topology& t, const Presheaf& F) {
    const CatPtr& c = t.cat;
    int n = static_cast<int>(c->numObjects());
    SigmaResult out;
    out.presheaf.cat = c;
    for (int x = 0; x < n; ++x) {
        out.pres.push_back(natSieve(t.minSieve[x], F));
        out.presheaf.dims.push_back(out.pres.back().basis.cols());
        out.map.comp.push_back(sigmaComponent(out.pres[x], F, x));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Matrix> mats;
            for (std::size_t k = 0; k < c->dim(a, b); ++k) {
                Morphism g = c->basisMorphism(a, b, k);
                Matrix z(c->field, out.pres[a].offsets.back(), out.presheaf.dims[b]);
                for (std::size_t j = 0; j < out.presheaf.dims[b]; ++j) {
                    Matrix y = out.pres[b].basis.col(j);
                    for (std::size_t m = 0; m < out.pres[a].gens.size(); ++m) {
                        Matrix val =
                            evalNat(out.pres[b], F, c->compose(g, out.pres[a].gens[m]), y);
                        for (std::size_t i = 0; i < val.rows(); ++i)
                            z.at(out.pres[a].offsets[m] + i, j) = val.at(i, 0);
                    }
                }
                auto coords = solve(out.pres[a].basis, z);
                if (!coords) throw ValidationError("sigma: action violates the relations");
                mats.push_back(*coords);
            }
            out.presheaf.act[{a, b}] = std::move(mats);
        }
    return out;
}

PresheafMap sigmaOnMap(const SigmaResult& sF, const SigmaResult& sG, const PresheafMap& phi) {
    PresheafMap out;
    for (std::size_t x = 0; x < sF.pres.size(); ++x) {
        const NatPres& a = sF.pres[x];
        const NatPres& b = sG.pres[x];
        const Field& f = a.basis.field();
        Matrix z(f, b.offsets.back(), a.basis.cols());
        for (std::size_t j = 0; j < a.basis.cols(); ++j)
            for (std::size_t m = 0; m < a.gens.size(); ++m) {
                Matrix ya(f, a.offsets[m + 1] - a.offsets[m], 1);
                for (std::size_t i = 0; i < ya.rows(); ++i)
                    ya.at(i, 0) = a.basis.at(a.offsets[m] + i, j);
                Matrix val = phi.comp[a.gens[m].src] * ya;
                for (std::size_t i = 0; i < val.rows(); ++i)
                    z.at(b.offsets[m] + i, j) = val.at(i, 0);
            }
        auto coords = solve(b.basis, z);
        if (!coords) throw ValidationError("sigmaOnMap: image violates the relations");
        out.comp.push_back(*coords);
    }
    return out;
}

SheafificationResult sheafifyOp(const Topology& t, const Presheaf& F) {
    SheafificationResult out;
    out.stage = sigma(t, F);
    SigmaResult s2 = sigma(t, out.stage.presheaf);
    out.unit = composeMaps(sigmaOnMap(out.stage, s2, out.stage.map), out.stage.map);
    out.sheaf = s2.presheaf;
    if (!isSheaf(t, out.sheaf)) throw ValidationError("sheafifyOp: result is not a sheaf");
    if (isSheaf(t, F) && !isIsoMap(F, out.sheaf, out.unit))
        throw ValidationError("sheafifyOp: unit not iso on a sheaf");
    return out;
}

bool isSheaf(const Topology& t, const Presheaf& F) {
    for (int x = 0; x < static_cast<int>(t.cat->numObjects()); ++x) {
        NatPres np = natSieve(t.minSieve[x], F);
        if (np.basis.cols() != F.dim(x)) return false;
        if (rank(sigmaComponent(np, F, x)) != F.dim(x)) return false;
    }
    return true;
}

bool isSeparated(const Topology& t, const Presheaf& F) {
    for (int x = 0; x < static_cast<int>(t.cat->numObjects()); ++x) {
        NatPres np = natSieve(t.minSieve[x], F);
        if (rank(sigmaComponent(np, F, x)) != F.dim(x)) return false;
    }
    return true;
}

Sieve refineSieve(const Topology& t, const Sieve& R) {
    std::vector<Morphism> comps;
    for (const auto& g : sieveGenerators(R))
        for (const auto& h : sieveGenerators(t.minSieve[g.src]))
            comps.push_back(t.cat->compose(g, h));
    return generatedSieve(t.cat, R.apex, comps);
}

namespace {

Sieve stabilizedSieve(const Topology& t, int x, std::size_t maxStage) {
    Sieve r = t.minSieve[x];
    for (std::size_t k = 0; k < maxStage; ++k) {
        Sieve next = refineSieve(t, r);
        if (next == r) return r;
        r = next;
    }
    throw Unstable("kernelOfZ: refinement chain did not stabilize");
}

} // namespace

std::vector<std::vector<Matrix>> kernelOfZ(const Topology& t, std::size_t maxStage) {
    const CatPtr& c = t.cat;
    int n = static_cast<int>(c->numObjects());
    std::vector<std::vector<Matrix>> out(n);
    for (int x = 0; x < n; ++x) {
        Sieve r = stabilizedSieve(t, x, maxStage);
        auto gens = sieveGenerators(r);
        for (int xp = 0; xp < n; ++xp) {
            Matrix m(c->field, 0, c->dim(x, xp));
            for (const auto& v : gens) m = m.vstack(c->precompositionMatrix(v, xp));
            out[x].push_back(colSpanBasis(kernelBasis(m)));
        }
    }
    return out;
}

ShHomResult shHomAlongChain(const CatPtr& c, int X, int Xp, const std::vector<Sieve>& chain) {
    Presheaf F = representable(c, Xp);
    ShHomResult out;
    out.stages.push_back(c->dim(X, Xp));

    NatPres np;
    Matrix connect(c->field, 0, 0);
    for (const Sieve& r : chain) {
        NatPres npn = natSieve(r, F);
        // the colimit formula needs epimorphic coverings: precomposition
        // with the covering generators must be injective on every hom(X,A)
        for (int a = 0; a < static_cast<int>(c->numObjects()); ++a) {
            Matrix m(c->field, 0, c->dim(X, a));
            for (const auto& v : npn.gens) m = m.vstack(c->precompositionMatrix(v, a));
            if (kernelBasis(m).cols() != 0)
                throw Unsupported("shHom: covering not epimorphic");
        }
        if (out.stages.size() == 1) {
            connect = sigmaComponent(npn, F, X);
        } else {
            Matrix z(c->field, npn.offsets.back(), np.basis.cols());
            for (std::size_t j = 0; j < np.basis.cols(); ++j) {
                Matrix y = np.basis.col(j);
                for (std::size_t m = 0; m < npn.gens.size(); ++m) {
                    Matrix val = evalNat(np, F, npn.gens[m], y);
                    for (std::size_t i = 0; i < val.rows(); ++i)
                        z.at(npn.offsets[m] + i, j) = val.at(i, 0);
                }
            }
            auto coords = solve(npn.basis, z);
            if (!coords) throw ValidationError("shHom: restriction violates the relations");
            connect = *coords;
        }
        out.stages.push_back(npn.basis.cols());
        np = std::move(npn);

        std::size_t cur = out.stages.size() - 1;
        if (out.stages[cur] == out.stages[cur - 1] && connect.rows() == connect.cols() &&
            rank(connect) == connect.rows()) {
            out.stabilizedAt = cur - 1;
            out.dim = out.stages[cur];
            return out;
        }
    }
    std::string stages;
    for (auto s : out.stages) stages += std::to_string(s) + " ";
    throw Unstable("shHom: no stabilization along the chain; stages: " + stages);
}

ShHomResult shHom(const Topology& t, int X, int Xp, std::size_t maxStage) {
    std::vector<Sieve> chain{t.minSieve[X]};
    for (std::size_t k = 1; k < maxStage; ++k) {
        Sieve next = refineSieve(t, chain.back());
        bool fix = next == chain.back();
        chain.push_back(std::move(next));
        if (fix) break;
    }
    return shHomAlongChain(t.cat, X, Xp, chain);
}

} // namespace addtop
