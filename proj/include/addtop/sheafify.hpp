#pragma once

#include "addtop/presheaf.hpp"
#include "addtop/topology.hpp"

namespace addtop {

// Nat(R, F) in generator coordinates: an element is a tuple (y_a) in
// ⊕_a F(V_a) over the canonical generators v_a: V_a -> X of R, subject to
// sum_a F(h_a) y_a = 0 for every (h_a) in ker(⊕_a hom(W,V_a) -> hom(W,X)),
// at every W. This is the standard two-step presentation of R by
// representables, so solutions biject with natural transformations R -> F.
struct NatPres {
    Sieve sieve;
    std::vector<Morphism> gens;
    std::vector<std::size_t> offsets; // block offset of y_a, plus total at end
    Matrix basis;                     // columns: basis of the solution space
};

NatPres natSieve(const Sieve& R, const Presheaf& F);

// value of the transformation with tuple y (length offsets.back()) on an
// arbitrary member w of R; throws if w does not factor through R
Matrix evalNat(const NatPres& np, const Presheaf& F, const Morphism& w, const Matrix& y);

struct SigmaResult {
    Presheaf presheaf;
    PresheafMap map;           // sigma_F: F -> ΣF
    std::vector<NatPres> pres; // per-object coordinates of ΣF
};

SigmaResult sigma(const Topology& t, const Presheaf& F);

// Σ applied to a map F -> G, in the coordinates of precomputed Σ-results.
PresheafMap sigmaOnMap(const SigmaResult& sF, const SigmaResult& sG, const PresheafMap& phi);

struct SheafificationResult {
    Presheaf sheaf;    // ΣΣF
    PresheafMap unit;  // (Σ sigma_F) ∘ sigma_F
    SigmaResult stage; // ΣF with its unit component
};

SheafificationResult sheafifyOp(const Topology& t, const Presheaf& F);

bool isSheaf(const Topology& t, const Presheaf& F);
bool isSeparated(const Topology& t, const Presheaf& F);

// composite of R with the minimal covering sieves at its generator sources
Sieve refineSieve(const Topology& t, const Sieve& R);

// kernel[X][X'] = canonical basis of the subspace of hom(X,X') killed by
// localisation, i.e. annihilated by precomposition with the stabilized
// minimal covering sieve of X
std::vector<std::vector<Matrix>> kernelOfZ(const Topology& t, std::size_t maxStage = 64);

struct ShHomResult {
    std::size_t dim = 0;
    std::size_t stabilizedAt = 0;
    std::vector<std::size_t> stages; // stage 0 = dim hom(X,X')
};

// hom from the localized X into the localized X', computed along an
// explicit chain of covering sieves of X (chain[k] is the stage-(k+1)
// sieve; stage 0 is hom(X,X')). Each sieve must refine its predecessor
// and must be epimorphic, else Unsupported.
ShHomResult shHomAlongChain(const CatPtr& c, int X, int Xp, const std::vector<Sieve>& chain);

// hom between localized representables, via the stabilizing chain of
// composite refinements of the minimal covering sieve of X
ShHomResult shHom(const Topology& t, int X, int Xp, std::size_t maxStage = 16);

} // namespace addtop
