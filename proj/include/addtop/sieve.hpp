#pragma once

#include "addtop/presheaf.hpp"

namespace addtop {

// Subfunctor of hom(-, apex): a subspace of hom(B, apex) per object B,
// closed under precomposition. Spans are canonical column echelon bases,
// so equal sieves compare equal syntactically.
struct Sieve {
    CatPtr cat;
    int apex = -1;
    std::vector<Matrix> spans;

    bool operator==(const Sieve& o) const { return apex == o.apex && spans == o.spans; }
    bool operator!=(const Sieve& o) const { return !(*this == o); }
    std::size_t dimAt(int b) const { return spans[b].cols(); }
    bool isMaximal() const;
    bool isZeroSieve() const;
};

Sieve maximalSieve(const CatPtr& c, int apex);
Sieve zeroSieve(const CatPtr& c, int apex);

// R_v(B) = sum of images of (v_a ∘ -); single closure pass suffices since
// each image is already stable under precomposition.
Sieve generatedSieve(const CatPtr& c, int apex, const std::vector<Morphism>& v);

// (f^{-1}R)(C) = preimage of R(C) under (f ∘ -); result is a sieve on src f.
Sieve pullbackSieve(const Sieve& R, const Morphism& f);

struct SieveOps {
    Sieve intersection;
    bool contains; // R ⊆ S
    bool equals;
};
SieveOps sieveOps(const Sieve& R, const Sieve& S);

Sieve sieveIntersection(const Sieve& R, const Sieve& S);
Sieve sieveSum(const Sieve& R, const Sieve& S); // pointwise span sum (a sieve)
bool sieveContains(const Sieve& sub, const Sieve& sup);

// f ∈ R(src f)?
bool sieveMember(const Sieve& R, const Morphism& f);

// Re-checks the precomposition-closure invariant.
bool isClosedSieve(const Sieve& R);

// All subfunctors of hom(-, X) over F_p, in canonical order.
std::vector<Sieve> enumerateSieves(const CatPtr& c, int X, std::size_t cap = 1u << 20);

// The sieve as a presheaf together with its inclusion into representable(X).
struct SievePresheaf {
    Presheaf F;
    PresheafMap incl;
};
SievePresheaf sieveAsPresheaf(const Sieve& R);

// Generators of R: the echelon basis columns at every object, as morphisms.
std::vector<Morphism> sieveGenerators(const Sieve& R);

} // namespace addtop
