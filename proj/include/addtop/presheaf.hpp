#pragma once

#include "addtop/lincat.hpp"

namespace addtop {

// Additive presheaf a^op -> Vec as finite data: value dimensions per object
// and a matrix per basis morphism (contravariant: f: A->B acts F(B)->F(A)).
struct Presheaf {
    CatPtr cat;
    std::vector<std::size_t> dims;
    std::map<std::pair<int, int>, std::vector<Matrix>> act; // [{a,b}][basis k]

    std::size_t dim(int o) const { return dims[o]; }
    const Matrix& basisAction(int a, int b, std::size_t k) const { return act.at({a, b})[k]; }
    // linear extension to arbitrary morphisms
    Matrix action(const Morphism& f) const;

    static Presheaf zero(const CatPtr& c);
    bool isZeroPresheaf() const;
};

struct PresheafMap {
    std::vector<Matrix> comp; // comp[o]: F(o) -> G(o), dim G(o) x dim F(o)
};

// F(id) = identity and F(g∘f) = F(f)∘F(g) on all basis pairs.
ValidationReport validatePresheaf(const Presheaf& F);
// Naturality of phi: F -> G on all basis morphisms.
ValidationReport validateMap(const Presheaf& F, const Presheaf& G, const PresheafMap& phi);

Presheaf representable(const CatPtr& c, int X);

struct NatSpace {
    std::size_t dim = 0;
    std::vector<PresheafMap> basis;
};

// Exact solution space of the naturality system.
NatSpace natSpace(const Presheaf& F, const Presheaf& G);

PresheafMap zeroMap(const Presheaf& F, const Presheaf& G);
PresheafMap identityMap(const Presheaf& F);
PresheafMap composeMaps(const PresheafMap& g, const PresheafMap& f);
PresheafMap addMaps(const PresheafMap& a, const PresheafMap& b);
PresheafMap scaleMap(const PresheafMap& a, const Scalar& c);
bool mapsEqual(const PresheafMap& a, const PresheafMap& b);
bool isIsoMap(const Presheaf& F, const Presheaf& G, const PresheafMap& phi);
bool isMonoMap(const PresheafMap& phi);

// Pointwise kernel of phi: F -> G as a presheaf, together with the
// inclusion into F.
struct KernelResult {
    Presheaf ker;
    PresheafMap incl;
};
KernelResult kernelPresheaf(const Presheaf& F, const Presheaf& G, const PresheafMap& phi);

// Pointwise ker(q)/im(p) with induced action; requires q∘p = 0.
Presheaf homology(const Presheaf& F, const Presheaf& G, const Presheaf& H,
                  const PresheafMap& p, const PresheafMap& q);

// Pointwise cokernel of phi: F -> G.
Presheaf cokernelPresheaf(const Presheaf& F, const Presheaf& G, const PresheafMap& phi);

// All presheaves with value dims <= maxDim per object, over F_p.
// Deterministic order; throws TooLarge past the candidate cap.
std::vector<Presheaf> enumeratePresheaves(const CatPtr& c, std::size_t maxDim,
                                          std::size_t cap = 1u << 22);

} // namespace addtop
