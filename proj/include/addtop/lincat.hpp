#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addtop/matrix.hpp"

namespace addtop {

class FinLinearCategory;
using CatPtr = std::shared_ptr<const FinLinearCategory>;

// A morphism in coordinates with respect to the chosen hom basis.
struct Morphism {
    int src = -1;
    int tgt = -1;
    Matrix coords; // homDim(src,tgt) x 1 column

    bool isZero() const { return coords.isZero(); }
};

struct MonoidalStructure {
    int unit = -1;
    // nullopt signals that the tensor product leaves the modelled category
    // (graded-window truncation); total categories always return a value.
    std::function<std::optional<int>(int, int)> tensorObj;
    // coords of f⊗g for basis f: a→b and g: c→d, in hom(a⊗c, b⊗d)
    std::function<Matrix(int a, int b, int c, int d, std::size_t f, std::size_t g)> tensorMor;
    bool symmetricIdentityBraiding = false;
};

// Finite presentation of an essentially small k-linear category: labelled
// objects, hom spaces by dimension (implicit ordered bases), composition
// given on basis pairs, identities in coordinates.
class FinLinearCategory {
public:
    Field field{Field::rationals()};
    std::vector<std::string> objects;
    std::vector<std::vector<std::size_t>> homDim; // [src][tgt]
    std::vector<Matrix> identityCoords;           // [obj], homDim(o,o) x 1
    std::function<std::string(int, int, std::size_t)> basisLabelFn; // optional

    // coords in hom(a,c) of (basis g: b→c) ∘ (basis f: a→b)
    std::function<Matrix(int a, int b, int c, std::size_t g, std::size_t f)> composeFn;

    std::optional<MonoidalStructure> monoidal;

    std::size_t numObjects() const { return objects.size(); }
    int objIndex(const std::string& label) const;
    std::size_t dim(int a, int b) const { return homDim[a][b]; }

    Morphism basisMorphism(int a, int b, std::size_t k) const;
    Morphism zeroMorphism(int a, int b) const;
    Morphism identity(int o) const { return Morphism{o, o, identityCoords[o]}; }
    Morphism morphism(int a, int b, const std::vector<long>& ints) const;

    Matrix composeBasis(int a, int b, int c, std::size_t g, std::size_t f) const;
    // g ∘ f (g outer); bilinear extension of composeBasis
    Morphism compose(const Morphism& g, const Morphism& f) const;

    // matrix of (− ∘ g): hom(tgt g, A) → hom(src g, A)
    Matrix precompositionMatrix(const Morphism& g, int A) const;
    // matrix of (v ∘ −): hom(B, src v) → hom(B, tgt v)
    Matrix postcompositionMatrix(const Morphism& v, int B) const;

    // Tensor helpers (throw WindowOverflow / Unsupported as appropriate).
    int tensorObjOrThrow(int a, int b) const;
    Morphism tensorMor(const Morphism& f, const Morphism& g) const;

    std::string basisLabel(int a, int b, std::size_t k) const;

private:
    mutable std::map<std::tuple<int, int, int, std::size_t, std::size_t>, Matrix> composeCache_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Identity laws and associativity on all basis triples; shape sanity.
ValidationReport validate(const FinLinearCategory& c);
// Also checks the monoidal data (interchange, unit object, braiding
// naturality on basis pairs) when present and total on the given objects.
ValidationReport validateMonoidal(const FinLinearCategory& c);

// One-object category of an associative unital algebra given by its
// multiplication table: mult[i][j] = coords of (basis_i · basis_j).
CatPtr fromAlgebra(const Field& f, const std::vector<std::vector<std::vector<long>>>& mult,
                   const std::vector<long>& unitCoords);

struct QuiverArrow {
    std::string label;
    std::string src, tgt;
};
// A relation is a linear combination of parallel paths; each path is a
// composable arrow-label sequence listed source-to-target.
struct QuiverRelation {
    std::vector<std::pair<long, std::vector<std::string>>> terms;
};

CatPtr fromQuiver(const Field& f, const std::vector<std::string>& vertices,
                  const std::vector<QuiverArrow>& arrows,
                  const std::vector<QuiverRelation>& relations,
                  std::size_t maxPathLen = 24);

// Truncation S⟨lo⟩..S⟨hi⟩ of shifted free modules over S = k[x_0..x_n],
// hom(S⟨i⟩,S⟨j⟩) = S_{i-j} with graded-lex monomial basis; strict
// symmetric tensor S⟨i⟩⊗S⟨j⟩ = S⟨i+j⟩, partial on the window.
CatPtr gradedWindow(const Field& f, unsigned n, int lo, int hi);

// Object label of S⟨j⟩ inside a gradedWindow category.
std::string gradedLabel(int j);
// Exponent vectors of degree-d monomials in n+1 variables, in the basis
// order used by gradedWindow.
std::vector<std::vector<unsigned>> monomialBasis(unsigned n, unsigned d);

CatPtr tensorCategory(const CatPtr& a, const CatPtr& b);

} // namespace addtop
