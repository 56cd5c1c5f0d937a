#pragma once

#include "addtop/pretop.hpp"

namespace addtop {

// Classes of families u = (u_i: U_i -> unit), strongest first: Zero,
// then (Ep) + (Ex), then (Ep) alone, then neither.
enum class UClass { Zero, InUex, InUep, InU };

// (Ep): precomposition hom(unit,A) -> ⊕hom(U_i,A) injective for every A.
// (Ex): additionally ker of the difference map ⊕hom(U_i,A) ->
// ⊕hom(U_i⊗U_j,A), (f_i) -> f_j∘(u_i⊗U_j) - f_i∘(U_i⊗u_j), equals the
// image of the precomposition, for every A.
UClass classifyU(const CatPtr& c, const std::vector<Morphism>& u);

// The unit sequence of u tensored with X on the right:
// ⨿(U_i⊗U_j⊗X) -> ⨿(U_i⊗X) -> X over ordered pairs (i,j).
FormalSequence sigmaSequence(const CatPtr& c, const std::vector<Morphism>& u, int X);

struct TvResult {
    Pretopology pretopology;
    std::vector<std::string> clips; // translates skipped at the window edge
};

// All tensor translates of the unit sequences of the families in V;
// the axioms hold structurally, so the checks report Verified.
TvResult tvPretopology(const CatPtr& c, const std::vector<std::vector<Morphism>>& V);

struct MonoidalCheckResult {
    bool ok = true;
    std::string witness; // failing pair when not ok
    std::vector<std::string> clips;
};

// Minimal covering sieves stay covering under -⊗A for every pair of
// objects; pairs leaving the window are reported as clips, not failures.
MonoidalCheckResult monoidalCheck(const Topology& t);

// dim of the localized hom from S<d> to S<0> over the coordinate-family
// pretopology on a graded window of k[x_0..x_n]; equals the number of
// degree-d monomials for d >= 0 and vanishes for d < 0.
ShHomResult projHom(unsigned n, int d, int window = 4, std::size_t maxStage = 16);

} // namespace addtop
