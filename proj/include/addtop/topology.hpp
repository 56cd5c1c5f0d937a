#pragma once

#include "addtop/sieve.hpp"

namespace addtop {

// Covering system represented by its minimal covering sieve per object:
// the covering sieves are exactly the up-set {R : R ⊇ minSieve(X)}.
// This representation is valid because the per-object subfunctor lattice
// has finite height and covering sieves are closed under pairwise
// intersection, so a directed decreasing chain attains its minimum; the
// up-closure axiom makes the up-set recover the full system.
struct Topology {
    CatPtr cat;
    std::vector<Sieve> minSieve;

    bool operator==(const Topology& o) const { return minSieve == o.minSieve; }
    bool operator!=(const Topology& o) const { return !(*this == o); }
};

Topology coarsestTopology(const CatPtr& c); // minSieve maximal everywhere
Topology finestTopology(const CatPtr& c);   // minSieve zero everywhere

bool covers(const Topology& t, const Sieve& R);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
};

// (T1) is structural; (T2) is checked along basis morphisms and, over F_p
// within the cap, along every morphism; (T3) quantifies the sieve S over
// enumerateSieves (F_p) or a candidate list (Q, reported as partial), with
// the covering R specialized to the minimal sieve.
CheckReport axiomCheck(const Topology& t, const std::vector<Sieve>* qCandidates = nullptr,
                       std::size_t cap = 1u << 20);

struct JoinMeet {
    Topology join;
    Topology meet;
};
// meet.minSieve(X) = pointwise span-sum of the inputs' minimal sieves;
// join = topOf of the union of generating pretopologies (defined in the
// pretopology translation unit).
JoinMeet joinMeet(const std::vector<Topology>& ts);

// All minimal-sieve families passing axiomCheck, over F_p.
std::vector<Topology> enumerateTopologies(const CatPtr& c, std::size_t cap = 1u << 20);

} // namespace addtop
