#pragma once

#include "addtop/pretop.hpp"

namespace addtop {

struct SubcanonicalResult {
    bool subcanonical = true;
    std::string witness; // failing object label when not subcanonical
};

// Every representable a sheaf; when it is, the generating sequences are
// cross-checked for right exactness.
SubcanonicalResult subcanonicalCheck(const Topology& t);

// Certificate that t is generated by sequences with singleton middle and
// left terms (the desk-scale bounded-generation surrogate).
bool boundedGeneration(const Topology& t);

struct CanonicalTopologies {
    Topology canonical;        // join of all subcanonical topologies
    Topology canonicalBounded; // join of the boundedly generated ones
};

CanonicalTopologies canonicalTopologies(const CatPtr& c, std::size_t cap = 1u << 20);

} // namespace addtop
