#include "addtop/properties.hpp"

#include "addtop/sheafify.hpp"

namespace addtop {

SubcanonicalResult subcanonicalCheck(const Topology& t) {
    const CatPtr& c = t.cat;
    int n = static_cast<int>(c->numObjects());
    for (int x = 0; x < n; ++x)
        if (!isSheaf(t, representable(c, x))) return {false, c->objects[x]};
    // representables are sheaves, so the generating sequences must be
    // right exact on every hom functor
    for (const auto& seq : fromTopology(t).sequences) {
        Pretopology one{c, {seq}, 8, std::nullopt};
        for (int a = 0; a < n; ++a)
            if (!isSheafVia(one, representable(c, a)))
                throw ValidationError("subcanonicalCheck: generating sequence not right exact");
    }
    return {true, ""};
}

bool boundedGeneration(const Topology& t) {
    const CatPtr& c = t.cat;
    std::vector<FormalSequence> candidates;
    for (int x = 0; x < static_cast<int>(c->numObjects()); ++x) {
        if (t.minSieve[x].isMaximal()) continue;
        auto gens = sieveGenerators(t.minSieve[x]);
        if (gens.size() > 1) return false;
        FormalSequence seq = sequenceWithKernel(c, x, gens);
        if (seq.left.size() > 1) return false;
        candidates.push_back(std::move(seq));
    }
    return preTwo(t, candidates).ok;
}

CanonicalTopologies canonicalTopologies(const CatPtr& c, std::size_t cap) {
    std::vector<Topology> subs, bounded;
    for (const auto& t : enumerateTopologies(c, cap)) {
        if (!subcanonicalCheck(t).subcanonical) continue;
        subs.push_back(t);
        if (boundedGeneration(t)) bounded.push_back(t);
    }
    CanonicalTopologies out{joinMeet(subs).join, joinMeet(bounded).join};
    if (!subcanonicalCheck(out.canonical).subcanonical)
        throw ValidationError("canonicalTopologies: join of subcanonical members failed");
    return out;
}

} // namespace addtop
