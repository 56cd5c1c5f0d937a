#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "addtop/topology.hpp"
#include "oracles.hpp"
#include "test_instances.hpp"

using namespace addtop;

TEST_CASE("coarsest and finest satisfy the axioms") {
    for (const auto& c : {makeTruncPoly(1), makeF2xF2(), makeTruncPoly(2), makeTruncPoly(3),
                          makeA2(), makeKelly()}) {
        auto rc = axiomCheck(coarsestTopology(c));
        auto rf = axiomCheck(finestTopology(c));
        CHECK(rc.ok);
        CHECK(rf.ok);
        CHECK(rc.violations.empty());
    }
}

TEST_CASE("up-closure of covers") {
    CatPtr k = makeF2xF2();
    Topology t{k, {generatedSieve(k, 0, {k->basisMorphism(0, 0, 0)})}};
    REQUIRE(axiomCheck(t).ok);
    for (const auto& R : enumerateSieves(k, 0))
        for (const auto& S : enumerateSieves(k, 0))
            if (covers(t, R) && sieveContains(R, S)) CHECK(covers(t, S));
}

TEST_CASE("pullback stability failure is reported with a witness") {
    CatPtr a2 = makeA2();
    int v1 = a2->objIndex("v1"), v2 = a2->objIndex("v2");
    Topology bad{a2, {}};
    bad.minSieve.resize(2, zeroSieve(a2, 0));
    bad.minSieve[v1] = maximalSieve(a2, v1);
    bad.minSieve[v2] = zeroSieve(a2, v2);
    auto rep = axiomCheck(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().find("(T2)") != std::string::npos);
}

TEST_CASE("local character failure is reported") {
    // (x) on F_2[x]/(x^2): the zero sieve pulls back to a covering sieve
    // along every element of (x), yet is not itself covering
    CatPtr c = makeTruncPoly(2);
    Topology bad{c, {generatedSieve(c, 0, {c->basisMorphism(0, 0, 1)})}};
    auto rep = axiomCheck(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().find("(T3)") != std::string::npos);
}

TEST_CASE("enumerateTopologies counts") {
    CHECK(enumerateTopologies(makeTruncPoly(1)).size() == 2);
    CHECK(enumerateTopologies(makeF2xF2()).size() == 4);
    CHECK(enumerateTopologies(makeTruncPoly(2)).size() == 2);
    CHECK(enumerateTopologies(makeTruncPoly(3)).size() == 2);
}

namespace {

// smallest member of an oracle family at each object, as canonical spans
std::vector<oracle::OSieve> familyMinima(const CatPtr& c, const oracle::OFamily& fam) {
    std::vector<oracle::OSieve> out;
    for (int x = 0; x < static_cast<int>(c->numObjects()); ++x) {
        const oracle::OSieve* best = nullptr;
        for (const auto& s : fam[x]) {
            bool le = true;
            for (const auto& other : fam[x])
                for (std::size_t b = 0; b < s.spans.size(); ++b)
                    if (!spanContains(s.spans[b], other.spans[b])) le = false;
            if (le) best = &s;
        }
        REQUIRE(best != nullptr);
        out.push_back(*best);
    }
    return out;
}

std::set<std::string> minimaKeys(const CatPtr& c, const std::vector<oracle::OSieve>& mins) {
    std::string key;
    for (const auto& s : mins)
        for (const auto& m : s.spans) key += m.str() + "|";
    return {key};
}

} // namespace

TEST_CASE("enumeration agrees with the up-closed-family oracle") {
    for (const auto& c : {makeTruncPoly(1), makeF2xF2(), makeTruncPoly(2), makeA2()}) {
        auto lib = enumerateTopologies(c);
        auto orc = oracle::oracleTopologies(c);
        CHECK(lib.size() == orc.size());

        std::set<std::string> libKeys, orcKeys;
        for (const auto& t : lib) {
            std::string key;
            for (const auto& s : t.minSieve)
                for (const auto& m : s.spans) key += m.str() + "|";
            libKeys.insert(key);
        }
        for (const auto& fam : orc) {
            auto k = minimaKeys(c, familyMinima(c, fam));
            orcKeys.insert(k.begin(), k.end());
        }
        CHECK(libKeys == orcKeys);
    }
}

TEST_CASE("each oracle family has a minimum recovering the full system") {
    CatPtr k = makeF2xF2();
    auto sieves = enumerateSieves(k, 0);
    for (const auto& fam : oracle::oracleTopologies(k)) {
        auto mins = familyMinima(k, fam);
        // family = up-set of the minimum
        for (const auto& R : sieves) {
            bool inFam = false;
            for (const auto& s : fam[0])
                if (s.spans == R.spans) inFam = true;
            bool above = true;
            for (std::size_t b = 0; b < R.spans.size(); ++b)
                if (!spanContains(mins[0].spans[b], R.spans[b])) above = false;
            CHECK(inFam == above);
        }
    }
}

TEST_CASE("axiomCheck over Q reports partial verification") {
    CatPtr c = gradedWindow(Field::rationals(), 1, -1, 1);
    auto rep = axiomCheck(coarsestTopology(c));
    CHECK(rep.ok);
    CHECK_FALSE(rep.warnings.empty());
}
