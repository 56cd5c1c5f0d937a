#include "addtop/verify.hpp"

#include <random>
#include <sstream>

#include "addtop/instances.hpp"

namespace addtop {

namespace {

void req(SuiteResult& r, bool cond, const std::string& msg) {
    if (!cond) {
        r.passed = false;
        r.failures.push_back(msg);
    }
}

void note(SuiteResult& r, const std::string& msg) { r.notes.push_back(msg); }

std::vector<std::pair<std::string, CatPtr>> bundled() {
    return {{"F2", makeTruncPoly(1)},        {"F2xF2", makeF2xF2()},
            {"F2[x]/x^2", makeTruncPoly(2)}, {"F2[x]/x^3", makeTruncPoly(3)},
            {"A2", makeA2()},                {"Kelly", makeKelly()}};
}

Pretopology gabrielE(std::size_t idx) {
    CatPtr k = makeF2xF2();
    return gabrielPretopology(k, k->basisMorphism(0, 0, idx));
}

Pretopology unionOf(const Pretopology& a, const Pretopology& b) {
    Pretopology u = a;
    for (const auto& s : b.sequences) u.sequences.push_back(s);
    return u;
}

std::vector<Morphism> coordFamily(const CatPtr& c) {
    int s1 = c->objIndex(gradedLabel(1)), s0 = c->objIndex(gradedLabel(0));
    std::vector<Morphism> v;
    for (std::size_t k = 0; k < c->dim(s1, s0); ++k) v.push_back(c->basisMorphism(s1, s0, k));
    return v;
}

std::vector<Morphism> degFamily(const CatPtr& c, int deg, const std::vector<std::size_t>& ks) {
    int sd = c->objIndex(gradedLabel(deg)), s0 = c->objIndex(gradedLabel(0));
    std::vector<Morphism> v;
    for (std::size_t k : ks) v.push_back(c->basisMorphism(sd, s0, k));
    return v;
}

SuiteResult suiteAxioms(std::uint64_t) {
    SuiteResult r{"axioms"};
    for (const auto& [name, c] : bundled()) {
        auto rc = axiomCheck(coarsestTopology(c));
        auto rf = axiomCheck(finestTopology(c));
        req(r, rc.ok && rc.violations.empty(), name + ": coarsest fails the axiom check");
        req(r, rf.ok && rf.violations.empty(), name + ": finest fails the axiom check");
    }
    note(r, "extremes pass on all bundled categories");

    // corrupting pullback stability: cover v1 maximally, v2 by zero
    CatPtr a2 = makeA2();
    Topology badT2{a2, {maximalSieve(a2, a2->objIndex("v1")), zeroSieve(a2, a2->objIndex("v2"))}};
    auto repT2 = axiomCheck(badT2);
    req(r, !repT2.ok && !repT2.violations.empty() &&
               repT2.violations.front().find("(T2)") != std::string::npos,
        "corrupted A2 system is not flagged with a pullback-stability witness");
    if (!repT2.violations.empty()) note(r, "witness: " + repT2.violations.front());

    // corrupting local character: the (x) sieve on F2[x]/x^2
    CatPtr t2 = makeTruncPoly(2);
    Topology badT3{t2, {generatedSieve(t2, 0, {t2->basisMorphism(0, 0, 1)})}};
    auto repT3 = axiomCheck(badT3);
    req(r, !repT3.ok && !repT3.violations.empty() &&
               repT3.violations.front().find("(T3)") != std::string::npos,
        "corrupted truncated-polynomial system is not flagged with a local-character witness");
    return r;
}

SuiteResult suiteEnumeration(std::uint64_t) {
    SuiteResult r{"enumeration"};
    struct Row {
        CatPtr c;
        std::string name;
        std::size_t count;
    };
    for (const auto& row : {Row{makeTruncPoly(1), "F2", 2}, Row{makeF2xF2(), "F2xF2", 4},
                            Row{makeTruncPoly(2), "F2[x]/x^2", 2},
                            Row{makeTruncPoly(3), "F2[x]/x^3", 2}}) {
        auto lat = enumerateTopologies(row.c);
        std::ostringstream os;
        os << row.name << ": " << lat.size() << " topologies";
        note(r, os.str());
        req(r, lat.size() == row.count, row.name + ": unexpected lattice size");
        for (const auto& t : lat) req(r, axiomCheck(t).ok, row.name + ": enumerated non-topology");
    }

    // up-closure of covers on a non-extreme member
    CatPtr k = makeF2xF2();
    Topology te1{k, {generatedSieve(k, 0, {k->basisMorphism(0, 0, 0)})}};
    for (const auto& R : enumerateSieves(k, 0))
        for (const auto& S : enumerateSieves(k, 0))
            if (covers(te1, R) && sieveContains(R, S))
                req(r, covers(te1, S), "covers is not up-closed on F2xF2");
    return r;
}

SuiteResult suiteRoundtrip(std::uint64_t) {
    SuiteResult r{"roundtrip"};
    std::size_t total = 0;
    for (const auto& [name, c] : bundled())
        for (const auto& t : enumerateTopologies(c)) {
            Pretopology s = fromTopology(t);
            for (const auto& seq : s.sequences)
                req(r, inPrePrime(t, seq), name + ": generating sequence outside pre'");
            req(r, topOf(s) == t, name + ": topOf(fromTopology(t)) != t");
            ++total;
        }
    std::ostringstream os;
    os << total << " topologies round-tripped across the bundled categories";
    note(r, os.str());
    return r;
}

SuiteResult suiteSheafPred(std::uint64_t) {
    SuiteResult r{"sheafpred"};
    CatPtr k = makeF2xF2();
    std::vector<Pretopology> pts = {Pretopology{k, {}, 8, std::nullopt}, gabrielE(0), gabrielE(1),
                                    unionOf(gabrielE(0), gabrielE(1))};
    auto psK = enumeratePresheaves(k, 2);
    for (const auto& s : pts) {
        Topology t = topOf(s);
        for (const auto& F : psK)
            req(r, isSheafVia(s, F) == isSheaf(t, F), "predicate mismatch on F2xF2");
    }
    CatPtr t2 = makeTruncPoly(2);
    Pretopology sx = gabrielPretopology(t2, t2->basisMorphism(0, 0, 1));
    Topology tx = topOf(sx);
    for (const auto& F : enumeratePresheaves(t2, 2))
        req(r, isSheafVia(sx, F) == isSheaf(tx, F), "predicate mismatch on F2[x]/x^2");
    std::ostringstream os;
    os << psK.size() << " presheaves checked per F2xF2 pretopology";
    note(r, os.str());
    return r;
}

SuiteResult suiteJoin(std::uint64_t) {
    SuiteResult r{"join"};
    for (const auto& c : {makeF2xF2(), makeTruncPoly(2), makeA2()}) {
        auto lattice = enumerateTopologies(c);
        auto finer = [](const Topology& a, const Topology& b) {
            for (std::size_t x = 0; x < a.minSieve.size(); ++x)
                if (!sieveContains(a.minSieve[x], b.minSieve[x])) return false;
            return true;
        };
        for (const auto& t1 : lattice)
            for (const auto& t2 : lattice) {
                JoinMeet jm = joinMeet({t1, t2});
                const Topology *join = nullptr, *meet = nullptr;
                for (const auto& u : lattice) {
                    if (finer(u, t1) && finer(u, t2) && (!join || finer(*join, u))) join = &u;
                    if (finer(t1, u) && finer(t2, u) && (!meet || finer(u, *meet))) meet = &u;
                }
                req(r, join && jm.join == *join, "join differs from the brute-force LUB");
                req(r, meet && jm.meet == *meet, "meet differs from the brute-force GLB");
            }
    }
    note(r, "lattice operations match brute force on F2xF2, F2[x]/x^2, A2");

    // sheaves for the join are exactly the common sheaves
    for (const auto& c : {makeF2xF2(), makeTruncPoly(2)}) {
        auto lattice = enumerateTopologies(c);
        auto ps = enumeratePresheaves(c, 2);
        for (const auto& t1 : lattice)
            for (const auto& t2 : lattice) {
                Topology j = joinMeet({t1, t2}).join;
                for (const auto& F : ps)
                    req(r, isSheaf(j, F) == (isSheaf(t1, F) && isSheaf(t2, F)),
                        "Sh(join) differs from the intersection of sheaf classes");
            }
    }
    note(r, "Sh(t1 v t2) = Sh(t1) n Sh(t2) on all enumerated pairs, dims <= 2");
    return r;
}

SuiteResult suiteSheafification(std::uint64_t seed) {
    SuiteResult r{"sheafification"};
    CatPtr k = makeF2xF2();
    CatPtr a2 = makeA2();
    Topology te1{k, {generatedSieve(k, 0, {k->basisMorphism(0, 0, 0)})}};
    Topology aMax{a2, {maximalSieve(a2, a2->objIndex("v1")),
                       generatedSieve(a2, a2->objIndex("v2"),
                                      {a2->basisMorphism(a2->objIndex("v1"), a2->objIndex("v2"), 0)})}};
    std::vector<std::pair<std::string, Topology>> insts = {
        {"F2xF2/e1", te1},
        {"F2xF2 finest", finestTopology(k)},
        {"F2[x]/x^2 finest", finestTopology(makeTruncPoly(2))},
        {"F2[x]/x^3 finest", finestTopology(makeTruncPoly(3))},
        {"A2 arrow", aMax}};

    std::mt19937_64 rng(seed);
    for (const auto& [name, t] : insts) {
        req(r, axiomCheck(t).ok, name + ": instance is not a topology");
        auto ps = enumeratePresheaves(t.cat, 2);
        std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
        for (int it = 0; it < 100; ++it) {
            const Presheaf& F = ps[pick(rng)];
            const Presheaf& G = ps[pick(rng)];

            SigmaResult sF1 = sigma(t, F);
            req(r, isSeparated(t, sF1.presheaf), name + ": sigma F not separated");
            if (isSeparated(t, F))
                req(r, isSheaf(t, sF1.presheaf), name + ": sigma of a separated F not a sheaf");

            SheafificationResult shF = sheafifyOp(t, F);
            SheafificationResult shG = sheafifyOp(t, G);
            req(r, isSheaf(t, shF.sheaf), name + ": sheafification is not a sheaf");
            req(r, natSpace(F, shG.sheaf).dim == natSpace(shF.sheaf, shG.sheaf).dim,
                name + ": adjunction dimension mismatch");
            if (isSheaf(t, F))
                req(r, isIsoMap(F, shF.sheaf, shF.unit), name + ": unit not iso on a sheaf");

            auto ns = natSpace(F, G);
            if (ns.dim == 0) continue;
            const PresheafMap& phi = ns.basis[pick(rng) % ns.dim];
            Presheaf ker = kernelPresheaf(F, G, phi).ker;
            SigmaResult sG1 = sigma(t, G);
            PresheafMap phi1 = sigmaOnMap(sF1, sG1, phi);
            SigmaResult sF2 = sigma(t, sF1.presheaf), sG2 = sigma(t, sG1.presheaf);
            PresheafMap phi2 = sigmaOnMap(sF2, sG2, phi1);
            Presheaf ker2 = kernelPresheaf(sF2.presheaf, sG2.presheaf, phi2).ker;
            req(r, sheafifyOp(t, ker).sheaf.dims == ker2.dims,
                name + ": sheafification does not preserve the kernel");
        }
        note(r, name + ": 100 sampled pairs pass the contract");
    }
    return r;
}

SuiteResult suiteLocalization(std::uint64_t) {
    SuiteResult r{"localization"};
    CatPtr k = makeF2xF2();
    Topology te1{k, {generatedSieve(k, 0, {k->basisMorphism(0, 0, 0)})}};

    SheafificationResult y = sheafifyOp(te1, representable(k, 0));
    req(r, y.sheaf.dims == std::vector<std::size_t>{1},
        "sheafified representable has the wrong dimension");
    note(r, "sheafified F2xF2 representable is one-dimensional");

    // sheaves are exactly the modules on which the idempotent acts as 1
    for (const auto& F : enumeratePresheaves(k, 2)) {
        bool oracle =
            F.dim(0) == 0 || F.basisAction(0, 0, 0) == Matrix::identity(k->field, F.dim(0));
        req(r, isSheaf(te1, F) == oracle, "idempotent localization oracle mismatch");
    }
    note(r, "sheaf class matches the idempotent-action criterion, dims <= 2");

    // nilpotent covering: the generated topology is the finest one and the
    // sheaf category collapses to zero
    CatPtr t3 = makeTruncPoly(3);
    Topology tx = topOf(gabrielPretopology(t3, t3->basisMorphism(0, 0, 1)));
    req(r, tx == finestTopology(t3), "nilpotent covering does not generate the finest topology");
    for (const auto& F : enumeratePresheaves(t3, 2))
        req(r, isSheaf(tx, F) == F.isZeroPresheaf(), "nonzero sheaf over a nilpotent covering");
    note(r, "F2[x]/x^3 localization at x collapses the sheaf category");
    return r;
}

SuiteResult suiteKernel(std::uint64_t) {
    SuiteResult r{"kernel"};
    CatPtr k = makeF2xF2();
    Topology te1{k, {generatedSieve(k, 0, {k->basisMorphism(0, 0, 0)})}};
    auto j = kernelOfZ(te1);
    req(r, j[0][0].cols() == 1 && j[0][0] == Matrix::ofInts(k->field, 2, 1, {0, 1}),
        "kernel of the localization functor is not spanned by the complementary idempotent");
    note(r, "F2xF2/e1: kernel at the unique object is span{e2}");
    req(r, kernelOfZ(finestTopology(k))[0][0].cols() == 2, "finest topology kernel not full");

    for (const auto& [name, c] : bundled()) {
        if (c->numObjects() > 2) continue;
        for (const auto& t : enumerateTopologies(c)) {
            if (!subcanonicalCheck(t).subcanonical) continue;
            auto ker = kernelOfZ(t);
            for (const auto& row : ker)
                for (const auto& m : row)
                    req(r, m.cols() == 0, name + ": subcanonical topology with a nonzero kernel");
        }
    }
    note(r, "subcanonical members of the bundled lattices have zero kernel");
    return r;
}

SuiteResult suiteUClass(std::uint64_t) {
    SuiteResult r{"uclass"};
    CatPtr k = makeF2xF2Monoidal();
    Morphism e1 = k->basisMorphism(0, 0, 0), e2 = k->basisMorphism(0, 0, 1);
    req(r, classifyU(k, {}) == UClass::Zero, "empty family misclassified");
    req(r, classifyU(k, {k->identity(0)}) == UClass::InUex, "identity family misclassified");
    req(r, classifyU(k, {e1}) == UClass::InU, "single idempotent misclassified");
    req(r, classifyU(k, {e1, e2}) == UClass::InUex, "orthogonal pair misclassified");
    note(r, "idempotent algebra classes as expected");

    for (int w : {4, 6}) {
        CatPtr c = gradedWindow(Field::rationals(), 1, -w, w);
        req(r, classifyU(c, degFamily(c, 1, {0})) == UClass::InUep, "single coordinate not Ep-only");
        req(r, classifyU(c, coordFamily(c)) == UClass::InUex, "coordinate family not exact");
        req(r, classifyU(c, degFamily(c, 2, {1})) == UClass::InUep, "x0*x1 not Ep-only");
        req(r, classifyU(c, degFamily(c, 2, {0, 1, 2})) == UClass::InUex, "degree-2 family not exact");
        req(r, classifyU(c, degFamily(c, 2, {0, 2})) == UClass::InUex, "pure-power pair not exact");

        CatPtr c2 = gradedWindow(Field::rationals(), 2, -w, w);
        req(r, classifyU(c2, coordFamily(c2)) == UClass::InUex, "3-variable coordinates not exact");
        req(r, classifyU(c2, degFamily(c2, 1, {0, 1})) == UClass::InUex,
            "regular sequence {x0,x1} not exact");
        req(r, classifyU(c2, degFamily(c2, 1, {0})) == UClass::InUep,
            "single coordinate in 3 variables not Ep-only");
    }
    note(r, "graded-window classes are stable from window 4 to window 6");
    return r;
}

SuiteResult suiteProjHom(std::uint64_t) {
    SuiteResult r{"projhom"};
    for (int d = -2; d <= 3; ++d) {
        ShHomResult h = projHom(1, d);
        std::size_t expected = d >= 0 ? static_cast<std::size_t>(d + 1) : 0;
        std::ostringstream os;
        os << "n=1 d=" << d << ": dim " << h.dim << " (stage " << h.stabilizedAt << ")";
        note(r, os.str());
        req(r, h.dim == expected, "n=1 twisted global sections have the wrong dimension");
    }
    ShHomResult h2 = projHom(2, 1);
    note(r, "n=2 d=1: dim " + std::to_string(h2.dim));
    req(r, h2.dim == 3, "n=2 d=1 twisted global sections have the wrong dimension");
    req(r, projHom(1, 2, 3).dim == projHom(1, 2, 5).dim, "dimension not stable under widening");
    return r;
}

SuiteResult suiteMonoidal(std::uint64_t) {
    SuiteResult r{"monoidal"};
    CatPtr k = makeF2xF2Monoidal();
    for (const auto& t : enumerateTopologies(k)) {
        MonoidalCheckResult m = monoidalCheck(t);
        req(r, m.ok && m.clips.empty(), "non-monoidal topology on the idempotent algebra");
    }
    note(r, "all idempotent-algebra topologies are monoidal, no clips");

    CatPtr c = gradedWindow(Field::rationals(), 1, -1, 3);
    TvResult g = tvPretopology(c, {coordFamily(c)});
    MonoidalCheckResult m = monoidalCheck(topOf(g.pretopology));
    req(r, m.ok && !m.clips.empty(), "coordinate topology on the window fails the tensor check");
    note(r, "window coordinate topology passes with " + std::to_string(m.clips.size()) + " clips");
    req(r, monoidalCheck(coarsestTopology(c)).ok && monoidalCheck(finestTopology(c)).ok,
        "window extremes fail the tensor check");

    // two generating families, one topology, with factorization certificates
    CatPtr c4 = gradedWindow(Field::rationals(), 1, 0, 4);
    TvResult one = tvPretopology(c4, {coordFamily(c4)});
    TvResult both = tvPretopology(c4, {coordFamily(c4), degFamily(c4, 2, {0, 1, 2})});
    req(r, topOf(one.pretopology) == topOf(both.pretopology),
        "the two generating families give different topologies");
    auto factors = [&](const Pretopology& src, const FormalSequence& seq) {
        Sieve target = sequenceSieve(seq);
        for (const auto& s : compositeCoveringSieves(src, seq.target))
            if (sieveContains(s, target)) return true;
        return false;
    };
    for (const auto& seq : both.pretopology.sequences)
        req(r, factors(one.pretopology, seq), "no factorization through the coordinate family");
    for (const auto& seq : one.pretopology.sequences)
        req(r, factors(both.pretopology, seq), "no factorization through the joint family");
    note(r, "equality certified by composite-covering factorizations both ways");
    return r;
}

SuiteResult suiteKelly(std::uint64_t) {
    SuiteResult r{"kelly"};
    CatPtr kelly = makeKelly();
    const Field& f = kelly->field;
    // basis of the product algebra is e1*1, e1*x, e2*1, e2*x
    Morphism rowGen{0, 0, Matrix::ofInts(f, 4, 1, {1, 0, 0, 0})}; // e1 * 1
    Morphism colGen{0, 0, Matrix::ofInts(f, 4, 1, {0, 1, 0, 1})}; // (e1+e2) * x
    Pretopology row{kelly, {sequenceWithKernel(kelly, 0, {rowGen})}, 8, std::nullopt};
    Pretopology col{kelly, {sequenceWithKernel(kelly, 0, {colGen})}, 8, std::nullopt};
    Pretopology uni = unionOf(row, col);
    Topology tu = topOf(uni);

    std::size_t sheaves = 0, total = 0;
    for (const auto& F : enumeratePresheaves(kelly, 2)) {
        bool viaBoth = isSheafVia(row, F) && isSheafVia(col, F);
        req(r, isSheaf(tu, F) == viaBoth,
            "sheaves for the union differ from the simultaneous sheaves");
        if (viaBoth) ++sheaves;
        ++total;
    }
    std::ostringstream os;
    os << sheaves << " of " << total << " product-algebra modules satisfy both descent conditions";
    note(r, os.str());
    return r;
}

} // namespace

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {
        "axioms", "enumeration", "roundtrip", "sheafpred", "join", "sheafification",
        "localization", "kernel", "uclass", "projhom", "monoidal", "kelly"};
    return names;
}

SuiteResult runSuite(const std::string& name, std::uint64_t seed) {
    using Fn = SuiteResult (*)(std::uint64_t);
    static const std::map<std::string, Fn> table = {
        {"axioms", suiteAxioms},       {"enumeration", suiteEnumeration},
        {"roundtrip", suiteRoundtrip}, {"sheafpred", suiteSheafPred},
        {"join", suiteJoin},           {"sheafification", suiteSheafification},
        {"localization", suiteLocalization}, {"kernel", suiteKernel},
        {"uclass", suiteUClass},       {"projhom", suiteProjHom},
        {"monoidal", suiteMonoidal},   {"kelly", suiteKelly}};
    auto it = table.find(name);
    if (it == table.end()) throw Unsupported("unknown suite: " + name);
    return it->second(seed);
}

std::vector<SuiteResult> runAllSuites(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const auto& n : suiteNames()) out.push_back(runSuite(n, seed));
    return out;
}

} // namespace addtop
