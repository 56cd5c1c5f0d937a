#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "addtop/presheaf.hpp"
#include "test_instances.hpp"

using namespace addtop;

TEST_CASE("representables") {
    CatPtr k = makeF2xF2();
    Presheaf y = representable(k, 0);
    CHECK(y.dims[0] == 2);
    CHECK(validatePresheaf(y).ok);

    CatPtr a2 = makeA2();
    Presheaf y2 = representable(a2, a2->objIndex("v2"));
    CHECK(y2.dims[a2->objIndex("v1")] == 1);
    CHECK(y2.dims[a2->objIndex("v2")] == 1);
    CHECK(validatePresheaf(y2).ok);

    CatPtr g = gradedWindow(Field::fp(2), 1, -2, 2);
    Presheaf yg = representable(g, g->objIndex(gradedLabel(0)));
    CHECK(yg.dims[g->objIndex(gradedLabel(1))] == 2);
    CHECK(validatePresheaf(yg).ok);
}

TEST_CASE("Yoneda lemma") {
    CatPtr k = makeF2xF2();
    Presheaf y = representable(k, 0);
    CHECK(natSpace(y, y).dim == 2);

    // Yoneda against every enumerated presheaf with dims <= 2
    for (const auto& F : enumeratePresheaves(k, 2))
        CHECK(natSpace(y, F).dim == F.dims[0]);

    CatPtr a2 = makeA2();
    Presheaf y1 = representable(a2, a2->objIndex("v1"));
    for (const auto& F : enumeratePresheaves(a2, 2))
        CHECK(natSpace(y1, F).dim == F.dims[a2->objIndex("v1")]);
}

TEST_CASE("natSpace basis members are natural") {
    CatPtr k = makeTruncPoly(2);
    Presheaf y = representable(k, 0);
    auto ns = natSpace(y, y);
    CHECK(ns.dim == 2);
    for (const auto& phi : ns.basis) CHECK(validateMap(y, y, phi).ok);
    CHECK(natSpace(y, Presheaf::zero(k)).dim == 0);
}

TEST_CASE("homology of x-multiplication chain on F_2[x]/(x^2)") {
    CatPtr k = makeTruncPoly(2);
    Presheaf y = representable(k, 0);
    // x as a natural transformation of the regular module
    Morphism x = k->basisMorphism(0, 0, 1);
    PresheafMap mx{{k->postcompositionMatrix(x, 0)}};
    CHECK(validateMap(y, y, mx).ok);
    Presheaf h = homology(y, y, y, mx, mx);
    CHECK(h.dims[0] == 0);
    // p = 0, q = 0: homology is the middle presheaf
    Presheaf h2 = homology(y, y, y, zeroMap(y, y), zeroMap(y, y));
    CHECK(h2.dims[0] == 2);
}

TEST_CASE("kernel and cokernel presheaves") {
    CatPtr k = makeF2xF2();
    Presheaf y = representable(k, 0);
    Morphism e1 = k->basisMorphism(0, 0, 0);
    PresheafMap me1{{k->postcompositionMatrix(e1, 0)}};
    auto ker = kernelPresheaf(y, y, me1);
    CHECK(ker.ker.dims[0] == 1);
    CHECK(validateMap(ker.ker, y, ker.incl).ok);
    Presheaf coker = cokernelPresheaf(y, y, me1);
    CHECK(coker.dims[0] == 1);
}

TEST_CASE("enumeratePresheaves") {
    CatPtr f2 = makeTruncPoly(1);
    // modules over F_2 with dim <= 2: one per dimension 0,1,2
    CHECK(enumeratePresheaves(f2, 2).size() == 3);

    CatPtr k = makeF2xF2();
    auto all = enumeratePresheaves(k, 2);
    // K-modules of dim d <-> idempotent action of e1: 1 + 2 + 8
    CHECK(all.size() == 11);
    for (const auto& F : all) CHECK(validatePresheaf(F).ok);

    CHECK_THROWS_AS(enumeratePresheaves(k, 2, 10), TooLarge);
}
