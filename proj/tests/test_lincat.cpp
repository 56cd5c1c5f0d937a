#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "addtop/lincat.hpp"

using namespace addtop;

namespace {

const Field F2 = Field::fp(2);

// F_2[x]/(x^2 - x), basis {e1 = x, e2 = 1 - x}: orthogonal idempotents
CatPtr makeF2xF2() {
    return fromAlgebra(F2,
                       {{{1, 0}, {0, 0}},   // e1*e1 = e1, e1*e2 = 0
                        {{0, 0}, {0, 1}}},  // e2*e1 = 0,  e2*e2 = e2
                       {1, 1});
}

// F_2[x]/(x^k), basis {1, x, ..., x^{k-1}}
CatPtr makeTruncPoly(std::size_t k) {
    std::vector<std::vector<std::vector<long>>> mult(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<long> v(k, 0);
            if (i + j < k) v[i + j] = 1;
            mult[i].push_back(v);
        }
    std::vector<long> unit(k, 0);
    unit[0] = 1;
    return fromAlgebra(F2, mult, unit);
}

} // namespace

TEST_CASE("fromAlgebra F_2xF_2") {
    CatPtr c = makeF2xF2();
    CHECK(c->numObjects() == 1);
    CHECK(c->dim(0, 0) == 2);
    CHECK(validate(*c).ok);
    Morphism e1 = c->basisMorphism(0, 0, 0);
    Morphism e2 = c->basisMorphism(0, 0, 1);
    CHECK(c->compose(e1, e1).coords == e1.coords);
    CHECK(c->compose(e1, e2).isZero());
    CHECK(c->compose(c->identity(0), e1).coords == e1.coords);
}

TEST_CASE("fromAlgebra F_2 and F_2[x]/(x^3)") {
    CHECK(makeTruncPoly(1)->dim(0, 0) == 1);
    CatPtr c = makeTruncPoly(3);
    CHECK(c->dim(0, 0) == 3);
    Morphism x = c->basisMorphism(0, 0, 1);
    Morphism x2 = c->compose(x, x);
    CHECK(x2.coords == c->basisMorphism(0, 0, 2).coords);
    CHECK(c->compose(x, x2).isZero());
}

TEST_CASE("fromAlgebra rejects non-associative input") {
    // "multiplication" with e*e = e but a broken mixed product
    CHECK_THROWS_AS(fromAlgebra(F2, {{{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}}, {1, 0}),
                    ValidationError);
}

TEST_CASE("fromQuiver A2") {
    CatPtr c = fromQuiver(F2, {"v1", "v2"}, {{"a", "v1", "v2"}}, {});
    CHECK(c->numObjects() == 2);
    CHECK(c->dim(0, 1) == 1);
    CHECK(c->dim(1, 0) == 0);
    CHECK(c->dim(0, 0) == 1);
    CHECK(c->dim(1, 1) == 1);
    CHECK(validate(*c).ok);
}

TEST_CASE("fromQuiver loop with relation matches truncated polynomials") {
    CatPtr q = fromQuiver(F2, {"v"}, {{"x", "v", "v"}}, {QuiverRelation{{{1, {"x", "x"}}}}});
    CHECK(q->numObjects() == 1);
    CHECK(q->dim(0, 0) == 2);
    CHECK(validate(*q).ok);
    // residue of x is nilpotent of order 2
    Morphism x = q->basisMorphism(0, 0, 1);
    CHECK(q->compose(x, x).isZero());
}

TEST_CASE("fromQuiver without truncating relations fails") {
    CHECK_THROWS_AS(fromQuiver(F2, {"v"}, {{"x", "v", "v"}}, {}, 6), NotFinite);
}

TEST_CASE("fromQuiver A3 with zero relation") {
    CatPtr c = fromQuiver(F2, {"v0", "v1", "v2"},
                          {{"c", "v0", "v1"}, {"a", "v1", "v2"}},
                          {QuiverRelation{{{1, {"c", "a"}}}}});
    CHECK(c->dim(0, 1) == 1);
    CHECK(c->dim(1, 2) == 1);
    CHECK(c->dim(0, 2) == 0);
    CHECK(validate(*c).ok);
}

TEST_CASE("gradedWindow dimensions") {
    CatPtr c = gradedWindow(F2, 1, -3, 3);
    int s0 = c->objIndex(gradedLabel(0)), s1 = c->objIndex(gradedLabel(1));
    CHECK(c->dim(s1, s0) == 2); // dim S_1
    CHECK(c->dim(s0, s1) == 0);
    CHECK(c->dim(s0, s0) == 1);
    CatPtr c2 = gradedWindow(F2, 2, -2, 2);
    CHECK(c2->dim(c2->objIndex(gradedLabel(2)), c2->objIndex(gradedLabel(0))) == 6);
    CHECK(validate(*gradedWindow(F2, 1, -2, 2)).ok);
}

TEST_CASE("gradedWindow composition is polynomial multiplication") {
    CatPtr c = gradedWindow(F2, 1, -3, 3);
    int s0 = c->objIndex(gradedLabel(0)), s1 = c->objIndex(gradedLabel(1)),
        s2 = c->objIndex(gradedLabel(2));
    // basis of S_1 in gradedWindow order: x0, x1
    Morphism x0 = c->basisMorphism(s1, s0, 0);
    Morphism x1 = c->basisMorphism(s2, s1, 1);
    Morphism prod = c->compose(x0, x1); // multiplication by x0*x1
    auto deg2 = monomialBasis(1, 2);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < deg2.size(); ++i)
        if (deg2[i] == std::vector<unsigned>{1, 1}) idx = i;
    CHECK(prod.coords.at(idx, 0).isOne());
    CHECK(rank(prod.coords) == 1);
}

TEST_CASE("gradedWindow tensor structure") {
    CatPtr c = gradedWindow(F2, 1, -2, 2);
    REQUIRE(c->monoidal.has_value());
    int s1 = c->objIndex(gradedLabel(1)), s2 = c->objIndex(gradedLabel(2));
    CHECK(c->tensorObjOrThrow(s1, s1) == s2);
    CHECK_THROWS_AS(c->tensorObjOrThrow(s2, s2), WindowOverflow);
    // (x0: S<1>->S<0>) ⊗ id_{S<1>} = x0: S<2>->S<1>
    Morphism x0 = c->basisMorphism(s1, c->objIndex(gradedLabel(0)), 0);
    Morphism t = c->tensorMor(x0, c->identity(s1));
    CHECK(t.src == s2);
    CHECK(t.tgt == s1);
    CHECK(t.coords.at(0, 0).isOne()); // x0 is first in graded-lex order
    CHECK(validateMonoidal(*c).ok);
}

TEST_CASE("tensorCategory") {
    CatPtr a = makeF2xF2();
    CatPtr b = makeTruncPoly(2);
    CatPtr t = tensorCategory(a, b);
    CHECK(t->numObjects() == 1);
    CHECK(t->dim(0, 0) == 4);
    CHECK(validate(*t).ok);
    CatPtr triv = tensorCategory(makeTruncPoly(1), makeTruncPoly(1));
    CHECK(triv->dim(0, 0) == 1);
    // basis e_i ⊗ x^j with index i*2+j; (e1⊗x)·(e1⊗x) = e1⊗x^2 = 0
    Morphism m = t->basisMorphism(0, 0, 1);
    CHECK(t->compose(m, m).isZero());
}

TEST_CASE("identity-corruption is reported with the object name") {
    auto c = std::make_shared<FinLinearCategory>();
    c->field = F2;
    c->objects = {"*"};
    c->homDim = {{1}};
    c->identityCoords = {Matrix::zero(F2, 1, 1)}; // wrong: should be 1
    c->composeFn = [](int, int, int, std::size_t, std::size_t) {
        return Matrix::ofInts(Field::fp(2), 1, 1, {1});
    };
    ValidationReport rep = validate(*c);
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.violations.empty());
}
