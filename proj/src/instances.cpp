#include "addtop/instances.hpp"

namespace addtop {

CatPtr makeF2xF2() {
    return fromAlgebra(Field::fp(2),
                       {{{1, 0}, {0, 0}},
                        {{0, 0}, {0, 1}}},
                       {1, 1});
}

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
    return fromAlgebra(Field::fp(2), mult, unit);
}

CatPtr makeA2() {
    return fromQuiver(Field::fp(2), {"v1", "v2"}, {{"a", "v1", "v2"}}, {});
}

CatPtr makeKelly() { return tensorCategory(makeF2xF2(), makeTruncPoly(2)); }

CatPtr makeA3() {
    return fromQuiver(Field::fp(2), {"v0", "v1", "v2"},
                      {{"c", "v0", "v1"}, {"a", "v1", "v2"}}, {{{{1, {"c", "a"}}}}});
}

CatPtr makeF2xF2Monoidal() {
    auto c = std::make_shared<FinLinearCategory>(*makeF2xF2());
    MonoidalStructure m;
    m.unit = 0;
    m.tensorObj = [](int, int) { return std::optional<int>(0); };
    m.tensorMor = [cw = c.get()](int, int, int, int, std::size_t f, std::size_t g) {
        return cw->composeBasis(0, 0, 0, f, g);
    };
    m.symmetricIdentityBraiding = true;
    c->monoidal = std::move(m);
    return c;
}

} // namespace addtop
