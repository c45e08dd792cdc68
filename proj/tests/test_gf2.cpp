#include "doctest.h"
#include "trieven/gf2.hpp"

using namespace trieven;

TEST_CASE("vector basics") {
    Gf2Vector v(70);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(69, true);
    CHECK(v.weight() == 2);
    CHECK(v.get(69));
    CHECK(v.lowest_bit() == 0);
    v.set(0, false);
    CHECK(v.lowest_bit() == 69);
    CHECK(v.support() == std::vector<std::size_t>{69});
}

TEST_CASE("ones trims the top limb") {
    auto v = Gf2Vector::ones(70);
    CHECK(v.weight() == 70);
    auto w = v.padded(10);
    CHECK(w.weight() == 70);
    CHECK(w.size() == 80);
}

TEST_CASE("xor and product") {
    auto a = Gf2Vector::from_support(8, {0, 1, 2, 3});
    auto b = Gf2Vector::from_support(8, {2, 3, 4, 5});
    CHECK((a ^ b) == Gf2Vector::from_support(8, {0, 1, 4, 5}));
    CHECK((a & b) == Gf2Vector::from_support(8, {2, 3}));
    CHECK(a.dot(b) == false);
    b.set(2, false);
    CHECK(a.dot(b) == true);
}

TEST_CASE("coordinate-0-first order") {
    auto a = Gf2Vector::from_support(8, {0});
    auto b = Gf2Vector::from_support(8, {1});
    CHECK(b < a);       // differ at coordinate 0, b has 0 there
    CHECK(!(a < b));
    CHECK(Gf2Vector(8) < a);
}

TEST_CASE("select and permuted") {
    auto a = Gf2Vector::from_support(6, {1, 4});
    CHECK(a.select({4, 1, 0}) == Gf2Vector::from_support(3, {0, 1}));
    std::vector<int> rot{1, 2, 3, 4, 5, 0};
    CHECK(a.permuted(rot) == Gf2Vector::from_support(6, {2, 5}));
}

TEST_CASE("rref and rank") {
    Gf2Matrix m({Gf2Vector::from_support(4, {0, 1}),
                 Gf2Vector::from_support(4, {1, 2}),
                 Gf2Vector::from_support(4, {0, 2})}, 4);
    std::vector<std::size_t> piv;
    auto e = rref(m, &piv);
    CHECK(e.row_count() == 2);
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(rank(m) == 2);
}

TEST_CASE("kernel is orthogonal complement of row space") {
    Gf2Matrix m({Gf2Vector::from_support(5, {0, 1, 2}),
                 Gf2Vector::from_support(5, {2, 3})}, 5);
    auto k = kernel_basis(m);
    CHECK(k.row_count() == 3);
    for (const auto& kr : k.rows())
        for (const auto& mr : m.rows())
            CHECK(kr.dot(mr) == false);
}

TEST_CASE("reduce_mod") {
    std::vector<std::size_t> piv;
    Gf2Matrix e = rref(Gf2Matrix({Gf2Vector::from_support(4, {0, 2}),
                                  Gf2Vector::from_support(4, {1, 2})}, 4), &piv);
    auto v = Gf2Vector::from_support(4, {0, 3});
    CHECK(reduce_mod(v, e, piv).is_zero() == false);
    CHECK(reduce_mod(Gf2Vector::from_support(4, {0, 1}), e, piv).is_zero());
    auto w = Gf2Vector::from_support(4, {0, 2});
    CHECK(reduce_mod(w, e, piv).is_zero());
}

TEST_CASE("solve_row_combination") {
    Gf2Matrix m({Gf2Vector::from_support(4, {0, 1}),
                 Gf2Vector::from_support(4, {1, 2}),
                 Gf2Vector::from_support(4, {3})}, 4);
    std::vector<std::uint8_t> c;
    REQUIRE(solve_row_combination(m, Gf2Vector::from_support(4, {0, 2, 3}), &c));
    Gf2Vector acc(4);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) acc ^= m.row(i);
    CHECK(acc == Gf2Vector::from_support(4, {0, 2, 3}));
    CHECK(!solve_row_combination(m, Gf2Vector::from_support(4, {0}), &c));
}
