#include "doctest.h"
#include "trieven/perm.hpp"

using namespace trieven;

namespace {

Perm cycle(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Perm(img);
}

Perm swap01(int n) {
    auto p = Perm::identity(n);
    p.images[0] = 1;
    p.images[1] = 0;
    return p;
}

} // namespace

TEST_CASE("perm composition and inverse") {
    auto c = cycle(5);
    CHECK(c.then(c.inverse()).is_identity());
    auto s = swap01(5);
    CHECK(c.then(s).act(0) == 0);
    CHECK(s.then(c).act(0) == 2);
    CHECK(c.valid());
}

TEST_CASE("symmetric group order") {
    for (int n : {3, 5, 8}) {
        PermGroup g(n, {cycle(n), swap01(n)});
        BigInt expect = 1;
        for (int i = 2; i <= n; ++i) expect *= i;
        CHECK(g.order() == expect);
    }
}

TEST_CASE("cyclic group and membership") {
    PermGroup g(7, {cycle(7)});
    CHECK(g.order() == 7);
    CHECK(g.contains(cycle(7).then(cycle(7))));
    CHECK(!g.contains(swap01(7)));
    CHECK(g.contains(Perm::identity(7)));
}

TEST_CASE("dihedral group") {
    int n = 6;
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    PermGroup g(n, {cycle(n), Perm(refl)});
    CHECK(g.order() == 12);
    CHECK(!g.contains(swap01(n)));
}

TEST_CASE("trivial group") {
    auto g = PermGroup::trivial(5);
    CHECK(g.order() == 1);
    CHECK(g.orbits().size() == 5);
}

TEST_CASE("orbits") {
    auto p = Perm::identity(6);
    p.images = {1, 0, 3, 4, 2, 5};
    PermGroup g(6, {p});
    auto orbs = g.orbits();
    REQUIRE(orbs.size() == 3);
    CHECK(orbs[0] == std::vector<int>{0, 1});
    CHECK(orbs[1] == std::vector<int>{2, 3, 4});
    CHECK(orbs[2] == std::vector<int>{5});
}

TEST_CASE("orbit_partition on an arbitrary action") {
    // action of +2 mod 10
    auto orbs = orbit_partition(10, 1, [](int, int p) { return (p + 2) % 10; });
    REQUIRE(orbs.size() == 2);
    CHECK(orbs[0] == std::vector<int>{0, 2, 4, 6, 8});
    CHECK(orbs[1] == std::vector<int>{1, 3, 5, 7, 9});
}

TEST_CASE("big orders do not overflow") {
    int n = 30;
    PermGroup g(n, {cycle(n), swap01(n)});
    BigInt expect = 1;
    for (int i = 2; i <= n; ++i) expect *= i;
    CHECK(g.order() == expect);
}
