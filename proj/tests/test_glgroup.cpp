#include "doctest.h"
#include "trieven/glgroup.hpp"

#include <random>
#include <set>

using namespace trieven;

namespace {

std::vector<std::uint32_t> random_set_with_zero(int k, std::mt19937& rng) {
    std::vector<std::uint32_t> x{0};
    for (std::uint32_t v = 1; v < (1u << k); ++v)
        if (rng() & 1) x.push_back(v);
    return x;
}

std::vector<GlMat> brute_stabilizer(int k, const std::vector<std::uint32_t>& x) {
    std::set<std::uint32_t> xs(x.begin(), x.end());
    std::vector<GlMat> out;
    for (const auto& g : gl_all(k)) {
        bool ok = true;
        for (auto v : x)
            if (!xs.count(g.map(v))) { ok = false; break; }
        if (ok) out.push_back(g);
    }
    return out;
}

std::set<std::vector<std::uint16_t>> element_set(int k, const MatGroup& grp) {
    std::set<std::vector<std::uint16_t>> out;
    for (const auto& g : gl_all(k))
        if (grp.contains(g)) out.insert(g.rows);
    return out;
}

} // namespace

TEST_CASE("GlMat algebra") {
    GlMat id = GlMat::identity_k(3);
    CHECK(id.is_identity());
    GlMat g({0b011, 0b010, 0b100}); // e0 -> e0+e1
    CHECK(g.invertible());
    CHECK(g.map(0b001) == 0b011);
    CHECK(g.then(g.inverse()).is_identity());
    CHECK(g.inverse().then(g).is_identity());
    GlMat h({0b010, 0b001, 0b100});
    CHECK(g.then(h).map(5) == h.map(g.map(5)));
    GlMat sing({0b011, 0b010, 0b001});
    CHECK(!sing.invertible());
    CHECK_THROWS(sing.inverse());
}

TEST_CASE("GL(k,2) orders") {
    CHECK(gl_all(0).size() == 1);
    CHECK(gl_all(1).size() == 1);
    CHECK(gl_all(2).size() == 6);
    CHECK(gl_all(3).size() == 168);
    CHECK(gl_all(4).size() == 20160);
    for (int k : {2, 3, 4}) {
        MatGroup g(k, gl_generators(k));
        CHECK(g.order() == BigInt((int)gl_all(k).size()));
    }
    for (const auto& m : gl_all(3))
        CHECK(MatGroup(3, gl_generators(3)).contains(m));
}

TEST_CASE("set stabilizer matches brute force") {
    std::mt19937 rng(2024);
    for (int k : {2, 3, 4}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto x = random_set_with_zero(k, rng);
            auto brute = brute_stabilizer(k, x);
            auto gens = gl_set_stabilizer(k, x);
            MatGroup grp(k, gens);
            CHECK(grp.order() == BigInt((int)brute.size()));
            for (const auto& g : gens) {
                std::set<std::uint32_t> xs(x.begin(), x.end());
                for (auto v : x) CHECK(xs.count(g.map(v)));
            }
        }
    }
}

TEST_CASE("set stabilizer accepts seed generators") {
    std::mt19937 rng(55);
    auto x = random_set_with_zero(4, rng);
    auto brute = brute_stabilizer(4, x);
    std::vector<GlMat> seed;
    for (const auto& g : brute)
        if (!g.is_identity()) { seed.push_back(g); break; }
    auto gens = gl_set_stabilizer(4, x, seed);
    CHECK(MatGroup(4, gens).order() == BigInt((int)brute.size()));
    GlMat bad({0b0010, 0b0001, 0b0100, 0b1000});
    bool stabilizes = true;
    std::set<std::uint32_t> xs(x.begin(), x.end());
    for (auto v : x)
        if (!xs.count(bad.map(v))) stabilizes = false;
    if (!stabilizes) CHECK_THROWS(gl_set_stabilizer(4, x, {bad}));
}

TEST_CASE("set transporter") {
    std::mt19937 rng(99);
    auto all = gl_all(3);
    for (int trial = 0; trial < 8; ++trial) {
        auto x1 = random_set_with_zero(3, rng);
        const auto& h = all[rng() % all.size()];
        std::vector<std::uint32_t> x2;
        for (auto v : x1) x2.push_back(h.map(v));
        std::sort(x2.begin(), x2.end());
        auto t = gl_set_transporter(3, x1, x2);
        REQUIRE(t.has_value());
        std::vector<std::uint32_t> img;
        for (auto v : x1) img.push_back(t->map(v));
        std::sort(img.begin(), img.end());
        CHECK(img == x2);
    }
    // size mismatch and genuinely inequivalent sets
    CHECK(!gl_set_transporter(3, {0, 1}, {0, 1, 2}).has_value());
    // {0, e0} vs a 2-dim worth of sums: pair counts differ
    CHECK(!gl_set_transporter(3, {0, 1, 2, 3}, {0, 1, 2, 4}).has_value());
}

TEST_CASE("double cosets partition the group") {
    std::mt19937 rng(7);
    for (int k : {2, 3}) {
        auto all = gl_all(k);
        for (int trial = 0; trial < 6; ++trial) {
            MatGroup g(k, gl_generators(k));
            MatGroup a(k, {all[rng() % all.size()], all[rng() % all.size()]});
            MatGroup b(k, {all[rng() % all.size()]});
            auto reps = double_coset_reps(g, a, b);
            REQUIRE(!reps.empty());
            CHECK(reps.front().is_identity());
            auto aset = element_set(k, a);
            auto bset = element_set(k, b);
            std::set<std::vector<std::uint16_t>> covered;
            for (const auto& r : reps) {
                std::set<std::vector<std::uint16_t>> dc;
                for (const auto& arows : aset)
                    for (const auto& brows : bset)
                        dc.insert(GlMat(arows).then(r).then(GlMat(brows)).rows);
                std::size_t before = covered.size();
                covered.insert(dc.begin(), dc.end());
                // disjoint from all earlier double cosets
                CHECK(covered.size() == before + dc.size());
            }
            CHECK(covered.size() == all.size());
        }
    }
}

TEST_CASE("double coset bound triggers") {
    MatGroup g(4, gl_generators(4));
    MatGroup triv = MatGroup::trivial(4);
    CHECK_THROWS_AS(double_coset_reps(g, triv, triv, 100), std::runtime_error);
}
