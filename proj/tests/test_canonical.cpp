#include "doctest.h"
#include "trieven/canonical.hpp"
#include "trieven/forms.hpp"

#include <numeric>
#include <random>

using namespace trieven;

namespace {

LinearCode e8() {
    return parse_hex_rows({0xB1, 0xE2, 0x74, 0xD8}, 8);
}

LinearCode g24() {
    return parse_hex_rows({0xC75001, 0x49F002, 0xD4B004, 0x6E3008,
                           0x9B3010, 0xB66020, 0xECC040, 0x1ED080,
                           0x3DA100, 0x7B4200, 0xB1D400, 0xE3A800}, 24);
}

std::vector<int> random_perm(int n, unsigned seed) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("automorphism group orders") {
    CHECK(canonical_form(e8()).aut_order() == 1344);
    CHECK(canonical_form(LinearCode::repetition(8)).aut_order() == 40320);
    CHECK(canonical_form(LinearCode::zero(6)).aut_order() == 720);
}

TEST_CASE("Mathieu group from the Golay code") {
    auto cf = canonical_form(g24());
    CHECK(cf.aut_order() == 244823040);
    for (const auto& g : cf.aut_generators)
        CHECK(g24().permuted(g.images) == g24());
}

TEST_CASE("canonical form is relabeling-invariant") {
    auto c = e8();
    for (unsigned seed : {1u, 2u, 3u}) {
        auto p = c.permuted(random_perm(8, seed));
        auto cf = canonical_form(p);
        CHECK(cf.certificate == canonical_form(c).certificate);
        CHECK(cf.canonical_code == canonical_form(c).canonical_code);
        CHECK(p.permuted(cf.relabeling.images) == cf.canonical_code);
    }
}

TEST_CASE("equivalence with witness") {
    auto c = g24();
    auto d = c.permuted(random_perm(24, 7));
    Perm w;
    REQUIRE(is_equivalent(c, d, &w));
    CHECK(c.permuted(w.images) == d);
    CHECK(!is_equivalent(e8(), direct_sum(LinearCode::repetition(4),
                                          LinearCode::repetition(4))));
}

TEST_CASE("pair canonical form stabilizes the subcode") {
    auto c = direct_sum(e8(), e8());
    auto r = LinearCode(Gf2Matrix({Gf2Vector::ones(8).concat(Gf2Vector(8))}, 16));
    // r is <1|0>; the pair group must keep the blocks apart
    auto cf_pair = canonical_form_pair(c, r);
    auto cf = canonical_form(c);
    CHECK(cf.aut_order() == BigInt(1344) * 1344 * 2);
    CHECK(cf_pair.aut_order() == BigInt(1344) * 1344);
    for (const auto& g : cf_pair.aut_generators) {
        CHECK(c.permuted(g.images) == c);
        CHECK(r.permuted(g.images) == r);
    }
}

TEST_CASE("pair certificates distinguish subcode placement") {
    auto c = direct_sum(e8(), LinearCode::repetition(8));
    auto r1 = LinearCode(Gf2Matrix({Gf2Vector::ones(8).concat(Gf2Vector(8))}, 16));
    auto r2 = LinearCode(Gf2Matrix({Gf2Vector(8).concat(Gf2Vector::ones(8))}, 16));
    auto a = canonical_form_pair(c, r1);
    auto b = canonical_form_pair(c, r2);
    CHECK(a.certificate != b.certificate);
}
