#include "doctest.h"
#include "trieven/constructions.hpp"
#include "trieven/canonical.hpp"

#include <random>

using namespace trieven;

namespace {

LinearCode e8() {
    return parse_hex_rows({0xB1, 0xE2, 0x74, 0xD8}, 8);
}

} // namespace

TEST_CASE("extended doubling") {
    auto d = extended_doubling(e8());
    CHECK(d.length() == 16);
    CHECK(d.dim() == 5); // (1|1) is already a diagonal word since 1 is in e8
    CHECK(is_triply_even(d));
    CHECK(d.contains(Gf2Vector::ones(8).concat(Gf2Vector(8))));
}

TEST_CASE("generalized doubling") {
    auto d = generalized_doubling(e8());
    CHECK(d.length() == 16);
    CHECK(d.dim() == 4 + 1); // dim C + dim (C meet Rad C)
    CHECK(is_triply_even(d));
    CHECK(extended_doubling(e8()).contains_code(d));
}

TEST_CASE("triangular graph codes") {
    auto t6 = triangular_graph_code(6);
    CHECK(t6.length() == 15);
    CHECK(t6.dim() == 4);
    CHECK(is_triply_even(t6));
    auto we6 = weight_enumerator(t6);
    CHECK(we6.coeffs[0] == 1);
    CHECK(we6.coeffs[8] == 15);

    auto t10 = triangular_graph_code(10);
    CHECK(t10.length() == 45);
    CHECK(t10.dim() == 8);
    CHECK(is_triply_even(t10));
    auto we10 = weight_enumerator(t10);
    CHECK(we10.coeffs[16] == 45);
    CHECK(we10.coeffs[24] == 210);
    CHECK(we10.coeffs[0] + we10.coeffs[16] + we10.coeffs[24] == 256);

    CHECK(!is_triply_even(triangular_graph_code(8)));
}

TEST_CASE("padded triangular code") {
    auto c = padded_triangular_code(10);
    CHECK(c.length() == 48);
    CHECK(c.dim() == 9);
    CHECK(is_triply_even(c));
    CHECK(c.contains(Gf2Vector::ones(48)));
}

TEST_CASE("quotient context basics") {
    auto c = direct_sum(e8(), e8());
    auto r = meet_Rad(c);
    CHECK(r.dim() == 2);
    QuotientContext q(c, r);
    CHECK(q.k == 6);
    // coset weight mod 8 does not depend on the representative
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        std::uint32_t a = rng() & ((1u << q.k) - 1);
        int w = q.coset_weight_mod8(a);
        for (const auto& y : r.words())
            CHECK((int)((q.lift(a) ^ y).weight() % 8) == w);
    }
    CHECK(q.x.front() == 0);
    CHECK(std::is_sorted(q.x.begin(), q.x.end()));
    // X by brute force over coset representatives
    std::size_t cnt = 0;
    for (std::uint32_t a = 0; a < (1u << q.k); ++a)
        if (q.coset_weight_mod8(a) == 0) ++cnt;
    CHECK(q.x.size() == cnt);

    // check code: exactly the relations among the singular cosets
    auto cc = q.check_code();
    CHECK(cc.length() == q.x.size());
    for (std::size_t i = 0; i < cc.dim(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < q.x.size(); ++j)
            if (cc.basis_row(i).get(j)) acc ^= q.x[j];
        CHECK(acc == 0);
    }
    Gf2Matrix xm(q.x.size());
    for (int i = 0; i < q.k; ++i) {
        Gf2Vector row(q.x.size());
        for (std::size_t j = 0; j < q.x.size(); ++j)
            if ((q.x[j] >> i) & 1) row.set(j, 1);
        xm.add_row(std::move(row));
    }
    CHECK(cc.dim() == q.x.size() - rank(xm));

    CHECK_THROWS(QuotientContext(c, LinearCode::span({c.basis_row(0)}, 16)));
}

TEST_CASE("pair code and isometries") {
    auto c = direct_sum(e8(), e8());
    QuotientContext q(c, meet_Rad(c));
    CHECK(pair_code(q, q, GlMat::identity_k(q.k)) ==
          sum_code(juxtapose_diag(c), direct_sum(q.r, q.r)));

    // triply even exactly when f preserves the singular cosets
    std::mt19937 rng(11);
    int iso = 0, noniso = 0;
    for (int t = 0; t < 40; ++t) {
        GlMat f;
        f.rows.resize(q.k);
        do {
            for (int i = 0; i < q.k; ++i)
                f.rows[i] = (std::uint16_t)(rng() & ((1u << q.k) - 1));
        } while (!f.invertible());
        bool im = is_isometry(q, q, f);
        (im ? iso : noniso)++;
        CHECK(is_triply_even(pair_code(q, q, f)) == im);
    }
    CHECK(noniso > 0);

    GlMat id = GlMat::identity_k(q.k);
    CHECK(is_isometry(q, q, id));
    CHECK(iso >= 0);
}

TEST_CASE("induced quotient action") {
    auto c = direct_sum(e8(), e8());
    QuotientContext q(c, meet_Rad(c));
    std::vector<int> swap_blocks(16);
    for (int i = 0; i < 8; ++i) { swap_blocks[i] = i + 8; swap_blocks[i + 8] = i; }
    GlMat g = induced_quotient_action(q, Perm(swap_blocks));
    CHECK(g.invertible());
    for (std::uint32_t a = 0; a < (1u << q.k); ++a)
        CHECK(q.r.reduce(q.lift(a).permuted(swap_blocks)) ==
              q.r.reduce(q.lift(g.map(a))));
    // an isometry: the quotient action of an automorphism preserves X
    CHECK(is_isometry(q, q, g));
    CHECK_THROWS(induced_quotient_action(q, Perm::identity(16).then(
        Perm(std::vector<int>{1, 0, 2, 3, 4, 5, 6, 7,
                              8, 9, 10, 11, 12, 13, 14, 15}))));
}

TEST_CASE("split by codeword") {
    auto d = generalized_doubling(e8());
    auto x = Gf2Vector::ones(8).concat(Gf2Vector(8));
    REQUIRE(d.contains(x));
    auto parts = split_by_codeword(d, x);
    CHECK(parts.c1 == e8());
    CHECK(parts.c2 == e8());
    CHECK(parts.r1 == LinearCode::repetition(8));
    CHECK(parts.r2 == LinearCode::repetition(8));
}
