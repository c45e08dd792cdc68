#include "doctest.h"
#include "trieven/code.hpp"
#include "trieven/forms.hpp"

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

// first-order Reed-Muller code of length 16
LinearCode rm14() {
    std::vector<Gf2Vector> rows{Gf2Vector::ones(16)};
    for (int j = 0; j < 4; ++j) {
        Gf2Vector v(16);
        for (int i = 0; i < 16; ++i)
            if ((i >> j) & 1) v.set(i, true);
        rows.push_back(std::move(v));
    }
    return LinearCode(Gf2Matrix(std::move(rows), 16));
}

} // namespace

TEST_CASE("forms on small vectors") {
    auto u = Gf2Vector::from_support(8, {0, 1, 2, 3});
    auto v = Gf2Vector::from_support(8, {2, 3, 4, 5});
    CHECK(q_form(u) == 1);
    CHECK(q_form(Gf2Vector::ones(8)) == 0);
    CHECK(b_form(u, v) == 1);
    CHECK(b_form(u, u) == 0);
    CHECK(t_form(u, v, Gf2Vector::from_support(8, {3})) == 1);
    CHECK(t_form(u, v, Gf2Vector::from_support(8, {6})) == 0);
}

TEST_CASE("divisibility tests") {
    CHECK(is_doubly_even(e8()));
    CHECK(is_doubly_even(g24()));
    CHECK(!is_triply_even(e8()));
    CHECK(!is_triply_even(g24()));
    CHECK(is_triply_even(rm14()));
    CHECK(is_triply_even(LinearCode::repetition(8)));
    CHECK(!is_doubly_even(LinearCode::full(8)));
}

TEST_CASE("star code") {
    auto c = e8();
    auto s = star_code(c);
    CHECK(s.contains_code(c));
    auto ds = dual(s);
    for (const auto& r : ds.basis().rows())
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j)
                CHECK(t_form(c.basis_row(i), c.basis_row(j), r) == 0);
    CHECK(star_code(LinearCode::repetition(8)) == LinearCode::repetition(8));
}

TEST_CASE("radicals of self-dual codes are the repetition code") {
    // indecomposable doubly even self-dual codes have rad = Rad = <1>
    for (auto c : {e8(), g24()}) {
        CHECK(meet_rad(c) == LinearCode::repetition(c.length()));
        CHECK(meet_Rad(c) == LinearCode::repetition(c.length()));
        auto s = radical_summary(c);
        CHECK(s.rad_size == 2);
        CHECK(s.Rad_size == 2);
        CHECK(s.rad_in_c);
        CHECK(s.Rad_in_c);
    }
}

TEST_CASE("brute radical agrees with the bilinear computation on rm14") {
    auto c = rm14();
    auto s = radical_summary(c);
    auto mr = meet_rad(c);
    for (const auto& x : rad_brute(c))
        if (c.contains(x)) CHECK(mr.contains(x));
    CHECK(s.dim_meet_rad == mr.dim());
    CHECK(s.dim_meet_Rad == meet_Rad(c).dim());
}

TEST_CASE("repetition direct sum has radical vectors outside the code") {
    auto c = direct_sum(LinearCode::repetition(8), LinearCode::repetition(8));
    CHECK(is_triply_even(c));
    auto s = radical_summary(c);
    CHECK(!s.Rad_in_c);
    std::vector<Perm> trivial; // no symmetry known: every coset is own orbit
    CHECK(exists_outside_Rad(c, trivial));
    CHECK(!is_maximal(c));
}

TEST_CASE("coset criterion matches brute force on small codes") {
    std::vector<Perm> trivial;
    std::vector<LinearCode> cases{
        LinearCode::repetition(8),
        rm14(),
        direct_sum(LinearCode::repetition(8), LinearCode::repetition(8)),
        direct_sum(LinearCode::repetition(8), rm14()),
        juxtapose_diag(e8()),
    };
    for (const auto& c : cases) {
        bool brute = false;
        for (const auto& x : Rad_brute(c))
            if (!c.contains(x)) { brute = true; break; }
        CHECK(exists_outside_Rad(c, trivial) == brute);
    }
}

TEST_CASE("maximality") {
    CHECK(is_maximal(LinearCode::repetition(8)));
    CHECK(!is_maximal(LinearCode::zero(8)));
    CHECK(maximalize(LinearCode::zero(8)) == LinearCode::repetition(8));
    auto m = maximalize(LinearCode::zero(16));
    CHECK(is_triply_even(m));
    CHECK(is_maximal(m));
    CHECK(maximalize(m) == m);
}

TEST_CASE("outside vectors cover the quotient without symmetry") {
    auto c = juxtapose_diag(e8());
    std::vector<Perm> trivial;
    auto reps = outside_vectors(c, trivial);
    auto w = dual(star_code(c));
    auto e = meet_code(w, c);
    CHECK(reps.size() == (1u << (w.dim() - e.dim())) - 1);
    for (const auto& r : reps) {
        CHECK(w.contains(r));
        CHECK(!r.is_zero());
    }
}
