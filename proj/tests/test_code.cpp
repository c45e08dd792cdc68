#include "doctest.h"
#include "trieven/code.hpp"

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

} // namespace

TEST_CASE("hex row format, LSB first") {
    auto v = Gf2Vector::from_word(24, 0xC75001);
    CHECK(v.support() == std::vector<std::size_t>{0, 12, 14, 16, 17, 18, 22, 23});
    CHECK(v.weight() == 8);
}

TEST_CASE("RREF basis makes equality structural") {
    auto c = e8();
    std::vector<Gf2Vector> rows(c.basis().rows());
    rows.push_back(rows[0] ^ rows[2]);
    std::swap(rows[0], rows[3]);
    CHECK(LinearCode(Gf2Matrix(rows, 8)) == c);
}

TEST_CASE("e8 weight distribution") {
    auto we = weight_enumerator(e8());
    CHECK(we.coeffs[0] == 1);
    CHECK(we.coeffs[4] == 14);
    CHECK(we.coeffs[8] == 1);
    CHECK(we.coeffs[2] == 0);
    CHECK(e8().dim() == 4);
    CHECK(dual(e8()) == e8());
}

TEST_CASE("binary Golay code") {
    auto c = g24();
    CHECK(c.dim() == 12);
    CHECK(dual(c) == c);
    auto we = weight_enumerator(c);
    CHECK(we.coeffs[8] == 759);
    CHECK(we.coeffs[12] == 2576);
    CHECK(we.coeffs[16] == 759);
    CHECK(we.coeffs[24] == 1);
    CHECK(count_words_of_weight(c, 8) == 759);
}

TEST_CASE("word enumeration visits each codeword once") {
    auto words = e8().words();
    CHECK(words.size() == 16);
    std::sort(words.begin(), words.end());
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const auto& w : words) CHECK(e8().contains(w));
}

TEST_CASE("sum and meet") {
    auto c = e8();
    auto r = LinearCode::repetition(8);
    CHECK(sum_code(c, r) == c);
    CHECK(meet_code(c, r) == r);
    CHECK(meet_code(c, LinearCode::zero(8)).dim() == 0);
    CHECK(c.contains_code(r));
}

TEST_CASE("puncture yields the Hamming code, shorten its dual") {
    auto p = puncture(e8(), {0});
    auto wp = weight_enumerator(p);
    CHECK(p.dim() == 4);
    CHECK(wp.coeffs[3] == 7);
    CHECK(wp.coeffs[4] == 7);
    CHECK(wp.coeffs[7] == 1);
    auto s = shorten(e8(), {0});
    auto ws = weight_enumerator(s);
    CHECK(s.dim() == 3);
    CHECK(ws.coeffs[4] == 7);
    CHECK(s == dual(p));
}

TEST_CASE("direct sum and diagonal juxtaposition") {
    auto d = direct_sum(e8(), e8());
    CHECK(d.length() == 16);
    CHECK(d.dim() == 8);
    auto j = juxtapose_diag(e8());
    CHECK(j.dim() == 4);
    CHECK(weight_enumerator(j).coeffs[8] == 14);
    CHECK(d.contains_code(j));
}

TEST_CASE("MacWilliams transform") {
    auto we = weight_enumerator(e8());
    CHECK(macwilliams(we, 4) == we);
    auto wp = weight_enumerator(puncture(e8(), {0}));
    auto dw = macwilliams(wp, 4);
    CHECK(dw.coeffs[0] == 1);
    CHECK(dw.coeffs[4] == 7);
    CHECK(dw.coeffs[3] == 0);
    auto wg = weight_enumerator(g24());
    CHECK(macwilliams(wg, 12) == wg);
}

TEST_CASE("permuted code") {
    std::vector<int> rot{1, 2, 3, 4, 5, 6, 7, 0};
    auto p = e8().permuted(rot);
    CHECK(weight_enumerator(p) == weight_enumerator(e8()));
}

TEST_CASE("hex and json round trips") {
    auto c = g24();
    CHECK(parse_hex_rows(emit_hex_rows(c), 24) == c);
    CHECK(code_from_json(code_to_json(c)) == c);
    CHECK(parse_hex_text(emit_hex_text(c), 24) == c);
}
