#include "doctest.h"
#include "trieven/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace trieven;

namespace {

LinearCode e8() {
    return parse_hex_rows({0xB1, 0xE2, 0x74, 0xD8}, 8);
}

} // namespace

TEST_CASE("the nine self-dual codes load and check out") {
    auto codes = load_desd24();
    REQUIRE(codes.size() == 9);
    for (const auto& c : codes) {
        CHECK(c.dim() == 12);
        CHECK(dual(c) == c);
        CHECK(is_doubly_even(c));
        CHECK(c.contains(Gf2Vector::ones(24)));
    }
    auto we = weight_enumerator(codes[0]);
    CHECK(we.coeffs[8] == 759);
    CHECK(we.coeffs[12] == 2576);
    CHECK(we.coeffs[16] == 759);
    CHECK(we.coeffs[24] == 1);
    CHECK(is_equivalent(codes[8], direct_sum(direct_sum(e8(), e8()), e8())));
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            CHECK(!is_equivalent(codes[i], codes[j]));
}

TEST_CASE("representatives of the ten classes") {
    auto reps = representatives48();
    auto labels = representative_labels48();
    REQUIRE(reps.size() == 10);
    REQUIRE(labels.size() == 10);
    std::multiset<std::size_t> dims;
    for (const auto& r : reps) {
        CHECK(r.length() == 48);
        CHECK(is_triply_even(r));
        dims.insert(r.dim());
    }
    CHECK(dims == std::multiset<std::size_t>{9, 13, 13, 13, 13, 13, 13, 13, 14, 15});
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK(!is_equivalent(reps[i], reps[j]));
}

TEST_CASE("identification matches under relabeling") {
    auto reps = representatives48();
    std::vector<int> p(48);
    for (int i = 0; i < 48; ++i) p[i] = (i * 7 + 3) % 48; // 7 is prime to 48
    CHECK(identify48(reps[0].permuted(p), reps) == 0);
    CHECK(identify48(reps[9].permuted(p), reps) == 9);
    CHECK(identify48(direct_sum(LinearCode::repetition(24),
                                LinearCode::repetition(24)), reps) == -1);
}

TEST_CASE("generalized doublings of self-dual codes are maximal") {
    auto codes = load_desd24();
    // (tildeD(C) * tildeD(C))^perp = tildeD(C), hence maximal
    for (int i : {0, 7, 8}) {
        auto d = generalized_doubling(codes[i]);
        CHECK(dual(star_code(d)) == d);
        CHECK(is_maximal(d));
    }
    CHECK(is_maximal(padded_triangular_code(10)));
    CHECK(is_equivalent(padded_triangular_code(6), generalized_doubling(e8())));
}

TEST_CASE("subcode step on e8") {
    auto r = LinearCode::repetition(8);
    auto subs = subcode_step(e8(), r, automorphism_generators(e8()));
    CHECK(!subs.empty());
    std::size_t total = 0;
    for (const auto& s : subs) {
        CHECK(s.dim() == 3);
        CHECK(s.contains_code(r));
        CHECK(e8().contains_code(s));
    }
    // orbits cover all 2^(dim C - dim R) - 1 = 7 codimension-1 subcodes
    // containing R; count them directly
    std::set<LinearCode> all;
    auto dc = dual(e8());
    auto keys = complement_in(dual(r), dc).words();
    for (const auto& x : keys)
        if (!x.is_zero())
            all.insert(dual(sum_code(dc, LinearCode::span({x}, 8))));
    CHECK(all.size() == 7);
    for (const auto& s : subs) CHECK(all.count(s) == 1);
    total = 0;
    for (const auto& c : all) {
        bool hit = false;
        for (const auto& s : subs) hit = hit || is_equivalent(c, s);
        CHECK(hit);
        ++total;
    }
    CHECK(total == 7);
}

TEST_CASE("parts entry fields are consistent") {
    auto e = make_parts_entry(load_desd24()[1], 0); // d24+
    CHECK(e.ctx.c.dim() == 12);
    CHECK(e.ctx.r == meet_Rad(e.ctx.c));
    CHECK(e.check_dual.length() == e.ctx.x.size());
    CHECK(dual(e.check_dual) == e.ctx.check_code());
    MatGroup g0((int)e.ctx.k, e.g0);
    for (const auto& g : e.g0) {
        std::vector<std::uint32_t> img;
        for (auto a : e.ctx.x) img.push_back(g.map(a));
        std::sort(img.begin(), img.end());
        CHECK(img == e.ctx.x); // G0 stabilizes the singular set
    }
}

TEST_CASE("checkpoint round trip") {
    auto path = std::filesystem::temp_directory_path() / "trieven_ckpt_test.ndjson";
    std::vector<LinearCode> codes{e8(), LinearCode::repetition(8),
                                  load_desd24()[0]};
    std::vector<int> tags{1, 2, 3};
    checkpoint_store(path.string(), codes, tags, {42, 7});
    std::vector<LinearCode> codes2;
    std::vector<int> tags2;
    std::vector<std::size_t> meta2;
    REQUIRE(checkpoint_load(path.string(), &codes2, &tags2, &meta2));
    CHECK(codes2 == codes);
    CHECK(tags2 == tags);
    CHECK(meta2 == std::vector<std::size_t>{42, 7});
    CHECK(!checkpoint_load("/nonexistent/no.ndjson", &codes2, &tags2));
    // corrupt it
    {
        std::ofstream f(path, std::ios::app);
        f << "{\"garbage\":1}\n";
    }
    CHECK_THROWS(checkpoint_load(path.string(), &codes2, &tags2));
    std::filesystem::remove(path);
}

TEST_CASE("classification report json round trip") {
    ClassificationReport r;
    r.level_counts = {9, 42};
    r.parts_table = {{7, 1, 1}, {33, 6}};
    r.duplex_maximal = 30;
    r.duplex_constructed = 214;
    r.duplex_excluded = 1268;
    r.hybrid_pairs = 125;
    r.hybrid_constructed = 225;
    r.hybrid_maximal = 5;
    r.classes = {e8(), LinearCode::repetition(8)};
    r.class_labels = {"a", "b"};
    r.duplex_ids = {0, 1, 0};
    r.hybrid_ids = {1};
    r.note = "n";
    auto r2 = ClassificationReport::from_json(r.to_json());
    CHECK(r2 == r);
}

TEST_CASE("parallel_for is deterministic and propagates errors") {
    std::vector<int> v(100, 0);
    parallel_for(100, 4, [&](std::size_t i) { v[i] = (int)i * 2; });
    for (int i = 0; i < 100; ++i) CHECK(v[i] == 2 * i);
    CHECK_THROWS_AS(parallel_for(10, 4, [&](std::size_t i) {
        if (i == 5) throw std::runtime_error("boom");
    }), std::runtime_error);
}

TEST_CASE("shorten chain reaches the unique length-16 class") {
    // start from the single known class of length 24 and walk down
    auto start = generalized_doubling(parse_hex_rows(
        {0xB1, 0xE2, 0x74, 0xD8}, 8)); // length 16, dim 5
    auto chain = shorten_chain({start}, 8, 2);
    REQUIRE(chain.count(16));
    CHECK(chain.at(16).size() == 1);
    REQUIRE(chain.count(8));
    CHECK(chain.at(8).size() == 1);
    CHECK(chain.at(8).front() == LinearCode::repetition(8));
}
