#include <benchmark/benchmark.h>

#include "trieven/canonical.hpp"
#include "trieven/code.hpp"
#include "trieven/forms.hpp"
#include "trieven/glgroup.hpp"

using namespace trieven;

namespace {

LinearCode golay() {
    return parse_hex_rows({0xC75001, 0x49F002, 0xD4B004, 0x6E3008,
                           0x9B3010, 0xB66020, 0xECC040, 0x1ED080,
                           0x3DA100, 0x7B4200, 0xB1D400, 0xE3A800}, 24);
}

void bm_rref(benchmark::State& state) {
    auto c = golay();
    std::vector<Gf2Vector> rows(c.basis().rows());
    for (std::size_t i = 1; i < rows.size(); ++i) rows[i] ^= rows[0];
    Gf2Matrix m(rows, 24);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref);

void bm_weight_enumerator(benchmark::State& state) {
    auto c = golay();
    for (auto _ : state) benchmark::DoNotOptimize(weight_enumerator(c));
}
BENCHMARK(bm_weight_enumerator);

void bm_meet_rad(benchmark::State& state) {
    auto c = golay();
    for (auto _ : state) benchmark::DoNotOptimize(meet_rad(c));
}
BENCHMARK(bm_meet_rad);

void bm_canonical_form(benchmark::State& state) {
    auto c = golay();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(c));
}
BENCHMARK(bm_canonical_form);

void bm_gl_set_stabilizer(benchmark::State& state) {
    // the even-popcount points of F_2^6, a half-size set with big stabilizer
    std::vector<std::uint32_t> x;
    for (std::uint32_t a = 0; a < 64; ++a)
        if (__builtin_popcount(a) % 2 == 0) x.push_back(a);
    for (auto _ : state)
        benchmark::DoNotOptimize(gl_set_stabilizer(6, x));
}
BENCHMARK(bm_gl_set_stabilizer);

} // namespace

BENCHMARK_MAIN();
