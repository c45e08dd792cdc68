#include "trieven/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "trieven/forms.hpp"
#include "trieven/glgroup.hpp"
#include "trieven/pipeline.hpp"

namespace trieven {

namespace {

struct Log {
    std::ostream* os;
    template <class... Ts> void operator()(const Ts&... parts) const {
        if (!os) return;
        std::ostringstream s;
        (s << ... << parts);
        *os << s.str() << '\n';
    }
};

Gf2Vector random_vector(std::mt19937_64& rng, std::size_t n) {
    Gf2Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1) v.set(i, true);
    return v;
}

// random doubly even code: grow a basis with weight = 0 mod 4 vectors
// pairwise intersecting evenly
LinearCode random_doubly_even(std::mt19937_64& rng, std::size_t n,
                              std::size_t target_dim) {
    std::vector<Gf2Vector> basis;
    int misses = 0;
    while (basis.size() < target_dim && misses < 400) {
        Gf2Vector v = random_vector(rng, n);
        if (v.weight() % 4 != 0) { ++misses; continue; }
        bool ok = !v.is_zero();
        for (const auto& b : basis)
            if ((v & b).weight() % 2 != 0) { ok = false; break; }
        if (ok) {
            auto cand = basis;
            cand.push_back(v);
            LinearCode c = LinearCode::span(cand, n);
            if (c.dim() == basis.size() + 1 && is_doubly_even(c)) {
                basis.push_back(v);
                continue;
            }
        }
        ++misses;
    }
    return LinearCode::span(basis, n);
}

Gf2Vector random_word(std::mt19937_64& rng, const LinearCode& c) {
    Gf2Vector w(c.length());
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (rng() & 1) w ^= c.basis_row(i);
    return w;
}

LinearCode e8_code() {
    return parse_hex_rows({0xB1, 0xE2, 0x74, 0xD8}, 8);
}

LinearCode d16plus_code() {
    // staircase of weight-4 blocks plus the alternating glue word
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < 7; ++i) rows.push_back(0xFull << (2 * i));
    rows.push_back(0x5555);
    return parse_hex_rows(rows, 16);
}

std::vector<std::uint32_t> random_point_set(std::mt19937_64& rng, int k) {
    std::set<std::uint32_t> s{0};
    std::uint32_t total = 1u << k;
    std::uniform_int_distribution<std::uint32_t> pick(0, total - 1);
    std::size_t want = 1 + rng() % total;
    while (s.size() < want) s.insert(pick(rng));
    return {s.begin(), s.end()};
}

MatGroup random_subgroup(std::mt19937_64& rng, int k,
                         const std::vector<GlMat>& all) {
    std::vector<GlMat> gens;
    std::size_t ngens = 1 + rng() % 3;
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(all[rng() % all.size()]);
    return MatGroup(k, gens);
}

const std::vector<std::size_t> kLevelCounts = {9, 42, 160, 377, 437, 220,
                                               36, 1, 0};

std::vector<std::vector<std::size_t>> expected_table1() {
    std::vector<std::vector<std::size_t>> t = {
        {7, 1, 1},
        {33, 6, 3},
        {130, 19, 10, 1},
        {308, 40, 23, 5, 0, 1},
        {363, 37, 25, 10, 1, 1},
        {180, 16, 10, 11, 2, 1, 0},
        {27, 2, 0, 4, 2, 1},
        {0, 0, 0, 0, 1},
        {0, 0, 0, 0},
    };
    for (std::size_t i = 0; i < t.size(); ++i) t[i].resize(12 - i, 0);
    return t;
}

void print_table(const Log& log, const std::vector<std::vector<std::size_t>>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::ostringstream row;
        row << "dim " << (12 - i) << ":";
        for (auto v : t[i]) row << ' ' << v;
        log(row.str());
    }
}

// components of the graph on coordinates whose edges are the supports of
// the weight-2 dual words; i ~ j exactly when basis columns i and j agree
std::vector<std::size_t> dual_weight2_components(const LinearCode& c) {
    std::map<std::vector<bool>, std::size_t> by_column;
    for (std::size_t j = 0; j < c.length(); ++j) {
        std::vector<bool> col(c.dim());
        for (std::size_t i = 0; i < c.dim(); ++i) col[i] = c.basis_row(i).get(j);
        ++by_column[col];
    }
    std::vector<std::size_t> sizes;
    for (const auto& [col, cnt] : by_column) sizes.push_back(cnt);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool has_zero_column(const LinearCode& c) {
    for (std::size_t j = 0; j < c.length(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < c.dim(); ++i) any = any || c.basis_row(i).get(j);
        if (!any) return true;
    }
    return false;
}

// adjoin dual vectors of weight 0 mod 4 until no doubly even extension is left
LinearCode maximalize_doubly_even(LinearCode c) {
    for (;;) {
        Gf2Vector best(c.length());
        bool found = false;
        for (const auto& x : complement_in(dual(c), c).words()) {
            if (x.is_zero() || x.weight() % 4 != 0) continue;
            if (!found || x < best) { best = x; found = true; }
        }
        if (!found) return c;
        std::vector<Gf2Vector> rows;
        for (std::size_t i = 0; i < c.dim(); ++i) rows.push_back(c.basis_row(i));
        rows.push_back(best);
        c = LinearCode::span(std::move(rows), c.length());
    }
}

// classes of maximal doubly even codes per length, shortening down from the
// nine self-dual length-24 codes the same way shorten_chain does
std::map<std::size_t, std::vector<LinearCode>> doubly_even_chain(
    std::size_t min_length) {
    std::map<std::size_t, std::vector<LinearCode>> out;
    std::vector<LinearCode> current = load_desd24();
    out[24] = current;
    while (current.front().length() > min_length) {
        std::size_t n = current.front().length();
        std::map<std::vector<std::uint64_t>, LinearCode> seen;
        for (const auto& c : current) {
            auto gens = automorphism_generators(c);
            for (const auto& orb : PermGroup((int)n, gens).orbits()) {
                LinearCode s = maximalize_doubly_even(
                    shorten(c, {(std::size_t)orb.front()}));
                seen.try_emplace(canonical_form(s).certificate, s);
            }
        }
        std::vector<LinearCode> next;
        for (const auto& [cert, c] : seen) next.push_back(c);
        std::sort(next.begin(), next.end());
        out[n - 1] = next;
        current = std::move(next);
    }
    return out;
}

} // namespace

bool verify_forms(const SuiteOptions& opts) {
    Log log{opts.log};
    std::mt19937_64 rng(20240811);
    std::size_t codes = 0, checks = 0;
    bool ok = true;
    while (codes < 250) {
        std::size_t n = 8 + rng() % 9;
        LinearCode c = random_doubly_even(rng, n, 2 + rng() % 5);
        if (c.dim() == 0) continue;
        ++codes;
        if (!is_doubly_even(c)) { log("random code not doubly even"); return false; }
        for (int t = 0; t < 8; ++t) {
            Gf2Vector u = random_word(rng, c), v = random_word(rng, c),
                      w = random_word(rng, c);
            ok = ok && q_form(u ^ v) == (q_form(u) ^ q_form(v) ^ b_form(u, v));
            ok = ok && b_form(u ^ v, w) ==
                           (b_form(u, w) ^ b_form(v, w) ^ t_form(u, v, w));
            ok = ok && t_form(u, v, w) == t_form(w, u, v);
            ok = ok && t_form(u, v, w) == t_form(v, u, w);
            checks += 3;
            if (!ok) { log("form identity failed, n=", n); return false; }
        }
        // triply even iff every word has weight divisible by 8
        bool brute = true;
        c.for_each_word([&](const Gf2Vector& x) { brute = brute && x.weight() % 8 == 0; });
        if (is_triply_even(c) != brute) { log("triply even test mismatch"); return false; }
        ++checks;
    }
    log("forms: ", codes, " random doubly even codes, ", checks, " identities");
    return true;
}

bool verify_radicals(const SuiteOptions& opts) {
    Log log{opts.log};
    std::mt19937_64 rng(20240812);
    std::size_t codes = 0;
    while (codes < 220) {
        std::size_t n = 8 + rng() % 9;
        LinearCode c = random_doubly_even(rng, n, 2 + rng() % 5);
        if (c.dim() == 0) continue;
        ++codes;
        auto rs = radical_summary(c);
        auto rad = rad_brute(c);
        auto Rad = Rad_brute(c);
        if (rs.rad_size != rad.size() || rs.Rad_size != Rad.size()) {
            log("radical sizes disagree at code ", codes);
            return false;
        }
        std::size_t in_rad = 0, in_Rad = 0;
        for (const auto& y : rad) if (c.contains(y)) ++in_rad;
        for (const auto& y : Rad) if (c.contains(y)) ++in_Rad;
        if (in_rad != (std::size_t{1} << meet_rad(c).dim()) ||
            in_Rad != (std::size_t{1} << meet_Rad(c).dim()) ||
            rs.dim_meet_rad != meet_rad(c).dim() ||
            rs.dim_meet_Rad != meet_Rad(c).dim()) {
            log("radical meet dimension mismatch at code ", codes);
            return false;
        }
        // rad C sits in (C*C)^perp; sums x+y with y in C or x+y in C stay
        // in rad C (the radicals themselves need not be linear)
        LinearCode sd = dual(star_code(c));
        std::set<Gf2Vector> rad_set(rad.begin(), rad.end());
        for (const auto& y : rad)
            if (!sd.contains(y)) { log("rad escapes (C*C)^perp"); return false; }
        for (int t = 0; t < 40 && rad.size() > 1; ++t) {
            const auto& a = rad[rng() % rad.size()];
            const auto& b = rad[rng() % rad.size()];
            if ((c.contains(b) || c.contains(a ^ b)) && !rad_set.count(a ^ b)) {
                log("rad closure under C-shifts fails");
                return false;
            }
        }
    }
    log("radicals: brute force agreed on ", codes, " codes");
    return true;
}

bool verify_constructions(const SuiteOptions& opts) {
    Log log{opts.log};
    LinearCode e8 = e8_code();
    if (!is_equivalent(extended_doubling(dual(LinearCode::repetition(4))), e8)) {
        log("extended doubling of the even-weight code is not e8");
        return false;
    }
    if (generalized_doubling(e8).dim() != 5 ||
        generalized_doubling(d16plus_code()).dim() != 9 ||
        generalized_doubling(direct_sum(e8, e8)).dim() != 10) {
        log("doubling dimensions off for the small self-dual codes");
        return false;
    }
    auto we6 = weight_enumerator(triangular_graph_code(6));
    auto we10 = weight_enumerator(triangular_graph_code(10));
    auto binom = [](std::size_t n, std::size_t k) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int n : {6, 10}) {
        const auto& we = n == 6 ? we6 : we10;
        for (std::size_t w = 0; w < we.coeffs.size(); ++w) {
            std::uint64_t want = 0; // twice the coefficient
            for (std::size_t l = 0; 2 * l <= (std::size_t)n; ++l)
                if (2 * l * (n - 2 * l) == w) want += binom(n, 2 * l);
            if (we.coeffs[w] * 2 != want) {
                log("T(", n, ") enumerator wrong at weight ", w);
                return false;
            }
        }
    }
    if (star_code(triangular_graph_code(6)).dim() != 10 ||
        star_code(triangular_graph_code(10)).dim() != 36) {
        log("dim T(n)*T(n) wrong");
        return false;
    }
    for (const auto& c : load_desd24()) {
        LinearCode d = generalized_doubling(c);
        if (dual(star_code(d)) != d) {
            log("doubling of a self-dual code is not its own star dual");
            return false;
        }
    }
    auto reps = representatives48();
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (!is_triply_even(reps[i]) || !is_maximal(reps[i])) {
            log("representative ", i, " fails maximality");
            return false;
        }
    if (!is_equivalent(padded_triangular_code(6), generalized_doubling(e8))) {
        log("padded T(6) is not the doubling of e8");
        return false;
    }
    log("constructions: doublings, triangular codes and the 10 representatives check out");
    return true;
}

bool verify_symmetry_small(const SuiteOptions& opts) {
    Log log{opts.log};
    LinearCode e8 = e8_code();
    BigInt aut = canonical_form(e8).aut_order();
    // brute force over S8
    std::vector<int> p(8);
    for (int i = 0; i < 8; ++i) p[i] = i;
    std::size_t fixing = 0;
    do {
        if (e8.permuted(p) == e8) ++fixing;
    } while (std::next_permutation(p.begin(), p.end()));
    if (aut != 1344 || fixing != 1344) {
        log("|Aut(e8)| = ", aut.str(), ", brute count ", fixing);
        return false;
    }

    std::mt19937_64 rng(20240813);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 2 + trial % 3;
        auto x = random_point_set(rng, k);
        auto gens = gl_set_stabilizer(k, x);
        MatGroup stab(k, gens);
        std::size_t brute = 0;
        for (const auto& m : gl_all(k)) {
            std::vector<std::uint32_t> img;
            for (auto a : x) img.push_back(m.map(a));
            std::sort(img.begin(), img.end());
            bool fixes = img == x;
            if (fixes) ++brute;
            if (fixes != stab.contains(m)) {
                log("stabilizer membership wrong at trial ", trial);
                return false;
            }
        }
        if (stab.order() != brute) {
            log("stabilizer order ", stab.order().str(), " vs brute ", brute);
            return false;
        }
    }

    for (int trial = 0; trial < 12; ++trial) {
        int k = 2 + trial % 2;
        auto all = gl_all(k);
        MatGroup a = random_subgroup(rng, k, all);
        MatGroup b = random_subgroup(rng, k, all);
        std::vector<GlMat> aelems, belems;
        for (const auto& m : all) {
            if (a.contains(m)) aelems.push_back(m);
            if (b.contains(m)) belems.push_back(m);
        }
        auto reps = double_coset_reps(MatGroup(k, gl_generators(k)), a, b);
        std::set<GlMat> covered;
        for (const auto& g : reps) {
            std::set<GlMat> dc;
            for (const auto& x : aelems)
                for (const auto& y : belems) dc.insert(x.then(g).then(y));
            std::size_t before = covered.size();
            covered.insert(dc.begin(), dc.end());
            if (covered.size() != before + dc.size()) {
                log("double cosets overlap at trial ", trial);
                return false;
            }
        }
        if (covered.size() != all.size()) {
            log("double cosets fail to cover GL(", k, ",2)");
            return false;
        }
    }

    // canonical form invariance over a 20-code corpus
    std::vector<LinearCode> corpus = load_desd24();
    corpus.push_back(e8);
    corpus.push_back(d16plus_code());
    corpus.push_back(triangular_graph_code(6));
    while (corpus.size() < 20) {
        LinearCode c = random_doubly_even(rng, 12 + rng() % 5, 4);
        if (c.dim() >= 3) corpus.push_back(c);
    }
    for (const auto& c : corpus) {
        auto base = canonical_form(c).certificate;
        std::vector<int> perm(c.length());
        for (std::size_t i = 0; i < c.length(); ++i) perm[i] = (int)i;
        for (int t = 0; t < 100; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            if (canonical_form(c.permuted(perm)).certificate != base) {
                log("canonical form changed under relabeling");
                return false;
            }
        }
    }
    log("symmetry-small: Aut(e8), stabilizers, double cosets and canonical forms agree with brute force");
    return true;
}

bool verify_table1(const SuiteOptions& opts) {
    Log log{opts.log};
    std::vector<std::size_t> levels;
    auto db = build_parts_db(&levels, opts.jobs);
    auto table = parts_table(db);
    print_table(log, table);
    std::size_t total = 0;
    for (auto v : levels) total += v;
    bool ok = levels == kLevelCounts && table == expected_table1() && total == 1282;
    if (!ok) {
        std::ostringstream got;
        for (auto v : levels) got << v << ' ';
        log("per-level counts: ", got.str(), "(total ", total, ")");
        log("table1: MISMATCH against the published counts");
        return false;
    }

    // descent is monotone: each entry sits under some entry one dim up
    std::map<std::size_t, std::vector<const PartsEntry*>> by_dim;
    for (const auto& e : db) by_dim[e.ctx.c.dim()].push_back(&e);
    for (const auto& e : db) {
        std::size_t d = e.ctx.c.dim();
        if (!e.ctx.c.contains_code(e.ctx.r) || e.ctx.r != meet_Rad(e.ctx.c)) {
            log("entry violates its own radical");
            return false;
        }
        if (d == 12) continue;
        bool found = false;
        for (const auto* p : by_dim[d + 1])
            if (p->ctx.c.contains_code(e.ctx.c)) { found = true; break; }
        if (!found) {
            log("a dim-", d, " entry has no parent one level up");
            return false;
        }
    }

    // prune soundness: where dim R = prd the identity doubling is never maximal
    std::mt19937_64 rng(20240814);
    std::vector<const PartsEntry*> prunable;
    for (const auto& e : db)
        if (e.ctx.r.dim() > 0 && (int)e.ctx.r.dim() == e.prd)
            prunable.push_back(&e);
    std::shuffle(prunable.begin(), prunable.end(), rng);
    for (std::size_t i = 0; i < 20 && i < prunable.size(); ++i) {
        const auto& s = *prunable[i];
        LinearCode d = pair_code(s.ctx, s.ctx, GlMat::identity_k((int)s.ctx.k));
        if (is_maximal(d)) {
            log("pruned identity doubling turned out maximal");
            return false;
        }
    }
    log("table1: 1282 codes, per-level counts [9 42 160 377 437 220 36 1 0], descent and pruning sound");
    return true;
}

bool verify_classify48(const SuiteOptions& opts) {
    Log log{opts.log};
    ClassifyOptions copts;
    copts.jobs = opts.jobs;
    copts.budget_seconds = opts.budget_seconds;
    copts.checkpoint_dir = opts.out_dir;
    auto report = classify48(copts);
    log("duplex: maximal ", report.duplex_maximal, ", constructed ",
        report.duplex_constructed, ", excluded ", report.duplex_excluded);
    log("hybrid: pairs ", report.hybrid_pairs, ", constructed ",
        report.hybrid_constructed, ", maximal ", report.hybrid_maximal);
    if (report.duplex_maximal != 30 || report.duplex_constructed != 214 ||
        report.duplex_excluded != 1268 || report.hybrid_pairs != 125 ||
        report.hybrid_constructed != 225 || report.hybrid_maximal != 5)
        return false;
    if (report.classes.size() != 10) return false;
    std::multiset<std::size_t> dims;
    for (const auto& c : report.classes) dims.insert(c.dim());
    if (dims != std::multiset<std::size_t>{9, 13, 13, 13, 13, 13, 13, 13, 14, 15})
        return false;
    for (std::size_t i = 0; i < report.classes.size(); ++i)
        for (std::size_t j = i + 1; j < report.classes.size(); ++j)
            if (is_equivalent(report.classes[i], report.classes[j])) return false;
    for (int id : report.duplex_ids) if (id < 0 || id > 9) return false;
    for (int id : report.hybrid_ids) if (id < 0 || id > 9) return false;
    for (std::size_t i = 0; i < report.classes.size(); ++i)
        log("class ", i, ": dim ", report.classes[i].dim(), " (",
            report.class_labels[i], ")");
    log("note: ", report.note);
    log("classify48: exactly 10 classes");
    return true;
}

bool verify_table2(const SuiteOptions& opts) {
    Log log{opts.log};
    auto chain = shorten_chain(representatives48(), 8, opts.jobs);
    const std::map<std::size_t, std::multiset<std::size_t>> expected = {
        {8, {1}},          {16, {5}},
        {24, {5, 6}},      {32, {9, 10}},
        {40, {9, 9, 9, 9, 9, 9, 9, 10, 10, 11}},
    };
    bool ok = true;
    for (const auto& [len, dims] : expected) {
        std::multiset<std::size_t> got;
        if (chain.count(len))
            for (const auto& c : chain.at(len)) got.insert(c.dim());
        std::ostringstream line;
        line << "length " << len << ":";
        for (auto d : got) line << ' ' << d;
        log(line.str());
        if (got != dims) { ok = false; log("  expected a different dim multiset"); }
    }
    if (!ok) return false;

    // every class is the generalized doubling of a maximal doubly even code
    // of half the length
    auto de = doubly_even_chain(4);
    const std::map<std::size_t, std::size_t> de_expected = {
        {4, 1}, {8, 1}, {12, 2}, {16, 2}, {20, 10}};
    for (const auto& [len, cnt] : de_expected)
        if (!de.count(len) || de.at(len).size() != cnt) {
            log("maximal doubly even count off at length ", len);
            return false;
        }
    for (const auto& [len, dims] : expected) {
        for (const auto& c : chain.at(len)) {
            bool matched = false;
            for (const auto& inner : de.at(len / 2)) {
                LinearCode built = generalized_doubling(inner);
                if (built.dim() == c.dim() && is_equivalent(built, c)) {
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                log("a length-", len, " class is not a generalized doubling");
                return false;
            }
        }
    }
    log("table2: shortened classes match at every multiple of 8, all generalized doublings");
    return true;
}

bool verify_proof_devices(const SuiteOptions& opts) {
    Log log{opts.log};
    auto reps = representatives48();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (count_words_of_weight(reps[i], 24) == 0) {
            log("representative ", i, " has no weight-24 word");
            return false;
        }
        auto sizes = dual_weight2_components(reps[i]);
        if (sizes.empty() || sizes.front() > 8) {
            log("dual weight-2 component exceeds 8 vertices");
            return false;
        }
        if (sizes.front() > 4)
            for (std::size_t j = 1; j < sizes.size(); ++j)
                if (sizes[j] > 3) {
                    log("two large dual weight-2 components coexist");
                    return false;
                }
    }
    LinearCode t10 = padded_triangular_code(10);
    auto sizes = dual_weight2_components(t10);
    if (has_zero_column(t10) || sizes.front() < 2) {
        log("padded T(10) dual minimum weight is not 2");
        return false;
    }
    log("proof devices: weight-24 words present, dual weight-2 graphs within bounds");
    return true;
}

bool run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "forms") return verify_forms(opts);
    if (name == "radicals") return verify_radicals(opts);
    if (name == "constructions") return verify_constructions(opts);
    if (name == "symmetry-small") return verify_symmetry_small(opts);
    if (name == "table1") return verify_table1(opts);
    if (name == "classify48") return verify_classify48(opts);
    if (name == "table2") return verify_table2(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace trieven
