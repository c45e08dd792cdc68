#include "trieven/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

namespace trieven {

namespace {

using json = nlohmann::json;

// generator matrices of the nine doubly even self-dual [24,12] codes,
// one 24-bit row per entry, bit b = coordinate b
const std::vector<std::vector<std::uint64_t>> kDesd24Rows = {
    // g24
    {0xC75001, 0x49F002, 0xD4B004, 0x6E3008, 0x9B3010, 0xB66020,
     0xECC040, 0x1ED080, 0x3DA100, 0x7B4200, 0xB1D400, 0xE3A800},
    // d24+
    {0x7FE801, 0x802802, 0x804804, 0x808808, 0x810810, 0x820820,
     0x840840, 0x880880, 0x900900, 0xA00A00, 0xC00C00, 0xFFF000},
    // d12^2+
    {0x7E0F81, 0xFC0082, 0xFC0104, 0xFC0208, 0xFC0410, 0xFC0820,
     0x820FC0, 0x861000, 0x8A2000, 0x924000, 0xA28000, 0xC30000},
    // (d10 e7^2)+
    {0xD003C1, 0xD1A042, 0xD1A084, 0xD1A108, 0xD1A210, 0x01A3E0,
     0x00E400, 0x01C800, 0x017000, 0x720000, 0xE40000, 0xB80000},
    // d8^3+
    {0x7800E1, 0x88F022, 0x88F044, 0x88F088, 0xF0F0F0, 0x78E100,
     0x78D200, 0x78B400, 0x787800, 0x990000, 0xAA0000, 0xCC0000},
    // d6^4+
    {0xE24031, 0x738012, 0x738024, 0x91C038, 0x938C40, 0xE1C480,
     0xE1C900, 0x724E00, 0x02D000, 0x036000, 0xB40000, 0xD80000},
    // d4^6+
    {0xCC6009, 0x66A00A, 0xAAC00C, 0xC6C090, 0x6A60A0, 0xACA0C0,
     0x6CC900, 0xA66A00, 0xCAAC00, 0x00F000, 0x0F0000, 0xF00000},
    // d16+ + e8
    {0x0000B1, 0x0000E2, 0x000074, 0x0000D8, 0x7E8100, 0x828200,
     0x848400, 0x888800, 0x909000, 0xA0A000, 0xC0C000, 0xFF0000},
    // e8 + e8 + e8
    {0x0000B1, 0x0000E2, 0x000074, 0x0000D8, 0x00B100, 0x00E200,
     0x007400, 0x00D800, 0xB10000, 0xE20000, 0x740000, 0xD80000},
};

const char* const kDesd24Names[9] = {
    "g24", "d24+", "d12^2+", "(d10 e7^2)+", "d8^3+",
    "d6^4+", "d4^6+", "d16+ + e8", "e8 + e8 + e8"};

struct BudgetTimer {
    std::chrono::steady_clock::time_point start;
    double limit;
    explicit BudgetTimer(double limit_seconds)
        : start(std::chrono::steady_clock::now()), limit(limit_seconds) {}
    void check(const std::string& what) const {
        if (limit <= 0) return;
        double el = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start).count();
        if (el > limit)
            throw std::runtime_error("symmetry budget exceeded: " + what);
    }
};

PartsEntry finish_entry(const LinearCode& c, int prd, CanonicalForm canon) {
    PartsEntry e{QuotientContext(c, meet_Rad(c)), prd, std::move(canon),
                 weight_enumerator(c), LinearCode(), CanonicalForm{}, {}};
    Gf2Matrix xm(e.ctx.x.size());
    for (int i = 0; i < e.ctx.k; ++i) {
        Gf2Vector row(e.ctx.x.size());
        for (std::size_t j = 0; j < e.ctx.x.size(); ++j)
            if ((e.ctx.x[j] >> i) & 1) row.set(j, 1);
        xm.add_row(std::move(row));
    }
    e.check_dual = LinearCode(xm);
    e.check_canon = canonical_form(e.check_dual);
    for (const auto& g : e.canon.aut_generators)
        e.g0.push_back(induced_quotient_action(e.ctx, g));
    return e;
}

// basis of the span of the singular points, chosen among the points, plus a
// fixed complement basis of standard vectors
struct SpanBasis {
    std::vector<std::size_t> idx;    // indices into x of the basis points
    std::vector<std::uint32_t> comp; // complement basis
    Gf2Matrix full;                  // rows: the basis points, then comp
};

SpanBasis span_basis(const std::vector<std::uint32_t>& x, std::size_t k) {
    SpanBasis b;
    b.full = Gf2Matrix(k);
    auto try_add = [&](std::uint32_t v) {
        Gf2Matrix cand = b.full;
        cand.add_row(Gf2Vector::from_word(k, v));
        if (rank(cand) != cand.row_count()) return false;
        b.full = std::move(cand);
        return true;
    };
    for (std::size_t i = 0; i < x.size() && b.idx.size() + b.comp.size() < k; ++i)
        if (try_add(x[i])) b.idx.push_back(i);
    for (std::uint32_t m = 0; b.idx.size() + b.comp.size() < k; ++m)
        if (try_add(std::uint32_t{1} << m)) b.comp.push_back(std::uint32_t{1} << m);
    return b;
}

// the linear map sending basis point j of b1 to point_imgs[j] and the i-th
// complement vector to comp_imgs[i]; requires invertibility
GlMat lift_with_images(const SpanBasis& b1,
                       const std::vector<std::uint32_t>& point_imgs,
                       const std::vector<std::uint32_t>& comp_imgs,
                       std::size_t k) {
    GlMat g = GlMat::identity_k((int)k);
    for (std::size_t m = 0; m < k; ++m) {
        std::vector<std::uint8_t> coeffs;
        if (!solve_row_combination(b1.full, Gf2Vector::unit(k, m), &coeffs))
            throw std::logic_error("lift_with_images: basis does not span");
        std::uint32_t img = 0;
        for (std::size_t j = 0; j < b1.idx.size(); ++j)
            if (coeffs[j]) img ^= point_imgs[j];
        for (std::size_t i = 0; i < b1.comp.size(); ++i)
            if (coeffs[b1.idx.size() + i]) img ^= comp_imgs[i];
        g.rows[m] = (std::uint16_t)img;
    }
    if (!g.invertible())
        throw std::logic_error("lift_with_images: singular lift");
    return g;
}

bool maps_points_onto(const GlMat& g, const std::vector<std::uint32_t>& x1,
                      const std::vector<std::uint32_t>& x2) {
    std::vector<std::uint32_t> img;
    img.reserve(x1.size());
    for (auto a : x1) img.push_back(g.map(a));
    std::sort(img.begin(), img.end());
    return img == x2;
}

// generators of the full setwise stabilizer of the singular points in
// GL(k, 2): the coordinate automorphisms of the check-code dual determine
// the action on the span; off the span the stabilizer is a full parabolic
std::vector<GlMat> singular_stabilizer_gens(const PartsEntry& s) {
    std::size_t k = (std::size_t)s.ctx.k;
    const auto& x = s.ctx.x;
    SpanBasis b = span_basis(x, k);
    std::vector<std::uint32_t> pts, comp = b.comp;
    for (auto j : b.idx) pts.push_back(x[j]);
    std::vector<GlMat> gens;
    auto add = [&](GlMat g) {
        if (!maps_points_onto(g, x, x))
            throw std::logic_error("singular_stabilizer_gens: lift escapes X");
        gens.push_back(std::move(g));
    };
    for (const auto& p : s.check_canon.aut_generators) {
        std::vector<std::uint32_t> imgs;
        for (auto j : b.idx) imgs.push_back(x[(std::size_t)p.images[(int)j]]);
        add(lift_with_images(b, imgs, comp, k));
    }
    std::size_t r = comp.size();
    if (r >= 2) {
        // GL on the complement: a cycle and one transvection
        std::vector<std::uint32_t> cyc(comp.begin() + 1, comp.end());
        cyc.push_back(comp.front());
        add(lift_with_images(b, pts, cyc, k));
        auto tv = comp;
        tv[0] ^= comp[1];
        add(lift_with_images(b, pts, tv, k));
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            auto sh = comp;
            sh[i] ^= pts[j];
            add(lift_with_images(b, pts, sh, k));
        }
    return gens;
}

// some g in GL(k, 2) with g(X1) = X2, derived from an equivalence of the
// check-code duals; empty when the check codes are inequivalent
std::optional<GlMat> singular_transporter(const PartsEntry& s1,
                                          const PartsEntry& s2) {
    std::size_t k = (std::size_t)s1.ctx.k;
    Perm w;
    if (!is_equivalent(s1.check_dual, s2.check_dual, &w)) return std::nullopt;
    SpanBasis b1 = span_basis(s1.ctx.x, k);
    SpanBasis b2 = span_basis(s2.ctx.x, k);
    std::vector<std::uint32_t> imgs;
    for (auto j : b1.idx) imgs.push_back(s2.ctx.x[(std::size_t)w.images[(int)j]]);
    GlMat g = lift_with_images(b1, imgs, b2.comp, k);
    if (!maps_points_onto(g, s1.ctx.x, s2.ctx.x))
        throw std::logic_error("singular_transporter: witness does not lift");
    return g;
}

int identify_by_invariant(const LinearCode& c, const std::vector<LinearCode>& reps,
                          const std::vector<std::pair<std::size_t, std::uint64_t>>& invs) {
    std::pair<std::size_t, std::uint64_t> inv{c.dim(), count_words_of_weight(c, 8)};
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (invs[i] == inv && is_equivalent(c, reps[i])) return (int)i;
    return -1;
}

json code_record(const LinearCode& c) {
    json rows = json::array();
    for (auto v : emit_hex_rows(c)) rows.push_back(v);
    return json{{"length", c.length()}, {"rows_hex", rows}};
}

LinearCode code_from_record(const json& j) {
    std::vector<std::uint64_t> rows;
    for (const auto& v : j.at("rows_hex")) rows.push_back(v.get<std::uint64_t>());
    return parse_hex_rows(rows, j.at("length").get<std::size_t>());
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) { h ^= ch; h *= 1099511628211ULL; }
    return h;
}

} // namespace

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mx;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mx);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(jobs, n);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

std::vector<LinearCode> load_desd24() {
    std::vector<LinearCode> out;
    for (std::size_t i = 0; i < kDesd24Rows.size(); ++i) {
        LinearCode c = parse_hex_rows(kDesd24Rows[i], 24);
        if (c.dim() != 12 || dual(c) != c || !is_doubly_even(c))
            throw std::runtime_error(std::string("load_desd24: corrupt data for ") +
                                     kDesd24Names[i]);
        out.push_back(std::move(c));
    }
    return out;
}

PartsEntry make_parts_entry(const LinearCode& c, int prd) {
    return finish_entry(c, prd, canonical_form(c));
}

std::vector<LinearCode> subcode_step(const LinearCode& c, const LinearCode& r,
                                     const std::vector<Perm>& aut_gens) {
    if (c.dim() == r.dim()) return {}; // C = R: nothing strictly between
    LinearCode dc = dual(c);
    LinearCode dr = dual(r);
    std::vector<Gf2Vector> keys = complement_in(dr, dc).words();
    std::sort(keys.begin(), keys.end());
    auto index_of = [&](const Gf2Vector& v) {
        auto it = std::lower_bound(keys.begin(), keys.end(), v);
        return (int)(it - keys.begin());
    };
    auto orbs = orbit_partition((int)keys.size(), (int)aut_gens.size(),
        [&](int g, int p) {
            return index_of(dc.reduce(keys[p].permuted(aut_gens[g].images)));
        });
    std::vector<LinearCode> out;
    for (const auto& orb : orbs) {
        const Gf2Vector& x = keys[orb.front()];
        if (x.is_zero()) continue;
        out.push_back(dual(sum_code(dc, LinearCode::span({x}, c.length()))));
    }
    return out;
}

std::vector<PartsEntry> build_parts_db(std::vector<std::size_t>* level_counts,
                                       int jobs) {
    if (level_counts) level_counts->clear();
    std::vector<PartsEntry> db;

    auto finish_level = [&](const std::vector<LinearCode>& codes,
                            const std::vector<int>& prds,
                            const std::vector<CanonicalForm>& canons) {
        std::vector<PartsEntry> level((std::size_t)codes.size(),
                                      PartsEntry{QuotientContext(LinearCode(1), LinearCode(1)),
                                                 0, CanonicalForm{}, {}, LinearCode(), {}});
        parallel_for(codes.size(), jobs, [&](std::size_t i) {
            level[i] = finish_entry(codes[i], prds[i], canons[i]);
        });
        return level;
    };

    auto maxcodes = load_desd24();
    std::vector<CanonicalForm> canons(maxcodes.size());
    parallel_for(maxcodes.size(), jobs,
                 [&](std::size_t i) { canons[i] = canonical_form(maxcodes[i]); });
    std::vector<PartsEntry> level =
        finish_level(maxcodes, std::vector<int>(maxcodes.size(), 0), canons);
    if (level_counts) level_counts->push_back(level.size());
    for (auto& e : level) db.push_back(std::move(e));
    auto* cur = &db; // entries of the current level live at the tail of db
    std::size_t cur_begin = 0, cur_end = db.size();

    for (int dim = 11; dim >= 4; --dim) {
        // candidate subcodes, one per parent Aut-orbit, with the parent's
        // radical dimension attached
        std::vector<LinearCode> cands;
        std::vector<int> cand_prd;
        for (std::size_t i = cur_begin; i < cur_end; ++i) {
            const auto& e = (*cur)[i];
            for (auto& s : subcode_step(e.ctx.c, e.ctx.r, e.canon.aut_generators)) {
                cands.push_back(std::move(s));
                cand_prd.push_back((int)e.ctx.r.dim());
            }
        }
        std::vector<CanonicalForm> ccanon(cands.size());
        parallel_for(cands.size(), jobs,
                     [&](std::size_t i) { ccanon[i] = canonical_form(cands[i]); });

        // dedup up to equivalence; keep the first representative and the
        // largest prd seen among its duplicates
        std::map<std::vector<std::uint64_t>, std::size_t> seen;
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            auto [it, fresh] = seen.try_emplace(ccanon[i].certificate, i);
            if (fresh) kept.push_back(i);
            else cand_prd[it->second] = std::max(cand_prd[it->second], cand_prd[i]);
        }
        // drop codes whose triply even radical is not inside the code
        std::vector<std::uint8_t> ok(kept.size(), 0);
        parallel_for(kept.size(), jobs, [&](std::size_t i) {
            ok[i] = !exists_outside_Rad(cands[kept[i]],
                                        ccanon[kept[i]].aut_generators);
        });
        std::vector<std::size_t> survivors;
        for (std::size_t i = 0; i < kept.size(); ++i)
            if (ok[i]) survivors.push_back(kept[i]);
        // deterministic level order: invariant key, then canonical bytes
        std::map<std::size_t, std::tuple<BigInt, std::vector<std::uint64_t>,
                                         std::vector<std::uint64_t>>> keys;
        for (auto i : survivors)
            keys.emplace(i, std::tuple(ccanon[i].aut_order(),
                                       weight_enumerator(cands[i]).coeffs,
                                       ccanon[i].certificate));
        std::stable_sort(survivors.begin(), survivors.end(),
            [&](std::size_t a, std::size_t b) { return keys.at(a) < keys.at(b); });

        std::vector<LinearCode> codes;
        std::vector<int> prds;
        std::vector<CanonicalForm> cs;
        for (auto i : survivors) {
            codes.push_back(cands[i]);
            prds.push_back(cand_prd[i]);
            cs.push_back(ccanon[i]);
        }
        auto next = finish_level(codes, prds, cs);
        if (level_counts) level_counts->push_back(next.size());
        cur_begin = db.size();
        for (auto& e : next) db.push_back(std::move(e));
        cur_end = db.size();
        if (cur_begin == cur_end) break;
    }
    return db;
}

std::vector<std::vector<std::size_t>> parts_table(
    const std::vector<PartsEntry>& db) {
    std::vector<std::vector<std::size_t>> table;
    for (int i = 1; i <= 9; ++i)
        table.emplace_back((std::size_t)(13 - i), 0);
    for (const auto& e : db) {
        int i = 13 - (int)e.ctx.c.dim();
        int j = (int)e.ctx.r.dim();
        table.at(i - 1).at(j - 1) += 1;
    }
    return table;
}

DuplexResult duplex_classify(const std::vector<PartsEntry>& db, int jobs,
                             double budget_seconds) {
    struct Local {
        std::vector<LinearCode> maximal;
        std::size_t constructed = 0, excluded = 0;
    };
    std::vector<Local> locals(db.size());
    parallel_for(db.size(), jobs, [&](std::size_t i) {
        const PartsEntry& s = db[i];
        Local& out = locals[i];
        bool prune = (int)s.ctx.r.dim() == s.prd;
        auto consider = [&](LinearCode d) {
            ++out.constructed;
            if (is_maximal(d)) out.maximal.push_back(std::move(d));
        };
        if (s.ctx.k == 0) {
            if (prune) out.excluded = 1;
            else consider(direct_sum(s.ctx.r, s.ctx.r));
            return;
        }
        BudgetTimer budget(budget_seconds);
        MatGroup g0(s.ctx.k, s.g0);
        MatGroup g1(s.ctx.k, singular_stabilizer_gens(s));
        budget.check("duplex stabilizer, entry " + std::to_string(i));
        auto dcs = double_coset_reps(g1, g0, g0);
        budget.check("duplex double cosets, entry " + std::to_string(i));
        std::size_t start = 0;
        if (prune) {
            start = 1; // the identity coset gives tildeD(C), not maximal here
            out.excluded = 1;
        }
        for (std::size_t j = start; j < dcs.size(); ++j)
            consider(pair_code(s.ctx, s.ctx, dcs[j]));
    });
    DuplexResult res;
    for (auto& l : locals) {
        for (auto& c : l.maximal) res.maximal.push_back(std::move(c));
        res.constructed += l.constructed;
        res.excluded += l.excluded;
    }
    return res;
}

HybridResult hybrid_classify(const std::vector<PartsEntry>& db, int jobs,
                             double budget_seconds) {
    // isometric pairs: equal quotient dimension and singular count, and
    // equivalent check codes (tested on the duals, which are small)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < db.size(); ++i)
        for (std::size_t j = i + 1; j < db.size(); ++j)
            if (db[i].ctx.k == db[j].ctx.k &&
                db[i].ctx.x.size() == db[j].ctx.x.size() &&
                db[i].check_canon.certificate == db[j].check_canon.certificate)
                pairs.emplace_back(i, j);

    struct Local {
        std::vector<LinearCode> maximal;
        std::size_t constructed = 0;
    };
    std::vector<Local> locals(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t p) {
        const PartsEntry& s1 = db[pairs[p].first];
        const PartsEntry& s2 = db[pairs[p].second];
        Local& out = locals[p];
        auto consider = [&](LinearCode d) {
            ++out.constructed;
            if (is_maximal(d)) out.maximal.push_back(std::move(d));
        };
        int k = s1.ctx.k;
        if (k == 0) {
            consider(direct_sum(s1.ctx.r, s2.ctx.r));
            return;
        }
        auto h = singular_transporter(s1, s2);
        if (!h)
            throw std::logic_error("hybrid_classify: equivalent check codes "
                                   "but no isometry");
        BudgetTimer budget(budget_seconds);
        GlMat hinv = h->inverse();
        std::vector<GlMat> conj;
        for (const auto& g : s2.g0) conj.push_back(h->then(g).then(hinv));
        MatGroup g01(k, s1.g0);
        MatGroup g02c(k, conj);
        MatGroup g1(k, singular_stabilizer_gens(s1));
        budget.check("hybrid stabilizer, pair " + std::to_string(p));
        auto dcs = double_coset_reps(g1, g01, g02c);
        budget.check("hybrid double cosets, pair " + std::to_string(p));
        for (const auto& g : dcs)
            consider(pair_code(s1.ctx, s2.ctx, g.then(*h)));
    });
    HybridResult res;
    res.pairs = pairs.size();
    for (auto& l : locals) {
        for (auto& c : l.maximal) res.maximal.push_back(std::move(c));
        res.constructed += l.constructed;
    }
    return res;
}

std::vector<LinearCode> representatives48() {
    std::vector<LinearCode> reps;
    for (const auto& c : load_desd24()) reps.push_back(generalized_doubling(c));
    reps.push_back(padded_triangular_code(10));
    return reps;
}

std::vector<std::string> representative_labels48() {
    std::vector<std::string> labels;
    for (const auto* name : kDesd24Names)
        labels.push_back(std::string("tildeD(") + name + ")");
    labels.push_back("padded T(10)");
    return labels;
}

int identify48(const LinearCode& c, const std::vector<LinearCode>& reps) {
    std::vector<std::pair<std::size_t, std::uint64_t>> invs;
    for (const auto& r : reps)
        invs.emplace_back(r.dim(), count_words_of_weight(r, 8));
    return identify_by_invariant(c, reps, invs);
}

std::string ClassificationReport::to_json() const {
    json j;
    j["level_counts"] = level_counts;
    j["parts_table"] = parts_table;
    j["duplex"] = {{"maximal", duplex_maximal},
                   {"constructed", duplex_constructed},
                   {"excluded", duplex_excluded}};
    j["hybrid"] = {{"pairs", hybrid_pairs},
                   {"constructed", hybrid_constructed},
                   {"maximal", hybrid_maximal}};
    j["classes"] = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        json rec = code_record(classes[i]);
        rec["label"] = class_labels[i];
        j["classes"].push_back(std::move(rec));
    }
    j["duplex_ids"] = duplex_ids;
    j["hybrid_ids"] = hybrid_ids;
    j["note"] = note;
    return j.dump(2);
}

ClassificationReport ClassificationReport::from_json(const std::string& text) {
    json j = json::parse(text);
    ClassificationReport r;
    r.level_counts = j.at("level_counts").get<std::vector<std::size_t>>();
    r.parts_table =
        j.at("parts_table").get<std::vector<std::vector<std::size_t>>>();
    r.duplex_maximal = j.at("duplex").at("maximal").get<std::size_t>();
    r.duplex_constructed = j.at("duplex").at("constructed").get<std::size_t>();
    r.duplex_excluded = j.at("duplex").at("excluded").get<std::size_t>();
    r.hybrid_pairs = j.at("hybrid").at("pairs").get<std::size_t>();
    r.hybrid_constructed = j.at("hybrid").at("constructed").get<std::size_t>();
    r.hybrid_maximal = j.at("hybrid").at("maximal").get<std::size_t>();
    for (const auto& rec : j.at("classes")) {
        r.classes.push_back(code_from_record(rec));
        r.class_labels.push_back(rec.at("label").get<std::string>());
    }
    r.duplex_ids = j.at("duplex_ids").get<std::vector<int>>();
    r.hybrid_ids = j.at("hybrid_ids").get<std::vector<int>>();
    r.note = j.at("note").get<std::string>();
    return r;
}

void checkpoint_store(const std::string& path,
                      const std::vector<LinearCode>& codes,
                      const std::vector<int>& tags,
                      const std::vector<std::size_t>& meta) {
    if (codes.size() != tags.size())
        throw std::invalid_argument("checkpoint_store: tags size mismatch");
    std::string body;
    body += json{{"meta", meta}}.dump() + "\n";
    for (std::size_t i = 0; i < codes.size(); ++i) {
        json rec = code_record(codes[i]);
        rec["tag"] = tags[i];
        body += rec.dump() + "\n";
    }
    std::ostringstream tail;
    tail << json{{"checksum", fnv1a(body)}}.dump() << "\n";
    std::ofstream out(path + ".tmp", std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint_store: cannot write " + path);
    out << body << tail.str();
    out.close();
    std::filesystem::rename(path + ".tmp", path);
}

bool checkpoint_load(const std::string& path, std::vector<LinearCode>* codes,
                     std::vector<int>* tags, std::vector<std::size_t>* meta) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line, body;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    if (lines.size() < 2)
        throw std::runtime_error("checkpoint_load: truncated " + path);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) body += lines[i] + "\n";
    auto tailj = json::parse(lines.back());
    if (tailj.at("checksum").get<std::uint64_t>() != fnv1a(body))
        throw std::runtime_error("checkpoint_load: checksum mismatch in " + path);
    auto headj = json::parse(lines.front());
    if (meta) *meta = headj.at("meta").get<std::vector<std::size_t>>();
    codes->clear();
    if (tags) tags->clear();
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        auto rec = json::parse(lines[i]);
        codes->push_back(code_from_record(rec));
        if (tags) tags->push_back(rec.at("tag").get<int>());
    }
    return true;
}

ClassificationReport classify48(const ClassifyOptions& opts) {
    namespace fs = std::filesystem;
    ClassificationReport report;
    std::string dir = opts.checkpoint_dir;
    if (!dir.empty()) fs::create_directories(dir);
    auto stage = [&](const char* name) {
        return dir.empty() ? std::string() : dir + "/" + name;
    };

    // parts database
    std::vector<PartsEntry> db;
    {
        std::vector<LinearCode> codes;
        std::vector<int> prds;
        if (!dir.empty() &&
            checkpoint_load(stage("parts.ndjson"), &codes, &prds)) {
            db.reserve(codes.size());
            std::vector<PartsEntry> tmp(codes.size(),
                PartsEntry{QuotientContext(LinearCode(1), LinearCode(1)), 0,
                           CanonicalForm{}, {}, LinearCode(), {}});
            parallel_for(codes.size(), opts.jobs, [&](std::size_t i) {
                tmp[i] = make_parts_entry(codes[i], prds[i]);
            });
            db = std::move(tmp);
            std::map<std::size_t, std::size_t> per_dim;
            for (const auto& e : db) per_dim[e.ctx.c.dim()]++;
            for (std::size_t d = 12; d >= 4; --d) {
                report.level_counts.push_back(per_dim.count(d) ? per_dim[d] : 0);
                if (d == 4) break;
            }
            while (!report.level_counts.empty() && report.level_counts.back() == 0 &&
                   report.level_counts.size() > 9)
                report.level_counts.pop_back();
        } else {
            db = build_parts_db(&report.level_counts, opts.jobs);
            if (!dir.empty()) {
                std::vector<LinearCode> cs;
                std::vector<int> ts;
                for (const auto& e : db) {
                    cs.push_back(e.ctx.c);
                    ts.push_back(e.prd);
                }
                checkpoint_store(stage("parts.ndjson"), cs, ts);
            }
        }
    }
    report.parts_table = parts_table(db);

    // duplex stage
    DuplexResult duplex;
    {
        std::vector<std::size_t> meta;
        std::vector<int> tags;
        if (dir.empty() ||
            !checkpoint_load(stage("duplex.ndjson"), &duplex.maximal, &tags, &meta)) {
            duplex = duplex_classify(db, opts.jobs, opts.budget_seconds);
            if (!dir.empty())
                checkpoint_store(stage("duplex.ndjson"), duplex.maximal,
                                 std::vector<int>(duplex.maximal.size(), 0),
                                 {duplex.constructed, duplex.excluded});
        } else {
            duplex.constructed = meta.at(0);
            duplex.excluded = meta.at(1);
        }
    }
    report.duplex_maximal = duplex.maximal.size();
    report.duplex_constructed = duplex.constructed;
    report.duplex_excluded = duplex.excluded;

    // hybrid stage
    HybridResult hybrid;
    {
        std::vector<std::size_t> meta;
        std::vector<int> tags;
        if (dir.empty() ||
            !checkpoint_load(stage("hybrid.ndjson"), &hybrid.maximal, &tags, &meta)) {
            hybrid = hybrid_classify(db, opts.jobs, opts.budget_seconds);
            if (!dir.empty())
                checkpoint_store(stage("hybrid.ndjson"), hybrid.maximal,
                                 std::vector<int>(hybrid.maximal.size(), 0),
                                 {hybrid.pairs, hybrid.constructed});
        } else {
            hybrid.pairs = meta.at(0);
            hybrid.constructed = meta.at(1);
        }
    }
    report.hybrid_pairs = hybrid.pairs;
    report.hybrid_constructed = hybrid.constructed;
    report.hybrid_maximal = hybrid.maximal.size();

    // identification against the 10 representatives
    report.classes = representatives48();
    report.class_labels = representative_labels48();
    std::vector<std::pair<std::size_t, std::uint64_t>> invs;
    for (const auto& r : report.classes)
        invs.emplace_back(r.dim(), count_words_of_weight(r, 8));
    auto identify_all = [&](const std::vector<LinearCode>& codes,
                            std::vector<int>& ids, const char* what) {
        ids.assign(codes.size(), -1);
        parallel_for(codes.size(), opts.jobs, [&](std::size_t i) {
            ids[i] = identify_by_invariant(codes[i], report.classes, invs);
        });
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] < 0)
                throw std::runtime_error(std::string("classify48: unidentified "
                                                     "maximal code from ") + what);
    };
    identify_all(duplex.maximal, report.duplex_ids, "duplex");
    identify_all(hybrid.maximal, report.hybrid_ids, "hybrid");

    report.note = "the prose total of 216 possibly-maximal duplex codes "
                  "disagrees with the program's 214 constructed + 1268 "
                  "excluded; the program tuple is the one enforced";
    if (!dir.empty()) {
        std::ofstream out(dir + "/report.json", std::ios::trunc);
        out << report.to_json() << "\n";
    }
    return report;
}

std::map<std::size_t, std::vector<LinearCode>> shorten_chain(
    const std::vector<LinearCode>& maximal48, std::size_t min_length,
    int jobs) {
    std::map<std::size_t, std::vector<LinearCode>> out;
    std::vector<LinearCode> current = maximal48;
    if (!current.empty()) out[current.front().length()] = current;
    while (!current.empty() && current.front().length() > min_length) {
        std::size_t n = current.front().length();
        // one shortening per coordinate orbit of each code
        std::vector<std::vector<LinearCode>> shortened(current.size());
        parallel_for(current.size(), jobs, [&](std::size_t i) {
            auto gens = automorphism_generators(current[i]);
            for (const auto& orb : PermGroup((int)n, gens).orbits()) {
                LinearCode s = shorten(current[i], {(std::size_t)orb.front()});
                shortened[i].push_back(maximalize(s));
            }
        });
        std::vector<LinearCode> cands;
        for (auto& v : shortened)
            for (auto& c : v) cands.push_back(std::move(c));
        std::vector<std::vector<std::uint64_t>> certs(cands.size());
        parallel_for(cands.size(), jobs, [&](std::size_t i) {
            certs[i] = canonical_form(cands[i]).certificate;
        });
        std::map<std::vector<std::uint64_t>, std::size_t> seen;
        std::vector<LinearCode> next;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (seen.try_emplace(certs[i], i).second)
                next.push_back(cands[i]);
        std::sort(next.begin(), next.end());
        out[n - 1] = next;
        current = std::move(next);
    }
    return out;
}

} // namespace trieven
