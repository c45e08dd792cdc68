#include "trieven/glgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace trieven {

GlMat GlMat::inverse() const {
    int k = dim();
    std::vector<std::uint32_t> aug(k); // low k bits: this, high k bits: identity
    for (int i = 0; i < k; ++i) aug[i] = rows[i] | (1u << (k + i));
    int r = 0;
    for (int c = 0; c < k; ++c) {
        int sel = -1;
        for (int i = r; i < k; ++i)
            if ((aug[i] >> c) & 1) { sel = i; break; }
        if (sel < 0) throw std::invalid_argument("GlMat::inverse: singular");
        std::swap(aug[r], aug[sel]);
        for (int i = 0; i < k; ++i)
            if (i != r && ((aug[i] >> c) & 1)) aug[i] ^= aug[r];
        ++r;
    }
    GlMat out;
    out.rows.resize(k);
    for (int i = 0; i < k; ++i) out.rows[i] = (std::uint16_t)(aug[i] >> k);
    return out;
}

bool GlMat::invertible() const {
    int k = dim();
    std::vector<std::uint16_t> m(rows);
    int r = 0;
    for (int c = 0; c < k && r < k; ++c) {
        int sel = -1;
        for (int i = r; i < k; ++i)
            if ((m[i] >> c) & 1) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        for (int i = 0; i < k; ++i)
            if (i != r && ((m[i] >> c) & 1)) m[i] ^= m[r];
        ++r;
    }
    return r == k;
}

const GroupChain<GlElt>& MatGroup::chain() const {
    if (!chain_) {
        std::vector<GlElt> elts;
        for (const auto& g : gens_) elts.push_back(GlElt{g});
        chain_ = std::make_shared<GroupChain<GlElt>>((1 << k_) - 1, elts);
    }
    return *chain_;
}

std::vector<GlMat> gl_generators(int k) {
    if (k <= 1) return {};
    GlMat cyc;
    cyc.rows.resize(k);
    for (int i = 0; i < k; ++i) cyc.rows[i] = (std::uint16_t)(1u << ((i + 1) % k));
    GlMat trans = GlMat::identity_k(k);
    trans.rows[0] = (std::uint16_t)(1u | 2u);
    return {cyc, trans};
}

std::vector<GlMat> gl_all(int k) {
    if (k > 4) throw std::invalid_argument("gl_all: k too large");
    std::vector<GlMat> out;
    GlMat m;
    m.rows.resize(k);
    std::uint32_t n = 1u << k;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) { out.push_back(m); return; }
        for (std::uint32_t v = 1; v < n; ++v) {
            m.rows[i] = (std::uint16_t)v;
            GlMat part;
            part.rows.assign(m.rows.begin(), m.rows.begin() + i + 1);
            // quick independence check on the filled prefix
            bool ok = true;
            {
                std::vector<std::uint16_t> t(part.rows);
                int r = 0;
                for (int c = 0; c < k && r <= i; ++c) {
                    int sel = -1;
                    for (int x = r; x <= i; ++x)
                        if ((t[x] >> c) & 1) { sel = x; break; }
                    if (sel < 0) continue;
                    std::swap(t[r], t[sel]);
                    for (int x = 0; x <= i; ++x)
                        if (x != r && ((t[x] >> c) & 1)) t[x] ^= t[r];
                    ++r;
                }
                ok = (r == i + 1);
            }
            if (ok) self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

struct StabSearch {
    int k = 0;
    std::uint32_t n = 0;
    std::vector<std::uint8_t> in1, in2; // domain / image side membership
    std::vector<std::uint32_t> cnt1, cnt2;
    std::vector<std::uint32_t> img;

    void init_side(const std::vector<std::uint32_t>& x, std::vector<std::uint8_t>& in,
                   std::vector<std::uint32_t>& cnt) {
        in.assign(n, 0);
        cnt.assign(n, 0);
        for (auto v : x) {
            if (v >= n) throw std::invalid_argument("singular set: vector out of range");
            in[v] = 1;
        }
        for (auto a : x)
            for (auto b : x) ++cnt[a ^ b];
    }

    bool place(int i, std::uint32_t m) {
        std::uint32_t e = 1u << i;
        for (std::uint32_t a = 0; a < e; ++a) {
            std::uint32_t v = img[a] ^ m;
            std::uint32_t dom = a | e;
            if (v == 0) return false;
            if (in1[dom] != in2[v] || cnt1[dom] != cnt2[v]) return false;
            img[dom] = v;
        }
        return true;
    }

    GlMat current() const {
        GlMat g;
        g.rows.resize(k);
        for (int i = 0; i < k; ++i) g.rows[i] = (std::uint16_t)img[1u << i];
        return g;
    }
};

} // namespace

std::vector<GlMat> gl_set_stabilizer(int k, const std::vector<std::uint32_t>& x,
                                     const std::vector<GlMat>& seed) {
    if (k == 0) return {};
    StabSearch s;
    s.k = k;
    s.n = 1u << k;
    s.init_side(x, s.in1, s.cnt1);
    s.in2 = s.in1;
    s.cnt2 = s.cnt1;
    s.img.assign(s.n, 0);

    std::vector<GlMat> gens;
    GroupChain<GlElt> chain((1 << k) - 1, {});
    auto add_gen = [&](const GlMat& g) {
        if (chain.contains(GlElt{g})) return;
        chain.add_generator(GlElt{g});
        gens.push_back(g);
    };
    for (const auto& g : seed) {
        for (auto v : x)
            if (!s.in1[g.map(v)])
                throw std::invalid_argument("gl_set_stabilizer: seed does not stabilize the set");
        add_gen(g);
    }

    // one element (any) completing the current prefix; records it as generator
    auto find_one = [&](auto&& self, int i) -> bool {
        if (i == k) { add_gen(s.current()); return true; }
        for (std::uint32_t m = 1; m < s.n; ++m)
            if (s.place(i, m) && self(self, i + 1)) return true;
        return false;
    };

    // identity-prefix spine: collects generators level by level
    auto explore = [&](auto&& self, int i) -> void {
        if (i == k) return;
        std::uint32_t e = 1u << i;
        if (!s.place(i, e)) throw std::logic_error("gl_set_stabilizer: identity rejected");
        self(self, i + 1);
        std::vector<std::uint32_t> processed{e};
        for (std::uint32_t m = 1; m < s.n; ++m) {
            if (m == e || !s.place(i, m)) continue;
            // orbit of m under known generators fixing e_0..e_{i-1}
            std::vector<std::uint32_t> orb{m};
            std::vector<std::uint8_t> seen(s.n, 0);
            seen[m] = 1;
            bool dup = false;
            for (std::size_t t = 0; t < orb.size() && !dup; ++t) {
                for (const auto& g : gens) {
                    bool fixes = true;
                    for (int j = 0; j < i && fixes; ++j)
                        if (g.rows[j] != (1u << j)) fixes = false;
                    if (!fixes) continue;
                    std::uint32_t q = g.map(orb[t]);
                    if (!seen[q]) {
                        if (std::find(processed.begin(), processed.end(), q) !=
                            processed.end()) { dup = true; break; }
                        seen[q] = 1;
                        orb.push_back(q);
                    }
                }
            }
            processed.push_back(m);
            if (dup) continue;
            find_one(find_one, i + 1);
        }
    };
    explore(explore, 0);
    return gens;
}

std::optional<GlMat> gl_set_transporter(int k, const std::vector<std::uint32_t>& x1,
                                        const std::vector<std::uint32_t>& x2) {
    if (x1.size() != x2.size()) return std::nullopt;
    if (k == 0) return GlMat::identity_k(0);
    StabSearch s;
    s.k = k;
    s.n = 1u << k;
    s.init_side(x1, s.in1, s.cnt1);
    s.init_side(x2, s.in2, s.cnt2);
    // quick invariant screen
    {
        auto c1 = s.cnt1, c2 = s.cnt2;
        std::sort(c1.begin(), c1.end());
        std::sort(c2.begin(), c2.end());
        if (c1 != c2 || s.in1[0] != s.in2[0]) return std::nullopt;
    }
    s.img.assign(s.n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (std::uint32_t m = 1; m < s.n; ++m)
            if (s.place(i, m) && self(self, i + 1)) return true;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return s.current();
}

std::vector<GlMat> double_coset_reps(const MatGroup& g, const MatGroup& a,
                                     const MatGroup& b, std::size_t coset_bound) {
    int k = g.dim();
    if (k == 0) return {GlMat::identity_k(0)};
    std::uint32_t n = 1u << k;

    auto mix = [](std::uint64_t v) {
        v += 0x9e3779b97f4a7c15ULL;
        v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
        v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
        return v ^ (v >> 31);
    };

    // orbits of A on nonzero vectors
    auto aorbs = orbit_partition((int)n - 1, (int)a.generators().size(),
        [&](int gi, int p) {
            return (int)a.generators()[gi].map((std::uint32_t)p + 1) - 1;
        });
    auto coset_key = [&](const GlMat& m) {
        std::uint64_t h = 0;
        std::vector<std::uint32_t> buf;
        for (const auto& orb : aorbs) {
            buf.clear();
            for (int p : orb) buf.push_back(m.map((std::uint32_t)p + 1));
            std::sort(buf.begin(), buf.end());
            for (auto v : buf) h = mix(h ^ v);
            h = mix(h);
        }
        return h;
    };

    std::vector<GlMat> reps{GlMat::identity_k(k)};
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets[coset_key(reps[0])].push_back(0);
    auto find_coset = [&](const GlMat& m) -> int {
        auto it = buckets.find(coset_key(m));
        if (it != buckets.end())
            for (int j : it->second)
                if (a.contains(m.then(reps[j].inverse()))) return j;
        return -1;
    };
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const auto& sgen : g.generators()) {
            GlMat h = reps[i].then(sgen);
            if (find_coset(h) >= 0) continue;
            if (reps.size() >= coset_bound)
                throw std::runtime_error("double_coset_reps: coset space exceeds bound");
            buckets[coset_key(h)].push_back((int)reps.size());
            reps.push_back(std::move(h));
        }
    }

    auto orbs = orbit_partition((int)reps.size(), (int)b.generators().size(),
        [&](int gi, int p) {
            int j = find_coset(reps[p].then(b.generators()[gi]));
            if (j < 0) throw std::logic_error("double_coset_reps: closure violated");
            return j;
        });
    std::vector<GlMat> out;
    for (const auto& orb : orbs)
        out.push_back(reps[orb.front()]);
    return out;
}

} // namespace trieven
