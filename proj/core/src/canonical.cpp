#include "trieven/canonical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace trieven {

namespace {

constexpr int kNoJump = std::numeric_limits<int>::max();

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Dense re-coloring: ids follow the sorted order of (old color, value) keys,
// so they are invariant under coordinate relabeling.
int recolor(std::vector<int>& col, const std::vector<std::uint64_t>& val) {
    std::vector<std::pair<int, std::uint64_t>> keys(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) keys[i] = {col[i], val[i]};
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < col.size(); ++i)
        col[i] = (int)(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                       sorted.begin());
    return (int)sorted.size();
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Searcher {
    int n = 0;
    const LinearCode* code = nullptr;
    const LinearCode* sub = nullptr;
    std::vector<std::vector<int>> wsup; // word -> support
    std::vector<std::vector<int>> cinc; // coordinate -> incident words
    std::vector<int> wbase;             // word -> initial color

    std::vector<int> choices;
    std::vector<Perm> auts;
    bool have_first = false;
    std::vector<int> first_path, best_path;
    Perm first_perm, best_perm;
    std::vector<std::uint64_t> first_cert, best_cert;

    void build(const LinearCode& c, const LinearCode* s) {
        if (c.dim() > 20)
            throw std::runtime_error("canonical_form: dimension too large to enumerate");
        code = &c;
        sub = s;
        n = (int)c.length();
        cinc.assign(n, {});
        std::vector<std::pair<int, int>> base_keys; // (weight, in subcode)
        c.for_each_word([&](const Gf2Vector& w) {
            if (w.is_zero()) return;
            int wi = (int)wsup.size();
            std::vector<int> sup;
            for (auto i : w.support()) sup.push_back((int)i);
            for (int i : sup) cinc[i].push_back(wi);
            wsup.push_back(std::move(sup));
            base_keys.push_back({w.weight(), s && s->contains(w) ? 1 : 0});
        });
        auto sorted = base_keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        wbase.resize(base_keys.size());
        for (std::size_t i = 0; i < base_keys.size(); ++i)
            wbase[i] = (int)(std::lower_bound(sorted.begin(), sorted.end(),
                                              base_keys[i]) - sorted.begin());
    }

    int refine(std::vector<int>& ccol, std::vector<int>& wcol) const {
        std::size_t m = wsup.size();
        int nw = -1, nc = -1;
        std::vector<std::uint64_t> wval(m), cval(n);
        for (;;) {
            for (std::size_t w = 0; w < m; ++w) {
                std::uint64_t acc = 0;
                for (int i : wsup[w]) acc += mix((std::uint64_t)ccol[i]);
                wval[w] = acc;
            }
            int nw2 = recolor(wcol, wval);
            for (int i = 0; i < n; ++i) {
                std::uint64_t acc = 0;
                for (int w : cinc[i]) acc += mix((std::uint64_t)wcol[w]);
                cval[i] = acc;
            }
            int nc2 = recolor(ccol, cval);
            if (nw2 == nw && nc2 == nc) return nc;
            nw = nw2;
            nc = nc2;
            if (nc == n) return nc;
        }
    }

    std::vector<std::uint64_t> leaf_cert(const Perm& p) const {
        std::vector<std::uint64_t> cert;
        auto emit = [&](const LinearCode& lc) {
            cert.push_back(lc.dim());
            for (std::size_t i = 0; i < lc.dim(); ++i)
                for (std::size_t w = 0; w < lc.basis_row(i).word_count(); ++w)
                    cert.push_back(lc.basis_row(i).word(w));
        };
        emit(code->permuted(p.images));
        if (sub) emit(sub->permuted(p.images));
        return cert;
    }

    bool is_aut(const Perm& p) const {
        if (!(code->permuted(p.images) == *code)) return false;
        if (sub && !(sub->permuted(p.images) == *sub)) return false;
        return true;
    }

    static int common_depth(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t t = 0;
        while (t < a.size() && t < b.size() && a[t] == b[t]) ++t;
        return (int)t;
    }

    int handle_leaf(const std::vector<int>& ccol) {
        Perm p;
        p.images.assign(ccol.begin(), ccol.end());
        auto cert = leaf_cert(p);
        if (!have_first) {
            have_first = true;
            first_perm = best_perm = p;
            first_cert = best_cert = cert;
            first_path = best_path = choices;
            return kNoJump;
        }
        if (cert == first_cert) {
            Perm g = p.then(first_perm.inverse());
            if (!is_aut(g)) throw std::logic_error("canonical_form: bad automorphism");
            if (!g.is_identity()) auts.push_back(std::move(g));
            return common_depth(choices, first_path);
        }
        if (cert == best_cert) {
            Perm g = p.then(best_perm.inverse());
            if (!is_aut(g)) throw std::logic_error("canonical_form: bad automorphism");
            if (!g.is_identity()) auts.push_back(std::move(g));
            return common_depth(choices, best_path);
        }
        if (cert < best_cert) {
            best_cert = std::move(cert);
            best_perm = std::move(p);
            best_path = choices;
        }
        return kNoJump;
    }

    int search(std::vector<int> ccol, std::vector<int> wcol, int depth) {
        int nc = refine(ccol, wcol);
        if (nc == n) {
            choices.resize(depth);
            return handle_leaf(ccol);
        }
        // target cell: smallest non-singleton color class, least color first
        std::vector<int> count(nc, 0);
        for (int i = 0; i < n; ++i) ++count[ccol[i]];
        int target = -1;
        for (int c = 0; c < nc; ++c)
            if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
        std::vector<int> cell;
        for (int i = 0; i < n; ++i)
            if (ccol[i] == target) cell.push_back(i);

        std::vector<int> processed;
        for (int v : cell) {
            // skip v if a previously processed candidate lies in the same
            // orbit of the subgroup fixing the current prefix
            DisjointSet ds(n);
            for (const auto& g : auts) {
                bool fixes = true;
                for (int d = 0; d < depth && fixes; ++d)
                    if (g.act(choices[d]) != choices[d]) fixes = false;
                if (!fixes) continue;
                for (int i = 0; i < n; ++i) ds.unite(i, g.act(i));
            }
            bool dup = false;
            for (int u : processed)
                if (ds.find(u) == ds.find(v)) { dup = true; break; }
            if (dup) continue;
            processed.push_back(v);

            choices.resize(depth);
            choices.push_back(v);
            auto ccol2 = ccol;
            ccol2[v] = nc; // fresh color
            int r = search(std::move(ccol2), wcol, depth + 1);
            if (r < depth) return r;
        }
        return kNoJump;
    }

    CanonicalForm run() {
        std::vector<int> ccol(n, 0), wcol(wbase);
        search(std::move(ccol), std::move(wcol), 0);
        CanonicalForm out;
        out.relabeling = best_perm;
        out.canonical_code = code->permuted(best_perm.images);
        out.canonical_subcode =
            sub ? sub->permuted(best_perm.images) : LinearCode(code->length());
        out.aut_generators = auts;
        out.certificate = best_cert;
        return out;
    }
};

} // namespace

CanonicalForm canonical_form(const LinearCode& c) {
    Searcher s;
    s.build(c, nullptr);
    return s.run();
}

CanonicalForm canonical_form_pair(const LinearCode& c, const LinearCode& sub) {
    if (!c.contains_code(sub))
        throw std::invalid_argument("canonical_form_pair: not a subcode");
    Searcher s;
    s.build(c, &sub);
    return s.run();
}

bool is_equivalent(const LinearCode& a, const LinearCode& b, Perm* witness) {
    if (a.length() != b.length() || a.dim() != b.dim()) return false;
    auto ca = canonical_form(a);
    auto cb = canonical_form(b);
    if (ca.certificate != cb.certificate) return false;
    Perm w = ca.relabeling.then(cb.relabeling.inverse());
    if (!(a.permuted(w.images) == b))
        throw std::logic_error("is_equivalent: witness verification failed");
    if (witness) *witness = std::move(w);
    return true;
}

std::vector<Perm> automorphism_generators(const LinearCode& c) {
    return canonical_form(c).aut_generators;
}

} // namespace trieven
