#ifndef TRIEVEN_PERM_HPP
#define TRIEVEN_PERM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trieven {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation of {0,...,n-1}; images[i] is where point i goes.
struct Perm {
    std::vector<int> images;

    Perm() = default;
    explicit Perm(std::vector<int> img) : images(std::move(img)) {}
    static Perm identity(int n) {
        Perm p;
        p.images.resize(n);
        std::iota(p.images.begin(), p.images.end(), 0);
        return p;
    }
    int degree() const { return (int)images.size(); }
    int act(int p) const { return images[p]; }
    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images[i] != i) return false;
        return true;
    }
    /// "this then o": result.act(p) == o.act(this->act(p)).
    Perm then(const Perm& o) const {
        Perm r;
        r.images.resize(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) r.images[i] = o.images[images[i]];
        return r;
    }
    Perm inverse() const {
        Perm r;
        r.images.resize(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) r.images[images[i]] = (int)i;
        return r;
    }
    friend bool operator==(const Perm&, const Perm&) = default;
    bool valid() const {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 0 || v >= degree() || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }
};

/// Base-and-strong-generating-set chain (deterministic Schreier-Sims) over an
/// element type E providing: E::identity(n), act(int)->int, then(E)->E,
/// inverse()->E, is_identity()->bool.
template <class E>
class GroupChain {
public:
    GroupChain(int npoints, const std::vector<E>& gens) : n_(npoints) {
        for (const auto& g : gens) add_full(g);
    }

    int npoints() const { return n_; }
    std::size_t base_size() const { return levels_.size(); }

    BigInt order() const {
        BigInt o = 1;
        for (const auto& lvl : levels_) o *= (BigInt)lvl.orbit.size();
        return o;
    }

    bool contains(const E& g) const {
        E res = g;
        std::size_t lev;
        return strip(res, 0, lev) && res.is_identity();
    }

    void add_generator(const E& g) { add_full(g); }

private:
    struct Level {
        int base_point = -1;
        std::vector<E> gens;        // generators of this level's stabilizer
        std::vector<int> orbit;     // orbit of base_point
        std::vector<int> where;     // point -> transversal index or -1
        std::vector<E> transversal; // element taking base_point to orbit[i]
    };

    void recompute_orbit(Level& lvl) {
        lvl.orbit.assign(1, lvl.base_point);
        lvl.where.assign(n_, -1);
        lvl.where[lvl.base_point] = 0;
        lvl.transversal.assign(1, E::identity(n_));
        for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
            for (const auto& g : lvl.gens) {
                int q = g.act(lvl.orbit[i]);
                if (lvl.where[q] < 0) {
                    lvl.where[q] = (int)lvl.orbit.size();
                    lvl.orbit.push_back(q);
                    lvl.transversal.push_back(lvl.transversal[i].then(g));
                }
            }
        }
    }

    // Reduce g through levels starting at `from`. Returns false if stuck at an
    // unknown orbit point (out_level is the stuck level); true when reduced
    // through every level (out_level = levels_.size()).
    bool strip(E& g, std::size_t from, std::size_t& out_level) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            int p = g.act(levels_[i].base_point);
            if (levels_[i].where[p] < 0) { out_level = i; return false; }
            g = g.then(levels_[i].transversal[levels_[i].where[p]].inverse());
        }
        out_level = levels_.size();
        return true;
    }

    void append_level_for(const E& g) {
        Level lvl;
        for (int p = 0; p < n_; ++p)
            if (g.act(p) != p) { lvl.base_point = p; break; }
        levels_.push_back(std::move(lvl));
    }

    // Insert residue `res` (known to fix base[0..floor-1]) and re-verify.
    void insert_residue(const E& res, std::size_t floor) {
        std::size_t j;
        E r = res;
        strip(r, floor, j);
        if (r.is_identity()) return;
        if (j == levels_.size()) append_level_for(r);
        for (std::size_t l = floor; l <= j; ++l) {
            levels_[l].gens.push_back(r);
            recompute_orbit(levels_[l]);
        }
        for (std::size_t l = j + 1; l-- > floor;) verify_level(l);
    }

    void add_full(const E& g) {
        if (g.is_identity()) return;
        insert_residue(g, 0);
    }

    // Check every Schreier generator of level i sifts to identity through the
    // (already verified) deeper levels; push down any residue found.
    void verify_level(std::size_t i) {
        // levels_ may reallocate inside insert_residue; index, don't hold refs.
        for (std::size_t idx = 0; idx < levels_[i].orbit.size(); ++idx) {
            for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
                const Level& lvl = levels_[i];
                int q = lvl.gens[s].act(lvl.orbit[idx]);
                E schreier = lvl.transversal[idx].then(lvl.gens[s]).then(
                    lvl.transversal[lvl.where[q]].inverse());
                if (schreier.is_identity()) continue;
                E res = schreier;
                std::size_t j;
                strip(res, i + 1, j);
                if (!res.is_identity()) insert_residue(res, i + 1);
            }
        }
    }

    int n_;
    std::vector<Level> levels_;
};

/// Permutation group given by generators, with order/membership via a lazily
/// built BSGS.
class PermGroup {
public:
    PermGroup(int npoints, std::vector<Perm> gens)
        : npoints_(npoints), gens_(std::move(gens)) {
        for (auto& g : gens_)
            if (g.degree() != npoints_) throw std::invalid_argument("PermGroup: degree mismatch");
    }
    static PermGroup trivial(int npoints) { return PermGroup(npoints, {}); }

    int npoints() const { return npoints_; }
    const std::vector<Perm>& generators() const { return gens_; }

    BigInt order() const { return chain().order(); }
    bool contains(const Perm& g) const { return chain().contains(g); }

    std::vector<int> orbit_of(int p) const {
        std::vector<int> orb{p};
        std::vector<bool> seen(npoints_, false);
        seen[p] = true;
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& g : gens_) {
                int q = g.act(orb[i]);
                if (!seen[q]) { seen[q] = true; orb.push_back(q); }
            }
        return orb;
    }

    /// Orbit partition; each orbit sorted ascending, orbits ordered by their
    /// minimum point (the deterministic representative).
    std::vector<std::vector<int>> orbits() const {
        std::vector<bool> seen(npoints_, false);
        std::vector<std::vector<int>> out;
        for (int p = 0; p < npoints_; ++p) {
            if (seen[p]) continue;
            auto orb = orbit_of(p);
            for (int q : orb) seen[q] = true;
            std::sort(orb.begin(), orb.end());
            out.push_back(std::move(orb));
        }
        return out;
    }

private:
    const GroupChain<Perm>& chain() const {
        if (!chain_) chain_ = std::make_shared<GroupChain<Perm>>(npoints_, gens_);
        return *chain_;
    }
    int npoints_;
    std::vector<Perm> gens_;
    mutable std::shared_ptr<GroupChain<Perm>> chain_;
};

/// Orbit partition of points 0..npoints-1 under an arbitrary action given by
/// `apply(gen_index, point) -> point`, for ngens generators.
std::vector<std::vector<int>> orbit_partition(
    int npoints, int ngens, const std::function<int(int, int)>& apply);

} // namespace trieven

#endif
