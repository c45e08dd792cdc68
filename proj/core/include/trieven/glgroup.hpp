#ifndef TRIEVEN_GLGROUP_HPP
#define TRIEVEN_GLGROUP_HPP

#include <cstdint>
#include <optional>

#include "trieven/perm.hpp"

namespace trieven {

/// Invertible linear map on F_2^k (k <= 16), acting on row vectors encoded as
/// k-bit integers: map(v) = xor of rows[i] over the set bits i of v.
struct GlMat {
    std::vector<std::uint16_t> rows; // rows[i] = image of e_i

    GlMat() = default;
    explicit GlMat(std::vector<std::uint16_t> r) : rows(std::move(r)) {}
    static GlMat identity_k(int k) {
        GlMat m;
        m.rows.resize(k);
        for (int i = 0; i < k; ++i) m.rows[i] = (std::uint16_t)(1u << i);
        return m;
    }
    int dim() const { return (int)rows.size(); }
    std::uint32_t map(std::uint32_t v) const {
        std::uint32_t r = 0;
        for (int i = 0; v; ++i, v >>= 1)
            if (v & 1) r ^= rows[i];
        return r;
    }
    /// "this then o": (a.then(b)).map(v) == b.map(a.map(v)).
    GlMat then(const GlMat& o) const {
        GlMat r;
        r.rows.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            r.rows[i] = (std::uint16_t)o.map(rows[i]);
        return r;
    }
    GlMat inverse() const;
    bool is_identity() const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] != (1u << i)) return false;
        return true;
    }
    bool invertible() const;
    friend bool operator==(const GlMat&, const GlMat&) = default;
    friend bool operator<(const GlMat& a, const GlMat& b) { return a.rows < b.rows; }
};

/// Adapter: GlMat as a group element acting on the nonzero vectors of F_2^k,
/// point p <-> vector p+1. Plugs into GroupChain.
struct GlElt {
    GlMat m;
    static GlElt identity(int npoints) {
        int k = std::countr_zero((unsigned)(npoints + 1));
        return GlElt{GlMat::identity_k(k)};
    }
    int act(int p) const { return (int)m.map((std::uint32_t)p + 1) - 1; }
    GlElt then(const GlElt& o) const { return GlElt{m.then(o.m)}; }
    GlElt inverse() const { return GlElt{m.inverse()}; }
    bool is_identity() const { return m.is_identity(); }
};

/// Matrix group over F_2^k given by generators; order and membership via a
/// stabilizer chain on the nonzero vectors.
class MatGroup {
public:
    MatGroup(int k, std::vector<GlMat> gens) : k_(k), gens_(std::move(gens)) {}
    static MatGroup trivial(int k) { return MatGroup(k, {}); }

    int dim() const { return k_; }
    const std::vector<GlMat>& generators() const { return gens_; }
    BigInt order() const { return chain().order(); }
    bool contains(const GlMat& g) const {
        return k_ == 0 ? true : chain().contains(GlElt{g});
    }

private:
    const GroupChain<GlElt>& chain() const;
    int k_;
    std::vector<GlMat> gens_;
    mutable std::shared_ptr<GroupChain<GlElt>> chain_;
};

/// Standard generators of GL(k,2).
std::vector<GlMat> gl_generators(int k);

/// All of GL(k,2); for test oracles, k <= 4.
std::vector<GlMat> gl_all(int k);

/// Generators of the setwise stabilizer of X in GL(k,2), where X is a sorted
/// list of k-bit vectors (0 in X is allowed; linear maps fix it anyway).
/// Backtracking over images of the standard basis with membership and
/// pair-sum-count pruning; `seed` generators (known stabilizer elements, e.g.
/// an induced automorphism action) prune the search from the start.
std::vector<GlMat> gl_set_stabilizer(int k, const std::vector<std::uint32_t>& x,
                                     const std::vector<GlMat>& seed = {});

/// Some g in GL(k,2) with g(X1) = X2, or nullopt. Deterministic (first hit in
/// lexicographic basis-image order).
std::optional<GlMat> gl_set_transporter(int k, const std::vector<std::uint32_t>& x1,
                                        const std::vector<std::uint32_t>& x2);

/// Representatives of the double cosets A\G/B, identity-coset representative
/// first. Enumerates the right coset space {Ag} (keyed by the images of the
/// A-orbits, verified by membership) and partitions it into B-orbits; throws
/// if more than `coset_bound` cosets appear.
std::vector<GlMat> double_coset_reps(const MatGroup& g, const MatGroup& a,
                                     const MatGroup& b,
                                     std::size_t coset_bound = 1000000);

} // namespace trieven

#endif
