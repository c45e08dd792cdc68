#ifndef TRIEVEN_CANONICAL_HPP
#define TRIEVEN_CANONICAL_HPP

#include <cstdint>
#include <optional>

#include "trieven/code.hpp"
#include "trieven/perm.hpp"

namespace trieven {

/// Result of canonical labeling of a code (optionally together with a
/// distinguished subcode). Two codes are equivalent under coordinate
/// permutation iff their certificates match; for pairs, iff both the code and
/// the subcode are matched simultaneously.
struct CanonicalForm {
    LinearCode canonical_code;
    LinearCode canonical_subcode;           // dim 0 when no subcode was given
    Perm relabeling;                        // original -> canonical coordinates
    std::vector<Perm> aut_generators;       // of the (pair) automorphism group
    std::vector<std::uint64_t> certificate; // flattened canonical bases

    BigInt aut_order() const {
        return PermGroup((int)relabeling.images.size(), aut_generators).order();
    }
};

/// Canonical form by backtracking over coordinate labelings of the incidence
/// structure between coordinates and nonzero codewords (codewords colored by
/// weight, and by subcode membership when a subcode is given). Also returns
/// generators of the full automorphism group (the setwise stabilizer of both
/// codes among coordinate permutations).
CanonicalForm canonical_form(const LinearCode& c);
CanonicalForm canonical_form_pair(const LinearCode& c, const LinearCode& sub);

/// Equivalence test with an optional verified witness permutation taking a
/// onto b (a.permuted(w) == b).
bool is_equivalent(const LinearCode& a, const LinearCode& b, Perm* witness = nullptr);

std::vector<Perm> automorphism_generators(const LinearCode& c);

} // namespace trieven

#endif
