#ifndef TRIEVEN_CONSTRUCTIONS_HPP
#define TRIEVEN_CONSTRUCTIONS_HPP

#include "trieven/code.hpp"
#include "trieven/forms.hpp"
#include "trieven/glgroup.hpp"

namespace trieven {

/// D(C) for doubly even C: the span of (1|0), (0|1) and (x|x) over a basis
/// of C. Triply even of length 2n, dimension dim C + 2 (one less when the
/// all-ones word lies in C).
LinearCode extended_doubling(const LinearCode& c);

/// D~(C): the span of {(x|x) : x in C} and R + R with R = C meet Rad C.
/// Triply even of length 2n, dimension dim C + dim R.
LinearCode generalized_doubling(const LinearCode& c);

/// The code of the triangular graph on 2-subsets of an n-set (even cuts):
/// length n(n-1)/2, dimension n-2, coordinates = pairs (a,b), a < b, in
/// lexicographic order. Triply even iff n = 2 mod 4.
LinearCode triangular_graph_code(int n);

/// triangular_graph_code(n) padded with zeros to the next multiple of 8,
/// plus the all-ones word.
LinearCode padded_triangular_code(int n);

/// Quotient C/R with a fixed lift basis, for R <= C meet Rad C (every basis
/// word of R has weight 0 mod 8 and is B-orthogonal to C, so coset weights
/// are well defined mod 8). Cosets are k-bit integers over the lift basis.
struct QuotientContext {
    LinearCode c, r;
    int k = 0;                      // dim c - dim r
    std::vector<Gf2Vector> lifts;   // lift basis; coset a -> sum over bits
    std::vector<std::uint32_t> x;   // singular cosets (weight 0 mod 8), sorted

    QuotientContext(LinearCode code, LinearCode rad_part);

    Gf2Vector lift(std::uint32_t a) const;
    int coset_weight_mod8(std::uint32_t a) const;
    /// { v in F_2^X : sum_{x in X} v_x x = 0 in C/R }, coordinates in the
    /// order of `x`.
    LinearCode check_code() const;
};

/// Pair code D(C1, C2, R1, R2, f) for an isometry f given as a matrix on the
/// lift bases: R1 + R2 together with (lift1(e_i) | lift2(f(e_i))).
LinearCode pair_code(const QuotientContext& q1, const QuotientContext& q2,
                     const GlMat& f);

/// Does f map singular cosets of q1 onto those of q2 (i.e. induce a weight
/// mod 8 preserving isomorphism C1/R1 -> C2/R2)?
bool is_isometry(const QuotientContext& q1, const QuotientContext& q2,
                 const GlMat& f);

/// Action of a permutation p with C^p = C, R^p = R on C/R in the lift basis.
GlMat induced_quotient_action(const QuotientContext& q, const Perm& p);

/// Halves of a length-2m code D cut along a weight-m codeword x: part i is
/// D restricted to S_i with S_1 = supp(1+x), S_2 = supp(x); c_i is the
/// puncturing, r_i the shortening.
struct SplitParts {
    LinearCode c1, r1, c2, r2;
};
SplitParts split_by_codeword(const LinearCode& d, const Gf2Vector& x);

} // namespace trieven

#endif
