#ifndef TRIEVEN_FORMS_HPP
#define TRIEVEN_FORMS_HPP

#include "trieven/code.hpp"
#include "trieven/perm.hpp"

namespace trieven {

/// Q(u) = (wt(u)/4) mod 2. Requires wt(u) divisible by 4.
int q_form(const Gf2Vector& u);
/// B(u,v) = (wt(u*v)/2) mod 2, where u*v is the coordinatewise product.
/// Requires wt(u*v) even.
int b_form(const Gf2Vector& u, const Gf2Vector& v);
/// T(u,v,w) = wt(u*v*w) mod 2.
int t_form(const Gf2Vector& u, const Gf2Vector& v, const Gf2Vector& w);

/// wt(c) = 0 mod 4 for all codewords; checked on the basis
/// (singles mod 4, pairwise products mod 2).
bool is_doubly_even(const LinearCode& c);
/// wt(c) = 0 mod 8 for all codewords; checked on the basis
/// (singles mod 8, pairs mod 4, triples mod 2).
bool is_triply_even(const LinearCode& c);

/// C*C, the span of all coordinatewise products of codewords.
LinearCode star_code(const LinearCode& c);

/// Basis of a complement of sub inside sup (sub must be a subcode of sup).
/// Every word of the result is its own reduction mod sub, so the words of
/// the complement double as canonical coset keys for sup/sub.
LinearCode complement_in(const LinearCode& sup, const LinearCode& sub);

/// C meet rad C for doubly even C, where
/// rad C = { y in dual(C) : B(x,y) = 0 for all x in C }.
LinearCode meet_rad(const LinearCode& c);
/// C meet Rad C, where Rad C = { x in rad C : Q(x) = 0 }.
LinearCode meet_Rad(const LinearCode& c);

/// All of rad C by enumeration of dual(C*C) (not linear in general).
/// Sorted; throws if dim dual(C*C) exceeds cap_dim.
std::vector<Gf2Vector> rad_brute(const LinearCode& c,
                                 std::size_t cap_dim = kDefaultEnumCapDim);
std::vector<Gf2Vector> Rad_brute(const LinearCode& c,
                                 std::size_t cap_dim = kDefaultEnumCapDim);

struct RadicalSummary {
    std::size_t dim_meet_rad = 0;  // dim (C meet rad C)
    std::size_t dim_meet_Rad = 0;  // dim (C meet Rad C)
    std::size_t rad_size = 0;      // |rad C|
    std::size_t Rad_size = 0;      // |Rad C|
    bool rad_in_c = false;
    bool Rad_in_c = false;
};
/// Brute-force summary, for small codes and cross-checks.
RadicalSummary radical_summary(const LinearCode& c,
                               std::size_t cap_dim = kDefaultEnumCapDim);

/// Representatives of the nonzero cosets of dual(C*C) modulo
/// (dual(C*C) meet C), one per orbit of the automorphism group given by
/// `aut_gens` (coordinate permutations). Each representative is the
/// lexicographically least reduced vector in its orbit; output sorted.
std::vector<Gf2Vector> outside_vectors(const LinearCode& c,
                                       const std::vector<Perm>& aut_gens);

/// True iff Rad C is not contained in C. Requires C doubly even. Uses the
/// coset criterion when the all-ones word is in C and the length is a
/// multiple of 8; otherwise falls back to enumeration of dual(C*C).
bool exists_outside_Rad(const LinearCode& c, const std::vector<Perm>& aut_gens);

/// True iff the triply even code C admits no proper triply even extension
/// within the same length: no nonzero x in a complement of C inside
/// dual(C*C) with wt(x) = 0 mod 8 and B(x, b) = 0 for every basis word b.
bool is_maximal(const LinearCode& c);

/// Extend a triply even code to a maximal one, repeatedly adjoining the
/// least qualifying vector (in the coordinate-0-first order on words of the
/// complement of C in dual(C*C)). Deterministic.
LinearCode maximalize(const LinearCode& c);

} // namespace trieven

#endif
