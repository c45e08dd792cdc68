#include "trieven/constructions.hpp"

#include <stdexcept>

namespace trieven {

LinearCode extended_doubling(const LinearCode& c) {
    std::size_t n = c.length();
    std::vector<Gf2Vector> rows;
    rows.push_back(Gf2Vector::ones(n).concat(Gf2Vector(n)));
    rows.push_back(Gf2Vector(n).concat(Gf2Vector::ones(n)));
    for (std::size_t i = 0; i < c.dim(); ++i)
        rows.push_back(c.basis_row(i).concat(c.basis_row(i)));
    return LinearCode::span(std::move(rows), 2 * n);
}

LinearCode generalized_doubling(const LinearCode& c) {
    LinearCode r = meet_Rad(c);
    return sum_code(juxtapose_diag(c), direct_sum(r, r));
}

namespace {

std::size_t pair_index(int a, int b, int n) {
    // pairs (a,b), a < b, lexicographic
    return (std::size_t)a * n - (std::size_t)a * (a + 1) / 2 + (b - a - 1);
}

} // namespace

LinearCode triangular_graph_code(int n) {
    if (n < 3) throw std::invalid_argument("triangular_graph_code: n < 3");
    std::size_t len = (std::size_t)n * (n - 1) / 2;
    std::vector<Gf2Vector> rows;
    for (int i = 0; i < n - 2; ++i) {
        // even cut of {i, n-1}: pairs meeting it in exactly one point
        Gf2Vector row(len);
        for (int j = 0; j < n - 1; ++j) {
            if (j == i) continue;
            row.set(pair_index(std::min(i, j), std::max(i, j), n), 1);
            row.set(pair_index(j, n - 1, n), 1);
        }
        rows.push_back(std::move(row));
    }
    return LinearCode::span(std::move(rows), len);
}

LinearCode padded_triangular_code(int n) {
    LinearCode t = triangular_graph_code(n);
    std::size_t target = (t.length() + 7) / 8 * 8;
    return sum_code(pad(t, target - t.length()), LinearCode::repetition(target));
}

QuotientContext::QuotientContext(LinearCode code, LinearCode rad_part)
    : c(std::move(code)), r(std::move(rad_part)) {
    if (!c.contains_code(r))
        throw std::invalid_argument("QuotientContext: R not a subcode of C");
    for (std::size_t i = 0; i < r.dim(); ++i) {
        const auto& y = r.basis_row(i);
        if (y.weight() % 8 != 0)
            throw std::invalid_argument("QuotientContext: R word of weight != 0 mod 8");
        for (std::size_t j = 0; j < c.dim(); ++j)
            if (b_form(c.basis_row(j), y) != 0)
                throw std::invalid_argument("QuotientContext: R not B-orthogonal to C");
    }
    k = (int)(c.dim() - r.dim());
    if (k > 20) throw std::invalid_argument("QuotientContext: quotient too large");
    std::vector<Gf2Vector> red;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        Gf2Vector v = r.reduce(c.basis_row(i));
        if (!v.is_zero()) red.push_back(std::move(v));
    }
    Gf2Matrix lm = rref(Gf2Matrix(std::move(red), c.length()));
    if ((int)lm.row_count() != k)
        throw std::logic_error("QuotientContext: lift rank mismatch");
    for (std::size_t i = 0; i < lm.row_count(); ++i) lifts.push_back(lm.row(i));
    for (std::uint32_t a = 0; a < (1u << k); ++a)
        if (coset_weight_mod8(a) == 0) x.push_back(a);
}

Gf2Vector QuotientContext::lift(std::uint32_t a) const {
    Gf2Vector v(c.length());
    for (int i = 0; a; ++i, a >>= 1)
        if (a & 1) v ^= lifts[i];
    return v;
}

int QuotientContext::coset_weight_mod8(std::uint32_t a) const {
    return (int)(lift(a).weight() % 8);
}

LinearCode QuotientContext::check_code() const {
    Gf2Matrix m(x.size());
    for (int i = 0; i < k; ++i) {
        Gf2Vector row(x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            if ((x[j] >> i) & 1) row.set(j, 1);
        m.add_row(std::move(row));
    }
    return LinearCode(kernel_basis(m));
}

LinearCode pair_code(const QuotientContext& q1, const QuotientContext& q2,
                     const GlMat& f) {
    if (f.dim() != q1.k || q1.k != q2.k)
        throw std::invalid_argument("pair_code: dimension mismatch");
    LinearCode base = direct_sum(q1.r, q2.r);
    std::vector<Gf2Vector> rows;
    for (std::size_t i = 0; i < base.dim(); ++i) rows.push_back(base.basis_row(i));
    for (int i = 0; i < q1.k; ++i)
        rows.push_back(q1.lifts[i].concat(q2.lift(f.rows[i])));
    return LinearCode::span(std::move(rows), q1.c.length() + q2.c.length());
}

bool is_isometry(const QuotientContext& q1, const QuotientContext& q2,
                 const GlMat& f) {
    if (q1.k != q2.k || f.dim() != q1.k || !f.invertible()) return false;
    std::vector<std::uint32_t> img;
    for (auto a : q1.x) img.push_back(f.map(a));
    std::sort(img.begin(), img.end());
    return img == q2.x;
}

GlMat induced_quotient_action(const QuotientContext& q, const Perm& p) {
    Gf2Matrix m(q.c.length());
    for (const auto& u : q.lifts) m.add_row(u);
    for (std::size_t i = 0; i < q.r.dim(); ++i) m.add_row(q.r.basis_row(i));
    GlMat g;
    g.rows.resize(q.k);
    for (int i = 0; i < q.k; ++i) {
        std::vector<std::uint8_t> coeffs;
        if (!solve_row_combination(m, q.lifts[i].permuted(p.images), &coeffs))
            throw std::invalid_argument("induced_quotient_action: p does not preserve C");
        std::uint16_t row = 0;
        for (int j = 0; j < q.k; ++j)
            if (coeffs[j]) row |= (std::uint16_t)(1u << j);
        g.rows[i] = row;
    }
    // sanity: R must go back to R for the action to be well defined
    for (std::size_t i = 0; i < q.r.dim(); ++i)
        if (!q.r.contains(q.r.basis_row(i).permuted(p.images)))
            throw std::invalid_argument("induced_quotient_action: p does not preserve R");
    return g;
}

SplitParts split_by_codeword(const LinearCode& d, const Gf2Vector& x) {
    if (x.size() != d.length())
        throw std::invalid_argument("split_by_codeword: length mismatch");
    std::vector<std::size_t> s1, s2;
    for (std::size_t i = 0; i < d.length(); ++i)
        (x.get(i) ? s2 : s1).push_back(i);
    SplitParts out;
    out.c1 = puncture(d, s2);
    out.r1 = shorten(d, s2);
    out.c2 = puncture(d, s1);
    out.r2 = shorten(d, s1);
    return out;
}

} // namespace trieven
