#include "trieven/gf2.hpp"

namespace trieven {

Gf2Matrix rref(const Gf2Matrix& m, std::vector<std::size_t>* pivots) {
    std::vector<Gf2Vector> rows(m.rows());
    std::size_t n = m.col_count();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i].get(c)) { sel = i; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    if (pivots) *pivots = std::move(piv);
    return Gf2Matrix(std::move(rows), n);
}

std::size_t rank(const Gf2Matrix& m) { return rref(m).row_count(); }

Gf2Matrix kernel_basis(const Gf2Matrix& m) {
    std::vector<std::size_t> piv;
    Gf2Matrix e = rref(m, &piv);
    std::size_t n = m.col_count();
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Gf2Vector> out;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Gf2Vector v(n);
        v.set(c, true);
        for (std::size_t i = 0; i < piv.size(); ++i)
            if (e.row(i).get(c)) v.set(piv[i], true);
        out.push_back(std::move(v));
    }
    return rref(Gf2Matrix(std::move(out), n));
}

Gf2Vector reduce_mod(const Gf2Vector& v, const Gf2Matrix& rrefm,
                     const std::vector<std::size_t>& pivots) {
    Gf2Vector r = v;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (r.get(pivots[i])) r ^= rrefm.row(i);
    return r;
}

bool solve_row_combination(const Gf2Matrix& m, const Gf2Vector& target,
                           std::vector<std::uint8_t>* coeffs) {
    // Eliminate with bookkeeping of which original rows entered each pivot row.
    std::size_t k = m.row_count(), n = m.col_count();
    std::vector<Gf2Vector> rows(m.rows());
    std::vector<std::vector<std::uint8_t>> comb(k, std::vector<std::uint8_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) comb[i][i] = 1;
    Gf2Vector t = target;
    std::vector<std::uint8_t> tcomb(k, 0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < k; ++c) {
        std::size_t sel = k;
        for (std::size_t i = r; i < k; ++i)
            if (rows[i].get(c)) { sel = i; break; }
        if (sel == k) continue;
        std::swap(rows[r], rows[sel]);
        std::swap(comb[r], comb[sel]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                for (std::size_t j = 0; j < k; ++j) comb[i][j] ^= comb[r][j];
            }
        }
        if (t.get(c)) {
            t ^= rows[r];
            for (std::size_t j = 0; j < k; ++j) tcomb[j] ^= comb[r][j];
        }
        ++r;
    }
    if (!t.is_zero()) return false;
    if (coeffs) *coeffs = std::move(tcomb);
    return true;
}

} // namespace trieven
