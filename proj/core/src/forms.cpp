#include "trieven/forms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace trieven {

int q_form(const Gf2Vector& u) {
    int w = u.weight();
    if (w % 4 != 0) throw std::invalid_argument("q_form: weight not divisible by 4");
    return (w / 4) % 2;
}

int b_form(const Gf2Vector& u, const Gf2Vector& v) {
    int w = (u & v).weight();
    if (w % 2 != 0) throw std::invalid_argument("b_form: product weight odd");
    return (w / 2) % 2;
}

int t_form(const Gf2Vector& u, const Gf2Vector& v, const Gf2Vector& w) {
    return (u & v & w).weight() % 2;
}

bool is_doubly_even(const LinearCode& c) {
    std::size_t k = c.dim();
    for (std::size_t i = 0; i < k; ++i) {
        if (c.basis_row(i).weight() % 4 != 0) return false;
        for (std::size_t j = i + 1; j < k; ++j)
            if ((c.basis_row(i) & c.basis_row(j)).weight() % 2 != 0) return false;
    }
    return true;
}

bool is_triply_even(const LinearCode& c) {
    std::size_t k = c.dim();
    for (std::size_t i = 0; i < k; ++i) {
        if (c.basis_row(i).weight() % 8 != 0) return false;
        for (std::size_t j = i; j < k; ++j) {
            if ((c.basis_row(i) & c.basis_row(j)).weight() % 4 != 0) return false;
            for (std::size_t l = j; l < k; ++l)
                if ((c.basis_row(i) & c.basis_row(j) & c.basis_row(l)).weight() % 2 != 0)
                    return false;
        }
    }
    return true;
}

LinearCode star_code(const LinearCode& c) {
    std::vector<Gf2Vector> rows;
    std::size_t k = c.dim();
    for (std::size_t i = 0; i < k; ++i) {
        rows.push_back(c.basis_row(i));
        for (std::size_t j = i + 1; j < k; ++j)
            rows.push_back(c.basis_row(i) & c.basis_row(j));
    }
    return LinearCode(Gf2Matrix(std::move(rows), c.length()));
}

LinearCode meet_rad(const LinearCode& c) {
    LinearCode d = meet_code(dual(star_code(c)), c);
    std::size_t k = c.dim(), kd = d.dim();
    // right kernel of N, N[i][j] = B(d_j, c_i); B is bilinear here.
    std::vector<Gf2Vector> nrows;
    for (std::size_t i = 0; i < k; ++i) {
        Gf2Vector row(kd);
        for (std::size_t j = 0; j < kd; ++j)
            if (b_form(d.basis_row(j), c.basis_row(i))) row.set(j, true);
        nrows.push_back(std::move(row));
    }
    Gf2Matrix ker = kernel_basis(Gf2Matrix(std::move(nrows), kd));
    std::vector<Gf2Vector> out;
    for (const auto& a : ker.rows()) {
        Gf2Vector w(c.length());
        for (std::size_t j = 0; j < kd; ++j)
            if (a.get(j)) w ^= d.basis_row(j);
        out.push_back(std::move(w));
    }
    return LinearCode(Gf2Matrix(std::move(out), c.length()));
}

LinearCode meet_Rad(const LinearCode& c) {
    LinearCode r0 = meet_rad(c);
    std::size_t kr = r0.dim();
    Gf2Vector qrow(kr);
    for (std::size_t j = 0; j < kr; ++j)
        if (q_form(r0.basis_row(j))) qrow.set(j, true);
    Gf2Matrix ker = kernel_basis(Gf2Matrix({qrow}, kr));
    std::vector<Gf2Vector> out;
    for (const auto& a : ker.rows()) {
        Gf2Vector w(c.length());
        for (std::size_t j = 0; j < kr; ++j)
            if (a.get(j)) w ^= r0.basis_row(j);
        out.push_back(std::move(w));
    }
    return LinearCode(Gf2Matrix(std::move(out), c.length()));
}

std::vector<Gf2Vector> rad_brute(const LinearCode& c, std::size_t cap_dim) {
    LinearCode w = dual(star_code(c));
    std::vector<Gf2Vector> out;
    w.for_each_word([&](const Gf2Vector& x) {
        for (std::size_t i = 0; i < c.dim(); ++i)
            if (b_form(x, c.basis_row(i))) return;
        out.push_back(x);
    }, cap_dim);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Gf2Vector> Rad_brute(const LinearCode& c, std::size_t cap_dim) {
    std::vector<Gf2Vector> out;
    for (auto& x : rad_brute(c, cap_dim))
        if (x.weight() % 8 == 0) out.push_back(std::move(x));
    return out;
}

RadicalSummary radical_summary(const LinearCode& c, std::size_t cap_dim) {
    RadicalSummary s;
    s.dim_meet_rad = meet_rad(c).dim();
    s.dim_meet_Rad = meet_Rad(c).dim();
    auto rad = rad_brute(c, cap_dim);
    s.rad_size = rad.size();
    s.rad_in_c = true;
    s.Rad_in_c = true;
    for (const auto& x : rad) {
        bool inc = c.contains(x);
        if (!inc) s.rad_in_c = false;
        if (x.weight() % 8 == 0) {
            ++s.Rad_size;
            if (!inc) s.Rad_in_c = false;
        }
    }
    return s;
}

// The sup basis reduced mod sub, re-echelonized. Elements have zeros at all
// of sub's pivot columns, so the span meets sub trivially.
LinearCode complement_in(const LinearCode& sup, const LinearCode& sub) {
    std::vector<Gf2Vector> rows;
    for (std::size_t i = 0; i < sup.dim(); ++i)
        rows.push_back(sub.reduce(sup.basis_row(i)));
    return LinearCode(Gf2Matrix(std::move(rows), sup.length()));
}

std::vector<Gf2Vector> outside_vectors(const LinearCode& c,
                                       const std::vector<Perm>& aut_gens) {
    LinearCode w = dual(star_code(c));
    LinearCode e = meet_code(w, c);
    LinearCode lifts = complement_in(w, e);
    // Coset keys: each coset of e in w reduces to a unique word of `lifts`.
    std::vector<Gf2Vector> keys = lifts.words();
    std::sort(keys.begin(), keys.end());
    auto index_of = [&](const Gf2Vector& v) {
        auto it = std::lower_bound(keys.begin(), keys.end(), v);
        return (int)(it - keys.begin());
    };
    auto orbs = orbit_partition((int)keys.size(), (int)aut_gens.size(),
        [&](int g, int p) {
            return index_of(e.reduce(keys[p].permuted(aut_gens[g].images)));
        });
    std::vector<Gf2Vector> reps;
    int zero = index_of(Gf2Vector(w.length()));
    for (const auto& o : orbs) {
        if (std::find(o.begin(), o.end(), zero) != o.end()) continue;
        reps.push_back(keys[o.front()]);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

static bool exists_outside_Rad_brute(const LinearCode& c) {
    for (const auto& x : Rad_brute(c))
        if (!c.contains(x)) return true;
    return false;
}

bool exists_outside_Rad(const LinearCode& c, const std::vector<Perm>& aut_gens) {
    if (!is_doubly_even(c)) throw std::invalid_argument("exists_outside_Rad: not doubly even");
    if (c.length() % 8 != 0 || !c.contains(Gf2Vector::ones(c.length())))
        return exists_outside_Rad_brute(c);

    LinearCode d = meet_code(dual(star_code(c)), c);
    std::size_t k = c.dim(), kd = d.dim();
    // m[j] = image of d_j under x -> (B(x, c_i))_i
    std::vector<Gf2Vector> mrows;
    for (std::size_t j = 0; j < kd; ++j) {
        Gf2Vector row(k);
        for (std::size_t i = 0; i < k; ++i)
            if (b_form(d.basis_row(j), c.basis_row(i))) row.set(i, true);
        mrows.push_back(std::move(row));
    }
    Gf2Matrix m(mrows, k);

    bool q_nonzero_on_rad = false;
    LinearCode r0 = meet_rad(c);
    for (const auto& r : r0.basis().rows())
        if (q_form(r)) { q_nonzero_on_rad = true; break; }

    for (const auto& x : outside_vectors(c, aut_gens)) {
        Gf2Vector phi(k);
        for (std::size_t i = 0; i < k; ++i)
            if (b_form(x, c.basis_row(i))) phi.set(i, true);
        std::vector<std::uint8_t> coeffs;
        if (!solve_row_combination(m, phi, &coeffs)) continue;
        if (q_nonzero_on_rad) return true;
        Gf2Vector y = x;
        for (std::size_t j = 0; j < kd; ++j)
            if (coeffs[j]) y ^= d.basis_row(j);
        if (q_form(y) == 0) return true;
    }
    return false;
}

// x extends the triply even code C iff x is orthogonal to C*C (so all triple
// products with C are even), wt(x) = 0 mod 8, and wt(x * b) = 0 mod 4 for
// every basis word b.
static bool extends_triply_even(const LinearCode& c, const Gf2Vector& x) {
    if (x.weight() % 8 != 0) return false;
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (b_form(x, c.basis_row(i))) return false;
    return true;
}

// The complement of a decomposable code inside (C*C)^perp can run well past
// the usual enumeration cap, so these searches get their own larger bound
// and a tight Gray-order loop instead of for_each_word.
static constexpr std::size_t kMaximalSearchCapDim = 32;

// scan the complement of C in (C*C)^perp for extension vectors; with
// first_hit, stop at the first one (any order), otherwise return the
// least qualifying word in the coordinate-0-first order
static bool find_extension(const LinearCode& c, Gf2Vector* out, bool first_hit) {
    LinearCode comp = complement_in(dual(star_code(c)), c);
    if (comp.dim() > kMaximalSearchCapDim)
        throw std::runtime_error("maximality search cap exceeded (dim " +
                                 std::to_string(comp.dim()) + ")");
    Gf2Vector w(c.length());
    bool have = false;
    std::uint64_t total = comp.dim() == 0 ? 1 : (std::uint64_t{1} << comp.dim());
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= comp.basis_row((std::size_t)std::countr_zero(i));
        if (!extends_triply_even(c, w)) continue;
        if (first_hit) { *out = w; return true; }
        if (!have || w < *out) { *out = w; have = true; }
    }
    return have;
}

bool is_maximal(const LinearCode& c) {
    Gf2Vector x;
    return !find_extension(c, &x, true);
}

LinearCode maximalize(const LinearCode& c) {
    LinearCode cur = c;
    Gf2Vector best;
    while (find_extension(cur, &best, false)) {
        std::vector<Gf2Vector> rows(cur.basis().rows());
        rows.push_back(best);
        cur = LinearCode(Gf2Matrix(std::move(rows), cur.length()));
    }
    return cur;
}

} // namespace trieven
