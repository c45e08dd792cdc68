#ifndef TRIEVEN_GF2_HPP
#define TRIEVEN_GF2_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace trieven {

/// Bit-packed vector over GF(2). Coordinate i lives in limb i/64, bit i%64.
/// Coordinates are 0-based throughout.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t n) : len_(n), limbs_((n + 63) / 64, 0) {}

    static Gf2Vector zeros(std::size_t n) { return Gf2Vector(n); }
    static Gf2Vector ones(std::size_t n) {
        Gf2Vector v(n);
        for (std::size_t i = 0; i < v.limbs_.size(); ++i) v.limbs_[i] = ~0ULL;
        v.trim();
        return v;
    }
    static Gf2Vector from_support(std::size_t n, const std::vector<std::size_t>& support) {
        Gf2Vector v(n);
        for (auto i : support) v.set(i, true);
        return v;
    }
    /// Low word constructor: bit b of `bits` maps to coordinate b. Requires n <= 64.
    static Gf2Vector from_word(std::size_t n, std::uint64_t bits) {
        if (n > 64) throw std::invalid_argument("from_word: length exceeds 64");
        if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("from_word: bits out of range");
        Gf2Vector v(n);
        if (!v.limbs_.empty()) v.limbs_[0] = bits;
        return v;
    }
    static Gf2Vector unit(std::size_t n, std::size_t i) {
        Gf2Vector v(n);
        v.set(i, true);
        return v;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        return (limbs_[i >> 6] >> (i & 63)) & 1ULL;
    }
    void set(std::size_t i, bool b) {
        if (i >= len_) throw std::out_of_range("Gf2Vector::set");
        std::uint64_t mask = 1ULL << (i & 63);
        if (b) limbs_[i >> 6] |= mask; else limbs_[i >> 6] &= ~mask;
    }

    std::uint64_t word(std::size_t w) const { return limbs_[w]; }
    std::size_t word_count() const { return limbs_.size(); }

    int weight() const {
        int w = 0;
        for (auto l : limbs_) w += std::popcount(l);
        return w;
    }
    bool is_zero() const {
        for (auto l : limbs_) if (l) return false;
        return true;
    }
    /// Index of the lowest set coordinate, or size() when zero.
    std::size_t lowest_bit() const {
        for (std::size_t w = 0; w < limbs_.size(); ++w)
            if (limbs_[w]) return w * 64 + std::countr_zero(limbs_[w]);
        return len_;
    }

    Gf2Vector& operator^=(const Gf2Vector& o) {
        check_len(o);
        for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
        return *this;
    }
    Gf2Vector& operator&=(const Gf2Vector& o) {
        check_len(o);
        for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] &= o.limbs_[i];
        return *this;
    }
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
    friend Gf2Vector operator&(Gf2Vector a, const Gf2Vector& b) { return a &= b; }

    bool dot(const Gf2Vector& o) const {
        check_len(o);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) acc ^= limbs_[i] & o.limbs_[i];
        return std::popcount(acc) & 1;
    }

    friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
        return a.len_ == b.len_ && a.limbs_ == b.limbs_;
    }
    /// Order by coordinate 0 first: a < b when at the lowest differing
    /// coordinate a has bit 0. Total order within a fixed length.
    friend bool operator<(const Gf2Vector& a, const Gf2Vector& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            if (a.limbs_[i] != b.limbs_[i]) {
                std::uint64_t diff = a.limbs_[i] ^ b.limbs_[i];
                std::uint64_t low = diff & (~diff + 1);
                return !(a.limbs_[i] & low);
            }
        }
        return false;
    }

    Gf2Vector concat(const Gf2Vector& o) const {
        Gf2Vector r(len_ + o.len_);
        for (std::size_t i = 0; i < len_; ++i) if (get(i)) r.set(i, true);
        for (std::size_t i = 0; i < o.len_; ++i) if (o.get(i)) r.set(len_ + i, true);
        return r;
    }
    /// Projection onto the given coordinates, in the given order.
    Gf2Vector select(const std::vector<std::size_t>& coords) const {
        Gf2Vector r(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (get(coords[i])) r.set(i, true);
        return r;
    }
    /// Image under a coordinate permutation: coordinate i moves to perm[i].
    Gf2Vector permuted(const std::vector<int>& perm) const {
        Gf2Vector r(len_);
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) r.set(static_cast<std::size_t>(perm[i]), true);
        return r;
    }
    Gf2Vector padded(std::size_t extra) const {
        Gf2Vector r(len_ + extra);
        for (std::size_t w = 0; w < limbs_.size(); ++w) r.limbs_[w] = limbs_[w];
        return r;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t w = 0; w < limbs_.size(); ++w) {
            std::uint64_t l = limbs_[w];
            while (l) {
                s.push_back(w * 64 + std::countr_zero(l));
                l &= l - 1;
            }
        }
        return s;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
        return s;
    }

private:
    void check_len(const Gf2Vector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("Gf2Vector: length mismatch");
    }
    void trim() {
        if (len_ % 64 != 0 && !limbs_.empty())
            limbs_.back() &= (1ULL << (len_ % 64)) - 1;
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> limbs_;
};

/// Rectangular matrix over GF(2), a list of equal-length rows.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(std::size_t ncols) : ncols_(ncols) {}
    Gf2Matrix(std::vector<Gf2Vector> rows, std::size_t ncols)
        : ncols_(ncols), rows_(std::move(rows)) {
        for (const auto& r : rows_)
            if (r.size() != ncols_) throw std::invalid_argument("Gf2Matrix: ragged rows");
    }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return ncols_; }
    const Gf2Vector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<Gf2Vector>& rows() const { return rows_; }
    void add_row(Gf2Vector v) {
        if (v.size() != ncols_) throw std::invalid_argument("Gf2Matrix::add_row: length mismatch");
        rows_.push_back(std::move(v));
    }

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
        return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ncols_ = 0;
    std::vector<Gf2Vector> rows_;
};

/// Reduced row-echelon form; zero rows dropped. Also reports pivot columns.
Gf2Matrix rref(const Gf2Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Gf2Matrix& m);

/// Basis of the right null space { x : M x = 0 } as rows of a matrix in RREF.
Gf2Matrix kernel_basis(const Gf2Matrix& m);

/// Reduce v against rows of an RREF matrix with the given pivot columns.
Gf2Vector reduce_mod(const Gf2Vector& v, const Gf2Matrix& rrefm,
                     const std::vector<std::size_t>& pivots);

/// Solve x * M = target for a row vector combination of rows of M, if any.
/// Returns coefficients over the rows of M.
bool solve_row_combination(const Gf2Matrix& m, const Gf2Vector& target,
                           std::vector<std::uint8_t>* coeffs);

} // namespace trieven

#endif
