#ifndef TRIEVEN_CODE_HPP
#define TRIEVEN_CODE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trieven/gf2.hpp"

namespace trieven {

/// Default cap on 2^dim word enumerations.
inline constexpr std::size_t kDefaultEnumCapDim = 24;

/// Weight distribution of a code: coeffs[i] = number of codewords of weight i.
struct WeightEnumerator {
    std::size_t length = 0;
    std::vector<std::uint64_t> coeffs; // size length+1

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
    std::string to_string() const;
};

/// A binary linear code held as its reduced row-echelon basis. The RREF basis
/// is unique per subspace, so two LinearCode values represent the same code
/// iff they compare equal.
class LinearCode {
public:
    LinearCode() = default;
    /// Span of the rows of `gen`.
    LinearCode(const Gf2Matrix& gen);
    explicit LinearCode(std::size_t length) : length_(length), basis_(length) {}

    static LinearCode zero(std::size_t n) { return LinearCode(n); }
    static LinearCode full(std::size_t n);
    static LinearCode repetition(std::size_t n);
    static LinearCode span(std::vector<Gf2Vector> rows, std::size_t n) {
        return LinearCode(Gf2Matrix(std::move(rows), n));
    }

    std::size_t length() const { return length_; }
    std::size_t dim() const { return basis_.row_count(); }
    const Gf2Matrix& basis() const { return basis_; }
    const Gf2Vector& basis_row(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Gf2Vector& v) const {
        return reduce_mod(v, basis_, pivots_).is_zero();
    }
    bool contains_code(const LinearCode& sub) const;
    Gf2Vector reduce(const Gf2Vector& v) const { return reduce_mod(v, basis_, pivots_); }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.length_ == b.length_ && a.basis_ == b.basis_;
    }
    friend bool operator<(const LinearCode& a, const LinearCode& b);

    /// Visit all 2^dim codewords once, in Gray-code order starting from the
    /// zero word (word i+1 = word i + basis row ctz(i+1)). Deterministic.
    void for_each_word(const std::function<void(const Gf2Vector&)>& fn,
                       std::size_t cap_dim = kDefaultEnumCapDim) const;
    std::vector<Gf2Vector> words(std::size_t cap_dim = kDefaultEnumCapDim) const;

    LinearCode permuted(const std::vector<int>& perm) const;

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    Gf2Matrix basis_;
    std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);
LinearCode sum_code(const LinearCode& c, const LinearCode& d);
LinearCode meet_code(const LinearCode& c, const LinearCode& d);
LinearCode direct_sum(const LinearCode& c, const LinearCode& d);
/// {(x|x) : x in C}
LinearCode juxtapose_diag(const LinearCode& c);
/// Delete the coordinates in `drop` (0-based), keep the rest in order.
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& drop);
/// Subcode vanishing on `drop`, then delete those coordinates.
LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& drop);
/// Append `extra` zero coordinates.
LinearCode pad(const LinearCode& c, std::size_t extra);

WeightEnumerator weight_enumerator(const LinearCode& c,
                                   std::size_t cap_dim = kDefaultEnumCapDim);

/// MacWilliams transform: enumerator of the dual of an [n, dim] code with the
/// given enumerator. Exact integer arithmetic; throws if a coefficient does
/// not come out integral (malformed input).
WeightEnumerator macwilliams(const WeightEnumerator& we, std::size_t dim);

std::uint64_t count_words_of_weight(const LinearCode& c, int w,
                                    std::size_t cap_dim = kDefaultEnumCapDim);

/// Hex generator-matrix format: one integer per row, bit b (LSB first) of a
/// row maps to coordinate b+1 (1-based).
LinearCode parse_hex_rows(const std::vector<std::uint64_t>& values, std::size_t n);
std::vector<std::uint64_t> emit_hex_rows(const LinearCode& c);

/// Text form of the hex format: one 0x...... token per line.
LinearCode parse_hex_text(const std::string& text, std::size_t n);
std::string emit_hex_text(const LinearCode& c);

/// JSON record { "length", "dim", "rows_hex", "weight_enumerator" }.
std::string code_to_json(const LinearCode& c,
                         std::size_t cap_dim = kDefaultEnumCapDim);
LinearCode code_from_json(const std::string& json_text);

} // namespace trieven

#endif
