#include "trieven/code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace trieven {

std::string WeightEnumerator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= length; ++i) {
        if (i < coeffs.size() && coeffs[i]) {
            if (!first) os << " + ";
            if (coeffs[i] != 1 || i == 0) os << coeffs[i];
            if (i == 1) os << "x";
            else if (i > 1) os << "x^" << i;
            first = false;
        }
    }
    if (first) os << "0";
    return os.str();
}

LinearCode::LinearCode(const Gf2Matrix& gen) : length_(gen.col_count()) {
    basis_ = rref(gen, &pivots_);
}

LinearCode LinearCode::full(std::size_t n) {
    std::vector<Gf2Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(Gf2Vector::unit(n, i));
    return LinearCode(Gf2Matrix(std::move(rows), n));
}

LinearCode LinearCode::repetition(std::size_t n) {
    return LinearCode(Gf2Matrix({Gf2Vector::ones(n)}, n));
}

bool LinearCode::contains_code(const LinearCode& sub) const {
    if (sub.length() != length_) return false;
    for (std::size_t i = 0; i < sub.dim(); ++i)
        if (!contains(sub.basis_row(i))) return false;
    return true;
}

bool operator<(const LinearCode& a, const LinearCode& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!(a.basis_row(i) == b.basis_row(i)))
            return a.basis_row(i) < b.basis_row(i);
    }
    return false;
}

void LinearCode::for_each_word(const std::function<void(const Gf2Vector&)>& fn,
                               std::size_t cap_dim) const {
    std::size_t k = dim();
    if (k > cap_dim)
        throw std::runtime_error("word enumeration cap exceeded (dim " +
                                 std::to_string(k) + " > " + std::to_string(cap_dim) + ")");
    Gf2Vector w(length_);
    fn(w);
    std::uint64_t total = 1ULL << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= basis_.row(std::countr_zero(i));
        fn(w);
    }
}

std::vector<Gf2Vector> LinearCode::words(std::size_t cap_dim) const {
    std::vector<Gf2Vector> out;
    out.reserve(std::size_t(1) << dim());
    for_each_word([&](const Gf2Vector& w) { out.push_back(w); }, cap_dim);
    return out;
}

LinearCode LinearCode::permuted(const std::vector<int>& perm) const {
    std::vector<Gf2Vector> rows;
    rows.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i).permuted(perm));
    return LinearCode(Gf2Matrix(std::move(rows), length_));
}

std::string LinearCode::to_string() const {
    std::ostringstream os;
    os << "[" << length_ << "," << dim() << "] code";
    for (std::size_t i = 0; i < dim(); ++i) os << "\n" << basis_.row(i).to_string();
    return os.str();
}

LinearCode dual(const LinearCode& c) {
    return LinearCode(kernel_basis(c.basis()));
}

LinearCode sum_code(const LinearCode& c, const LinearCode& d) {
    if (c.length() != d.length()) throw std::invalid_argument("sum_code: length mismatch");
    std::vector<Gf2Vector> rows(c.basis().rows());
    for (const auto& r : d.basis().rows()) rows.push_back(r);
    return LinearCode(Gf2Matrix(std::move(rows), c.length()));
}

LinearCode meet_code(const LinearCode& c, const LinearCode& d) {
    return dual(sum_code(dual(c), dual(d)));
}

LinearCode direct_sum(const LinearCode& c, const LinearCode& d) {
    std::vector<Gf2Vector> rows;
    Gf2Vector zc(c.length()), zd(d.length());
    for (const auto& r : c.basis().rows()) rows.push_back(r.concat(zd));
    for (const auto& r : d.basis().rows()) rows.push_back(zc.concat(r));
    return LinearCode(Gf2Matrix(std::move(rows), c.length() + d.length()));
}

LinearCode juxtapose_diag(const LinearCode& c) {
    std::vector<Gf2Vector> rows;
    for (const auto& r : c.basis().rows()) rows.push_back(r.concat(r));
    return LinearCode(Gf2Matrix(std::move(rows), 2 * c.length()));
}

static std::vector<std::size_t> kept_coords(std::size_t n,
                                            const std::vector<std::size_t>& drop) {
    std::vector<bool> del(n, false);
    for (auto i : drop) {
        if (i >= n) throw std::out_of_range("coordinate index out of range");
        del[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!del[i]) keep.push_back(i);
    return keep;
}

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& drop) {
    auto keep = kept_coords(c.length(), drop);
    std::vector<Gf2Vector> rows;
    for (const auto& r : c.basis().rows()) rows.push_back(r.select(keep));
    return LinearCode(Gf2Matrix(std::move(rows), keep.size()));
}

LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& drop) {
    auto keep = kept_coords(c.length(), drop);
    // Subcode vanishing on the dropped coordinates: kernel of the projection
    // of the basis onto those coordinates, expressed over the basis rows.
    std::vector<std::size_t> dropped;
    for (std::size_t i = 0; i < c.length(); ++i)
        if (!std::binary_search(keep.begin(), keep.end(), i)) dropped.push_back(i);
    std::size_t k = c.dim();
    std::vector<Gf2Vector> prows;
    for (auto d : dropped) {
        Gf2Vector col(k);
        for (std::size_t i = 0; i < k; ++i)
            if (c.basis_row(i).get(d)) col.set(i, true);
        prows.push_back(std::move(col));
    }
    Gf2Matrix ker = kernel_basis(Gf2Matrix(std::move(prows), k));
    std::vector<Gf2Vector> rows;
    for (const auto& coeff : ker.rows()) {
        Gf2Vector w(c.length());
        for (std::size_t i = 0; i < k; ++i)
            if (coeff.get(i)) w ^= c.basis_row(i);
        rows.push_back(w.select(keep));
    }
    return LinearCode(Gf2Matrix(std::move(rows), keep.size()));
}

LinearCode pad(const LinearCode& c, std::size_t extra) {
    std::vector<Gf2Vector> rows;
    for (const auto& r : c.basis().rows()) rows.push_back(r.padded(extra));
    return LinearCode(Gf2Matrix(std::move(rows), c.length() + extra));
}

WeightEnumerator weight_enumerator(const LinearCode& c, std::size_t cap_dim) {
    WeightEnumerator we;
    we.length = c.length();
    we.coeffs.assign(c.length() + 1, 0);
    c.for_each_word([&](const Gf2Vector& w) { ++we.coeffs[w.weight()]; }, cap_dim);
    return we;
}

WeightEnumerator macwilliams(const WeightEnumerator& we, std::size_t dim) {
    std::size_t n = we.length;
    // Krawtchouk table K_j(i) = sum_t (-1)^t C(i,t) C(n-i, j-t).
    std::vector<std::vector<__int128>> binom(n + 1, std::vector<__int128>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    WeightEnumerator out;
    out.length = n;
    out.coeffs.assign(n + 1, 0);
    __int128 size = (__int128)1 << dim;
    for (std::size_t j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i >= we.coeffs.size() || we.coeffs[i] == 0) continue;
            __int128 kraw = 0;
            for (std::size_t t = 0; t <= j; ++t) {
                if (t > i || j - t > n - i) continue;
                __int128 term = binom[i][t] * binom[n - i][j - t];
                kraw += (t & 1) ? -term : term;
            }
            acc += (__int128)we.coeffs[i] * kraw;
        }
        if (acc % size != 0 || acc < 0)
            throw std::runtime_error("macwilliams: non-integral coefficient");
        out.coeffs[j] = (std::uint64_t)(acc / size);
    }
    return out;
}

std::uint64_t count_words_of_weight(const LinearCode& c, int w, std::size_t cap_dim) {
    std::uint64_t count = 0;
    c.for_each_word([&](const Gf2Vector& x) { if (x.weight() == w) ++count; }, cap_dim);
    return count;
}

LinearCode parse_hex_rows(const std::vector<std::uint64_t>& values, std::size_t n) {
    std::vector<Gf2Vector> rows;
    for (auto v : values) {
        if (n < 64 && (v >> n) != 0)
            throw std::invalid_argument("parse_hex_rows: value out of range for length");
        rows.push_back(Gf2Vector::from_word(n, v));
    }
    return LinearCode(Gf2Matrix(std::move(rows), n));
}

std::vector<std::uint64_t> emit_hex_rows(const LinearCode& c) {
    if (c.length() > 64) throw std::invalid_argument("emit_hex_rows: length exceeds 64");
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < c.dim(); ++i) out.push_back(c.basis_row(i).word(0));
    return out;
}

LinearCode parse_hex_text(const std::string& text, std::size_t n) {
    std::vector<std::uint64_t> values;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) values.push_back(std::stoull(tok, nullptr, 0));
    return parse_hex_rows(values, n);
}

std::string emit_hex_text(const LinearCode& c) {
    std::ostringstream os;
    for (auto v : emit_hex_rows(c)) {
        os << "0x";
        os.setf(std::ios::hex, std::ios::basefield);
        os << v << "\n";
        os.setf(std::ios::dec, std::ios::basefield);
    }
    return os.str();
}

std::string code_to_json(const LinearCode& c, std::size_t cap_dim) {
    nlohmann::json j;
    j["length"] = c.length();
    j["dim"] = c.dim();
    std::vector<std::string> rows;
    char buf[32];
    for (auto v : emit_hex_rows(c)) {
        std::snprintf(buf, sizeof buf, "0x%06llx", (unsigned long long)v);
        rows.push_back(buf);
    }
    j["rows_hex"] = rows;
    if (c.dim() <= cap_dim) j["weight_enumerator"] = weight_enumerator(c, cap_dim).coeffs;
    return j.dump();
}

LinearCode code_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::size_t n = j.at("length").get<std::size_t>();
    std::vector<std::uint64_t> values;
    for (const auto& s : j.at("rows_hex"))
        values.push_back(std::stoull(s.get<std::string>(), nullptr, 0));
    return parse_hex_rows(values, n);
}

} // namespace trieven
