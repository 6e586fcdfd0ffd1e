#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "plurikit/error.hpp"

namespace plurikit {

// Typed variable families. T is the main matrix of variables, S the series
// variables, X the generating-function markers, U/V the vector families of
// the two-block construction, W the auxiliary matrix of the phi map.
// Enum order fixes the global variable ordering.
enum class VarFamily : uint8_t { T = 0, S, X, U1, U2, V1, V2, W };

const char* family_tag(VarFamily f);

struct VarId {
    VarFamily family;
    uint16_t i;  // row (or the single index for S)
    uint16_t j;  // column (0 for S)

    static VarId t(int i, int j) { return make(VarFamily::T, i, j); }
    static VarId s(int a) { return make(VarFamily::S, a, 0); }
    static VarId x(int i, int j) { return make(VarFamily::X, i, j); }
    static VarId w(int i, int j) { return make(VarFamily::W, i, j); }
    static VarId u1(int r, int c) { return make(VarFamily::U1, r, c); }
    static VarId u2(int r, int c) { return make(VarFamily::U2, r, c); }
    static VarId v1(int r, int c) { return make(VarFamily::V1, r, c); }
    static VarId v2(int r, int c) { return make(VarFamily::V2, r, c); }

    static VarId make(VarFamily f, int i, int j) {
        if (i < 1 || i > 1023 || j < 0 || j > 1023)
            raise(ErrorCode::BadInput, "variable index out of range");
        return VarId{f, static_cast<uint16_t>(i), static_cast<uint16_t>(j)};
    }

    uint32_t key() const {
        return (static_cast<uint32_t>(family) << 20) |
               (static_cast<uint32_t>(i) << 10) | j;
    }

    friend bool operator==(const VarId& a, const VarId& b) { return a.key() == b.key(); }
    friend bool operator<(const VarId& a, const VarId& b) { return a.key() < b.key(); }

    // Compact form ("t12") when both indices are single digits, underscore
    // form ("t_10_2") otherwise; S always prints as "s<a>".
    std::string str() const;
    // JSON key form: "t_1_2", "s_3", "u1_1_2".
    std::string json_key() const;
};

// Sparse exponent vector, sorted by variable, no zero exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarId, uint32_t>> exps);

    static Monomial var(VarId v, uint32_t e = 1);

    bool is_one() const { return exps_.empty(); }
    uint32_t total_degree() const;
    uint32_t degree_in(VarFamily f) const;
    uint32_t exponent(VarId v) const;
    const std::vector<std::pair<VarId, uint32_t>>& exps() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    // Divides by v^1; requires the exponent to be positive.
    Monomial divide_by(VarId v) const;

    // Split into the part supported on family f and the remainder.
    std::pair<Monomial, Monomial> split(VarFamily f) const;
    bool uses_only(VarFamily f) const;

    // Lexicographic order with respect to the global variable order:
    // on the first variable where exponents differ, the larger exponent
    // makes the larger monomial.
    static int compare(const Monomial& a, const Monomial& b);
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return compare(a, b) < 0;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

    std::string str() const;
    size_t hash() const;

private:
    std::vector<std::pair<VarId, uint32_t>> exps_;
};

}  // namespace plurikit
