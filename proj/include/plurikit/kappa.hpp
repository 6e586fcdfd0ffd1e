#pragma once

#include <string>
#include <vector>

#include "plurikit/rational.hpp"

namespace plurikit {

// Polynomial in the formal parameter kappa with rational coefficients,
// stored densely by degree. The zero polynomial has no coefficients;
// otherwise the leading coefficient is nonzero.
class KappaPoly {
public:
    KappaPoly() = default;
    KappaPoly(const BigRational& c) {  // NOLINT: implicit by design
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    KappaPoly(long c) : KappaPoly(BigRational(c)) {}  // NOLINT
    explicit KappaPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static KappaPoly variable();  // the polynomial "kappa"

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigRational& operator[](size_t i) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational leading() const;
    BigRational constant_term() const;

    friend KappaPoly operator+(const KappaPoly& a, const KappaPoly& b);
    friend KappaPoly operator-(const KappaPoly& a, const KappaPoly& b);
    friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b);
    KappaPoly operator-() const;

    friend bool operator==(const KappaPoly& a, const KappaPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const KappaPoly& a, const KappaPoly& b) {
        return !(a == b);
    }

    BigRational eval(const BigRational& x) const;

    // Quotient of an exact division; raises BadInput if the remainder
    // is nonzero.
    KappaPoly divide_exact(const KappaPoly& d) const;

    // Division with remainder over the rationals.
    void divmod(const KappaPoly& d, KappaPoly& q, KappaPoly& r) const;

    // Primitive gcd: integer coefficients, content 1, positive leading
    // coefficient; gcd(0, 0) = 0.
    static KappaPoly gcd(const KappaPoly& a, const KappaPoly& b);

    // Rational c such that (*this)/c has coprime integer coefficients and
    // a positive leading coefficient. Zero polynomial yields 1.
    BigRational rational_content() const;

    std::string str(const std::string& var = "k") const;
    size_t hash() const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

// Element of the rational function field Q(kappa), stored as num/den with
// gcd(num, den) = 1 and den a primitive integer polynomial with positive
// leading coefficient.
class KappaRational {
public:
    KappaRational() : num_(), den_(1) {}
    KappaRational(long c) : num_(c), den_(1) {}  // NOLINT: implicit by design
    KappaRational(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
    KappaRational(const KappaPoly& p) : num_(p), den_(1) { normalize(); }  // NOLINT
    KappaRational(KappaPoly num, KappaPoly den);

    static KappaRational variable() { return KappaRational(KappaPoly::variable()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == KappaPoly(1) && num_ == KappaPoly(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    const KappaPoly& num() const { return num_; }
    const KappaPoly& den() const { return den_; }

    // Value as a plain rational; requires is_constant().
    BigRational constant_value() const;

    friend KappaRational operator+(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator-(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator*(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator/(const KappaRational& a, const KappaRational& b);
    KappaRational operator-() const;

    KappaRational& operator+=(const KappaRational& o) { return *this = *this + o; }
    KappaRational& operator-=(const KappaRational& o) { return *this = *this - o; }
    KappaRational& operator*=(const KappaRational& o) { return *this = *this * o; }

    KappaRational inverse() const;
    KappaRational pow(int e) const;

    friend bool operator==(const KappaRational& a, const KappaRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const KappaRational& a, const KappaRational& b) {
        return !(a == b);
    }

    std::string str(const std::string& var = "k") const;
    size_t hash() const;

private:
    void normalize();

    KappaPoly num_;
    KappaPoly den_;
};

// Exact specialization at kappa = q; raises PoleAtKappa when q is a root
// of the denominator.
BigRational eval_at(const KappaRational& f, const BigRational& q);

// Ascending Pochhammer x(x+1)...(x+r-1); the empty product is 1.
KappaRational asc_poch(const KappaRational& x, unsigned r);

// Descending Pochhammer x(x-1)...(x-r+1); the empty product is 1.
KappaRational desc_poch(const KappaRational& x, unsigned r);

}  // namespace plurikit
