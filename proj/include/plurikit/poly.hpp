#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plurikit/kappa.hpp"
#include "plurikit/varid.hpp"

namespace plurikit {

// Declared dimensions of the variable families a polynomial may use.
//   T, X, W: n x n (X and W switch to n x kappa_cols when that is set),
//   S: unbounded single index,
//   U1/U2: m x n1, V1/V2: m x n2.
struct Ambient {
    int n = 0;
    std::optional<int> kappa_cols;
    int n1 = 0;
    int n2 = 0;
    int m = 0;

    friend bool operator==(const Ambient& a, const Ambient& b) {
        return a.n == b.n && a.kappa_cols == b.kappa_cols && a.n1 == b.n1 &&
               a.n2 == b.n2 && a.m == b.m;
    }

    void check_var(VarId v) const;  // raises AmbientMismatch
    std::string str() const;
};

// Row/column homogeneity type of T-monomials.
struct Bidegree {
    std::vector<int> a;
    std::vector<int> b;

    friend bool operator==(const Bidegree& x, const Bidegree& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const Bidegree& x, const Bidegree& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    int total() const;
    std::string str() const;
};

// Sparse multivariate polynomial over Q(kappa). Terms are kept in
// lexicographic monomial order and never store zero coefficients.
class Poly {
public:
    using TermMap = std::map<Monomial, KappaRational>;

    Poly() = default;
    explicit Poly(Ambient ambient) : ambient_(std::move(ambient)) {}

    static Poly constant(const KappaRational& c, const Ambient& ambient);
    static Poly monomial(const Monomial& m, const KappaRational& c, const Ambient& ambient);
    static Poly var(VarId v, const Ambient& ambient);

    const Ambient& ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    KappaRational coefficient(const Monomial& m) const;
    KappaRational constant_term() const { return coefficient(Monomial()); }

    int total_degree() const;  // -1 for zero
    int degree_in(VarFamily f) const;
    bool is_homogeneous(int* degree_out = nullptr) const;

    void add_term(const Monomial& m, const KappaRational& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const KappaRational& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Formal partial derivative.
    Poly partial(VarId v) const;

    // Ring homomorphism determined by the assignment; unassigned variables
    // pass through unchanged. The result lives in out_ambient when given.
    Poly substitute(const std::map<VarId, Poly>& assignment,
                    const std::optional<Ambient>& out_ambient = std::nullopt) const;

    // Decomposition of a T-polynomial by (row-sum, column-sum) type.
    std::map<Bidegree, Poly> bidegree_split() const;

    // Coefficient of the exact exponent pattern in the given family,
    // as a polynomial in the remaining variables.
    Poly extract_coefficient(VarFamily f, const Monomial& pattern) const;

    // All coefficients with respect to the given family at once.
    std::map<Monomial, Poly> group_by(VarFamily f) const;

    // Coefficients evaluated at kappa = q (raises PoleAtKappa at poles).
    Poly specialize_kappa(const BigRational& q) const;

    bool uses_only(VarFamily f) const;
    void require_t_only() const;  // raises NonTVariable

    std::string str(const std::string& kappa_var = "k") const;

private:
    static void check_same_ambient(const Poly& a, const Poly& b);

    Ambient ambient_;
    TermMap terms_;
};

}  // namespace plurikit
