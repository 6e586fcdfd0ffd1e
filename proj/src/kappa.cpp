#include "plurikit/kappa.hpp"

#include <algorithm>
#include <sstream>

namespace plurikit {

// ---------------------------------------------------------------------------
// BigRational

BigRational BigRational::from_string(const std::string& s) {
    if (s.empty()) raise(ErrorCode::BadInput, "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        raise(ErrorCode::BadInput, "bad rational literal: " + s);
    if (q.get_den() == 0)
        raise(ErrorCode::BadInput, "zero denominator: " + s);
    q.canonicalize();
    return BigRational(q);
}

std::string BigRational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

namespace {
size_t hash_mpz(const mpz_class& z) {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<size_t>(mpz_sgn(z.get_mpz_t())) + 2);
    size_t n = mpz_size(z.get_mpz_t());
    for (size_t i = 0; i < n; ++i) mix(mpz_getlimbn(z.get_mpz_t(), i));
    return h;
}
}  // namespace

size_t BigRational::hash() const {
    return hash_mpz(v_.get_num()) * 31 + hash_mpz(v_.get_den());
}

BigRational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRational(mpq_class(f));
}

BigRational binomial(long n, unsigned k) {
    // Generalized: n may be negative.
    BigRational r(1);
    for (unsigned i = 0; i < k; ++i)
        r = r * BigRational(n - static_cast<long>(i)) / BigRational(static_cast<long>(i) + 1);
    return r;
}

// ---------------------------------------------------------------------------
// KappaPoly

void KappaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KappaPoly KappaPoly::variable() {
    return KappaPoly(std::vector<BigRational>{BigRational(0), BigRational(1)});
}

const BigRational& KappaPoly::operator[](size_t i) const {
    static const BigRational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

BigRational KappaPoly::leading() const {
    return coeffs_.empty() ? BigRational(0) : coeffs_.back();
}

BigRational KappaPoly::constant_term() const {
    return coeffs_.empty() ? BigRational(0) : coeffs_.front();
}

KappaPoly operator+(const KappaPoly& a, const KappaPoly& b) {
    std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return KappaPoly(std::move(c));
}

KappaPoly operator-(const KappaPoly& a, const KappaPoly& b) {
    std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return KappaPoly(std::move(c));
}

KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
    if (a.is_zero() || b.is_zero()) return KappaPoly();
    std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return KappaPoly(std::move(c));
}

KappaPoly KappaPoly::operator-() const {
    std::vector<BigRational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return KappaPoly(std::move(c));
}

BigRational KappaPoly::eval(const BigRational& x) const {
    BigRational r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

void KappaPoly::divmod(const KappaPoly& d, KappaPoly& q, KappaPoly& r) const {
    if (d.is_zero()) raise(ErrorCode::BadInput, "polynomial division by zero");
    std::vector<BigRational> rem = coeffs_;
    std::vector<BigRational> quo;
    int dd = d.degree();
    BigRational lead = d.leading();
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        BigRational c = rem.back() / lead;
        size_t shift = rem.size() - 1 - dd;
        if (quo.size() < shift + 1) quo.resize(shift + 1, BigRational(0));
        quo[shift] = c;
        for (int i = 0; i <= dd; ++i)
            rem[shift + i] -= c * d.coeffs_[i];
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if (rem.empty()) break;
    }
    q = KappaPoly(std::move(quo));
    r = KappaPoly(std::move(rem));
}

KappaPoly KappaPoly::divide_exact(const KappaPoly& d) const {
    KappaPoly q, r;
    divmod(d, q, r);
    if (!r.is_zero()) raise(ErrorCode::BadInput, "inexact polynomial division");
    return q;
}

BigRational KappaPoly::rational_content() const {
    if (is_zero()) return BigRational(1);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    BigRational content(mpq_class(num_gcd) / mpq_class(den_lcm));
    if (leading().sign() < 0) content = -content;
    return content;
}

namespace {

// Integer-coefficient image of p scaled by the inverse rational content.
std::vector<mpz_class> primitive_int(const KappaPoly& p) {
    BigRational c = p.rational_content();
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        BigRational v = q / c;
        out.push_back(v.numerator());
    }
    return out;
}

void strip(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<mpz_class>& v) {
    if (v.empty()) return;
    mpz_class g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (v.back() < 0) g = -g;
    for (auto& c : v) c /= g;
}

// Pseudo-remainder of a by b (both primitive, b nonzero).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        mpz_class la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= la * b[i];
        strip(a);
        if (a.empty()) break;
        make_primitive(a);
    }
    return a;
}

}  // namespace

KappaPoly KappaPoly::gcd(const KappaPoly& a, const KappaPoly& b) {
    if (a.is_zero() && b.is_zero()) return KappaPoly();
    std::vector<mpz_class> u = primitive_int(a), v = primitive_int(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<mpz_class> r = pseudo_rem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    make_primitive(u);
    std::vector<BigRational> out;
    out.reserve(u.size());
    for (const auto& z : u) out.push_back(BigRational(mpq_class(z)));
    return KappaPoly(std::move(out));
}

std::string KappaPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero()) continue;
        BigRational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one() && i > 0;
        if (!unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

size_t KappaPoly::hash() const {
    size_t h = 14695981039346656037ull;
    for (const auto& c : coeffs_) {
        h ^= c.hash();
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// KappaRational

KappaRational::KappaRational(KappaPoly num, KappaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) raise(ErrorCode::BadInput, "zero denominator polynomial");
    normalize();
}

void KappaRational::normalize() {
    if (num_.is_zero()) {
        den_ = KappaPoly(1);
        return;
    }
    if (den_.degree() > 0 || num_.degree() > 0) {
        KappaPoly g = KappaPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    BigRational c = den_.rational_content();
    den_ = den_.divide_exact(KappaPoly(c));
    num_ = num_.divide_exact(KappaPoly(c));
}

BigRational KappaRational::constant_value() const {
    if (!is_constant()) raise(ErrorCode::BadInput, "not a constant in kappa");
    if (num_.is_zero()) return BigRational(0);
    return num_.constant_term() / den_.constant_term();
}

KappaRational operator+(const KappaRational& a, const KappaRational& b) {
    return KappaRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

KappaRational operator-(const KappaRational& a, const KappaRational& b) {
    return KappaRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

KappaRational operator*(const KappaRational& a, const KappaRational& b) {
    if (a.is_zero() || b.is_zero()) return KappaRational();
    return KappaRational(a.num_ * b.num_, a.den_ * b.den_);
}

KappaRational operator/(const KappaRational& a, const KappaRational& b) {
    if (b.is_zero()) raise(ErrorCode::BadInput, "division by zero in Q(kappa)");
    if (a.is_zero()) return KappaRational();
    return KappaRational(a.num_ * b.den_, a.den_ * b.num_);
}

KappaRational KappaRational::operator-() const {
    KappaRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

KappaRational KappaRational::inverse() const {
    if (is_zero()) raise(ErrorCode::BadInput, "inverse of zero in Q(kappa)");
    return KappaRational(den_, num_);
}

KappaRational KappaRational::pow(int e) const {
    if (e == 0) return KappaRational(1);
    KappaRational base = e > 0 ? *this : inverse();
    unsigned n = static_cast<unsigned>(e > 0 ? e : -e);
    KappaRational r(1);
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1u;
    }
    return r;
}

std::string KappaRational::str(const std::string& var) const {
    if (den_ == KappaPoly(1)) return num_.str(var);
    std::string n = num_.str(var);
    std::string d = den_.str(var);
    if (num_.degree() > 0 || num_.constant_term().sign() < 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

size_t KappaRational::hash() const {
    return num_.hash() * 31 + den_.hash();
}

BigRational eval_at(const KappaRational& f, const BigRational& q) {
    BigRational d = f.den().eval(q);
    if (d.is_zero())
        raise(ErrorCode::PoleAtKappa,
              "denominator vanishes at kappa = " + q.str());
    return f.num().eval(q) / d;
}

KappaRational asc_poch(const KappaRational& x, unsigned r) {
    KappaRational p(1);
    for (unsigned i = 0; i < r; ++i) p *= x + KappaRational(static_cast<long>(i));
    return p;
}

KappaRational desc_poch(const KappaRational& x, unsigned r) {
    KappaRational p(1);
    for (unsigned i = 0; i < r; ++i) p *= x - KappaRational(static_cast<long>(i));
    return p;
}

}  // namespace plurikit
