#include "plurikit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace plurikit {

// ---------------------------------------------------------------------------
// VarId / Monomial

const char* family_tag(VarFamily f) {
    switch (f) {
        case VarFamily::T: return "t";
        case VarFamily::S: return "s";
        case VarFamily::X: return "x";
        case VarFamily::U1: return "u1";
        case VarFamily::U2: return "u2";
        case VarFamily::V1: return "v1";
        case VarFamily::V2: return "v2";
        case VarFamily::W: return "w";
    }
    return "?";
}

std::string VarId::str() const {
    std::string tag = family_tag(family);
    if (family == VarFamily::S) return tag + std::to_string(i);
    if (i <= 9 && j <= 9 && tag.size() == 1)
        return tag + std::to_string(i) + std::to_string(j);
    return tag + "_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string VarId::json_key() const {
    std::string tag = family_tag(family);
    if (family == VarFamily::S) return tag + "_" + std::to_string(i);
    return tag + "_" + std::to_string(i) + "_" + std::to_string(j);
}

Monomial::Monomial(std::vector<std::pair<VarId, uint32_t>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t out = 0;
    for (size_t in = 0; in < exps_.size(); ++in) {
        if (exps_[in].second == 0) continue;
        if (out > 0 && exps_[out - 1].first == exps_[in].first)
            exps_[out - 1].second += exps_[in].second;
        else
            exps_[out++] = exps_[in];
    }
    exps_.resize(out);
}

Monomial Monomial::var(VarId v, uint32_t e) {
    Monomial m;
    if (e > 0) m.exps_.push_back({v, e});
    return m;
}

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

uint32_t Monomial::degree_in(VarFamily f) const {
    uint32_t d = 0;
    for (const auto& [v, e] : exps_)
        if (v.family == f) d += e;
    return d;
}

uint32_t Monomial::exponent(VarId v) const {
    for (const auto& [u, e] : exps_)
        if (u == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.exps_.reserve(exps_.size() + o.exps_.size());
    size_t a = 0, b = 0;
    while (a < exps_.size() && b < o.exps_.size()) {
        if (exps_[a].first < o.exps_[b].first)
            m.exps_.push_back(exps_[a++]);
        else if (o.exps_[b].first < exps_[a].first)
            m.exps_.push_back(o.exps_[b++]);
        else {
            m.exps_.push_back({exps_[a].first, exps_[a].second + o.exps_[b].second});
            ++a, ++b;
        }
    }
    while (a < exps_.size()) m.exps_.push_back(exps_[a++]);
    while (b < o.exps_.size()) m.exps_.push_back(o.exps_[b++]);
    return m;
}

Monomial Monomial::divide_by(VarId v) const {
    Monomial m;
    m.exps_.reserve(exps_.size());
    bool found = false;
    for (const auto& [u, e] : exps_) {
        if (u == v) {
            found = true;
            if (e > 1) m.exps_.push_back({u, e - 1});
        } else {
            m.exps_.push_back({u, e});
        }
    }
    if (!found) raise(ErrorCode::BadInput, "monomial not divisible by " + v.str());
    return m;
}

std::pair<Monomial, Monomial> Monomial::split(VarFamily f) const {
    Monomial in, out;
    for (const auto& p : exps_)
        (p.first.family == f ? in.exps_ : out.exps_).push_back(p);
    return {in, out};
}

bool Monomial::uses_only(VarFamily f) const {
    for (const auto& [v, e] : exps_)
        if (v.family != f) return false;
    return true;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.exps_.size() && j < b.exps_.size()) {
        const auto& [va, ea] = a.exps_[i];
        const auto& [vb, eb] = b.exps_[j];
        if (va < vb) return 1;   // a has a positive exponent on an earlier var
        if (vb < va) return -1;
        if (ea != eb) return ea > eb ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.exps_.size()) return 1;
    if (j < b.exps_.size()) return -1;
    return 0;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << v.str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

size_t Monomial::hash() const {
    size_t h = 14695981039346656037ull;
    for (const auto& [v, e] : exps_) {
        h ^= (static_cast<size_t>(v.key()) << 32) | e;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Ambient

void Ambient::check_var(VarId v) const {
    auto fail = [&] {
        raise(ErrorCode::AmbientMismatch,
              "variable " + v.str() + " outside ambient " + str());
    };
    switch (v.family) {
        case VarFamily::S:
            if (v.i < 1) fail();
            break;
        case VarFamily::T:
            if (v.i > n || v.j > n || v.j < 1) fail();
            break;
        case VarFamily::X:
        case VarFamily::W: {
            int cols = kappa_cols ? *kappa_cols : n;
            if (v.i > n || v.j > cols || v.j < 1) fail();
            break;
        }
        case VarFamily::U1:
        case VarFamily::U2:
            if (v.i > m || v.j > n1 || v.j < 1) fail();
            break;
        case VarFamily::V1:
        case VarFamily::V2:
            if (v.i > m || v.j > n2 || v.j < 1) fail();
            break;
    }
}

std::string Ambient::str() const {
    std::ostringstream os;
    os << "{n=" << n;
    if (kappa_cols) os << ", kappa_cols=" << *kappa_cols;
    if (n1 || n2 || m) os << ", n1=" << n1 << ", n2=" << n2 << ", m=" << m;
    os << "}";
    return os.str();
}

int Bidegree::total() const {
    int t = 0;
    for (int x : a) t += x;
    return t;
}

std::string Bidegree::str() const {
    std::ostringstream os;
    auto emit = [&os](const std::vector<int>& v) {
        os << "(";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ")";
    };
    emit(a);
    os << ",";
    emit(b);
    return os.str();
}

// ---------------------------------------------------------------------------
// Poly

void Poly::check_same_ambient(const Poly& a, const Poly& b) {
    if (!(a.ambient_ == b.ambient_))
        raise(ErrorCode::AmbientMismatch,
              "ambient mismatch: " + a.ambient_.str() + " vs " + b.ambient_.str());
}

Poly Poly::constant(const KappaRational& c, const Ambient& ambient) {
    Poly p(ambient);
    p.add_term(Monomial(), c);
    return p;
}

Poly Poly::monomial(const Monomial& m, const KappaRational& c, const Ambient& ambient) {
    Poly p(ambient);
    p.add_term(m, c);
    return p;
}

Poly Poly::var(VarId v, const Ambient& ambient) {
    ambient.check_var(v);
    return monomial(Monomial::var(v), KappaRational(1), ambient);
}

KappaRational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? KappaRational() : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
}

int Poly::degree_in(VarFamily f) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree_in(f)));
    return d;
}

bool Poly::is_homogeneous(int* degree_out) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int md = static_cast<int>(m.total_degree());
        if (d == -1) d = md;
        else if (d != md) return false;
    }
    if (degree_out) *degree_out = d < 0 ? 0 : d;
    return true;
}

void Poly::add_term(const Monomial& m, const KappaRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_same_ambient(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::check_same_ambient(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ambient_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same_ambient(a, b);
    Poly r(a.ambient_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const KappaRational& c) const {
    Poly r(ambient_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(KappaRational(1), ambient_);
    Poly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1u) base = base * base;
    }
    return r;
}

Poly Poly::partial(VarId v) const {
    Poly r(ambient_);
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m.divide_by(v), c * KappaRational(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::substitute(const std::map<VarId, Poly>& assignment,
                      const std::optional<Ambient>& out_ambient) const {
    Ambient target = out_ambient ? *out_ambient : ambient_;
    for (const auto& [v, p] : assignment)
        if (!(p.ambient() == target))
            raise(ErrorCode::AmbientMismatch, "assignment target ambient mismatch");

    std::map<std::pair<uint32_t, uint32_t>, Poly> power_cache;
    auto power_of = [&](VarId v, uint32_t e) -> const Poly& {
        auto key = std::make_pair(v.key(), e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        auto sub = assignment.find(v);
        Poly base = sub != assignment.end() ? sub->second : Poly::var(v, target);
        return power_cache.emplace(key, base.pow(e)).first->second;
    };

    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(c, target);
        for (const auto& [v, e] : m.exps()) term = term * power_of(v, e);
        r = r + term;
    }
    return r;
}

std::map<Bidegree, Poly> Poly::bidegree_split() const {
    require_t_only();
    std::map<Bidegree, Poly> out;
    int n = ambient_.n;
    for (const auto& [m, c] : terms_) {
        Bidegree bd{std::vector<int>(n, 0), std::vector<int>(n, 0)};
        for (const auto& [v, e] : m.exps()) {
            bd.a[v.i - 1] += static_cast<int>(e);
            bd.b[v.j - 1] += static_cast<int>(e);
        }
        auto it = out.find(bd);
        if (it == out.end()) it = out.emplace(bd, Poly(ambient_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

Poly Poly::extract_coefficient(VarFamily f, const Monomial& pattern) const {
    Poly r(ambient_);
    for (const auto& [m, c] : terms_) {
        auto [in, rest] = m.split(f);
        if (in == pattern) r.add_term(rest, c);
    }
    return r;
}

std::map<Monomial, Poly> Poly::group_by(VarFamily f) const {
    std::map<Monomial, Poly> out;
    for (const auto& [m, c] : terms_) {
        auto [in, rest] = m.split(f);
        auto it = out.find(in);
        if (it == out.end()) it = out.emplace(in, Poly(ambient_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Poly Poly::specialize_kappa(const BigRational& q) const {
    Poly r(ambient_);
    for (const auto& [m, c] : terms_) r.add_term(m, KappaRational(eval_at(c, q)));
    return r;
}

bool Poly::uses_only(VarFamily f) const {
    for (const auto& [m, c] : terms_)
        if (!m.uses_only(f)) return false;
    return true;
}

void Poly::require_t_only() const {
    if (!uses_only(VarFamily::T))
        raise(ErrorCode::NonTVariable, "polynomial uses variables outside the T family");
}

std::string Poly::str(const std::string& kappa_var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str(kappa_var);
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find(" - ") == std::string::npos &&
            cs.find(" + ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool needs_parens = cs.find(" + ") != std::string::npos ||
                            cs.find(" - ") != std::string::npos;
        if (m.is_one()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << m.str();
        } else {
            os << (needs_parens ? "(" + cs + ")" : cs) << "*" << m.str();
        }
    }
    return os.str();
}

}  // namespace plurikit
