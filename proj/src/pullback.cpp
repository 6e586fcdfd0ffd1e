#include "plurikit/pullback.hpp"

#include <cmath>
#include <mutex>

namespace plurikit {

WeightPair::WeightPair(std::vector<int> k_, std::vector<int> l_)
    : k(std::move(k_)), l(std::move(l_)) {
    auto check = [](const std::vector<int>& w) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 0) raise(ErrorCode::BadInput, "weights must be nonnegative");
            if (i > 0 && w[i] > w[i - 1])
                raise(ErrorCode::BadInput, "weights must be non-increasing");
        }
    };
    check(k);
    check(l);
}

int WeightPair::length(const std::vector<int>& w) {
    int ell = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] > 0) ell = static_cast<int>(i) + 1;
    return ell;
}

int WeightPair::entry_k(int i) const {
    return (i >= 1 && i <= static_cast<int>(k.size())) ? k[i - 1] : 0;
}

int WeightPair::entry_l(int i) const {
    return (i >= 1 && i <= static_cast<int>(l.size())) ? l[i - 1] : 0;
}

int WeightPair::sum_k() const {
    int s = 0;
    for (int v : k) s += v;
    return s;
}

int WeightPair::sum_l() const {
    int s = 0;
    for (int v : l) s += v;
    return s;
}

// ---------------------------------------------------------------------------
// phi and its inverse

namespace {

int w_degree(const Monomial& m) { return static_cast<int>(m.degree_in(VarFamily::W)); }

Poly truncate_w(const Poly& p, int d) {
    Poly out(p.ambient());
    for (const auto& [m, c] : p.terms())
        if (w_degree(m) <= d) out.add_term(m, c);
    return out;
}

std::map<Monomial, Poly> compute_det_inverse(int n, int d) {
    Ambient amb{n};
    // A = W tT; powers truncated at total W-degree d.
    std::vector<std::vector<Poly>> A(n, std::vector<Poly>(n, Poly(amb)));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            Poly e(amb);
            for (int k = 1; k <= n; ++k)
                e = e + Poly::var(VarId::w(r, k), amb) * Poly::var(VarId::t(c, k), amb);
            A[r - 1][c - 1] = e;
        }

    // S = sum_r tr(A^r)/r; det(I - A)^(-kappa) = exp(kappa S).
    Poly S(amb);
    std::vector<std::vector<Poly>> power = A;
    for (int r = 1; r <= d; ++r) {
        if (r > 1) {
            std::vector<std::vector<Poly>> next(n, std::vector<Poly>(n, Poly(amb)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Poly e(amb);
                    for (int k = 0; k < n; ++k) e = e + power[i][k] * A[k][j];
                    next[i][j] = truncate_w(e, d);
                }
            power = std::move(next);
        }
        Poly trace(amb);
        for (int i = 0; i < n; ++i) trace = trace + power[i][i];
        S = S + trace.scaled(KappaRational(BigRational(1, r)));
    }

    Poly E = Poly::constant(KappaRational(1), amb);
    Poly spow = Poly::constant(KappaRational(1), amb);
    KappaRational kappa = KappaRational::variable();
    KappaRational coeff(1);
    for (int m = 1; m <= d; ++m) {
        spow = truncate_w(spow * S, d);
        if (spow.is_zero()) break;
        coeff = coeff * kappa / KappaRational(m);
        E = E + spow.scaled(coeff);
    }

    std::map<Monomial, Poly> grouped = E.group_by(VarFamily::W);
    return grouped;
}

std::mutex g_det_mutex;
std::map<std::pair<int, int>, std::map<Monomial, Poly>> g_det_cache;

}  // namespace

const std::map<Monomial, Poly>& det_inverse_coefficients(int n, int d) {
    std::lock_guard lock(g_det_mutex);
    auto key = std::make_pair(n, d);
    auto it = g_det_cache.find(key);
    if (it == g_det_cache.end())
        it = g_det_cache.emplace(key, compute_det_inverse(n, d)).first;
    return it->second;
}

namespace {

void check_t_homogeneous(const Poly& p, int d) {
    for (const auto& [m, c] : p.terms())
        if (static_cast<int>(m.degree_in(VarFamily::T)) != d)
            raise(ErrorCode::NonHomogeneous,
                  "polynomial is not homogeneous of degree " + std::to_string(d) +
                      " in the T family");
}

BigRational multiindex_factorial(const MultiIndex& nu) {
    BigRational f(1);
    for (int v : nu.entries()) f = f * factorial(static_cast<unsigned>(v));
    return f;
}

}  // namespace

Poly phi_kappa(const Poly& p, int d) {
    if (p.is_zero()) return p;
    check_t_homogeneous(p, d);
    const int n = p.ambient().n;
    const auto& table = det_inverse_coefficients(n, d);

    KappaRational sign(d % 2 == 0 ? 1 : -1);
    Poly out(p.ambient());
    for (const auto& [m, c] : p.terms()) {
        auto [tpart, rest] = m.split(VarFamily::T);
        MultiIndex nu = MultiIndex::from_monomial(n, tpart, VarFamily::T);
        auto it = table.find(nu.to_monomial(VarFamily::W));
        if (it == table.end()) continue;
        KappaRational scale = c * KappaRational(multiindex_factorial(nu)) * sign;
        for (const auto& [em, ec] : it->second.terms())
            out.add_term(em * rest, ec * scale);
    }
    return out;
}

Poly phi_inverse(const Poly& q, int d, const std::map<MultiIndex, Poly>& gen_coeffs,
                 const KappaRational& c_d) {
    if (q.is_zero()) return q;
    check_t_homogeneous(q, d);
    q.require_t_only();
    if (c_d.is_zero()) raise(ErrorCode::PoleAtKappa, "normalization constant vanishes");
    const int n = q.ambient().n;

    KappaRational sign(d % 2 == 0 ? 1 : -1);
    Poly out(q.ambient());
    for (const auto& [m, c] : q.terms()) {
        MultiIndex nu = MultiIndex::from_monomial(n, m, VarFamily::T);
        auto it = gen_coeffs.find(nu);
        if (it == gen_coeffs.end() || it->second.is_zero())
            raise(ErrorCode::BadInput, "generating coefficients missing index " + nu.csv());
        KappaRational scale = c * KappaRational(multiindex_factorial(nu)) * sign / c_d;
        out = out + it->second.scaled(scale);
    }
    return out;
}

Poly phi_inverse(const Poly& q, int d, const TruncatedSeries& g, const KappaRational& c_d) {
    const int n = q.ambient().n;
    auto coeffs = substitute_and_extract(g, n, Partition::trivial(n), d, /*full_X=*/true);
    return phi_inverse(q, d, coeffs, c_d);
}

bool check_phi_derivative_identity(const Poly& p, int i, int j) {
    int d = 0;
    if (!p.is_homogeneous(&d)) raise(ErrorCode::NonHomogeneous, "p must be homogeneous");
    if (p.is_zero() || d == 0) return true;
    Poly lhs = phi_kappa(apply_D(i, j, p), d - 1);
    Poly rhs = -phi_kappa(p, d).partial(VarId::t(j, i));
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Constants

PiSymbolic c_mn(int m, int n, const std::optional<BigRational>& s, const WeightPair& w) {
    if (m < 1 || n < 1) raise(ErrorCode::BadInput, "c_mn needs m, n >= 1");
    if (WeightPair::length(w.k) > n || WeightPair::length(w.l) > n)
        raise(ErrorCode::BadInput, "weight length exceeds n");
    KappaRational sv = s ? KappaRational(*s) : KappaRational::variable();
    KappaRational prod(1);
    for (int i = 1; i <= n; ++i) {
        KappaRational base = sv + KappaRational(w.entry_k(i) + w.entry_l(i) + n + m - i);
        KappaRational factor = desc_poch(base, static_cast<unsigned>(m));
        if (factor.is_zero())
            raise(ErrorCode::PoleAtS, "Pochhammer factor vanishes at s = " +
                                          (s ? s->str() : std::string("?")));
        prod *= factor;
    }
    return PiSymbolic{prod.inverse(), n * m};
}

BigRational highest_weight_norm(const WeightPair& w) {
    auto one_side = [](const std::vector<int>& weight) {
        int ell = WeightPair::length(weight);
        BigRational num(1), den(1);
        for (int i = 1; i <= ell; ++i)
            num = num * factorial(static_cast<unsigned>(weight[i - 1] + ell - i));
        for (int i = 1; i <= ell; ++i)
            for (int j = i + 1; j <= ell; ++j)
                den = den * BigRational(weight[i - 1] - weight[j - 1] + j - i);
        return num / den;
    };
    return one_side(w.k) * one_side(w.l);
}

PullbackConstant c_pullback(int mu, int m, int n2, const std::vector<WeightPair>& weights) {
    if (m < 1 || n2 < 1) raise(ErrorCode::BadInput, "c_pullback needs m, n2 >= 1");
    if (static_cast<int>(weights.size()) != m)
        raise(ErrorCode::BadInput, "need one weight pair per infinite place");
    long abs_k = 0, abs_l = 0;
    for (const auto& w : weights) {
        if (WeightPair::length(w.k) > n2 || WeightPair::length(w.l) > n2)
            raise(ErrorCode::BadInput, "weight length exceeds n2");
        if (WeightPair::length(w.k) + WeightPair::length(w.l) > mu)
            raise(ErrorCode::BadInput, "weight lengths exceed mu");
        abs_k += w.sum_k();
        abs_l += w.sum_l();
    }
    if (mu < n2) raise(ErrorCode::BadInput, "mu must be at least n2");

    PullbackConstant c;
    c.two_exp = -2L * m * n2 * n2 - static_cast<long>(m) * (n2 - 2) * mu + abs_k + abs_l;
    c.pi_exp = static_cast<long>(m) * n2 * n2;
    c.rational = BigRational(1);
    for (const auto& w : weights) {
        c.rational = c.rational * highest_weight_norm(w);
        for (int i = 1; i <= n2; ++i) {
            BigRational poch(1);
            for (int r = 0; r < n2; ++r)
                poch = poch * BigRational(w.entry_k(i) + w.entry_l(i) + mu - i - r);
            if (poch.is_zero())
                raise(ErrorCode::ZeroPochhammer,
                      "descending Pochhammer vanishes at place factor i = " +
                          std::to_string(i));
            c.rational = c.rational / poch;
        }
    }
    return c;
}

double disk_integral_oracle(int m, int n, const BigRational& s, const WeightPair& w,
                            int mesh) {
    if (n != 1) raise(ErrorCode::BadInput, "oracle implemented for n = 1 only");
    if (m < 1 || mesh < 16) raise(ErrorCode::BadInput, "bad oracle parameters");
    double sigma = s.to_double() + w.entry_k(1) + w.entry_l(1);
    if (sigma <= -1.0) raise(ErrorCode::BadInput, "integral diverges");

    // Volume of the complex m-ball via the radial profile:
    // |S^{2m-1}| = 2 pi^m / (m-1)!.
    double surface = 2.0 * std::pow(M_PI, m);
    for (int i = 2; i < m; ++i) surface /= i;

    double h = 1.0 / mesh;
    double sum = 0.0;
    for (int i = 0; i < mesh; ++i) {
        double r = (i + 0.5) * h;
        sum += std::pow(1.0 - r * r, sigma) * std::pow(r, 2 * m - 1);
    }
    return surface * sum * h;
}

// ---------------------------------------------------------------------------
// Two-block construction

Poly bideterminant(const std::vector<std::vector<Poly>>& block,
                   const std::vector<int>& weight, const Ambient& amb) {
    const int size = static_cast<int>(block.size());
    int ell = WeightPair::length(weight);
    if (ell > size) raise(ErrorCode::BadInput, "weight longer than block size");

    auto corner_minor = [&](int i) {
        std::vector<std::vector<Poly>> sub(i, std::vector<Poly>(i, Poly(amb)));
        for (int r = 0; r < i; ++r)
            for (int c = 0; c < i; ++c) sub[r][c] = block[r][c];
        // Laplace expansion along the first row.
        std::function<Poly(const std::vector<std::vector<Poly>>&, std::vector<int>, size_t)>
            det = [&](const std::vector<std::vector<Poly>>& mat, std::vector<int> cols,
                      size_t row) -> Poly {
            if (cols.empty()) return Poly::constant(KappaRational(1), amb);
            Poly acc(amb);
            for (size_t t = 0; t < cols.size(); ++t) {
                if (mat[row][cols[t]].is_zero()) continue;
                std::vector<int> rest;
                for (size_t u = 0; u < cols.size(); ++u)
                    if (u != t) rest.push_back(cols[u]);
                Poly term = mat[row][cols[t]] * det(mat, rest, row + 1);
                acc = (t % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
        std::vector<int> cols(i);
        for (int c = 0; c < i; ++c) cols[c] = c;
        return det(sub, cols, 0);
    };

    Poly out = Poly::constant(KappaRational(1), amb);
    for (int i = 1; i <= ell; ++i) {
        int e = weight[i - 1] - (i < static_cast<int>(weight.size()) ? weight[i] : 0);
        if (e > 0) out = out * corner_minor(i).pow(static_cast<unsigned>(e));
    }
    return out;
}

Poly build_diff2_operator(int n1, int n2, const WeightPair& w) {
    if (n1 < n2 || n2 < 1) raise(ErrorCode::BadInput, "need n1 >= n2 >= 1");
    int ellk = WeightPair::length(w.k), elll = WeightPair::length(w.l);
    if (ellk > n2 || elll > n2) raise(ErrorCode::BadInput, "weight length exceeds n2");
    const int m = std::max(1, std::max(ellk, elll));
    const int d = w.sum_k() + w.sum_l();

    Ambient amb0{2 * m};
    auto block = [&](bool upper) {
        std::vector<std::vector<Poly>> b(m, std::vector<Poly>(m, Poly(amb0)));
        for (int r = 1; r <= m; ++r)
            for (int c = 1; c <= m; ++c)
                b[r - 1][c - 1] = upper ? Poly::var(VarId::t(r, m + c), amb0)
                                        : Poly::var(VarId::t(m + r, c), amb0);
        return b;
    };
    Poly q0 = bideterminant(block(true), w.k, amb0) * bideterminant(block(false), w.l, amb0);

    KappaCtx ctx;
    KappaRational kappa = KappaRational::variable();
    KappaRational c_d = asc_poch(kappa, d) * asc_poch(kappa - KappaRational(1), d);
    TruncatedSeries g = build_G(2 * m, seed_A(d, ctx), d, ctx);
    Poly p0 = phi_inverse(q0, d, g, c_d);

    Ambient out_amb;
    out_amb.n = n1 + n2;
    out_amb.n1 = n1;
    out_amb.n2 = n2;
    out_amb.m = m;

    // Entry (u, v) of U1 T tU2 for the block-diagonal rectangular U_i.
    auto u_entry = [&](int which, int r, int alpha) -> std::optional<VarId> {
        if (r <= m && alpha <= n1)
            return VarId::make(which == 1 ? VarFamily::U1 : VarFamily::U2, r, alpha);
        if (r > m && alpha > n1)
            return VarId::make(which == 1 ? VarFamily::V1 : VarFamily::V2, r - m, alpha - n1);
        return std::nullopt;
    };
    std::map<VarId, Poly> assignment;
    const int n = n1 + n2;
    for (int u = 1; u <= 2 * m; ++u)
        for (int v = 1; v <= 2 * m; ++v) {
            Poly e(out_amb);
            for (int alpha = 1; alpha <= n; ++alpha) {
                auto left = u_entry(1, u, alpha);
                if (!left) continue;
                for (int beta = 1; beta <= n; ++beta) {
                    auto right = u_entry(2, v, beta);
                    if (!right) continue;
                    e = e + Poly::var(*left, out_amb) *
                                Poly::var(VarId::t(alpha, beta), out_amb) *
                                Poly::var(*right, out_amb);
                }
            }
            assignment.emplace(VarId::t(u, v), e);
        }
    return p0.substitute(assignment, out_amb);
}

}  // namespace plurikit
