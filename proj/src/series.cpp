#include "plurikit/series.hpp"

namespace plurikit {

int s_weight(const Monomial& m) {
    int w = 0;
    for (const auto& [v, e] : m.exps()) {
        if (v.family != VarFamily::S)
            raise(ErrorCode::BadInput, "series polynomial uses a non-S variable");
        w += static_cast<int>(v.i) * static_cast<int>(e);
    }
    return w;
}

TruncatedSeries TruncatedSeries::zero(int max_weight, int var_cap) {
    return TruncatedSeries{Poly(Ambient{}), max_weight, var_cap};
}

TruncatedSeries TruncatedSeries::one(int max_weight, int var_cap) {
    return TruncatedSeries{Poly::constant(KappaRational(1), Ambient{}), max_weight, var_cap};
}

void TruncatedSeries::truncate() {
    Poly kept(poly.ambient());
    for (const auto& [m, c] : poly.terms()) {
        if (s_weight(m) > max_weight) continue;
        bool over = false;
        for (const auto& [v, e] : m.exps())
            if (static_cast<int>(v.i) > var_cap) over = true;
        if (!over) kept.add_term(m, c);
    }
    poly = std::move(kept);
}

TruncatedSeries TruncatedSeries::with_cap(int cap) const {
    TruncatedSeries g{poly, max_weight, cap};
    g.truncate();
    return g;
}

int epsilon(int m) { return m >= 0 ? 1 : 0; }

int epsilon_plus(int a, int b, int m) {
    if (a >= m && b >= m) return 1;
    if (a < m && b < m) return -1;
    return 0;
}

int epsilon_minus(int a, int b, int m) {
    if (b < m && m <= a) return 1;
    if (a < m && m <= b) return -1;
    return 0;
}

TruncatedSeries apply_Lp(int p, const TruncatedSeries& f, const KappaCtx& ctx) {
    if (p < 1) raise(ErrorCode::BadInput, "L_p needs p >= 1");
    const Ambient& amb = f.poly.ambient();
    Poly out(amb);
    if (p <= f.var_cap)
        out = f.poly.partial(VarId::s(p)).scaled(ctx.k() + KappaRational(1 - p));
    for (int a = 1; a <= f.var_cap; ++a) {
        Poly da = f.poly.partial(VarId::s(a));
        if (da.is_zero()) continue;
        for (int b = 1; b <= f.var_cap; ++b) {
            int eps = epsilon_plus(a, b, p);
            if (eps == 0) continue;
            int e = a + b - p;
            if (e < 0 || e > f.var_cap) continue;
            Poly dd = da.partial(VarId::s(b));
            if (dd.is_zero()) continue;
            if (e > 0) dd = dd * Poly::var(VarId::s(e), amb);
            out = out + (eps > 0 ? dd : -dd);
        }
    }
    TruncatedSeries g{std::move(out), f.max_weight - p, f.var_cap};
    g.truncate();
    return g;
}

TruncatedSeries apply_Mn(int n, const TruncatedSeries& f) {
    if (n < 2) raise(ErrorCode::BadInput, "M_n needs n >= 2");
    const Ambient& amb = f.poly.ambient();
    Poly out(amb);
    for (int a = 1; a < n; ++a) {
        Poly da = f.poly.partial(VarId::s(a));
        if (da.is_zero()) continue;
        for (int b = std::max(1, n - a); b < n; ++b) {
            Poly dd = da.partial(VarId::s(b));
            if (dd.is_zero()) continue;
            int e = a + b - n;
            if (e > 0) dd = dd * Poly::var(VarId::s(e), amb);
            out = out + dd;
        }
    }
    TruncatedSeries g{std::move(out), f.max_weight - n, f.var_cap};
    g.truncate();
    return g;
}

TruncatedSeries apply_J(const KappaRational& nu, int s_index,
                        const std::function<TruncatedSeries(const TruncatedSeries&)>& inner,
                        const TruncatedSeries& f, const KappaCtx& ctx) {
    TruncatedSeries acc = f;
    TruncatedSeries cur = f;
    const Poly s_mult = Poly::var(VarId::s(s_index), f.poly.ambient());
    KappaRational denom(1);
    for (int r = 1; !cur.is_zero() && r <= f.max_weight + 1; ++r) {
        TruncatedSeries next = inner(cur);
        next.poly = next.poly * s_mult;
        next.max_weight = f.max_weight;
        next.truncate();
        cur = std::move(next);
        if (cur.is_zero()) break;
        KappaRational factor = KappaRational(r) * (nu + KappaRational(r));
        if (factor.is_zero())
            raise(ErrorCode::PoleAtKappa, "Pochhammer factor vanishes in J expansion");
        denom *= factor;
        acc.poly = acc.poly + cur.poly.scaled(denom.inverse());
    }
    acc.max_weight = f.max_weight;
    acc.truncate();
    return acc;
}

TruncatedSeries build_G(int n, const TruncatedSeries& g1, int max_weight,
                        const KappaCtx& ctx) {
    if (n < 1) raise(ErrorCode::BadInput, "build_G needs n >= 1");
    if (ctx.specialized() && kappa_in_Z_below(*ctx.value, n))
        raise(ErrorCode::PoleAtKappa,
              "kappa = " + ctx.value->str() + " is an excluded integer below n");
    TruncatedSeries g = g1;
    g.max_weight = max_weight;
    g.var_cap = n;
    g.truncate();
    for (int m = 2; m <= n; ++m) {
        g = apply_J(ctx.k() - KappaRational(m), m,
                    [m](const TruncatedSeries& h) { return apply_Mn(m, h); }, g, ctx);
    }
    return g;
}

TruncatedSeries seed_A(int max_weight, const KappaCtx& ctx) {
    TruncatedSeries g = TruncatedSeries::zero(max_weight, 1);
    Poly p(g.poly.ambient());
    for (int a = 0; a <= max_weight; ++a) {
        KappaRational c = asc_poch(ctx.k() - KappaRational(1), a) / factorial(a);
        p.add_term(Monomial::var(VarId::s(1), a), c);
    }
    g.poly = std::move(p);
    return g;
}

TruncatedSeries seed_B(int max_weight, const KappaCtx& ctx) {
    TruncatedSeries g = TruncatedSeries::zero(max_weight, 1);
    Poly p(g.poly.ambient());
    BigRational pow2(1);
    for (int a = 0; a <= max_weight; ++a) {
        KappaRational c = asc_poch(KappaRational(2) * ctx.k() - KappaRational(3), a) /
                          KappaRational(factorial(a) * pow2);
        p.add_term(Monomial::var(VarId::s(1), a), c);
        pow2 = pow2 * BigRational(2);
    }
    g.poly = std::move(p);
    return g;
}

KappaRational g3_coefficient(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) raise(ErrorCode::BadInput, "negative index");
    KappaRational k = KappaRational::variable();
    KappaRational top = asc_poch(KappaRational(a + 2 * b + 3 * c - 3) + KappaRational(2) * k, c);
    KappaRational bottom = asc_poch(k - KappaRational(2), c);
    KappaRational tail = asc_poch(KappaRational(b + 2 * c - 1) + k, a + b + c);
    return top / bottom * tail;
}

std::vector<Monomial> s_monomials_up_to(int max_weight, int var_cap) {
    std::vector<Monomial> out;
    std::vector<std::pair<VarId, uint32_t>> cur;
    // Variables in decreasing index keep each branch canonical.
    std::function<void(int, int)> rec = [&](int var, int budget) {
        if (var == 0) {
            out.push_back(Monomial(cur));
            return;
        }
        int cap = budget / var;
        for (int e = 0; e <= cap; ++e) {
            if (e > 0) cur.push_back({VarId::s(var), static_cast<uint32_t>(e)});
            rec(var - 1, budget - e * var);
            if (e > 0) cur.pop_back();
        }
    };
    rec(std::min(max_weight, var_cap), max_weight);
    return out;
}

bool check_commutation(int p, int q, int max_weight) {
    if (p < 1 || q < 1) raise(ErrorCode::BadInput, "operators need indices >= 1");
    const int cap = max_weight;  // no index can exceed the total weight
    for (const Monomial& m : s_monomials_up_to(max_weight, cap)) {
        TruncatedSeries f{Poly::monomial(m, KappaRational(1), Ambient{}), max_weight, cap};
        TruncatedSeries lhs1 = apply_Lp(p, apply_Lp(q, f));
        TruncatedSeries lhs2 = apply_Lp(q, apply_Lp(p, f));
        Poly lhs = lhs1.poly - lhs2.poly;

        Poly rhs(Ambient{});
        for (int a = 1; a <= p + q - 1; ++a) {
            int b = p + q - a;
            int eps = epsilon_minus(p, q, b);
            if (eps == 0) continue;
            Poly term = apply_Lp(b, f).poly.partial(VarId::s(a));
            term = term.scaled(KappaRational(2 * eps));
            rhs = rhs + term;
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace plurikit
