#include "plurikit/genfun.hpp"

namespace plurikit {

namespace {

Poly det_poly(const std::vector<std::vector<Poly>>& m, std::vector<int> cols,
              size_t row, const Ambient& amb) {
    if (cols.empty()) return Poly::constant(KappaRational(1), amb);
    Poly acc(amb);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
        Poly minor = det_poly(m, rest, row + 1, amb);
        Poly term = entry * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Poly sigma(int n, int i, const Ambient& amb, const Partition* zero_blocks) {
    if (i < 0 || i > n) raise(ErrorCode::BadInput, "sigma index out of range");
    if (i == 0) return Poly::constant(KappaRational(1), amb);

    // M = X tT, with X entries on the diagonal blocks zeroed when requested.
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(amb)));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            Poly entry(amb);
            for (int k = 1; k <= n; ++k) {
                if (zero_blocks && zero_blocks->in_I(r, k)) continue;
                entry = entry + Poly::var(VarId::x(r, k), amb) * Poly::var(VarId::t(c, k), amb);
            }
            M[r - 1][c - 1] = entry;
        }

    Poly acc(amb);
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(subset.size()) == i) {
            std::vector<std::vector<Poly>> sub(i, std::vector<Poly>(i, Poly(amb)));
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < i; ++c) sub[r][c] = M[subset[r]][subset[c]];
            std::vector<int> cols(i);
            for (int c = 0; c < i; ++c) cols[c] = c;
            acc = acc + det_poly(sub, cols, 0, amb);
            return;
        }
        for (int v = next; v < n; ++v) {
            subset.push_back(v);
            rec(v + 1);
            subset.pop_back();
        }
    };
    rec(0);
    return acc;
}

std::map<MultiIndex, Poly> substitute_and_extract(const TruncatedSeries& g, int n,
                                                  const Partition& partition,
                                                  int max_total_degree, bool full_X) {
    if (partition.n() != n) raise(ErrorCode::BadInput, "partition size mismatch");
    Ambient amb{n};
    std::map<VarId, Poly> assignment;
    for (int a = 1; a <= g.var_cap; ++a)
        assignment.emplace(VarId::s(a),
                           a <= n ? sigma(n, a, amb, full_X ? nullptr : &partition)
                                  : Poly(amb));
    Poly expanded = g.poly.substitute(assignment, amb);

    std::map<MultiIndex, Poly> out;
    for (auto& [xmono, tpoly] : expanded.group_by(VarFamily::X)) {
        MultiIndex nu = MultiIndex::from_monomial(n, xmono, VarFamily::X);
        if (nu.total() > max_total_degree) continue;
        out.emplace(nu, std::move(tpoly));
    }
    return out;
}

int uv_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m.exps())
        switch (v.family) {
            case VarFamily::U1:
            case VarFamily::U2:
            case VarFamily::V1:
            case VarFamily::V2:
                d += static_cast<int>(e);
                break;
            default:
                break;
        }
    return d;
}

namespace {

Poly truncate_uv(const Poly& p, int max_degree) {
    Poly out(p.ambient());
    for (const auto& [m, c] : p.terms())
        if (uv_degree(m) <= max_degree) out.add_term(m, c);
    return out;
}

}  // namespace

Poly symmetric_G_base(int n1, int n2) {
    Ambient amb;
    amb.n = n1 + n2;
    amb.n1 = n1;
    amb.n2 = n2;
    amb.m = 1;

    Poly tau11(amb), tau22(amb), tau12(amb), tau21(amb);
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n1; ++j)
            tau11 = tau11 + Poly::var(VarId::t(i, j), amb) *
                                Poly::var(VarId::u1(1, i), amb) *
                                Poly::var(VarId::u2(1, j), amb);
    for (int i = 1; i <= n2; ++i)
        for (int j = 1; j <= n2; ++j)
            tau22 = tau22 + Poly::var(VarId::t(n1 + i, n1 + j), amb) *
                                Poly::var(VarId::v1(1, i), amb) *
                                Poly::var(VarId::v2(1, j), amb);
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n2; ++j) {
            tau12 = tau12 + Poly::var(VarId::t(i, n1 + j), amb) *
                                Poly::var(VarId::u1(1, i), amb) *
                                Poly::var(VarId::v2(1, j), amb);
            tau21 = tau21 + Poly::var(VarId::t(n1 + j, i), amb) *
                                Poly::var(VarId::v1(1, j), amb) *
                                Poly::var(VarId::u2(1, i), amb);
        }

    Poly one = Poly::constant(KappaRational(1), amb);
    Poly diff = tau12 - tau21;
    return one - tau12 - tau21 + (diff * diff).scaled(KappaRational(BigRational(1, 4))) +
           tau11 * tau22;
}

Poly build_symmetric_G(int n1, int n2, int max_degree) {
    if (n1 < n2 || n2 < 1) raise(ErrorCode::BadInput, "need n1 >= n2 >= 1");
    Poly f = symmetric_G_base(n1, n2);
    const Ambient amb = f.ambient();
    Poly one = Poly::constant(KappaRational(1), amb);
    Poly u = one - f;  // every term has uv-degree >= 2

    KappaRational alpha = KappaRational::variable() -
                          KappaRational(BigRational(3, 2));
    Poly acc = one;
    Poly upow = one;
    KappaRational coeff(1);
    for (int r = 1; 2 * r <= max_degree; ++r) {
        upow = truncate_uv(upow * u, max_degree);
        if (upow.is_zero()) break;
        coeff = coeff * (alpha + KappaRational(r - 1)) / KappaRational(r);
        acc = acc + upow.scaled(coeff);
    }
    return acc;
}

KappaRational empirical_descent_constant(const TruncatedSeries& seed, int k,
                                         const KappaCtx& ctx) {
    if (k < 1) raise(ErrorCode::BadInput, "descent constant needs k >= 1");
    int n = std::max(2, k);
    TruncatedSeries g = build_G(n, seed, k, ctx);

    auto component = [&](int weight) {
        Poly p(g.poly.ambient());
        for (const auto& [m, c] : g.poly.terms())
            if (s_weight(m) == weight) p.add_term(m, c);
        return p;
    };
    TruncatedSeries gk{component(k), k, n};
    Poly lower = component(k - 1);
    Poly image = apply_Lp(1, gk, ctx).poly;
    if (lower.is_zero() || image.is_zero())
        raise(ErrorCode::BadInput, "descent constant undefined for this seed");

    auto it = lower.terms().begin();
    KappaRational ratio = image.coefficient(it->first) / it->second;
    if (!(image == lower.scaled(ratio)))
        raise(ErrorCode::BadInput, "image is not proportional to the lower component");
    return ratio;
}

}  // namespace plurikit
