#include "plurikit/weyl.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace plurikit {

OpKind op_kind_from_string(const std::string& s) {
    if (s == "D") return OpKind::D;
    if (s == "E") return OpKind::E;
    if (s == "Ep" || s == "Eprime" || s == "E'") return OpKind::Eprime;
    if (s == "F") return OpKind::F;
    raise(ErrorCode::BadInput, "unknown operator kind: " + s);
}

Poly apply_D(int i, int j, const Poly& p, const KappaRational& kappa) {
    p.require_t_only();
    const int n = p.ambient().n;
    Poly out = p.partial(VarId::t(i, j)).scaled(kappa);
    for (int k = 1; k <= n; ++k) {
        Poly dkj = p.partial(VarId::t(k, j));
        if (dkj.is_zero()) continue;
        for (int l = 1; l <= n; ++l) {
            Poly second = dkj.partial(VarId::t(i, l));
            if (second.is_zero()) continue;
            out = out + Poly::var(VarId::t(k, l), p.ambient()) * second;
        }
    }
    return out;
}

Poly apply_E(int i, int j, const Poly& p, const KappaRational& kappa) {
    p.require_t_only();
    const int n = p.ambient().n;
    Poly out(p.ambient());
    for (int s = 1; s <= n; ++s) {
        Poly d = p.partial(VarId::t(j, s));
        if (d.is_zero()) continue;
        out = out + Poly::var(VarId::t(i, s), p.ambient()) * d;
    }
    if (i == j) out = out + p.scaled(kappa / KappaRational(2));
    return out;
}

Poly apply_Eprime(int i, int j, const Poly& p, const KappaRational& kappa) {
    p.require_t_only();
    const int n = p.ambient().n;
    Poly out(p.ambient());
    for (int s = 1; s <= n; ++s) {
        Poly d = p.partial(VarId::t(s, j));
        if (d.is_zero()) continue;
        out = out + Poly::var(VarId::t(s, i), p.ambient()) * d;
    }
    if (i == j) out = out + p.scaled(kappa / KappaRational(2));
    return out;
}

Poly apply_F(int i, int j, const Poly& p) {
    p.require_t_only();
    return Poly::var(VarId::t(i, j), p.ambient()) * p;
}

Poly apply_op(OpKind kind, int i, int j, const Poly& p, const KappaRational& kappa) {
    switch (kind) {
        case OpKind::D: return apply_D(i, j, p, kappa);
        case OpKind::E: return apply_E(i, j, p, kappa);
        case OpKind::Eprime: return apply_Eprime(i, j, p, kappa);
        case OpKind::F: return apply_F(i, j, p);
    }
    raise(ErrorCode::BadInput, "bad operator kind");
}

Poly theta(const Poly& q) {
    q.require_t_only();
    Poly out(q.ambient());
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::pair<VarId, uint32_t>> exps;
        exps.reserve(m.exps().size());
        for (const auto& [v, e] : m.exps()) exps.push_back({VarId::t(v.j, v.i), e});
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

namespace {

// One rewrite step: e(t_ij * Q) = e((D_ji + kappa delta_ij) Q).
KappaRational reduce_monomial(const Monomial& m, const Poly::TermMap::key_compare&,
                              const Ambient& amb, const KappaRational& kappa,
                              const std::function<size_t(const Monomial&)>& choose,
                              std::map<Monomial, KappaRational>* memo);

KappaRational reduce_poly(const Poly& p, const KappaRational& kappa,
                          const std::function<size_t(const Monomial&)>& choose,
                          std::map<Monomial, KappaRational>* memo) {
    KappaRational acc;
    for (const auto& [m, c] : p.terms())
        acc += c * reduce_monomial(m, {}, p.ambient(), kappa, choose, memo);
    return acc;
}

KappaRational reduce_monomial(const Monomial& m, const Poly::TermMap::key_compare&,
                              const Ambient& amb, const KappaRational& kappa,
                              const std::function<size_t(const Monomial&)>& choose,
                              std::map<Monomial, KappaRational>* memo) {
    if (m.is_one()) return KappaRational(1);
    if (memo) {
        auto it = memo->find(m);
        if (it != memo->end()) return it->second;
    }
    size_t pick = choose ? choose(m) : 0;
    if (pick >= m.exps().size()) pick = 0;
    VarId v = m.exps()[pick].first;
    Monomial rest = m.divide_by(v);
    Poly q = Poly::monomial(rest, KappaRational(1), amb);
    KappaRational val = reduce_poly(apply_D(v.j, v.i, q, kappa), kappa, choose, memo);
    if (v.i == v.j)
        val += kappa * reduce_monomial(rest, {}, amb, kappa, choose, memo);
    if (memo) memo->emplace(m, val);
    return val;
}

// Global memo for the symbolic case, keyed per ambient size.
std::shared_mutex g_memo_mutex;
std::map<int, std::map<Monomial, KappaRational>> g_memo;

KappaRational e_kappa_symbolic(const Poly& p) {
    // Fast path: all monomials already memoized.
    {
        std::shared_lock lock(g_memo_mutex);
        auto table = g_memo.find(p.ambient().n);
        if (table != g_memo.end()) {
            KappaRational acc;
            bool all = true;
            for (const auto& [m, c] : p.terms()) {
                auto it = table->second.find(m);
                if (it == table->second.end()) {
                    all = false;
                    break;
                }
                acc += c * it->second;
            }
            if (all) return acc;
        }
    }
    std::unique_lock lock(g_memo_mutex);
    return reduce_poly(p, KappaRational::variable(), nullptr, &g_memo[p.ambient().n]);
}

}  // namespace

KappaRational e_kappa(const Poly& p, const KappaRational& kappa) {
    p.require_t_only();
    if (kappa == KappaRational::variable()) return e_kappa_symbolic(p);
    std::map<Monomial, KappaRational> local;
    return reduce_poly(p, kappa, nullptr, &local);
}

KappaRational e_kappa_with_choice(const Poly& p,
                                  const std::function<size_t(const Monomial&)>& choose,
                                  const KappaRational& kappa) {
    p.require_t_only();
    return reduce_poly(p, kappa, choose, nullptr);
}

KappaRational inner_product(const Poly& p, const Poly& q, const KappaRational& kappa) {
    return e_kappa(p * theta(q), kappa);
}

Poly apply_adjoint(OpKind kind, int i, int j, const Poly& q, const KappaRational& kappa) {
    switch (kind) {
        case OpKind::D:
            return apply_D(j, i, q, kappa) - apply_E(i, j, q, kappa) -
                   apply_Eprime(j, i, q, kappa) + apply_F(i, j, q);
        case OpKind::E:
            return apply_F(j, i, q) - apply_Eprime(i, j, q, kappa);
        case OpKind::Eprime:
            return apply_F(i, j, q) - apply_E(i, j, q, kappa);
        case OpKind::F:
            return apply_F(j, i, q);
    }
    raise(ErrorCode::BadInput, "bad operator kind");
}

bool check_adjoint(OpKind kind, int i, int j, const Poly& p, const Poly& q,
                   const KappaRational& kappa) {
    KappaRational lhs = inner_product(apply_op(kind, i, j, p, kappa), q, kappa);
    KappaRational rhs = inner_product(p, apply_adjoint(kind, i, j, q, kappa), kappa);
    return lhs == rhs;
}

bool tilde_compat_check(const Poly& p, int n, int kappa_int) {
    if (kappa_int < 1) raise(ErrorCode::BadInput, "kappa_int must be positive");
    p.require_t_only();
    BigRational kq(kappa_int);

    Ambient amb = p.ambient();
    Ambient wide = amb;
    wide.kappa_cols = kappa_int;

    std::map<VarId, Poly> assignment;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Poly sum(wide);
            for (int s = 1; s <= kappa_int; ++s)
                sum = sum + Poly::var(VarId::x(i, s), wide) * Poly::var(VarId::w(j, s), wide);
            assignment.emplace(VarId::t(i, j), sum);
        }

    Poly tilde_p = p.specialize_kappa(kq).substitute(assignment, wide);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Poly lhs(wide);
            for (int s = 1; s <= kappa_int; ++s)
                lhs = lhs + tilde_p.partial(VarId::x(i, s)).partial(VarId::w(j, s));
            Poly rhs = apply_D(i, j, p).specialize_kappa(kq).substitute(assignment, wide);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace plurikit
