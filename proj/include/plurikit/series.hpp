#pragma once

#include <functional>

#include "plurikit/bases.hpp"
#include "plurikit/poly.hpp"

namespace plurikit {

// Element of the graded series ring in s_1, s_2, ... truncated at a
// weighted total degree (deg s_a = a) and restricted to the variables
// s_1..s_var_cap. Operators reduce max_weight by the weight they drop,
// so the stored polynomial is always exact up to its own bound.
struct TruncatedSeries {
    Poly poly{Ambient{}};
    int max_weight = 0;
    int var_cap = 0;

    static TruncatedSeries zero(int max_weight, int var_cap);
    static TruncatedSeries one(int max_weight, int var_cap);

    void truncate();
    bool is_zero() const { return poly.is_zero(); }
    TruncatedSeries with_cap(int cap) const;
};

int s_weight(const Monomial& m);

// Case tables for the structure constants of the s-operators.
int epsilon(int m);
int epsilon_plus(int a, int b, int m);
int epsilon_minus(int a, int b, int m);

// L_p = (kappa+1-p) d_p + sum_{a,b>=1} eps+_{a,b}(p) s_{a+b-p} d_a d_b,
// with s_0 = 1 and negative indices dropped; indices above var_cap are
// dropped as well (restriction to finitely many variables).
TruncatedSeries apply_Lp(int p, const TruncatedSeries& f, const KappaCtx& ctx = {});

// M_n = sum_{0<a,b<n, a+b>=n} s_{a+b-n} d_a d_b (ordered pairs).
TruncatedSeries apply_Mn(int n, const TruncatedSeries& f);

// J_nu(s_idx * inner) f = sum_r (s_idx inner)^r f / (r! (nu+1)^(r)).
TruncatedSeries apply_J(const KappaRational& nu, int s_index,
                        const std::function<TruncatedSeries(const TruncatedSeries&)>& inner,
                        const TruncatedSeries& f, const KappaCtx& ctx = {});

// G^(n) = J_{kappa-n}(s_n M_n) ... J_{kappa-2}(s_2 M_2) (g1).
TruncatedSeries build_G(int n, const TruncatedSeries& g1, int max_weight,
                        const KappaCtx& ctx = {});

// Seeds for G^(1): A has coefficients (kappa-1)^(a)/a!, B is the
// expansion of (1 - s_1/2)^(3-2kappa).
TruncatedSeries seed_A(int max_weight, const KappaCtx& ctx = {});
TruncatedSeries seed_B(int max_weight, const KappaCtx& ctx = {});

// Closed form of the weight coefficients of G^(3) with seed A:
// A_{a,b,c} = (a+2b+3c+2kappa-3)^(c) / (kappa-2)^(c) * (b+2c+kappa-1)^(a+b+c).
KappaRational g3_coefficient(int a, int b, int c);

// Commutator identity [L_p, L_q] = -2 sum_{a+b=p+q} eps-_{p,q}(b) d_a L_b,
// checked on every monomial of weighted degree <= max_weight.
bool check_commutation(int p, int q, int max_weight);

// All s-monomials of weighted degree <= max_weight (variables s_1..s_cap).
std::vector<Monomial> s_monomials_up_to(int max_weight, int var_cap);

}  // namespace plurikit
