#pragma once

#include "plurikit/genfun.hpp"

namespace plurikit {

// Pair of dominant integral weights (k, l): non-increasing nonnegative
// entries, trailing zeros allowed.
struct WeightPair {
    std::vector<int> k;
    std::vector<int> l;

    WeightPair(std::vector<int> k_, std::vector<int> l_);
    static int length(const std::vector<int>& w);  // index of last nonzero
    int entry_k(int i) const;                      // 1-based, 0 past the end
    int entry_l(int i) const;
    int sum_k() const;
    int sum_l() const;
};

// Exact scalar of the form rational * pi^pi_exp, with the rational part a
// rational function of one formal parameter (kappa or s).
struct PiSymbolic {
    KappaRational rational;
    int pi_exp = 0;
};

// Exact constant 2^two_exp * pi^pi_exp * rational.
struct PullbackConstant {
    long two_exp = 0;
    long pi_exp = 0;
    BigRational rational;
};

// Coefficients of the expansion of det(I - W tT)^(-kappa) up to total
// degree d in W, keyed by the W exponent pattern; cached per (n, d).
const std::map<Monomial, Poly>& det_inverse_coefficients(int n, int d);

// phi(P) = (-1)^d (P(d_W) det(I - W tT)^(-kappa)) at W = 0, for P
// homogeneous of degree d in the T family (other families ride along
// as scalars).
Poly phi_kappa(const Poly& p, int d);

// Inverse map: P = ((-1)^d / c_d) Q(d_X) G(X, T) at X = 0, given the
// unnormalized generating coefficients over the full index set.
Poly phi_inverse(const Poly& q, int d, const std::map<MultiIndex, Poly>& gen_coeffs,
                 const KappaRational& c_d);
// Convenience overload that extracts the coefficients from the series.
Poly phi_inverse(const Poly& q, int d, const TruncatedSeries& g,
                 const KappaRational& c_d);

// phi(D_ij P) = -d phi(P) / d t_ji for homogeneous P.
bool check_phi_derivative_identity(const Poly& p, int i, int j);

// c_{m,n}(s, k, l) = pi^{nm} prod_i 1/((s + k_i + l_i + n + m - i)_(m)),
// with s formal when absent. Raises PoleAtS when a factor vanishes at a
// rational s.
PiSymbolic c_mn(int m, int n, const std::optional<BigRational>& s, const WeightPair& w);

// <v0, v0> = prod_i (k_i + l(k) - i)! / prod_{i<j} (k_i - k_j + j - i),
// times the same factor in l.
BigRational highest_weight_norm(const WeightPair& w);

// The closed-form pullback constant: 2-power, pi-power and rational part
// assembled from the per-place norm and Pochhammer factors.
PullbackConstant c_pullback(int mu, int m, int n2, const std::vector<WeightPair>& weights);

// Numerical check value for c_mn, n = 1 only: the integral of
// (1 - |S|^2)^(s + k + l) over the complex unit m-ball, by midpoint
// quadrature on the radial profile.
double disk_integral_oracle(int m, int n, const BigRational& s, const WeightPair& w,
                            int mesh = 200000);

// Corner minor product realizing the highest weight vector of the block.
Poly bideterminant(const std::vector<std::vector<Poly>>& block,
                   const std::vector<int>& weight, const Ambient& amb);

// Two-block operator family: builds P0 with phi(P0) equal to the
// bideterminant pair on a 2m x 2m matrix and substitutes the block
// matrix built from U and V.
Poly build_diff2_operator(int n1, int n2, const WeightPair& w);

}  // namespace plurikit
