#pragma once

#include "plurikit/multi_index.hpp"
#include "plurikit/series.hpp"

namespace plurikit {

// sigma_i(X tT): coefficient of lambda^i in det(I + lambda X tT), the sum
// of the i x i principal minors of X tT. When zero_blocks is given, the X
// entries on its diagonal blocks are zero.
Poly sigma(int n, int i, const Ambient& amb, const Partition* zero_blocks = nullptr);

// Substitutes s_a -> sigma_a into a series and collects the coefficient of
// X^nu for every nu with |nu| <= max_total_degree. With full_X the X matrix
// keeps all entries (used by the inverse phi map); otherwise the entries on
// the partition's diagonal blocks are zero.
std::map<MultiIndex, Poly> substitute_and_extract(const TruncatedSeries& g, int n,
                                                  const Partition& partition,
                                                  int max_total_degree,
                                                  bool full_X = false);

// The base polynomial 1 - tau12 - tau21 + (tau12 - tau21)^2/4 + tau11 tau22
// of the two-block symmetric-power generator.
Poly symmetric_G_base(int n1, int n2);

// Expansion of f^{-(kappa - 3/2)} truncated at total (u, v)-degree
// max_degree; the exponent only ever multiplies integer powers of 1 - f,
// so all coefficients stay in Q(kappa).
Poly build_symmetric_G(int n1, int n2, int max_degree);

int uv_degree(const Monomial& m);

// Per-degree constants of the descending action L_1(G_k) = c_k G_{k-1},
// computed empirically from the seed.
KappaRational empirical_descent_constant(const TruncatedSeries& seed, int k,
                                         const KappaCtx& ctx = {});

}  // namespace plurikit
