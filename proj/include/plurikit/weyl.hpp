#pragma once

#include <functional>

#include "plurikit/poly.hpp"

namespace plurikit {

enum class OpKind { D, E, Eprime, F };

OpKind op_kind_from_string(const std::string& s);

// The mixed Laplacian D_ij = kappa d_ij + sum_{k,l} t_kl d_il d_kj and the
// first-order operators E, E', F on polynomials in the T family. The kappa
// appearing in the operator can be specialized to match polynomials whose
// coefficients are already specialized.
Poly apply_D(int i, int j, const Poly& p,
             const KappaRational& kappa = KappaRational::variable());
Poly apply_E(int i, int j, const Poly& p,
             const KappaRational& kappa = KappaRational::variable());
Poly apply_Eprime(int i, int j, const Poly& p,
                  const KappaRational& kappa = KappaRational::variable());
Poly apply_F(int i, int j, const Poly& p);
Poly apply_op(OpKind kind, int i, int j, const Poly& p,
              const KappaRational& kappa = KappaRational::variable());

// Transposes every T index. Coefficient conjugation would accompany this
// over the complex numbers; over Q(kappa) it is the identity.
Poly theta(const Poly& q);

// The linear functional (P, 1): rewrites one variable of each monomial at
// a time until only constants remain. Symbolic results are memoized
// globally; the memo table is safe for concurrent use.
KappaRational e_kappa(const Poly& p,
                      const KappaRational& kappa = KappaRational::variable());

// Same reduction, but the variable rewritten at each step is chosen by
// the callback (given the monomial, returns an index into its variables).
// Used to check that the reduction value is order-independent.
KappaRational e_kappa_with_choice(
    const Poly& p, const std::function<size_t(const Monomial&)>& choose,
    const KappaRational& kappa = KappaRational::variable());

KappaRational inner_product(const Poly& p, const Poly& q,
                            const KappaRational& kappa = KappaRational::variable());

// (Op p, q) = (p, Op* q) with the adjoint formulas
//   D_ij* = D_ji - E_ij - E'_ji + F_ij,  E_ij* = -E'_ij + F_ji,
//   E'_ij* = -E_ij + F_ij,               F_ij* = F_ji.
bool check_adjoint(OpKind kind, int i, int j, const Poly& p, const Poly& q,
                   const KappaRational& kappa = KappaRational::variable());
Poly apply_adjoint(OpKind kind, int i, int j, const Poly& q,
                   const KappaRational& kappa = KappaRational::variable());

// Checks that the mixed Laplacian on pairs of n x kappa_int matrices is
// compatible with t_ij = sum_s x_is y_js: Delta_ij P~ = (D_ij P)~ for all
// (i, j), with kappa specialized to kappa_int.
bool tilde_compat_check(const Poly& p, int n, int kappa_int);

}  // namespace plurikit
