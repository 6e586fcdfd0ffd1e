#pragma once

#include <map>
#include <optional>

#include "plurikit/linalg.hpp"
#include "plurikit/multi_index.hpp"
#include "plurikit/weyl.hpp"

namespace plurikit {

// Computation mode: symbolic in kappa (default) or specialized at a
// rational value. Specialization is refused (PoleAtKappa) at excluded
// values instead of producing garbage.
struct KappaCtx {
    std::optional<BigRational> value;

    KappaCtx() = default;
    KappaCtx(std::optional<BigRational> v) : value(std::move(v)) {}  // NOLINT

    bool specialized() const { return value.has_value(); }
    KappaRational k() const {
        return value ? KappaRational(*value) : KappaRational::variable();
    }
    KappaRational lift(const KappaRational& symbolic) const {
        return value ? KappaRational(eval_at(symbolic, *value)) : symbolic;
    }
};

// Membership in Xi = Z ∩ ∪_i [2-(a_i+b_i), 1-max(a_i,b_i)].
bool kappa_in_Xi(const BigRational& q, const Bidegree& ab);
bool kappa_in_Z_below(const BigRational& q, int n);

Poly t_power(const MultiIndex& nu, const Ambient& amb, const KappaCtx& ctx = {});

// Projection onto the kernel of all D_ii within the bidegree component:
// sum over i of alternating t_ii^j D_ii^j corrections. The image agrees
// with p modulo the ideal (t_11, ..., t_nn).
Poly project_Pi(const Poly& p, const Bidegree& ab, const KappaCtx& ctx = {});

// Unique kernel element whose coefficients on the diagonal-free index set
// match the seed; built from the coefficient recursion of D_ii P = 0 in
// increasing diagonal degree.
Poly reconstruct_from_seed(const std::map<MultiIndex, KappaRational>& seed,
                           const Bidegree& ab, const Ambient& amb,
                           const KappaCtx& ctx = {});

using BasisMap = std::map<MultiIndex, Poly>;

BasisMap monomial_basis(const Bidegree& ab, const Partition& partition,
                        const KappaCtx& ctx = {});

enum class DescendingMethod { linear_solve, generating_function };

BasisMap descending_basis(const Bidegree& ab, const Partition& partition,
                          DescendingMethod method, const KappaCtx& ctx = {});

// Pairwise inner products (rows x cols), row-major index order.
KMatrix gram_matrix(const BasisMap& rows, const BasisMap& cols,
                    const KappaCtx& ctx = {});

// Alternative evaluation (P, Q_nu) = constant term of D^nu(P).
KMatrix gram_matrix_via_D(const BasisMap& rows, const BasisMap& cols,
                          const KappaCtx& ctx = {});

}  // namespace plurikit
