#pragma once

#include <vector>

#include "plurikit/kappa.hpp"

namespace plurikit {

using KMatrix = std::vector<std::vector<KappaRational>>;

// Exact solve of A X = B over Q(kappa) by fraction-free (Bareiss)
// elimination; A may be overdetermined. Raises SingularSystem when the
// system is inconsistent or the solution is not unique.
KMatrix solve_exact(const KMatrix& A, const KMatrix& B);

int rank(const KMatrix& A);

KappaRational determinant(const KMatrix& A);

}  // namespace plurikit
