#include "plurikit/linalg.hpp"

#include <utility>

namespace plurikit {

namespace {

using PMatrix = std::vector<std::vector<KappaPoly>>;

// Clears denominators row by row; row scaling leaves solution sets and
// rank untouched.
PMatrix to_poly_rows(const KMatrix& A, const KMatrix* B) {
    PMatrix M(A.size());
    for (size_t r = 0; r < A.size(); ++r) {
        KappaPoly lcm(1);
        auto absorb = [&lcm](const KappaRational& x) {
            KappaPoly g = KappaPoly::gcd(lcm, x.den());
            lcm = lcm.divide_exact(g) * x.den();
        };
        for (const auto& x : A[r]) absorb(x);
        if (B)
            for (const auto& x : (*B)[r]) absorb(x);
        auto scaled = [&lcm](const KappaRational& x) {
            return x.num() * lcm.divide_exact(x.den());
        };
        M[r].reserve(A[r].size() + (B ? (*B)[r].size() : 0));
        for (const auto& x : A[r]) M[r].push_back(scaled(x));
        if (B)
            for (const auto& x : (*B)[r]) M[r].push_back(scaled(x));
    }
    return M;
}

// Fraction-free forward elimination. Returns pivot columns (within the
// first `ncols` columns); M is reduced in place to echelon form.
std::vector<size_t> bareiss_eliminate(PMatrix& M, size_t ncols) {
    std::vector<size_t> pivots;
    if (M.empty()) return pivots;
    KappaPoly prev(1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < M.size(); ++col) {
        size_t sel = row;
        while (sel < M.size() && M[sel][col].is_zero()) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[row], M[sel]);
        const size_t width = M[row].size();
        for (size_t r = row + 1; r < M.size(); ++r) {
            for (size_t c = 0; c < width; ++c) {
                if (c == col) continue;
                M[r][c] = (M[row][col] * M[r][c] - M[r][col] * M[row][c]).divide_exact(prev);
            }
            M[r][col] = KappaPoly();
        }
        prev = M[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

KMatrix solve_exact(const KMatrix& A, const KMatrix& B) {
    if (A.size() != B.size())
        raise(ErrorCode::BadInput, "A and B must have the same number of rows");
    if (A.empty()) return {};
    const size_t ncols = A[0].size();
    const size_t nrhs = B[0].size();

    PMatrix M = to_poly_rows(A, &B);
    std::vector<size_t> pivots = bareiss_eliminate(M, ncols);

    if (pivots.size() < ncols)
        raise(ErrorCode::SingularSystem, "rank-deficient system");
    for (size_t r = pivots.size(); r < M.size(); ++r)
        for (size_t c = ncols; c < ncols + nrhs; ++c)
            if (!M[r][c].is_zero())
                raise(ErrorCode::SingularSystem, "inconsistent system");

    KMatrix X(ncols, std::vector<KappaRational>(nrhs));
    for (size_t k = pivots.size(); k-- > 0;) {
        size_t col = pivots[k];
        for (size_t s = 0; s < nrhs; ++s) {
            KappaRational acc(KappaPoly(M[k][ncols + s]), KappaPoly(1));
            for (size_t c = col + 1; c < ncols; ++c)
                acc -= KappaRational(M[k][c]) * X[c][s];
            X[col][s] = acc / KappaRational(M[k][col]);
        }
    }
    return X;
}

int rank(const KMatrix& A) {
    if (A.empty()) return 0;
    PMatrix M = to_poly_rows(A, nullptr);
    return static_cast<int>(bareiss_eliminate(M, A[0].size()).size());
}

KappaRational determinant(const KMatrix& A) {
    const size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) raise(ErrorCode::BadInput, "determinant needs a square matrix");
    if (n == 0) return KappaRational(1);

    // Track the rational row scalings so the determinant stays exact.
    KappaRational scale(1);
    PMatrix M(n);
    for (size_t r = 0; r < n; ++r) {
        KappaPoly lcm(1);
        for (const auto& x : A[r]) {
            KappaPoly g = KappaPoly::gcd(lcm, x.den());
            lcm = lcm.divide_exact(g) * x.den();
        }
        scale = scale / KappaRational(lcm);
        for (const auto& x : A[r]) M[r].push_back(x.num() * lcm.divide_exact(x.den()));
    }

    KappaPoly prev(1);
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && M[sel][col].is_zero()) ++sel;
        if (sel == n) return KappaRational();
        if (sel != col) {
            std::swap(M[col], M[sel]);
            sign = -sign;
        }
        for (size_t r = col + 1; r < n; ++r) {
            for (size_t c = col + 1; c < n; ++c)
                M[r][c] = (M[col][col] * M[r][c] - M[r][col] * M[col][c]).divide_exact(prev);
            M[r][col] = KappaPoly();
        }
        prev = M[col][col];
    }
    KappaRational det(M[n - 1][n - 1]);
    if (sign < 0) det = -det;
    return det * scale;
}

}  // namespace plurikit
