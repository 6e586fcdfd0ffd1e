#pragma once

#include <string>
#include <vector>

#include "plurikit/poly.hpp"

namespace plurikit {

// n x n matrix of nonnegative integers, the exponent matrix of T^nu.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(int n, std::vector<int> entries);
    static MultiIndex zero(int n) { return MultiIndex(n, std::vector<int>(n * n, 0)); }
    static MultiIndex unit(int n, int i, int j);  // e_ij
    static MultiIndex from_monomial(int n, const Monomial& m, VarFamily f);
    static MultiIndex from_csv(int n, const std::string& csv);

    int n() const { return n_; }
    int at(int i, int j) const { return e_[(i - 1) * n_ + (j - 1)]; }
    int& at(int i, int j) { return e_[(i - 1) * n_ + (j - 1)]; }
    const std::vector<int>& entries() const { return e_; }

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    int total() const;
    bool diagonal_free() const;

    MultiIndex plus(int i, int j, int delta = 1) const;   // nu + delta * e_ij
    MultiIndex transpose() const;

    Monomial to_monomial(VarFamily f) const;

    // Row-major lexicographic order.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        return a.e_ < b.e_;
    }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    std::string csv() const;  // row-major, comma-separated

private:
    int n_ = 0;
    std::vector<int> e_;
};

// Partition n = n_1 + ... + n_d with n_1 >= ... >= n_d >= 1; I(partition)
// is the union of the diagonal block index squares.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    static Partition trivial(int n) { return Partition(std::vector<int>(n, 1)); }
    static Partition from_csv(const std::string& csv);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int block_of(int i) const;         // 1-based block index
    bool in_I(int i, int j) const { return block_of(i) == block_of(j); }
    bool is_trivial() const { return parts_.size() == static_cast<size_t>(n_); }

    std::string csv() const;

private:
    std::vector<int> parts_;
    std::vector<int> offsets_;  // cumulative sums
    int n_ = 0;
};

// All nu with the given row and column sums, in row-major lexicographic
// order; enumerate_N0 additionally requires nu = 0 on I(partition).
std::vector<MultiIndex> enumerate_N(const Bidegree& ab);
std::vector<MultiIndex> enumerate_N0(const Bidegree& ab, const Partition& partition);

}  // namespace plurikit
