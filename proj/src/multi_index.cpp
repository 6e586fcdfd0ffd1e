#include "plurikit/multi_index.hpp"

#include <numeric>
#include <sstream>

namespace plurikit {

MultiIndex::MultiIndex(int n, std::vector<int> entries) : n_(n), e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) != n * n)
        raise(ErrorCode::BadInput, "multi-index needs n^2 entries");
    for (int v : e_)
        if (v < 0) raise(ErrorCode::BadInput, "multi-index entries must be nonnegative");
}

MultiIndex MultiIndex::unit(int n, int i, int j) {
    MultiIndex m = zero(n);
    m.at(i, j) = 1;
    return m;
}

MultiIndex MultiIndex::from_monomial(int n, const Monomial& mon, VarFamily f) {
    MultiIndex m = zero(n);
    for (const auto& [v, e] : mon.exps()) {
        if (v.family != f)
            raise(ErrorCode::BadInput, "monomial uses a foreign family");
        m.at(v.i, v.j) += static_cast<int>(e);
    }
    return m;
}

MultiIndex MultiIndex::from_csv(int n, const std::string& csv) {
    std::vector<int> e;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) e.push_back(std::stoi(part));
    return MultiIndex(n, std::move(e));
}

std::vector<int> MultiIndex::row_sums() const {
    std::vector<int> r(n_, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) r[i - 1] += at(i, j);
    return r;
}

std::vector<int> MultiIndex::col_sums() const {
    std::vector<int> c(n_, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) c[j - 1] += at(i, j);
    return c;
}

int MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool MultiIndex::diagonal_free() const {
    for (int i = 1; i <= n_; ++i)
        if (at(i, i) != 0) return false;
    return true;
}

MultiIndex MultiIndex::plus(int i, int j, int delta) const {
    MultiIndex m = *this;
    m.at(i, j) += delta;
    if (m.at(i, j) < 0) raise(ErrorCode::BadInput, "negative multi-index entry");
    return m;
}

MultiIndex MultiIndex::transpose() const {
    MultiIndex m = zero(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Monomial MultiIndex::to_monomial(VarFamily f) const {
    std::vector<std::pair<VarId, uint32_t>> exps;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (at(i, j) > 0)
                exps.push_back({VarId::make(f, i, j), static_cast<uint32_t>(at(i, j))});
    return Monomial(std::move(exps));
}

std::string MultiIndex::csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) raise(ErrorCode::BadInput, "empty partition");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) raise(ErrorCode::BadInput, "partition parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            raise(ErrorCode::BadInput, "partition must be non-increasing");
    }
    offsets_.resize(parts_.size() + 1, 0);
    for (size_t i = 0; i < parts_.size(); ++i) offsets_[i + 1] = offsets_[i] + parts_[i];
    n_ = offsets_.back();
}

Partition Partition::from_csv(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) parts.push_back(std::stoi(part));
    return Partition(std::move(parts));
}

int Partition::block_of(int i) const {
    for (size_t b = 0; b < parts_.size(); ++b)
        if (i <= offsets_[b + 1]) return static_cast<int>(b) + 1;
    raise(ErrorCode::BadInput, "index outside partition range");
}

std::string Partition::csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

namespace {

void enumerate_rec(const Bidegree& ab, const Partition* part, int n, int i, int j,
                   std::vector<int>& cur, std::vector<int>& col_left, int row_left,
                   std::vector<MultiIndex>& out) {
    if (i == n + 1) {
        out.push_back(MultiIndex(n, cur));
        return;
    }
    if (j == n + 1) {
        if (row_left != 0) return;
        enumerate_rec(ab, part, n, i + 1, 1, cur, col_left, i < n ? ab.a[i] : 0, out);
        return;
    }
    int cap = std::min(row_left, col_left[j - 1]);
    if (part && part->in_I(i, j)) cap = 0;
    // Remaining row capacity bound keeps the recursion from dead ends.
    for (int v = 0; v <= cap; ++v) {
        cur[(i - 1) * n + (j - 1)] = v;
        col_left[j - 1] -= v;
        enumerate_rec(ab, part, n, i, j + 1, cur, col_left, row_left - v, out);
        col_left[j - 1] += v;
        cur[(i - 1) * n + (j - 1)] = 0;
    }
}

std::vector<MultiIndex> enumerate_impl(const Bidegree& ab, const Partition* part) {
    int n = static_cast<int>(ab.a.size());
    if (ab.b.size() != ab.a.size())
        raise(ErrorCode::BadInput, "row and column sum vectors must have equal length");
    int ta = 0, tb = 0;
    for (int v : ab.a) {
        if (v < 0) raise(ErrorCode::BadInput, "negative row sum");
        ta += v;
    }
    for (int v : ab.b) {
        if (v < 0) raise(ErrorCode::BadInput, "negative column sum");
        tb += v;
    }
    std::vector<MultiIndex> out;
    if (ta != tb) return out;
    if (part && part->n() != n)
        raise(ErrorCode::BadInput, "partition size does not match bidegree length");
    std::vector<int> cur(n * n, 0);
    std::vector<int> col_left = ab.b;
    if (n == 0) return out;
    enumerate_rec(ab, part, n, 1, 1, cur, col_left, ab.a[0], out);
    return out;
}

}  // namespace

std::vector<MultiIndex> enumerate_N(const Bidegree& ab) {
    return enumerate_impl(ab, nullptr);
}

std::vector<MultiIndex> enumerate_N0(const Bidegree& ab, const Partition& partition) {
    return enumerate_impl(ab, &partition);
}

}  // namespace plurikit
