#include "liewb/linalg.hpp"

#include <algorithm>

namespace liewb {

SparseRow sparse_normalize(SparseRow row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    out.reserve(row.size());
    for (auto& [c, v] : row) {
        if (!out.empty() && out.back().first == c) {
            out.back().second += v;
            if (is_zero(out.back().second)) out.pop_back();
        } else if (!is_zero(v)) {
            out.emplace_back(c, v);
        }
    }
    // a cancelled middle entry can expose an adjacent duplicate; re-run once
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i].first == out[i + 1].first) return sparse_normalize(std::move(out));
    }
    return out;
}

SparseRow sparse_axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational v = c * b[j].second;
            if (!is_zero(v)) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (!is_zero(v)) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow RrefBasis::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) break;
        row = sparse_axpy(row, -row.front().second, it->second);
    }
    // leading column now pivot-free; later columns may still reduce
    SparseRow out;
    out.reserve(row.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < row.size(); ++k) {
            auto it = rows_.find(row[k].first);
            if (it != rows_.end()) {
                row = sparse_axpy(row, -row[k].second, it->second);
                changed = true;
                break;
            }
        }
    }
    return row;
}

bool RrefBasis::insert(SparseRow row) {
    row = reduce(sparse_normalize(std::move(row)));
    if (row.empty()) return false;
    int lead = row.front().first;
    Rational inv = Rational(1) / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    // back-eliminate the new pivot column from existing rows
    for (auto& [pc, r] : rows_) {
        for (const auto& [c, v] : r) {
            if (c == lead) {
                r = sparse_axpy(r, -v, row);
                break;
            }
            if (c > lead) break;
        }
    }
    rows_.emplace(lead, std::move(row));
    return true;
}

std::vector<int> RrefBasis::pivot_columns() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [c, r] : rows_) out.push_back(c);
    return out;
}

std::vector<SparseRow> RrefBasis::nullspace() const {
    std::vector<SparseRow> basis;
    std::vector<bool> is_pivot(ncols_, false);
    for (const auto& [c, r] : rows_) is_pivot[c] = true;
    for (int f = 0; f < ncols_; ++f) {
        if (is_pivot[f]) continue;
        SparseRow v;
        for (const auto& [pc, row] : rows_) {
            for (const auto& [c, coeff] : row) {
                if (c == f) {
                    v.emplace_back(pc, -coeff);
                    break;
                }
                if (c > f) break;
            }
        }
        v.emplace_back(f, Rational(1));
        basis.push_back(sparse_normalize(std::move(v)));
    }
    return basis;
}

SpanSolver::SpanSolver(int nrows, const std::vector<SparseRow>& columns)
    : nrows_(nrows), ncols_(int(columns.size())), rank_(0), columns_(columns) {
    int total = ncols_ + nrows_;
    rref_.assign(nrows_, std::vector<Rational>(total, Rational(0)));
    for (int j = 0; j < ncols_; ++j)
        for (const auto& [r, v] : columns[j]) rref_[r][j] = v;
    for (int i = 0; i < nrows_; ++i) rref_[i][ncols_ + i] = 1;

    int row = 0;
    for (int col = 0; col < ncols_ && row < nrows_; ++col) {
        int pivot = -1;
        for (int i = row; i < nrows_; ++i) {
            if (!is_zero(rref_[i][col])) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rref_[row], rref_[pivot]);
        Rational inv = Rational(1) / rref_[row][col];
        for (int j = col; j < total; ++j) rref_[row][j] *= inv;
        for (int i = 0; i < nrows_; ++i) {
            if (i == row || is_zero(rref_[i][col])) continue;
            Rational f = rref_[i][col];
            for (int j = col; j < total; ++j) rref_[i][j] -= f * rref_[row][j];
        }
        pivot_col_.push_back(col);
        ++row;
    }
    rank_ = row;
}

std::optional<std::vector<Rational>> SpanSolver::solve(const SparseRow& b,
                                                       SparseRow* residual) const {
    // transformed rhs: y_i = sum_r E[i][r] * b[r]
    std::vector<Rational> y(nrows_, Rational(0));
    for (int i = 0; i < nrows_; ++i) {
        Rational acc(0);
        for (const auto& [r, v] : b) acc += rref_[i][ncols_ + r] * v;
        y[i] = acc;
    }
    bool ok = true;
    for (int i = rank_; i < nrows_; ++i)
        if (!is_zero(y[i])) ok = false;
    std::vector<Rational> x(ncols_, Rational(0));
    for (int i = 0; i < rank_; ++i) x[pivot_col_[i]] = y[i];
    if (ok) return x;
    if (residual) {
        SparseRow ax;
        for (int j = 0; j < ncols_; ++j) {
            if (is_zero(x[j])) continue;
            ax = sparse_axpy(ax, x[j], columns_[j]);
        }
        SparseRow res = sparse_axpy(sparse_normalize(b), Rational(-1), ax);
        *residual = std::move(res);
    }
    return std::nullopt;
}

uint64_t SplitMix64::next() {
    state += 0x9E3779B97f4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long SplitMix64::range(long lo, long hi) {
    uint64_t span = uint64_t(hi - lo + 1);
    return lo + long(next() % span);
}

Rational random_rational(SplitMix64& rng, long num_bound, long den_bound) {
    long n = rng.range(-num_bound, num_bound);
    long d = rng.range(1, den_bound);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace liewb
