#ifndef LIEWB_LINALG_HPP
#define LIEWB_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liewb/rational.hpp"

namespace liewb {

// Sparse vector over integer column indices, sorted by index, no zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow sparse_normalize(SparseRow row);
SparseRow sparse_axpy(const SparseRow& a, const Rational& c, const SparseRow& b); // a + c*b

// Incrementally maintained reduced row echelon basis of a row space.
// Insertion order does not affect the final basis (the RREF of a row space
// is unique), so parallel assembly stays deterministic.
class RrefBasis {
  public:
    explicit RrefBasis(int ncols) : ncols_(ncols) {}

    // Reduces the row against the basis and absorbs any nonzero remainder.
    // Returns true when the row enlarged the space.
    bool insert(SparseRow row);

    // Remainder of row after reduction (empty iff row lies in the space).
    SparseRow reduce(SparseRow row) const;

    int rank() const { return int(rows_.size()); }
    int cols() const { return ncols_; }
    const std::map<int, SparseRow>& rows() const { return rows_; }
    std::vector<int> pivot_columns() const;

    // Basis of {x : R x = 0}, one vector per free column in column order.
    std::vector<SparseRow> nullspace() const;

  private:
    int ncols_;
    std::map<int, SparseRow> rows_; // pivot column -> row (leading coeff 1)
};

// Dense exact solver for expressing vectors in the span of fixed columns.
class SpanSolver {
  public:
    SpanSolver(int nrows, const std::vector<SparseRow>& columns);

    int rank() const { return rank_; }
    int ncols() const { return ncols_; }

    // Coordinates x with sum_k x_k col_k = b, if consistent. On failure and
    // when residual != nullptr, *residual receives b - A x_partial.
    std::optional<std::vector<Rational>> solve(const SparseRow& b,
                                               SparseRow* residual = nullptr) const;

  private:
    int nrows_, ncols_, rank_;
    std::vector<int> pivot_col_;               // per pivot row
    std::vector<std::vector<Rational>> rref_;  // [A | E] after full RREF
    std::vector<SparseRow> columns_;
};

// Deterministic pseudo-random source for property tests and rank probes.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next();
    // uniform in [lo, hi]
    long range(long lo, long hi);
};

Rational random_rational(SplitMix64& rng, long num_bound, long den_bound);

} // namespace liewb

#endif
