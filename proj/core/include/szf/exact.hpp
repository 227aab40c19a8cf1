#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace szf {

/// Dense matrix of arbitrary-precision rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);
  static ExactMatrix from_integers(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return data_[index(r, c)]; }
  const mpq_class& at(int r, int c) const { return data_[index(r, c)]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& other) const;
  /// Rows of `other` appended below. Column counts must match.
  ExactMatrix stacked(const ExactMatrix& other) const;
  /// Submatrix on the given row and column indices.
  ExactMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  std::vector<mpq_class> apply(const std::vector<mpq_class>& x) const;

  bool operator==(const ExactMatrix& other) const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

struct RankReport {
  int rank = 0;
  int nullity = 0;
  /// Basis of the right kernel; each vector has cols() entries.
  std::vector<std::vector<mpq_class>> kernel_basis;
};

/// Rank and right-kernel basis over Q. Rows are scaled to integers and reduced by
/// fraction-free (Bareiss) elimination; the kernel is read off by exact back substitution.
RankReport exact_rank(const ExactMatrix& a);

/// Rank only; skips the kernel computation.
int rank_of(const ExactMatrix& a);

/// Determinant by Bareiss elimination. Requires a square matrix.
mpq_class determinant(const ExactMatrix& a);

/// One row per line, tab-separated entries rendered as integers or "p/q".
std::string dump_matrix(const ExactMatrix& a);
/// Inverse of dump_matrix. Throws ParseError with line/column on bad input.
ExactMatrix parse_matrix(std::string_view text);

}  // namespace szf
