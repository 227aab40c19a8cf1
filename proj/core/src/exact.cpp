#include "szf/exact.hpp"

#include <cctype>
#include <utility>

#include "szf/error.hpp"

namespace szf {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ContractViolation("ExactMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, mpq_class(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ContractViolation("ExactMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (cols_ != other.rows_) throw ContractViolation("ExactMatrix: dimension mismatch in product");
  ExactMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& other) const {
  if (cols_ != other.cols_) throw ContractViolation("ExactMatrix: column mismatch when stacking");
  ExactMatrix out(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  ExactMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
  return out;
}

std::vector<mpq_class> ExactMatrix::apply(const std::vector<mpq_class>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw ContractViolation("ExactMatrix: vector length mismatch");
  std::vector<mpq_class> y(static_cast<std::size_t>(rows_), mpq_class(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // fraction-free row echelon form
  std::vector<int> pivot_cols;
  int swaps = 0;
  mpz_class scale = 1;  // product of the per-row denominators cleared up front
};

// Scales every row to integers, then runs one-step Bareiss elimination. After processing
// pivot k every remaining entry is a (k+1)-minor of the scaled matrix, so the division by
// the previous pivot is exact.
Echelon bareiss(const ExactMatrix& a) {
  Echelon e;
  const int m = a.rows();
  const int n = a.cols();
  e.rows.assign(static_cast<std::size_t>(m), std::vector<mpz_class>(static_cast<std::size_t>(n)));
  for (int i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) e.rows[i][j] = a.at(i, j).get_num() * (l / a.at(i, j).get_den());
    e.scale *= l;
  }
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = r;
    while (p < m && sgn(e.rows[p][c]) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(e.rows[p], e.rows[r]);
      ++e.swaps;
    }
    const mpz_class& pivot = e.rows[r][c];
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < n; ++j) {
        mpz_class v = pivot * e.rows[i][j] - e.rows[i][c] * e.rows[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        e.rows[i][j] = std::move(v);
      }
      e.rows[i][c] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

int rank_of(const ExactMatrix& a) { return static_cast<int>(bareiss(a).pivot_cols.size()); }

RankReport exact_rank(const ExactMatrix& a) {
  const Echelon e = bareiss(a);
  RankReport report;
  report.rank = static_cast<int>(e.pivot_cols.size());
  report.nullity = a.cols() - report.rank;

  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(static_cast<std::size_t>(a.cols()), mpq_class(0));
    x[f] = 1;
    for (int k = report.rank - 1; k >= 0; --k) {
      const int pc = e.pivot_cols[k];
      mpq_class acc = 0;
      for (int j = pc + 1; j < a.cols(); ++j) {
        if (sgn(x[j]) != 0) acc += mpq_class(e.rows[k][j]) * x[j];
      }
      x[pc] = -acc / mpq_class(e.rows[k][pc]);
    }
    report.kernel_basis.push_back(std::move(x));
  }
  return report;
}

mpq_class determinant(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw ContractViolation("determinant: matrix is not square");
  const int n = a.rows();
  if (n == 0) return 1;
  const Echelon e = bareiss(a);
  if (static_cast<int>(e.pivot_cols.size()) < n) return 0;
  mpq_class det(e.rows[n - 1][n - 1], e.scale);
  det.canonicalize();
  return e.swaps % 2 ? mpq_class(-det) : det;
}

std::string dump_matrix(const ExactMatrix& a) {
  std::string out;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out += '\t';
      out += a.at(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

namespace {

mpq_class parse_rational(const std::string& token, std::size_t line, std::size_t column) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '-' || token[i] == '+')) ++i;
  const std::size_t digits_start = i;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
  bool ok = i > digits_start;
  if (ok && i < token.size()) {
    ok = token[i] == '/';
    const std::size_t den_start = ++i;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
    ok = ok && i > den_start && i == token.size();
    if (ok && token.find_first_not_of('0', den_start) == std::string::npos) {
      throw ParseError("zero denominator in '" + token + "'", line, column);
    }
  }
  if (!ok) throw ParseError("bad rational '" + token + "'", line, column);
  mpq_class q(token[0] == '+' ? token.substr(1) : token, 10);
  q.canonicalize();
  return q;
}

}  // namespace

ExactMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<mpq_class>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<mpq_class> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      row.push_back(parse_rational(std::string(line.substr(start, i - start)), line_no, start + 1));
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no);
    }
    rows.push_back(std::move(row));
  }
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace szf
