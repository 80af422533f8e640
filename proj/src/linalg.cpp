#include "mwext/linalg.hpp"

#include <algorithm>

#include "mwext/error.hpp"

namespace mwext {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::WidthMismatch, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy_n(row(rows[i]).begin(), cols_, m.row(i).begin());
  return m;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::WidthMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add_fast(out(i, j), f.mul_fast(aik, b(k, j)));
    }
  return out;
}

std::vector<Elem> vec_mat(const Field& f, std::span<const Elem> u, const Matrix& m) {
  if (u.size() != m.rows()) throw Error(ErrorCode::WidthMismatch, "vector length differs from matrix rows");
  std::vector<Elem> out(m.cols());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add_fast(out[j], f.mul_fast(u[k], m(k, j)));
  }
  return out;
}

std::vector<Elem> scale(const Field& f, Elem c, std::span<const Elem> v) {
  std::vector<Elem> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul_fast(c, v[i]);
  return out;
}

std::vector<Elem> add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "vector lengths differ");
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add_fast(a[i], b[i]);
  return out;
}

std::vector<Elem> sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "vector lengths differ");
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.is_zero(); });
}

Echelon row_reduce(const Field& f, const Matrix& m) {
  Echelon e{m, Matrix::identity(m.rows()), {}};
  Matrix& a = e.rref;
  Matrix& t = e.transform;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(lead).begin());
      std::swap_ranges(t.row(piv).begin(), t.row(piv).end(), t.row(lead).begin());
    }
    const Elem s = f.inv(a(lead, col));
    for (auto& x : a.row(lead)) x = f.mul_fast(s, x);
    for (auto& x : t.row(lead)) x = f.mul_fast(s, x);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      const Elem factor = f.neg(a(r, col));
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = f.add_fast(a(r, c), f.mul_fast(factor, a(lead, c)));
      for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) = f.add_fast(t(r, c), f.mul_fast(factor, t(lead, c)));
    }
    e.pivots.push_back(col);
    ++lead;
  }
  return e;
}

std::size_t rank(const Field& f, const Matrix& m) { return row_reduce(f, m).rank(); }

std::optional<std::vector<Elem>> solve_left(const Field& f, const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.cols()) throw Error(ErrorCode::WidthMismatch, "right-hand side length mismatch");
  const Echelon e = row_reduce(f, a);
  // v * rref == b forces v_i = b[pivot_i] on the nonzero rows.
  std::vector<Elem> v(a.rows());
  for (std::size_t i = 0; i < e.rank(); ++i) v[i] = b[e.pivots[i]];
  const auto check = vec_mat(f, v, e.rref);
  if (!std::equal(check.begin(), check.end(), b.begin())) return std::nullopt;
  return vec_mat(f, v, e.transform);
}

Matrix left_nullspace(const Field& f, const Matrix& a) {
  const Echelon e = row_reduce(f, a);
  std::vector<std::size_t> rows;
  for (std::size_t r = e.rank(); r < a.rows(); ++r) rows.push_back(r);
  return e.transform.select_rows(rows);
}

std::optional<Matrix> inverse(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Echelon e = row_reduce(f, a);
  if (e.rank() != a.rows()) return std::nullopt;
  return std::move(e.transform);
}

std::optional<Elem> proportionality(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) return std::nullopt;
  std::optional<Elem> c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() != v[i].is_zero()) return std::nullopt;
    if (v[i].is_zero()) continue;
    const Elem r = f.div(u[i], v[i]);
    if (c && *c != r) return std::nullopt;
    c = r;
  }
  return c;
}

}  // namespace mwext
