#pragma once

// Dense matrices over a finite field and Gauss-Jordan elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mwext/gf.hpp"

namespace mwext {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const;

  Matrix transpose() const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
// Row vector times matrix.
std::vector<Elem> vec_mat(const Field& f, std::span<const Elem> u, const Matrix& m);
std::vector<Elem> scale(const Field& f, Elem c, std::span<const Elem> v);
std::vector<Elem> add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
std::vector<Elem> sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
bool is_zero(std::span<const Elem> v);

// Reduced row-echelon form with the invertible transform that produced it:
// transform * input == rref. Zero rows of rref are kept at the bottom.
struct Echelon {
  Matrix rref;
  Matrix transform;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(const Field& f, const Matrix& m);
std::size_t rank(const Field& f, const Matrix& m);

// Some u with u * a == b, if the system is consistent.
std::optional<std::vector<Elem>> solve_left(const Field& f, const Matrix& a, std::span<const Elem> b);
// Basis (as rows) of { u : u * a == 0 }.
Matrix left_nullspace(const Field& f, const Matrix& a);
std::optional<Matrix> inverse(const Field& f, const Matrix& a);

// When u == c * v for a nonzero scalar c, returns c. Zero vectors are
// proportional to nothing.
std::optional<Elem> proportionality(const Field& f, std::span<const Elem> u, std::span<const Elem> v);

}  // namespace mwext
