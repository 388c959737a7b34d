#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p1bimod/scalar.hpp"

namespace p1bimod {

/// Dense row-major matrix over one Field. Zero-row and zero-column shapes are
/// legal everywhere; they are how empty vector spaces enter the engine.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static Matrix identity(Field field, std::size_t n);
  /// Builds a matrix from integer rows (convenience for tests and generators).
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
  static Matrix column(std::span<const Scalar> v);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> col(std::size_t j) const;
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_cols(std::span<const std::size_t> cols) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  bool operator==(const Matrix& o) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a | b], [a ; b] and diag(a, b).
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form and its pivot columns.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws std::domain_error on singular input.
Matrix inverse(const Matrix& m);
/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// A linear subspace of k^n, stored by its reduced column-echelon basis so
/// that equality of subspaces is equality of basis matrices.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  /// Column span of `spanning` (columns need not be independent).
  static Subspace span(const Matrix& spanning);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  /// Row index carrying the leading 1 of each basis column.
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(); std::nullopt when v is outside.
  std::optional<std::vector<Scalar>> coordinates(std::span<const Scalar> v) const;
  /// Coordinates of every column of m; std::nullopt if any column is outside.
  std::optional<Matrix> coordinates(const Matrix& m) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// Preimage of `target` under m.
Subspace preimage(const Matrix& m, const Subspace& target);

/// Complement of `sub` inside `inside`: canonical basis vectors of `inside`
/// are taken greedily, in index order, whenever they are independent of
/// `sub` and of the vectors already taken. Throws NOT_CONTAINED if
/// sub is not a subspace of inside.
Subspace complement(const Subspace& inside, const Subspace& sub);

/// Incremental independence test over a fixed ambient space.
class EchelonAccumulator {
 public:
  EchelonAccumulator(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  /// Adds v if it is independent of everything added so far.
  bool add(std::span<const Scalar> v);
  bool independent(std::span<const Scalar> v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Scalar> reduce(std::span<const Scalar> v) const;

  Field field_;
  std::size_t ambient_;
  std::vector<std::vector<Scalar>> rows_;  // each normalized, leading 1 at pivots_[k]
  std::vector<std::size_t> pivots_;
};

}  // namespace p1bimod
