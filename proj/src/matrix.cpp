#include "p1bimod/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "p1bimod/error.hpp"

namespace p1bimod {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(std::span<const Scalar> v) {
  if (v.empty()) throw std::invalid_argument("Matrix::column needs a field; use zero()");
  Matrix m(v.front().field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

Matrix Matrix::select_cols(std::span<const std::size_t> cols) const {
  Matrix b(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = (*this)(i, cols[j]);
  }
  return b;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix shape mismatch in *: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  }
  Field f = a.rows_ * a.cols_ > 0 ? a.field_ : b.field_;
  Matrix c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j).add_product(aik, bkj);
      }
    }
  }
  return c;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].add_product((*this)(i, j), v[j]);
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (data_.empty()) return true;
  if (!(field_ == o.field_)) return false;
  return data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Field f = a.cols() ? a.field() : b.field();
  Matrix m(f, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Field f = a.rows() ? a.field() : b.field();
  Matrix m(f, a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Field f = (a.rows() || a.cols()) ? a.field() : b.field();
  Matrix m(f, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  Matrix& r = out.reduced;
  const std::size_t nr = r.rows(), nc = r.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t i = row; i < nr; ++i) {
      if (!r(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == nr) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(r(piv, j), r(row, j));
    }
    Scalar inv = r(row, c).inverse();
    for (std::size_t j = c; j < nc; ++j) {
      if (!r(row, j).is_zero()) r(row, j) *= inv;
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      Scalar factor = r(i, c);
      for (std::size_t j = c; j < nc; ++j) {
        if (!r(row, j).is_zero()) r(i, j).sub_product(factor, r(row, j));
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

namespace {

// Forward elimination only; enough for rank.
std::size_t echelon_rank(Matrix r) {
  const std::size_t nr = r.rows(), nc = r.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t i = row; i < nr; ++i) {
      if (!r(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == nr) continue;
    if (piv != row) {
      for (std::size_t j = c; j < nc; ++j) std::swap(r(piv, j), r(row, j));
    }
    Scalar inv = r(row, c).inverse();
    for (std::size_t i = row + 1; i < nr; ++i) {
      if (r(i, c).is_zero()) continue;
      Scalar factor = r(i, c) * inv;
      for (std::size_t j = c; j < nc; ++j) {
        if (!r(row, j).is_zero()) r(i, j).sub_product(factor, r(row, j));
      }
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() > m.cols()) return echelon_rank(m.transpose());
  return echelon_rank(m);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  RrefResult r = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse of singular matrix");
  return r.reduced.block(0, n, n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  Field f = (a.rows() > 0 && a.cols() > 0) ? a.field() : b.field();
  RrefResult r = rref(hstack(a, b));
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[k], j) = r.reduced(k, a.cols() + j);
  }
  return x;
}

Subspace Subspace::zero(Field field, std::size_t ambient) {
  Subspace s;
  s.basis_ = Matrix(field, ambient, 0);
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  Subspace s;
  s.basis_ = Matrix::identity(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivot_rows_.push_back(i);
  return s;
}

Subspace Subspace::span(const Matrix& spanning) {
  RrefResult r = rref(spanning.transpose());
  Subspace s;
  const std::size_t k = r.pivots.size();
  s.basis_ = r.reduced.block(0, 0, k, spanning.rows()).transpose();
  if (k == 0) s.basis_ = Matrix(spanning.field(), spanning.rows(), 0);
  s.pivot_rows_ = std::move(r.pivots);
  return s;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::coordinates size mismatch");
  std::vector<Scalar> c;
  c.reserve(dim());
  for (std::size_t r : pivot_rows_) c.push_back(v[r]);
  // Reconstruct and compare: exact membership test.
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    Scalar acc = field().zero();
    for (std::size_t j = 0; j < dim(); ++j) acc.add_product(basis_(i, j), c[j]);
    if (!(acc == v[i])) return std::nullopt;
  }
  return c;
}

std::optional<Matrix> Subspace::coordinates(const Matrix& m) const {
  if (m.rows() != ambient_dim()) throw std::invalid_argument("Subspace::coordinates size mismatch");
  Matrix c(field(), dim(), m.cols());
  for (std::size_t k = 0; k < dim(); ++k) {
    for (std::size_t j = 0; j < m.cols(); ++j) c(k, j) = m(pivot_rows_[k], j);
  }
  if (!(basis_ * c == m)) return std::nullopt;
  return c;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  return coordinates(other.basis()).has_value();
}

Subspace kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < nc; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Field f = m.field();
  Matrix k(f, nc, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = f.one();
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
      k(r.pivots[row], j) = -r.reduced(row, free_cols[j]);
    }
  }
  return Subspace::span(k);
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  // x = A u = B w  <=>  [A | -B] (u, w) = 0
  Matrix nb = b.basis();
  nb *= a.field().from_int(-1);
  Subspace k = kernel_basis(hstack(a.basis(), nb));
  Matrix u = k.basis().block(0, 0, a.dim(), k.dim());
  return Subspace::span(a.basis() * u);
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim()) throw std::invalid_argument("preimage: shape mismatch");
  // Kernel of m followed by the quotient by target: [m | -T] (x, y) = 0.
  Matrix nt = target.basis();
  nt *= m.field().from_int(-1);
  Subspace k = kernel_basis(hstack(m, nt));
  return Subspace::span(k.basis().block(0, 0, m.cols(), k.dim()));
}

Subspace complement(const Subspace& inside, const Subspace& sub) {
  if (!inside.contains(sub)) throw EngineError(ErrorCode::NotContained, "subspace is not contained in the ambient subspace");
  EchelonAccumulator acc(inside.field(), inside.ambient_dim());
  for (std::size_t j = 0; j < sub.dim(); ++j) acc.add(sub.basis().col(j));
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < inside.dim() && acc.rank() < inside.dim(); ++j) {
    if (acc.add(inside.basis().col(j))) chosen.push_back(j);
  }
  return Subspace::span(inside.basis().select_cols(chosen));
}

std::vector<Scalar> EchelonAccumulator::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("EchelonAccumulator: size mismatch");
  std::vector<Scalar> w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = w[pivots_[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      if (!rows_[k][j].is_zero()) w[j].sub_product(c, rows_[k][j]);
    }
  }
  return w;
}

bool EchelonAccumulator::independent(std::span<const Scalar> v) const {
  auto w = reduce(v);
  for (const auto& s : w) {
    if (!s.is_zero()) return true;
  }
  return false;
}

bool EchelonAccumulator::add(std::span<const Scalar> v) {
  auto w = reduce(v);
  std::size_t piv = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!w[j].is_zero()) {
      piv = j;
      break;
    }
  }
  if (piv == ambient_) return false;
  Scalar inv = w[piv].inverse();
  for (std::size_t j = piv; j < ambient_; ++j) w[j] *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

}  // namespace p1bimod
