#include "p1bimod/pencil.hpp"

#include <algorithm>
#include <stdexcept>

#include "p1bimod/error.hpp"
#include "p1bimod/poly.hpp"

namespace p1bimod {

std::size_t PencilDecomposition::total_size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    for (std::size_t s : b.sizes) n += s;
  }
  return n;
}

namespace {

void check_pencil_shape(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("pencil matrices must be square of equal size");
  }
}

Matrix combine(const Scalar& c0, const Matrix& a, const Scalar& c1, const Matrix& b) {
  Matrix m = a * c0;
  m += b * c1;
  return m;
}

}  // namespace

Form pencil_determinant(const Matrix& a, const Matrix& b) {
  check_pencil_shape(a, b);
  Field f = a.field();
  const std::size_t n = a.rows();
  std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pm[i][j] = Poly(f, {b(i, j), a(i, j)});
  }
  Poly det = poly_det(std::move(pm), f);
  std::vector<Scalar> coeffs(n + 1, f.zero());
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = det.coeff(k);
  return Form(f, std::move(coeffs));
}

std::pair<Scalar, Scalar> invertible_combination(const Matrix& a, const Matrix& b) {
  check_pencil_shape(a, b);
  Field f = a.field();
  const std::size_t n = a.rows();
  std::vector<std::pair<Scalar, Scalar>> probes{{f.one(), f.zero()}, {f.zero(), f.one()}};
  for (std::size_t j = 1; j <= n; ++j) {
    Scalar c1 = f.from_int(static_cast<long long>(j));
    if (c1.is_zero()) break;  // wrapped around a small prime
    probes.emplace_back(f.one(), c1);
  }
  for (const auto& [c0, c1] : probes) {
    if (is_invertible(combine(c0, a, c1, b))) return {c0, c1};
  }
  Form det = pencil_determinant(a, b);
  if (det.is_zero()) throw EngineError(ErrorCode::SingularPencil, "det(x0*A + x1*B) vanishes identically");
  // Only reachable over small prime fields: look at every rational point.
  const std::uint64_t p = f.characteristic();
  if (p != 0) {
    for (const auto& pt : enumerate_points(f, static_cast<std::size_t>(std::min<std::uint64_t>(p + 1, 1u << 20)))) {
      if (!det.eval(pt.p0(), pt.p1()).is_zero()) return {pt.p0(), pt.p1()};
    }
  }
  throw EngineError(ErrorCode::SplitFailure, "no invertible combination over the base field");
}

bool is_regular_pencil(const Matrix& a, const Matrix& b) {
  try {
    invertible_combination(a, b);
    return true;
  } catch (const EngineError& e) {
    if (e.code() == ErrorCode::SingularPencil) return false;
    return true;  // determinant is nonzero, only the field is too small
  }
}

PencilDecomposition pencil_weierstrass(const Matrix& a, const Matrix& b) {
  check_pencil_shape(a, b);
  Field f = a.field();
  const std::size_t n = a.rows();
  PencilDecomposition out;
  if (n == 0) return out;

  auto [c0, c1] = invertible_combination(a, b);
  const Scalar d0 = c0.is_zero() ? f.one() : f.zero();
  const Scalar d1 = c0.is_zero() ? f.zero() : f.one();
  // (M, D) is strictly equivalent to (I, N) with N = M^-1 D.
  Matrix m = combine(c0, a, c1, b);
  Matrix d = combine(d0, a, d1, b);
  Matrix nmat = inverse(m) * d;

  RootFactorization roots = find_roots(char_poly(nmat));
  if (!roots.splits) {
    throw EngineError(ErrorCode::SplitFailure, "det(x0*A + x1*B) does not split into linear forms over " + f.tag());
  }
  for (const auto& [lambda, mult] : roots.roots) {
    Matrix shifted = nmat - Matrix::identity(f, n) * lambda;
    // ranks of powers: blocks of size >= k number r_{k-1} - r_k
    std::vector<std::size_t> ranks{n};
    Matrix power = Matrix::identity(f, n);
    while (ranks.back() > n - mult) {
      power = power * shifted;
      ranks.push_back(rank(power));
    }
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
    PencilBlock block{P1Point(lambda * c1 - d1, d0 - lambda * c0), {}};
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::size_t exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (std::size_t r = 0; r < exactly; ++r) block.sizes.push_back(k + 1);
    }
    std::sort(block.sizes.rbegin(), block.sizes.rend());
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const PencilBlock& x, const PencilBlock& y) { return x.point < y.point; });
  return out;
}

Matrix jordan_block(const Scalar& lambda, std::size_t m) {
  Field f = lambda.field();
  Matrix j = Matrix::identity(f, m) * lambda;
  for (std::size_t i = 0; i + 1 < m; ++i) j(i, i + 1) = f.one();
  return j;
}

std::pair<Matrix, Matrix> pencil_block_model(const PencilDecomposition& d, Field field) {
  Matrix a(field, 0, 0), b(field, 0, 0);
  for (const auto& block : d.blocks) {
    for (std::size_t m : block.sizes) {
      if (block.point.is_infinity()) {
        a = block_diag(a, Matrix::identity(field, m));
        b = block_diag(b, jordan_block(field.zero(), m));
      } else {
        a = block_diag(a, jordan_block(block.point.p0(), m));
        b = block_diag(b, Matrix::identity(field, m));
      }
    }
  }
  return {a, b};
}

}  // namespace p1bimod
