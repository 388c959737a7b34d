#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "p1bimod/form.hpp"
#include "p1bimod/matrix.hpp"
#include "p1bimod/point.hpp"

namespace p1bimod {

/// Jordan data of a regular pencil at one generalized eigenpoint; sizes are
/// kept in descending order.
struct PencilBlock {
  P1Point point;
  std::vector<std::size_t> sizes;

  bool operator==(const PencilBlock&) const = default;
};

/// Canonical Weierstrass data of a regular pencil x0*A + x1*B, blocks sorted
/// by point.
struct PencilDecomposition {
  std::vector<PencilBlock> blocks;

  std::size_t total_size() const;
  bool operator==(const PencilDecomposition&) const = default;
};

/// det(x0*A + x1*B) as a binary form of degree n.
Form pencil_determinant(const Matrix& a, const Matrix& b);

/// True iff some combination c0*A + c1*B is invertible over the field.
bool is_regular_pencil(const Matrix& a, const Matrix& b);

/// An invertible combination (c0, c1), probing (1,0), (0,1), (1,1), ...,
/// (1,n) before falling back to the determinant form. Throws
/// SINGULAR_PENCIL if det(x0*A + x1*B) vanishes identically and
/// SPLIT_FAILURE if it vanishes on every rational point of a small prime
/// field.
std::pair<Scalar, Scalar> invertible_combination(const Matrix& a, const Matrix& b);

/// Generalized eigenpoints [p0:p1] (where p1*A - p0*B is singular) with
/// their Jordan block sizes. Throws SINGULAR_PENCIL / SPLIT_FAILURE.
PencilDecomposition pencil_weierstrass(const Matrix& a, const Matrix& b);

/// Block model realizing a decomposition: a block (p0:1, m) contributes
/// A = J_m(p0), B = I; the point at infinity contributes A = I, B = J_m(0).
std::pair<Matrix, Matrix> pencil_block_model(const PencilDecomposition& d, Field field);

/// Upper Jordan block lambda*I + N of size m.
Matrix jordan_block(const Scalar& lambda, std::size_t m);

}  // namespace p1bimod
