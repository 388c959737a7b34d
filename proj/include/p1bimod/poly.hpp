#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "p1bimod/matrix.hpp"

namespace p1bimod {

/// Dense univariate polynomial; coeffs_[i] is the coefficient of t^i and the
/// top coefficient is nonzero (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(Field field) : field_(field) {}
  Poly(Field field, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  /// t - root
  static Poly linear_root(const Scalar& root);

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  Scalar leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

  Scalar eval(const Scalar& t) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& s) const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact division; throws std::domain_error if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus);

/// Roots in the base field with multiplicities, ascending by root. `splits`
/// is true iff the multiplicities add up to the degree.
struct RootFactorization {
  std::vector<std::pair<Scalar, std::size_t>> roots;
  bool splits = false;
};
RootFactorization find_roots(const Poly& f);

/// det of a square matrix of polynomials (fraction-free Bareiss).
Poly poly_det(std::vector<std::vector<Poly>> m, Field field);

/// det(t*I - m).
Poly char_poly(const Matrix& m);

}  // namespace p1bimod
