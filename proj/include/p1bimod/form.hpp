#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "p1bimod/point.hpp"
#include "p1bimod/scalar.hpp"

namespace p1bimod {

/// Homogeneous binary form of a fixed degree d in x0, x1. coeffs()[j] is the
/// coefficient of x0^(d-j) x1^j, so the monomial order is
/// x0^d, x0^(d-1) x1, ..., x1^d. A form with no coefficients is the zero map
/// between line bundles whose degree difference is negative.
class Form {
 public:
  Form() = default;
  Form(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {}

  static Form zero(Field field, std::size_t degree);
  static Form one(Field field) { return {field, {field.one()}}; }
  static Form linear(const Scalar& c0, const Scalar& c1) { return {c0.field(), {c0, c1}}; }
  static Form monomial(Field field, std::size_t a, std::size_t b);
  /// Placeholder for "no map" entries (negative degree).
  static Form none(Field field) { return {field, {}}; }

  Field field() const { return field_; }
  bool is_none() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& coeff(std::size_t j) const { return coeffs_.at(j); }

  Scalar eval(const Scalar& x0, const Scalar& x1) const;
  Scalar eval(const P1Point& p) const { return eval(p.p0(), p.p1()); }

  friend Form operator*(const Form& a, const Form& b);
  Form operator-() const;
  Form& operator+=(const Form& o);
  Form pow(std::size_t k) const;

  /// Multiplicity of the linear factor vanishing at p.
  std::size_t order_at(const P1Point& p) const;

  bool operator==(const Form& o) const;
  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

}  // namespace p1bimod
