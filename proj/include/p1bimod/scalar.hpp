#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace p1bimod {

class Scalar;

/// The active base field: exact rationals, or a prime field F_p with p < 2^62.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  /// Parses "Q" or "Fp:<p>".
  static Field from_tag(std::string_view tag);
  std::string tag() const;

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;

  /// Decimal integer "-12" or fraction "3/4". Over F_p fractions are reduced
  /// modulo p (the denominator must be a unit).
  Scalar parse(std::string_view text) const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms (GMP canonical
/// form); residues live in [0, p). Mixing elements of different fields is a
/// logic error and throws std::invalid_argument.
class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// this += a * b, without a temporary for the product over F_p.
  void add_product(const Scalar& a, const Scalar& b);
  /// this -= a * b
  void sub_product(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;

  /// Total order inside one field (value order over Q, residue order over
  /// F_p). Only used for canonical sorting.
  std::strong_ordering operator<=>(const Scalar& o) const;

  std::string to_string() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  friend class Field;

  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

}  // namespace p1bimod
