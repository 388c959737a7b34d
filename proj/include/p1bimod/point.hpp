#pragma once

#include <compare>
#include <string>
#include <vector>

#include "p1bimod/scalar.hpp"

namespace p1bimod {

/// A closed point [p0:p1] of the projective line, normalized to (p0/p1, 1)
/// when p1 != 0 and to (1, 0) otherwise; equality is coordinate equality.
class P1Point {
 public:
  P1Point() = default;
  /// Throws std::invalid_argument for (0, 0).
  P1Point(const Scalar& p0, const Scalar& p1);

  static P1Point finite(const Scalar& p0) { return {p0, p0.field().one()}; }
  static P1Point infinity(Field f) { return {f.one(), f.zero()}; }

  const Scalar& p0() const { return p0_; }
  const Scalar& p1() const { return p1_; }
  Field field() const { return p0_.field(); }
  bool is_infinity() const { return p1_.is_zero(); }

  /// "[p0:p1]" with normalized coordinates, e.g. "[1/2:1]" or "[1:0]".
  std::string to_string() const;

  bool operator==(const P1Point& o) const { return p0_ == o.p0_ && p1_ == o.p1_; }
  /// Finite points ascending by p0, then the point at infinity.
  std::strong_ordering operator<=>(const P1Point& o) const;

 private:
  Scalar p0_, p1_;
};

/// [0:1], [1:0], [1:1], [1:2], ... truncated to `count` points (fewer over a
/// small prime field, where the enumeration covers all of P^1).
std::vector<P1Point> enumerate_points(Field field, std::size_t count);

}  // namespace p1bimod
