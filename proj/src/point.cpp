#include "p1bimod/point.hpp"

#include <stdexcept>

namespace p1bimod {

P1Point::P1Point(const Scalar& p0, const Scalar& p1) {
  if (p0.is_zero() && p1.is_zero()) throw std::invalid_argument("[0:0] is not a point");
  Field f = p0.field();
  if (!p1.is_zero()) {
    p0_ = p0 / p1;
    p1_ = f.one();
  } else {
    p0_ = f.one();
    p1_ = f.zero();
  }
}

std::string P1Point::to_string() const { return "[" + p0_.to_string() + ":" + p1_.to_string() + "]"; }

std::strong_ordering P1Point::operator<=>(const P1Point& o) const {
  if (is_infinity() != o.is_infinity()) {
    return is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (is_infinity()) return std::strong_ordering::equal;
  return p0_ <=> o.p0_;
}

std::vector<P1Point> enumerate_points(Field field, std::size_t count) {
  std::vector<P1Point> pts;
  if (count == 0) return pts;
  pts.push_back(P1Point(field.zero(), field.one()));
  if (pts.size() < count) pts.push_back(P1Point::infinity(field));
  const std::uint64_t p = field.characteristic();
  for (long long j = 1; pts.size() < count; ++j) {
    if (p != 0 && static_cast<std::uint64_t>(j) >= p) break;
    pts.push_back(P1Point(field.one(), field.from_int(j)));
  }
  return pts;
}

}  // namespace p1bimod
