#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "p1bimod/form.hpp"
#include "p1bimod/point.hpp"

namespace p1bimod {

/// l_p = p1*x0 - p0*x1, scaled so its first nonzero coefficient is 1.
Form vanishing_form(const P1Point& p);

/// O_{p,m} = O / I_p^m.
struct TorsionBlock {
  P1Point point;
  std::size_t mult = 1;

  bool operator==(const TorsionBlock&) const = default;
  std::strong_ordering operator<=>(const TorsionBlock& o) const {
    if (auto c = point <=> o.point; c != 0) return c;
    return mult <=> o.mult;
  }
};

/// Finite direct sum of blocks, kept sorted by (point, mult). Blocks at the
/// same point are allowed and stay separate.
class TorsionSheaf {
 public:
  TorsionSheaf() = default;
  /// Throws std::invalid_argument on a zero multiplicity.
  explicit TorsionSheaf(std::vector<TorsionBlock> blocks);

  const std::vector<TorsionBlock>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  std::size_t length() const;
  /// Distinct points, ascending.
  std::vector<P1Point> support() const;
  bool supported_at(const P1Point& p) const;

  friend TorsionSheaf operator+(const TorsionSheaf& a, const TorsionSheaf& b);
  bool operator==(const TorsionSheaf&) const = default;
  std::string to_string() const;

 private:
  std::vector<TorsionBlock> blocks_;
};

/// (+) O(a_i) (+) torsion. The bundle multiset is kept sorted ascending.
struct CoherentSheaf {
  std::vector<long long> bundle;
  TorsionSheaf torsion;

  CoherentSheaf() = default;
  CoherentSheaf(std::vector<long long> b, TorsionSheaf t);
  static CoherentSheaf line(long long a) { return {{a}, {}}; }

  bool operator==(const CoherentSheaf&) const = default;
};

std::size_t h0_dim(const CoherentSheaf& s);
std::size_t h1_dim(const CoherentSheaf& s);
/// s (x) O(i): shifts the bundle part, leaves torsion alone.
CoherentSheaf twist(const CoherentSheaf& s, long long i);

/// s (x) t: each bundle summand contributes a copy of t; O_{p,m} (x) O_{p,n}
/// is O_{p,min(m,n)}; blocks at different points contribute nothing.
TorsionSheaf tensor_torsion(const CoherentSheaf& s, const TorsionSheaf& t);

/// Map (+) O(source[i]) -> (+) O(target[j]). entry(j, i) is a form of degree
/// target[j] - source[i], or Form::none when that degree is negative.
class BundleMap {
 public:
  BundleMap() = default;
  /// Zero map with correctly sized entries.
  BundleMap(Field field, std::vector<long long> source, std::vector<long long> target);

  Field field() const { return field_; }
  const std::vector<long long>& source() const { return source_; }
  const std::vector<long long>& target() const { return target_; }
  const Form& entry(std::size_t j, std::size_t i) const { return entries_[j][i]; }
  /// Throws std::invalid_argument if the form has the wrong degree.
  void set(std::size_t j, std::size_t i, Form f);

  bool is_zero() const;
  friend BundleMap operator*(const BundleMap& second, const BundleMap& first);

 private:
  Field field_;
  std::vector<long long> source_, target_;
  std::vector<std::vector<Form>> entries_;
};

/// 0 -> O(j-2) -> O(j-1)^2 -> O(j) -> 0 with maps (l_p, -l_q) and
/// (l_q, l_p). Throws EQUAL_POINTS when p == q.
std::pair<BundleMap, BundleMap> koszul_sequence(long long j, const P1Point& p, const P1Point& q);

/// A single block O_{p,m} written as the cokernel of
/// l_p^m : O(top - m) -> O(top).
struct TorsionPresentation {
  P1Point point;
  std::size_t mult = 1;
  long long top = 0;

  long long bottom() const { return top - static_cast<long long>(mult); }
  Form relation() const { return vanishing_form(point).pow(mult); }
};

/// Chain map between presentations: `top_form` maps the top terms,
/// `bottom_form` the relation terms, and
/// top_form * relation(source) == relation(target) * bottom_form.
struct TorsionChainMap {
  TorsionPresentation source, target;
  Form top_form, bottom_form;

  /// Throws std::invalid_argument when degrees or the square are wrong.
  void check() const;
};

TorsionChainMap compose(const TorsionChainMap& second, const TorsionChainMap& first);

/// O_1 -> O_2 -> ... -> O_N at p, with O_i presented as
/// l_p^i : O(base) -> O(base + i) and mu_{i,i+1} given by (l_p, 1).
struct LocalCohomologySystem {
  P1Point point;
  std::vector<TorsionPresentation> terms;
  std::vector<TorsionChainMap> maps;
};

/// Throws std::invalid_argument for N < 2.
LocalCohomologySystem local_cohomology_system(const P1Point& p, std::size_t n, long long base = 0);

/// Ext^1(O_{p,n}, O) is again O_{p,n}.
TorsionSheaf ext1_skyscraper(std::size_t n, const P1Point& p);

}  // namespace p1bimod
