#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p1bimod/matrix.hpp"
#include "p1bimod/sheaves.hpp"

namespace p1bimod {

/// A functor on line bundles, stored on the degree window [lo, hi]:
/// dim(n) = dim F(O(n)), and A(n), B(n) are F(x0.), F(x1.) : F(O(n-1)) ->
/// F(O(n)) for lo < n <= hi.
struct FunctorData {
  Field field;
  long long lo = 0, hi = 0;
  std::vector<std::size_t> dims;  // dims[n - lo]
  std::vector<Matrix> x0, x1;     // x0[n - lo - 1] = A(n)

  FunctorData() = default;
  /// Zero functor on the window.
  FunctorData(Field f, long long lo, long long hi);

  std::size_t dim(long long n) const { return dims.at(static_cast<std::size_t>(n - lo)); }
  const Matrix& A(long long n) const { return x0.at(static_cast<std::size_t>(n - lo - 1)); }
  const Matrix& B(long long n) const { return x1.at(static_cast<std::size_t>(n - lo - 1)); }
  Matrix& A(long long n) { return x0.at(static_cast<std::size_t>(n - lo - 1)); }
  Matrix& B(long long n) { return x1.at(static_cast<std::size_t>(n - lo - 1)); }
  bool contains(long long n) const { return lo <= n && n <= hi; }

  /// c0*A(n) + c1*B(n) for a linear form.
  Matrix linear_action(const Form& l, long long n) const;

  bool operator==(const FunctorData&) const = default;
};

struct Violation {
  long long degree;
  std::string message;
};

/// Shape and commutation violations, empty when F is well formed.
std::vector<Violation> validate(const FunctorData& f);

/// Throws WINDOW_TOO_SMALL unless [lo, hi] lies inside F's window.
FunctorData restrict_window(const FunctorData& f, long long lo, long long hi);

/// H^0(P^1, - (x) t): Jordan blocks in the chart where each point is finite.
FunctorData generator_h0_torsion(Field field, const TorsionSheaf& t, long long lo, long long hi);
/// H^1(P^1, (-)(i)) in the Cech basis x0^-a x1^-b ordered by a descending.
FunctorData generator_h1(Field field, long long i, long long lo, long long hi);
/// One-dimensional functor on which a form h acts as h(q). Throws
/// EQUAL_POINTS when p == q (p is the companion avoiding point).
FunctorData generator_rq(const P1Point& q, const P1Point& p, long long lo, long long hi);

/// Throws WINDOW_MISMATCH unless the windows and fields agree.
FunctorData direct_sum(const FunctorData& f, const FunctorData& g);

struct GaugedFunctor {
  FunctorData functor;
  /// u[n - lo] : F(O(n)) -> F'(O(n)), a natural isomorphism F -> F'.
  std::vector<Matrix> u;
};

/// Degreewise change of basis by pseudorandom unimodular integer matrices
/// (elementary operations with small coefficients, then a permutation).
GaugedFunctor gauge_scramble_with_witness(const FunctorData& f, std::uint64_t seed);
FunctorData gauge_scramble(const FunctorData& f, std::uint64_t seed);

/// F(form) : F(O(n - d)) -> F(O(n)) for a form of degree d. Throws
/// WINDOW_TOO_SMALL when n - d < lo or n > hi.
Matrix act_poly(const FunctorData& f, const Form& form, long long n);

/// F applied to a map between sums of line bundles, with the block layout of
/// source and target.
Matrix apply_bundle_map(const FunctorData& f, const BundleMap& m);

/// Cokernel of a map into W with a chosen complement of the image.
struct Cokernel {
  Matrix section;   // dim W x dim C, basis of the complement
  Matrix quotient;  // dim C x dim W, kills the image, quotient * section = I
  std::size_t dim() const { return section.cols(); }
};
Cokernel cokernel(const Matrix& m);

/// F(O_{p,m}) from the presentation l_p^m : O(top - m) -> O(top).
Cokernel evaluate_torsion_block(const FunctorData& f, const TorsionPresentation& p);

struct SheafValue {
  std::size_t dim = 0;
  std::vector<std::size_t> bundle_dims;  // F(O(a_i)) in bundle order
  std::vector<Cokernel> torsion_parts;   // one per torsion block
};

/// F on a coherent sheaf, with each torsion block (p, m) presented as
/// l_p^m : O(d - m) -> O(d). Throws WINDOW_TOO_SMALL if some degree falls
/// outside the window.
SheafValue evaluate_on_sheaf(const FunctorData& f, const CoherentSheaf& s, long long d);

/// The map F(O_source) -> F(O_target) induced by a chain map of
/// presentations, in the bases of evaluate_torsion_block.
Matrix apply_to_torsion_map(const FunctorData& f, const TorsionChainMap& c);

struct SesOfBundles {
  BundleMap first, second;
};

struct ExactnessReport {
  bool composite_zero = false;
  bool right_exact = false;   // F(second) surjective
  bool middle_exact = false;  // image F(first) == ker F(second)
  bool injective = false;     // F(first) injective
  bool admissible() const { return composite_zero && right_exact && middle_exact; }
  bool exact() const { return admissible() && injective; }
};

ExactnessReport exactness_report(const FunctorData& f, const SesOfBundles& s);
/// True iff F(E') -> F(E) -> F(E'') -> 0 is exact on the left too. Throws
/// NOT_ADMISSIBLE when the right-exact part already fails.
bool check_exactness_on_ses(const FunctorData& f, const SesOfBundles& s);

}  // namespace p1bimod
