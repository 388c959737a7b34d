#pragma once

#include <vector>

#include "p1bimod/functor.hpp"

namespace p1bimod {

/// Degreewise maps comp(n) : S(O(n)) -> T(O(n)) on [lo, hi].
struct NatTransWindow {
  long long lo = 0, hi = 0;
  std::vector<Matrix> components;

  const Matrix& at(long long n) const { return components.at(static_cast<std::size_t>(n - lo)); }
};

/// Shapes match and T.A(n) comp(n-1) == comp(n) S.A(n), same for B, for all
/// lo < n <= hi.
bool is_natural(const NatTransWindow& t, const FunctorData& source, const FunctorData& target);
NatTransWindow compose(const NatTransWindow& second, const NatTransWindow& first);
NatTransWindow identity_transformation(const FunctorData& f);

struct StabilizationInfo {
  long long n_stab = 0;
  std::size_t top_dim = 0;
};

/// Least n_stab such that dims are constant on [n_stab, hi] and every pencil
/// (A(m), B(m)) with n_stab < m <= hi is regular. Throws WINDOW_TOO_SMALL
/// unless hi - n_stab >= 2.
StabilizationInfo stabilized_top(const FunctorData& f);

/// W(F) read off the Weierstrass form of the pencil at hi (or at any
/// stabilized degree n). Throws SPLIT_FAILURE, WINDOW_TOO_SMALL.
TorsionSheaf compute_W(const FunctorData& f);
TorsionSheaf compute_W_at(const FunctorData& f, long long n);

/// First `count` points of the fixed enumeration [0:1], [1:0], [1:1], [1:2],
/// ... that are not in the support of t. Throws FIELD_EXHAUSTED.
std::vector<P1Point> avoiding_points(const TorsionSheaf& t, Field field, std::size_t count);
P1Point choose_avoiding_point(const TorsionSheaf& t, Field field);

/// Vectors of F(O(n)) killed by some power of l_p. Throws NOT_ADMISSIBLE if
/// l_p is not invertible on the stabilized part (p lies in the support).
Subspace eventual_kernel(const FunctorData& f, long long n, const P1Point& p);
/// eventual_kernel at every degree of the window, lo first.
std::vector<Subspace> eventual_kernels(const FunctorData& f, const P1Point& p);

struct GammaData {
  StabilizationInfo stab;
  TorsionSheaf w;
  P1Point avoiding;
  FunctorData model;  // generator_h0_torsion(W) on F's window
  NatTransWindow gamma;
};

/// Gamma_n = T(l_p)^-(hi-n) Phi F(l_p^(hi-n)), where Phi : F(O(hi)) -> T(O(hi))
/// is an invertible intertwiner of the localized actions A L^-1 and B L^-1.
GammaData gamma_window(const FunctorData& f);

bool cok_vanishes(const GammaData& g);
bool cok_vanishes(const FunctorData& f);

struct KernelData {
  FunctorData functor;
  NatTransWindow theta;  // inclusion Ker -> F
};

/// Degreewise kernels of Gamma with the induced actions. Throws
/// NOT_ADMISSIBLE if an action does not preserve the kernels.
KernelData kernel_functor(const FunctorData& f, const GammaData& g);
FunctorData kernel_functor(const FunctorData& f);

}  // namespace p1bimod
