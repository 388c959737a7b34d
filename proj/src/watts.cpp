#include "p1bimod/watts.hpp"

#include <random>

#include "p1bimod/error.hpp"
#include "p1bimod/pencil.hpp"

namespace p1bimod {

bool is_natural(const NatTransWindow& t, const FunctorData& source, const FunctorData& target) {
  if (t.lo != source.lo || t.hi != source.hi || t.lo != target.lo || t.hi != target.hi) return false;
  if (t.components.size() != source.dims.size()) return false;
  for (long long n = t.lo; n <= t.hi; ++n) {
    const Matrix& c = t.at(n);
    if (c.rows() != target.dim(n) || c.cols() != source.dim(n)) return false;
  }
  for (long long n = t.lo + 1; n <= t.hi; ++n) {
    if (!(target.A(n) * t.at(n - 1) == t.at(n) * source.A(n))) return false;
    if (!(target.B(n) * t.at(n - 1) == t.at(n) * source.B(n))) return false;
  }
  return true;
}

NatTransWindow compose(const NatTransWindow& second, const NatTransWindow& first) {
  if (second.lo != first.lo || second.hi != first.hi) throw std::invalid_argument("transformations on different windows");
  NatTransWindow out{first.lo, first.hi, {}};
  for (std::size_t k = 0; k < first.components.size(); ++k) out.components.push_back(second.components[k] * first.components[k]);
  return out;
}

NatTransWindow identity_transformation(const FunctorData& f) {
  NatTransWindow out{f.lo, f.hi, {}};
  for (std::size_t d : f.dims) out.components.push_back(Matrix::identity(f.field, d));
  return out;
}

StabilizationInfo stabilized_top(const FunctorData& f) {
  const std::size_t top = f.dim(f.hi);
  long long n = f.hi;
  while (n > f.lo && f.dim(n - 1) == top) --n;
  for (long long m = f.hi; m > n; --m) {
    if (!is_regular_pencil(f.A(m), f.B(m))) {
      n = m;
      break;
    }
  }
  if (f.hi - n < 2) {
    throw EngineError(ErrorCode::WindowTooSmall, "dimensions settle at degree " + std::to_string(n) +
                                                     ", fewer than two steps below hi = " + std::to_string(f.hi));
  }
  return {n, top};
}

namespace {

TorsionSheaf to_torsion(const PencilDecomposition& d) {
  std::vector<TorsionBlock> blocks;
  for (const auto& b : d.blocks) {
    for (std::size_t m : b.sizes) blocks.push_back({b.point, m});
  }
  return TorsionSheaf(std::move(blocks));
}

}  // namespace

TorsionSheaf compute_W_at(const FunctorData& f, long long n) {
  StabilizationInfo s = stabilized_top(f);
  if (n <= s.n_stab || n > f.hi) {
    throw EngineError(ErrorCode::WindowTooSmall, "degree " + std::to_string(n) + " is not a stabilized degree");
  }
  return to_torsion(pencil_weierstrass(f.A(n), f.B(n)));
}

TorsionSheaf compute_W(const FunctorData& f) { return compute_W_at(f, f.hi); }

std::vector<P1Point> avoiding_points(const TorsionSheaf& t, Field field, std::size_t count) {
  const std::size_t want = t.support().size() + count;
  std::vector<P1Point> out;
  for (const auto& p : enumerate_points(field, want)) {
    if (!t.supported_at(p)) out.push_back(p);
    if (out.size() == count) return out;
  }
  throw EngineError(ErrorCode::FieldExhausted, "not enough rational points outside the support over " + field.tag());
}

P1Point choose_avoiding_point(const TorsionSheaf& t, Field field) { return avoiding_points(t, field, 1).front(); }

namespace {

long long checked_stable_degree(const FunctorData& f, const Form& l, const P1Point& p) {
  StabilizationInfo s = stabilized_top(f);
  for (long long m = s.n_stab + 1; m <= f.hi; ++m) {
    if (!is_invertible(f.linear_action(l, m))) {
      throw EngineError(ErrorCode::NotAdmissible, p.to_string() + " lies in the support of W(F)");
    }
  }
  return s.n_stab;
}

}  // namespace

Subspace eventual_kernel(const FunctorData& f, long long n, const P1Point& p) {
  if (!f.contains(n)) throw EngineError(ErrorCode::WindowTooSmall, "degree " + std::to_string(n) + " outside the window");
  Form l = vanishing_form(p);
  const long long stable = checked_stable_degree(f, l, p);
  Matrix composite = Matrix::identity(f.field, f.dim(n));
  for (long long m = n + 1; m <= stable; ++m) composite = f.linear_action(l, m) * composite;
  return kernel_basis(composite);
}

std::vector<Subspace> eventual_kernels(const FunctorData& f, const P1Point& p) {
  Form l = vanishing_form(p);
  const long long stable = checked_stable_degree(f, l, p);
  std::vector<Subspace> out(static_cast<std::size_t>(f.hi - f.lo + 1));
  Matrix composite;  // F(O(n)) -> F(O(stable))
  for (long long n = f.hi; n >= f.lo; --n) {
    if (n >= stable) {
      out[static_cast<std::size_t>(n - f.lo)] = Subspace::zero(f.field, f.dim(n));
      composite = Matrix::identity(f.field, f.dim(n));
      continue;
    }
    composite = composite * f.linear_action(l, n + 1);
    out[static_cast<std::size_t>(n - f.lo)] = kernel_basis(composite);
  }
  return out;
}

namespace {

// All Phi with Phi X == Y Phi for each pair (X, Y), as a basis of flattened
// (row-major) solutions.
Subspace intertwiners(const std::vector<std::pair<Matrix, Matrix>>& pairs, Field field, std::size_t d) {
  Matrix eq(field, pairs.size() * d * d, d * d);
  std::size_t row = 0;
  for (const auto& [x, y] : pairs) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c, ++row) {
        for (std::size_t k = 0; k < d; ++k) {
          eq(row, r * d + k) += x(k, c);
          eq(row, k * d + c) -= y(r, k);
        }
      }
    }
  }
  return kernel_basis(eq);
}

Matrix invertible_intertwiner(const Subspace& sols, Field field, std::size_t d) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix phi(field, d, d);
    for (std::size_t j = 0; j < sols.dim(); ++j) {
      Scalar c = field.from_int(static_cast<long long>(rng() % 7) - 3);
      if (attempt == 0) c = field.from_int(static_cast<long long>(j) + 1);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < d * d; ++k) phi(k / d, k % d) += c * sols.basis()(k, j);
    }
    if (is_invertible(phi)) return phi;
  }
  throw EngineError(ErrorCode::NotAdmissible, "no invertible intertwiner between F(O(hi)) and the torsion model");
}

}  // namespace

GammaData gamma_window(const FunctorData& f) {
  GammaData g;
  g.stab = stabilized_top(f);
  g.w = compute_W(f);
  g.avoiding = choose_avoiding_point(g.w, f.field);
  g.model = generator_h0_torsion(f.field, g.w, f.lo, f.hi);
  const std::size_t d = g.stab.top_dim;
  const Form l = vanishing_form(g.avoiding);

  Matrix lf = f.linear_action(l, f.hi), lt = g.model.linear_action(l, f.hi);
  if (!is_invertible(lf)) throw EngineError(ErrorCode::NotAdmissible, "l_p is not invertible on F(O(hi))");
  Matrix lf_inv = inverse(lf), lt_inv = inverse(lt);
  Matrix phi(f.field, d, d);
  if (d > 0) {
    Subspace sols = intertwiners({{f.A(f.hi) * lf_inv, g.model.A(f.hi) * lt_inv},
                                  {f.B(f.hi) * lf_inv, g.model.B(f.hi) * lt_inv}},
                                 f.field, d);
    phi = invertible_intertwiner(sols, f.field, d);
  }

  const auto count = static_cast<std::size_t>(f.hi - f.lo + 1);
  g.gamma = {f.lo, f.hi, std::vector<Matrix>(count)};
  g.gamma.components[count - 1] = phi;
  for (long long n = f.hi - 1; n >= f.lo; --n) {
    const auto k = static_cast<std::size_t>(n - f.lo);
    g.gamma.components[k] = lt_inv * (g.gamma.components[k + 1] * f.linear_action(l, n + 1));
  }
  return g;
}

bool cok_vanishes(const GammaData& g) {
  for (const auto& c : g.gamma.components) {
    if (rank(c) != c.rows()) return false;
  }
  return true;
}

bool cok_vanishes(const FunctorData& f) { return cok_vanishes(gamma_window(f)); }

KernelData kernel_functor(const FunctorData& f, const GammaData& g) {
  KernelData k{FunctorData(f.field, f.lo, f.hi), {f.lo, f.hi, {}}};
  std::vector<Subspace> ker;
  for (long long n = f.lo; n <= f.hi; ++n) {
    ker.push_back(kernel_basis(g.gamma.at(n)));
    k.functor.dims[static_cast<std::size_t>(n - f.lo)] = ker.back().dim();
    k.theta.components.push_back(ker.back().basis());
  }
  for (long long n = f.lo + 1; n <= f.hi; ++n) {
    const Subspace& src = ker[static_cast<std::size_t>(n - 1 - f.lo)];
    const Subspace& tgt = ker[static_cast<std::size_t>(n - f.lo)];
    auto a = tgt.coordinates(f.A(n) * src.basis());
    auto b = tgt.coordinates(f.B(n) * src.basis());
    if (!a || !b) {
      throw EngineError(ErrorCode::NotAdmissible, "F(x_i) does not preserve ker Gamma at degree " + std::to_string(n));
    }
    k.functor.A(n) = std::move(*a);
    k.functor.B(n) = std::move(*b);
  }
  return k;
}

FunctorData kernel_functor(const FunctorData& f) { return kernel_functor(f, gamma_window(f)).functor; }

}  // namespace p1bimod
