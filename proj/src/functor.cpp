#include "p1bimod/functor.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "p1bimod/error.hpp"
#include "p1bimod/pencil.hpp"

namespace p1bimod {

FunctorData::FunctorData(Field f, long long lo_, long long hi_) : field(f), lo(lo_), hi(hi_) {
  if (hi < lo) throw std::invalid_argument("window needs lo <= hi");
  const auto n = static_cast<std::size_t>(hi - lo);
  dims.assign(n + 1, 0);
  x0.assign(n, Matrix(f, 0, 0));
  x1.assign(n, Matrix(f, 0, 0));
}

Matrix FunctorData::linear_action(const Form& l, long long n) const {
  if (l.degree() != 1 || l.is_none()) throw std::invalid_argument("linear_action needs a linear form");
  if (n <= lo || n > hi) {
    throw EngineError(ErrorCode::WindowTooSmall, "degree " + std::to_string(n) + " has no incoming map in the window");
  }
  Matrix m = A(n) * l.coeff(0);
  m += B(n) * l.coeff(1);
  return m;
}

std::vector<Violation> validate(const FunctorData& f) {
  std::vector<Violation> out;
  const auto span = f.hi - f.lo;
  if (span < 0) return {{f.lo, "window has hi < lo"}};
  if (f.dims.size() != static_cast<std::size_t>(span + 1)) out.push_back({f.lo, "dims does not cover the window"});
  if (f.x0.size() != static_cast<std::size_t>(span) || f.x1.size() != static_cast<std::size_t>(span)) {
    out.push_back({f.lo, "x0/x1 must hold one matrix per degree in (lo, hi]"});
  }
  if (!out.empty()) return out;
  bool shapes_ok = true;
  for (long long n = f.lo + 1; n <= f.hi; ++n) {
    for (const Matrix* m : {&f.A(n), &f.B(n)}) {
      if (m->rows() != f.dim(n) || m->cols() != f.dim(n - 1)) {
        out.push_back({n, std::string(m == &f.A(n) ? "x0" : "x1") + " map has shape " + std::to_string(m->rows()) +
                              "x" + std::to_string(m->cols()) + ", expected " + std::to_string(f.dim(n)) + "x" +
                              std::to_string(f.dim(n - 1))});
        shapes_ok = false;
      } else if (m->rows() * m->cols() > 0 && !(m->field() == f.field)) {
        out.push_back({n, "matrix over the wrong field"});
        shapes_ok = false;
      }
    }
  }
  if (!shapes_ok) return out;
  for (long long n = f.lo + 1; n < f.hi; ++n) {
    if (!(f.A(n + 1) * f.B(n) == f.B(n + 1) * f.A(n))) {
      out.push_back({n + 1, "x0 x1 != x1 x0 on F(O(" + std::to_string(n - 1) + ")) -> F(O(" + std::to_string(n + 1) + "))"});
    }
  }
  return out;
}

FunctorData restrict_window(const FunctorData& f, long long lo, long long hi) {
  if (lo < f.lo || hi > f.hi || hi < lo) {
    throw EngineError(ErrorCode::WindowTooSmall, "requested window is not inside [" + std::to_string(f.lo) + ", " +
                                                     std::to_string(f.hi) + "]");
  }
  FunctorData g(f.field, lo, hi);
  for (long long n = lo; n <= hi; ++n) g.dims[static_cast<std::size_t>(n - lo)] = f.dim(n);
  for (long long n = lo + 1; n <= hi; ++n) {
    g.A(n) = f.A(n);
    g.B(n) = f.B(n);
  }
  return g;
}

FunctorData generator_h0_torsion(Field field, const TorsionSheaf& t, long long lo, long long hi) {
  PencilDecomposition d;
  for (const auto& b : t.blocks()) d.blocks.push_back({b.point, {b.mult}});
  auto [a, b] = pencil_block_model(d, field);
  FunctorData f(field, lo, hi);
  std::fill(f.dims.begin(), f.dims.end(), t.length());
  std::fill(f.x0.begin(), f.x0.end(), a);
  std::fill(f.x1.begin(), f.x1.end(), b);
  return f;
}

FunctorData generator_h1(Field field, long long i, long long lo, long long hi) {
  FunctorData f(field, lo, hi);
  auto dim_at = [&](long long n) { return static_cast<std::size_t>(std::max(0LL, -n - i - 1)); };
  for (long long n = lo; n <= hi; ++n) f.dims[static_cast<std::size_t>(n - lo)] = dim_at(n);
  // Basis of degree n: x0^-a x1^-b with a + b = N = -(n + i), a = N-1, ..., 1.
  // x0 lowers a, so it keeps the index and drops the last source element;
  // x1 lowers b, so it shifts the index down by one.
  for (long long n = lo + 1; n <= hi; ++n) {
    const std::size_t t = dim_at(n), s = dim_at(n - 1);
    Matrix a(field, t, s), b(field, t, s);
    for (std::size_t r = 0; r < t; ++r) {
      a(r, r) = field.one();
      b(r, r + 1) = field.one();
    }
    f.A(n) = std::move(a);
    f.B(n) = std::move(b);
  }
  return f;
}

FunctorData generator_rq(const P1Point& q, const P1Point& p, long long lo, long long hi) {
  if (p == q) throw EngineError(ErrorCode::EqualPoints, "R_q needs an auxiliary point different from q");
  Field field = q.field();
  FunctorData f(field, lo, hi);
  std::fill(f.dims.begin(), f.dims.end(), 1);
  Matrix a(field, 1, 1), b(field, 1, 1);
  a(0, 0) = q.p0();
  b(0, 0) = q.p1();
  std::fill(f.x0.begin(), f.x0.end(), a);
  std::fill(f.x1.begin(), f.x1.end(), b);
  return f;
}

FunctorData direct_sum(const FunctorData& f, const FunctorData& g) {
  if (f.lo != g.lo || f.hi != g.hi || !(f.field == g.field)) {
    throw EngineError(ErrorCode::WindowMismatch, "direct sum needs identical windows and fields");
  }
  FunctorData s(f.field, f.lo, f.hi);
  for (std::size_t k = 0; k < s.dims.size(); ++k) s.dims[k] = f.dims[k] + g.dims[k];
  for (std::size_t k = 0; k < s.x0.size(); ++k) {
    s.x0[k] = block_diag(f.x0[k], g.x0[k]);
    s.x1[k] = block_diag(f.x1[k], g.x1[k]);
  }
  return s;
}

namespace {

// U and U^-1 built from the same elementary steps.
std::pair<Matrix, Matrix> unimodular_pair(Field field, std::size_t d, std::mt19937_64& rng) {
  Matrix u = Matrix::identity(field, d), v = Matrix::identity(field, d);
  if (d >= 2) {
    static const long long coeffs[] = {1, -1, 2, -2};
    for (std::size_t step = 0; step < 2 * d; ++step) {
      std::size_t r = rng() % d, s = rng() % (d - 1);
      if (s >= r) ++s;
      Scalar c = field.from_int(coeffs[rng() % 4]);
      // u <- (I + c e_r e_s^T) u ; v <- v (I - c e_r e_s^T)
      for (std::size_t j = 0; j < d; ++j) {
        if (!u(s, j).is_zero()) u(r, j).add_product(c, u(s, j));
        if (!v(j, r).is_zero()) v(j, s).sub_product(c, v(j, r));
      }
    }
  }
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = d; k > 1; --k) std::swap(perm[k - 1], perm[rng() % k]);
  Matrix pu(field, d, d), pv(field, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      pu(perm[i], j) = u(i, j);  // row i of u becomes row perm[i]
      pv(j, perm[i]) = v(j, i);
    }
  }
  return {pu, pv};
}

}  // namespace

GaugedFunctor gauge_scramble_with_witness(const FunctorData& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> u, uinv;
  for (std::size_t d : f.dims) {
    auto [a, b] = unimodular_pair(f.field, d, rng);
    u.push_back(std::move(a));
    uinv.push_back(std::move(b));
  }
  GaugedFunctor out{f, u};
  for (std::size_t k = 0; k < f.x0.size(); ++k) {
    out.functor.x0[k] = u[k + 1] * f.x0[k] * uinv[k];
    out.functor.x1[k] = u[k + 1] * f.x1[k] * uinv[k];
  }
  return out;
}

FunctorData gauge_scramble(const FunctorData& f, std::uint64_t seed) { return gauge_scramble_with_witness(f, seed).functor; }

Matrix act_poly(const FunctorData& f, const Form& form, long long n) {
  if (form.is_none()) throw std::invalid_argument("act_poly needs a form");
  const auto d = static_cast<long long>(form.degree());
  if (n - d < f.lo || n > f.hi) {
    throw EngineError(ErrorCode::WindowTooSmall, "form of degree " + std::to_string(d) + " into degree " +
                                                     std::to_string(n) + " leaves the window");
  }
  const long long base = n - d;
  // Horner in x1: H_d = c_d, H_j = x1 H_(j+1) + c_j x0^(d-j), result H_0.
  std::size_t max_power = 0;
  for (long long j = 0; j <= d; ++j) {
    if (!form.coeff(static_cast<std::size_t>(j)).is_zero()) max_power = std::max(max_power, static_cast<std::size_t>(d - j));
  }
  std::vector<Matrix> x0_pow{Matrix::identity(f.field, f.dim(base))};
  for (std::size_t e = 1; e <= max_power; ++e) x0_pow.push_back(f.A(base + static_cast<long long>(e)) * x0_pow.back());
  std::optional<Matrix> h;
  for (long long j = d; j >= 0; --j) {
    if (h) h = f.B(n - j) * *h;
    const Scalar& c = form.coeff(static_cast<std::size_t>(j));
    if (c.is_zero()) continue;
    Matrix term = x0_pow[static_cast<std::size_t>(d - j)] * c;
    if (h) {
      *h += term;
    } else {
      h = std::move(term);
    }
  }
  return h ? *h : Matrix::zero(f.field, f.dim(n), f.dim(base));
}

Matrix apply_bundle_map(const FunctorData& f, const BundleMap& m) {
  auto dim_of = [&](long long a) {
    if (!f.contains(a)) {
      throw EngineError(ErrorCode::WindowTooSmall, "O(" + std::to_string(a) + ") is outside the window");
    }
    return f.dim(a);
  };
  std::vector<std::size_t> roff{0}, coff{0};
  for (long long a : m.target()) roff.push_back(roff.back() + dim_of(a));
  for (long long a : m.source()) coff.push_back(coff.back() + dim_of(a));
  Matrix out(f.field, roff.back(), coff.back());
  for (std::size_t j = 0; j < m.target().size(); ++j) {
    for (std::size_t i = 0; i < m.source().size(); ++i) {
      const Form& e = m.entry(j, i);
      if (e.is_none() || e.is_zero()) continue;
      Matrix blk = act_poly(f, e, m.target()[j]);
      for (std::size_t r = 0; r < blk.rows(); ++r) {
        for (std::size_t c = 0; c < blk.cols(); ++c) out(roff[j] + r, coff[i] + c) = blk(r, c);
      }
    }
  }
  return out;
}

Cokernel cokernel(const Matrix& m) {
  const std::size_t w = m.rows();
  Subspace im = image(m);
  Subspace comp = complement(Subspace::full(m.field(), w), im);
  Matrix change = inverse(hstack(im.basis(), comp.basis()));
  return {comp.basis(), change.block(im.dim(), 0, comp.dim(), w)};
}

Cokernel evaluate_torsion_block(const FunctorData& f, const TorsionPresentation& p) {
  return cokernel(act_poly(f, p.relation(), p.top));
}

SheafValue evaluate_on_sheaf(const FunctorData& f, const CoherentSheaf& s, long long d) {
  SheafValue v;
  for (long long a : s.bundle) {
    if (!f.contains(a)) throw EngineError(ErrorCode::WindowTooSmall, "O(" + std::to_string(a) + ") is outside the window");
    v.bundle_dims.push_back(f.dim(a));
    v.dim += f.dim(a);
  }
  for (const auto& b : s.torsion.blocks()) {
    v.torsion_parts.push_back(evaluate_torsion_block(f, {b.point, b.mult, d}));
    v.dim += v.torsion_parts.back().dim();
  }
  return v;
}

Matrix apply_to_torsion_map(const FunctorData& f, const TorsionChainMap& c) {
  c.check();
  Cokernel src = evaluate_torsion_block(f, c.source);
  Cokernel tgt = evaluate_torsion_block(f, c.target);
  return tgt.quotient * act_poly(f, c.top_form, c.target.top) * src.section;
}

ExactnessReport exactness_report(const FunctorData& f, const SesOfBundles& s) {
  if (!(s.second * s.first).is_zero()) throw std::invalid_argument("sequence of bundles does not compose to zero");
  Matrix ff = apply_bundle_map(f, s.first);
  Matrix fs = apply_bundle_map(f, s.second);
  ExactnessReport r;
  r.composite_zero = (fs * ff).is_zero();
  const std::size_t rs = rank(fs), rf = rank(ff);
  r.right_exact = rs == fs.rows();
  r.middle_exact = r.composite_zero && rf == fs.cols() - rs;
  r.injective = rf == ff.cols();
  return r;
}

bool check_exactness_on_ses(const FunctorData& f, const SesOfBundles& s) {
  ExactnessReport r = exactness_report(f, s);
  if (!r.admissible()) {
    throw EngineError(ErrorCode::NotAdmissible, "F(E') -> F(E) -> F(E'') -> 0 is not exact on the right");
  }
  return r.injective;
}

}  // namespace p1bimod
