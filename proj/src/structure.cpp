#include "p1bimod/structure.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "p1bimod/error.hpp"
#include "p1bimod/pencil.hpp"

namespace p1bimod {

std::string Decomposition::to_string() const {
  std::string s = "torsion " + torsion.to_string() + "; h1 {";
  bool first = true;
  for (const auto& [i, l] : h1) {
    s += (first ? "" : ", ") + std::to_string(i) + ":" + std::to_string(l);
    first = false;
  }
  return s + "}";
}

FunctorData h1_model(Field field, const H1Mults& mults, long long lo, long long hi) {
  FunctorData f(field, lo, hi);
  for (const auto& [i, l] : mults) {
    FunctorData g = generator_h1(field, i, lo, hi);
    for (std::size_t c = 0; c < l; ++c) f = direct_sum(f, g);
  }
  return f;
}

FunctorData compose(Field field, const Decomposition& d, long long lo, long long hi) {
  return direct_sum(h1_model(field, d.h1, lo, hi), generator_h0_torsion(field, d.torsion, lo, hi));
}

std::size_t predicted_dim(const Decomposition& d, long long n) {
  std::size_t dim = d.torsion.length();
  for (const auto& [i, l] : d.h1) dim += l * static_cast<std::size_t>(std::max(0LL, -n - i - 1));
  return dim;
}

H1Mults h1_multiplicities_from_dims(long long lo, const std::vector<std::size_t>& kdims) {
  const long long hi = lo + static_cast<long long>(kdims.size()) - 1;
  auto d = [&](long long n) { return static_cast<long long>(kdims[static_cast<std::size_t>(n - lo)]); };
  if (hi - lo < 2) throw EngineError(ErrorCode::WindowTooSmall, "need at least three kernel dimensions");
  if (d(hi) != 0) throw EngineError(ErrorCode::WindowTooSmall, "kernel has not vanished at the top of the window");
  // e(n) for lo < n <= hi + 1; the kernel stays 0 above hi
  auto e = [&](long long n) { return n > hi ? 0 : d(n - 1) - d(n); };
  if (e(lo + 1) != e(lo + 2)) {
    throw EngineError(ErrorCode::WindowTooSmall, "kernel dimensions have not reached constant slope at the bottom");
  }
  H1Mults out;
  for (long long i = -hi - 1; i <= -lo - 2; ++i) {
    long long l = e(-i - 1) - e(-i);
    if (l < 0) throw EngineError(ErrorCode::NotAdmissible, "negative H^1 multiplicity at i = " + std::to_string(i));
    if (l > 0) out[i] = static_cast<std::size_t>(l);
  }
  Decomposition check{{}, out};
  for (long long n = lo; n <= hi; ++n) {
    if (static_cast<long long>(predicted_dim(check, n)) != d(n)) {
      throw EngineError(ErrorCode::NotAdmissible, "H^1 multiplicities do not reproduce the kernel dimension at " +
                                                      std::to_string(n));
    }
  }
  return out;
}

H1Isomorphism build_h1_isomorphism(const FunctorData& ker, const H1Mults& mults) {
  const Field field = ker.field;
  const long long lo = ker.lo, hi = ker.hi;
  H1Isomorphism out{h1_model(field, mults, lo, hi), {lo, hi, {}}, {lo, hi, {}}};
  if (ker.dims != out.model.dims) throw EngineError(ErrorCode::NotAdmissible, "kernel dimensions do not match the H^1 model");
  if (ker.dim(hi) != 0) throw EngineError(ErrorCode::WindowTooSmall, "kernel has not vanished at the top of the window");
  for (const auto& [i, l] : mults) {
    if (i + 2 <= -hi || i + 2 > -lo) {
      throw EngineError(ErrorCode::NotAdmissible, "H^1 index " + std::to_string(i) + " has no generator in the window");
    }
  }

  // Dual module D(e) = Ker(O(-e))^*, e in [-hi, -lo]; x : D(e-1) -> D(e) is
  // the transpose of Ker's x : Ker(O(-e)) -> Ker(O(1-e)).
  auto dual_x0 = [&](long long e) { return ker.A(1 - e).transpose(); };
  auto dual_x1 = [&](long long e) { return ker.B(1 - e).transpose(); };

  // images[g][t][j] = x0^(t-j) x1^j * generator g, a vector of D(e_g + t)
  struct Generator {
    long long e;
    std::vector<std::vector<Matrix>> images;
  };
  std::map<long long, std::vector<Generator>> gens;  // by H^1 index i = e - 2
  for (long long e = -hi + 1; e <= -lo; ++e) {
    const std::size_t dim = ker.dim(-e);
    Subspace below = image(hstack(dual_x0(e), dual_x1(e)));
    Subspace fresh = complement(Subspace::full(field, dim), below);
    auto it = mults.find(e - 2);
    const std::size_t expected = it == mults.end() ? 0 : it->second;
    if (fresh.dim() != expected) {
      throw EngineError(ErrorCode::NotAdmissible, "dual kernel has " + std::to_string(fresh.dim()) +
                                                      " new generators in degree " + std::to_string(e) + ", expected " +
                                                      std::to_string(expected));
    }
    for (std::size_t c = 0; c < fresh.dim(); ++c) {
      Generator g{e, {{fresh.basis().select_cols(std::vector<std::size_t>{c})}}};
      for (long long t = 1; e + t <= -lo; ++t) {
        Matrix x0 = dual_x0(e + t), x1 = dual_x1(e + t);
        const auto& prev = g.images.back();
        std::vector<Matrix> next;
        for (const auto& v : prev) next.push_back(x0 * v);
        next.push_back(x1 * prev.back());
        g.images.push_back(std::move(next));
      }
      gens[e - 2].push_back(std::move(g));
    }
  }

  for (long long n = lo; n <= hi; ++n) {
    // psi_e : D_model(e) -> D(e); the dual Cech basis element of
    // x0^-a x1^-b is x0^(a-1) x1^(b-1) times the generator.
    Matrix psi(field, ker.dim(n), 0);
    for (const auto& [i, list] : gens) {
      const long long big_n = -(n + i);
      for (const auto& g : list) {
        for (long long a = big_n - 1; a >= 1; --a) {
          const long long b = big_n - a;
          psi = hstack(psi, g.images[static_cast<std::size_t>(a + b - 2)][static_cast<std::size_t>(b - 1)]);
        }
      }
    }
    Matrix phi = psi.transpose();
    if (!is_invertible(phi)) {
      throw EngineError(ErrorCode::NotAdmissible, "H^1 comparison map is singular at degree " + std::to_string(n));
    }
    out.from_model.components.push_back(inverse(phi));
    out.to_model.components.push_back(std::move(phi));
  }
  return out;
}

std::pair<P1Point, P1Point> splitting_points(const TorsionSheaf& w, Field field) {
  if (w.empty()) {
    auto pts = avoiding_points(w, field, 2);
    return {pts[0], pts[1]};
  }
  return {choose_avoiding_point(w, field), w.support().front()};
}

NatTransWindow build_splitting(const FunctorData& f, const KernelData& ker, const P1Point& alpha, const P1Point& beta) {
  const FunctorData& k = ker.functor;
  if (k.dim(f.hi) != 0) throw EngineError(ErrorCode::WindowTooSmall, "kernel has not vanished at the top of the window");
  long long n0 = f.hi;
  while (n0 > f.lo && k.dim(n0 - 1) == 0) --n0;

  NatTransWindow lambda{f.lo, f.hi, std::vector<Matrix>(f.dims.size())};
  for (long long n = n0; n <= f.hi; ++n) lambda.components[static_cast<std::size_t>(n - f.lo)] = Matrix::zero(f.field, 0, f.dim(n));
  const Form la = vanishing_form(alpha), lb = vanishing_form(beta);
  for (long long n = n0; n > f.lo; --n) {
    const Matrix& lam = lambda.at(n);
    // B_n = ker Lambda_n, so the preimage intersection is one kernel
    Subspace pre = kernel_basis(vstack(lam * f.linear_action(la, n), lam * f.linear_action(lb, n)));
    Subspace pair = kernel_basis(vstack(k.linear_action(la, n), k.linear_action(lb, n)));
    const Matrix& theta = ker.theta.at(n - 1);
    Subspace kset = Subspace::span(theta * pair.basis());
    if (!pre.contains(kset)) {
      throw EngineError(ErrorCode::NotAdmissible, "theta(K) leaves the preimage of B_" + std::to_string(n));
    }
    Subspace b = complement(pre, kset);
    Matrix basis = hstack(theta, b.basis());
    if (!basis.is_square() || !is_invertible(basis)) {
      throw EngineError(ErrorCode::NotAdmissible,
                        "B_" + std::to_string(n - 1) + " is not complementary to the image of theta");
    }
    lambda.components[static_cast<std::size_t>(n - 1 - f.lo)] = inverse(basis).block(0, 0, theta.cols(), basis.rows());
  }
  return lambda;
}

CertificateCheck verify_certificate(const FunctorData& f, const SplittingCertificate& c) {
  CertificateCheck r;
  r.theta_natural = is_natural(c.theta, c.kernel, f);
  r.gamma_natural = is_natural(c.gamma, f, c.torsion_model);
  r.lambda_natural = is_natural(c.lambda, f, c.kernel);
  r.h1_iso_natural = is_natural(c.h1_iso, c.kernel, c.h1_model);
  r.iso_natural = is_natural(c.iso, f, c.model);
  if (r.theta_natural && r.lambda_natural) {
    r.lambda_theta_identity = true;
    for (long long n = f.lo; n <= f.hi; ++n) {
      if (!(c.lambda.at(n) * c.theta.at(n)).is_identity()) r.lambda_theta_identity = false;
    }
  }
  if (r.iso_natural) {
    r.iso_invertible = std::all_of(c.iso.components.begin(), c.iso.components.end(),
                                   [](const Matrix& m) { return is_invertible(m); });
  }
  return r;
}

DecomposeResult decompose(const FunctorData& f, const GammaData& g, const KernelData& k) {
  if (!cok_vanishes(g)) throw EngineError(ErrorCode::NotAdmissible, "Gamma is not surjective");
  DecomposeResult out;
  out.gamma = g;
  out.decomposition.torsion = g.w;
  out.decomposition.h1 = h1_multiplicities_from_dims(f.lo, k.functor.dims);
  H1Isomorphism h1 = build_h1_isomorphism(k.functor, out.decomposition.h1);
  auto [alpha, beta] = splitting_points(g.w, f.field);

  SplittingCertificate& c = out.certificate;
  c.lo = f.lo;
  c.hi = f.hi;
  c.kernel = k.functor;
  c.h1_model = h1.model;
  c.torsion_model = g.model;
  c.model = direct_sum(h1.model, g.model);
  c.theta = k.theta;
  c.gamma = g.gamma;
  c.lambda = build_splitting(f, k, alpha, beta);
  c.h1_iso = h1.to_model;
  c.iso = {f.lo, f.hi, {}};
  for (long long n = f.lo; n <= f.hi; ++n) c.iso.components.push_back(vstack(c.h1_iso.at(n) * c.lambda.at(n), c.gamma.at(n)));
  out.check = verify_certificate(f, c);
  if (!out.check.ok()) throw EngineError(ErrorCode::NotAdmissible, "splitting certificate does not verify");
  return out;
}

DecomposeResult decompose(const FunctorData& f) {
  auto v = validate(f);
  if (!v.empty()) {
    throw EngineError(ErrorCode::NotAdmissible, "degree " + std::to_string(v.front().degree) + ": " + v.front().message);
  }
  GammaData g = gamma_window(f);
  KernelData k = kernel_functor(f, g);
  return decompose(f, g, k);
}

std::vector<SesOfBundles> koszul_battery(const FunctorData& f) {
  std::vector<SesOfBundles> out;
  auto pts = enumerate_points(f.field, 3);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      for (long long j = f.lo + 2; j <= f.hi; ++j) {
        auto [first, second] = koszul_sequence(j, pts[a], pts[b]);
        out.push_back({first, second});
      }
    }
  }
  return out;
}

namespace {

bool exact_on_battery(const FunctorData& f) {
  bool exact = true;
  for (const auto& ses : koszul_battery(f)) {
    if (!check_exactness_on_ses(f, ses)) exact = false;
  }
  return exact;
}

bool dims_constant(const FunctorData& f) {
  return std::all_of(f.dims.begin(), f.dims.end(), [&](std::size_t d) { return d == f.dims.front(); });
}

}  // namespace

IntegralVerdict integral_transform_verdict(const FunctorData& f, CheckMode mode) {
  IntegralVerdict v;
  v.dims_constant = dims_constant(f);
  if (mode == CheckMode::Quick) return v;
  GammaData g = gamma_window(f);
  v.gamma_iso = std::all_of(g.gamma.components.begin(), g.gamma.components.end(),
                            [](const Matrix& m) { return is_invertible(m); });
  v.exact_on_bundles = exact_on_battery(f);
  if (*v.gamma_iso != v.dims_constant || *v.exact_on_bundles != v.dims_constant) {
    throw EngineError(ErrorCode::Disagreement,
                      std::string("constant dims ") + (v.dims_constant ? "yes" : "no") + ", Gamma iso " +
                          (*v.gamma_iso ? "yes" : "no") + ", exact on bundles " + (*v.exact_on_bundles ? "yes" : "no"));
  }
  return v;
}

bool is_integral_transform(const FunctorData& f, CheckMode mode) { return integral_transform_verdict(f, mode).value(); }

std::optional<P1Point> is_pullback(const FunctorData& f, CheckMode mode) {
  const bool all_one = std::all_of(f.dims.begin(), f.dims.end(), [](std::size_t d) { return d == 1; });
  std::optional<P1Point> r;
  if (all_one) {
    TorsionSheaf w = compute_W(f);
    if (w.blocks().size() == 1 && w.blocks().front().mult == 1) r = w.blocks().front().point;
  }
  if (mode == CheckMode::Quick) return r;

  IntegralVerdict iv = integral_transform_verdict(f, CheckMode::Verify);
  TorsionSheaf w = compute_W(f);
  const bool simple = w.blocks().size() == 1 && w.blocks().front().mult == 1;
  const bool cond1 = *iv.gamma_iso && simple;
  const bool some_one = std::any_of(f.dims.begin(), f.dims.end(), [](std::size_t d) { return d == 1; });
  const bool cond3 = *iv.exact_on_bundles && some_one;
  if (cond1 != all_one || cond3 != all_one || r.has_value() != all_one) {
    throw EngineError(ErrorCode::Disagreement, "pullback conditions disagree");
  }
  return r;
}

namespace {

Cokernel cokernel_of(const Subspace& im) {
  Subspace comp = complement(Subspace::full(im.field(), im.ambient_dim()), im);
  Matrix change = inverse(hstack(im.basis(), comp.basis()));
  return {comp.basis(), change.block(im.dim(), 0, comp.dim(), im.ambient_dim())};
}

}  // namespace

MapSequence mu_system(const FunctorData& f, const P1Point& p) {
  const Form l = vanishing_form(p);
  const long long steps = f.hi - f.lo;
  if (steps < 2) throw EngineError(ErrorCode::WindowTooSmall, "window too short for the local cohomology system");
  // O_i = cok(l^i : O(lo) -> O(lo + i)); only the image of F(l^i) matters.
  std::vector<Cokernel> terms;
  Subspace im = Subspace::full(f.field, f.dim(f.lo));
  for (long long i = 1; i <= steps; ++i) {
    im = Subspace::span(f.linear_action(l, f.lo + i) * im.basis());
    terms.push_back(cokernel_of(im));
  }
  MapSequence s;
  for (const auto& c : terms) s.dims.push_back(c.dim());
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    // mu_{i,i+1} has chain data (l_p, 1)
    s.maps.push_back(terms[i + 1].quotient * f.linear_action(l, f.lo + static_cast<long long>(i) + 2) * terms[i].section);
  }
  return s;
}

MapSequence stalk_system(const FunctorData& f, const P1Point& p) {
  const Form l = vanishing_form(p);
  MapSequence s{f.dims, {}};
  for (long long n = f.lo + 1; n <= f.hi; ++n) s.maps.push_back(f.linear_action(l, n));
  return s;
}

bool PropertyReport::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const PropertyEntry& e) { return e.status == "fail"; });
}

const PropertyEntry* PropertyReport::find(const std::string& claim) const {
  for (const auto& e : entries) {
    if (e.claim == claim) return &e;
  }
  return nullptr;
}

namespace {

struct Check {
  bool pass;
  std::string detail;
};

bool surjective(const Matrix& m) { return rank(m) == m.rows(); }

}  // namespace

PropertyReport run_property_suite(const FunctorData& f) {
  PropertyReport rep;
  auto run = [&](const std::string& claim, const std::function<Check()>& fn) {
    PropertyEntry e{claim, false, "fail", ""};
    try {
      Check c = fn();
      e.pass = c.pass;
      e.status = c.pass ? "pass" : "fail";
      e.detail = c.detail;
    } catch (const EngineError& err) {
      // an unconfirmed colimit is a window too short to decide, not a false claim
      const bool short_window = err.code() == ErrorCode::WindowTooSmall || err.code() == ErrorCode::NoStabilization;
      e.status = short_window ? "window_too_small" : "fail";
      e.detail = err.what();
    } catch (const std::exception& err) {
      e.detail = err.what();
    }
    rep.entries.push_back(std::move(e));
  };

  // Shared stages; a stage that throws rethrows into every claim needing it.
  std::optional<GammaData> gamma;
  std::optional<KernelData> kernel;
  std::optional<DecomposeResult> dec;
  std::exception_ptr gamma_err, kernel_err, dec_err;
  try {
    gamma = gamma_window(f);
  } catch (...) {
    gamma_err = std::current_exception();
  }
  auto need_gamma = [&]() -> const GammaData& {
    if (gamma_err) std::rethrow_exception(gamma_err);
    return *gamma;
  };
  if (gamma) {
    try {
      kernel = kernel_functor(f, *gamma);
    } catch (...) {
      kernel_err = std::current_exception();
    }
  }
  auto need_kernel = [&]() -> const KernelData& {
    need_gamma();
    if (kernel_err) std::rethrow_exception(kernel_err);
    return *kernel;
  };
  if (kernel) {
    try {
      dec = decompose(f, *gamma, *kernel);
    } catch (...) {
      dec_err = std::current_exception();
    }
  }
  auto need_dec = [&]() -> const DecomposeResult& {
    need_kernel();
    if (dec_err) std::rethrow_exception(dec_err);
    return *dec;
  };

  run("functor_laws", [&] {
    auto v = validate(f);
    return Check{v.empty(), v.empty() ? "" : v.front().message};
  });
  run("w_window_stable", [&] {
    TorsionSheaf a = compute_W(f), b = compute_W_at(f, f.hi - 1);
    return Check{a == b, a.to_string() + " vs " + b.to_string()};
  });
  run("gamma_natural", [&] {
    const auto& g = need_gamma();
    return Check{is_natural(g.gamma, f, g.model), ""};
  });
  run("gamma_surjective", [&] { return Check{cok_vanishes(need_gamma()), ""}; });
  run("kernel_dimension_law", [&] {
    const auto& g = need_gamma();
    for (long long n = f.lo; n <= f.hi; ++n) {
      if (kernel_basis(g.gamma.at(n)).dim() + g.w.length() != f.dim(n)) return Check{false, "degree " + std::to_string(n)};
    }
    return Check{true, ""};
  });
  run("gamma_kernel_is_eventual_kernel", [&] {
    const auto& g = need_gamma();
    auto ek = eventual_kernels(f, g.avoiding);
    for (long long n = f.lo; n <= f.hi; ++n) {
      if (!(kernel_basis(g.gamma.at(n)) == ek[static_cast<std::size_t>(n - f.lo)])) {
        return Check{false, "degree " + std::to_string(n)};
      }
    }
    return Check{true, ""};
  });
  run("eventual_kernel_point_independent", [&] {
    const auto& g = need_gamma();
    auto pts = avoiding_points(g.w, f.field, 2);
    auto a = eventual_kernels(f, pts[0]), b = eventual_kernels(f, pts[1]);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!(a[k] == b[k])) return Check{false, "degree " + std::to_string(f.lo + static_cast<long long>(k))};
    }
    return Check{true, pts[0].to_string() + " and " + pts[1].to_string()};
  });
  run("kernel_epic_avoiding_form", [&] {
    const auto& k = need_kernel().functor;
    const Form l = vanishing_form(need_gamma().avoiding);
    for (long long n = f.lo + 1; n <= f.hi; ++n) {
      if (!surjective(k.linear_action(l, n))) return Check{false, "degree " + std::to_string(n)};
    }
    return Check{true, ""};
  });
  run("kernel_epic_all_forms", [&] {
    const auto& k = need_kernel().functor;
    for (const auto& p : enumerate_points(f.field, 4)) {
      const Form l = vanishing_form(p);
      for (long long n = f.lo + 1; n <= f.hi; ++n) {
        if (!surjective(k.linear_action(l, n))) return Check{false, p.to_string() + " at degree " + std::to_string(n)};
      }
    }
    return Check{true, ""};
  });
  run("kernel_epic_propagates_downward", [&] {
    const auto& k = need_kernel().functor;
    for (const auto& p : enumerate_points(f.field, 4)) {
      const Form l = vanishing_form(p);
      bool seen_epic = false;
      for (long long n = f.hi; n > f.lo; --n) {
        bool epic = surjective(k.linear_action(l, n));
        if (seen_epic && !epic) return Check{false, p.to_string() + " at degree " + std::to_string(n)};
        seen_epic = seen_epic || epic;
      }
    }
    return Check{true, ""};
  });
  run("kernel_vanishes_above_stabilization", [&] {
    const auto& k = need_kernel().functor;
    const long long s = need_gamma().stab.n_stab;
    for (long long n = s; n <= f.hi; ++n) {
      if (k.dim(n) != 0) return Check{false, "degree " + std::to_string(n)};
    }
    return Check{true, "n_stab = " + std::to_string(s)};
  });
  run("kernel_pencil_empty", [&] {
    const auto& k = need_kernel().functor;
    Form det = pencil_determinant(k.A(f.hi), k.B(f.hi));
    return Check{det.degree() == 0 && det.coeff(0).is_one(), "det = " + det.to_string()};
  });
  run("raw_pencil_determinant_degree", [&] {
    const auto& g = need_gamma();
    Form det = pencil_determinant(f.A(f.hi), f.B(f.hi));
    if (det.is_zero() || det.degree() != g.stab.top_dim) return Check{false, "det = " + det.to_string()};
    for (const auto& p : g.w.support()) {
      std::size_t mult = 0;
      for (const auto& b : g.w.blocks()) mult += b.point == p ? b.mult : 0;
      // det(x0 A + x1 B) vanishes at (p1, -p0) for an eigenpoint [p0:p1]
      if (det.order_at(P1Point(p.p1(), -p.p0())) != mult) return Check{false, "order at " + p.to_string()};
    }
    return Check{true, "degree " + std::to_string(det.degree())};
  });
  run("mu_system_colimit_zero", [&] {
    const auto& g = need_gamma();
    std::vector<P1Point> pts;
    for (const auto& p : g.w.support()) {
      if (pts.size() < 2) pts.push_back(p);
    }
    for (const auto& p : avoiding_points(g.w, f.field, 3 - pts.size())) pts.push_back(p);
    for (const auto& p : pts) {
      auto c = colimit_sequence(mu_system(f, p));
      if (c.limit_dim != 0) return Check{false, "limit " + std::to_string(c.limit_dim) + " at " + p.to_string()};
    }
    return Check{true, ""};
  });
  run("stalk_colimit_length", [&] {
    const auto& g = need_gamma();
    auto c = colimit_sequence(stalk_system(f, g.avoiding));
    return Check{c.limit_dim == g.w.length(), "limit " + std::to_string(c.limit_dim)};
  });
  run("dimension_law", [&] {
    const auto& d = need_dec().decomposition;
    for (long long n = f.lo; n <= f.hi; ++n) {
      if (predicted_dim(d, n) != f.dim(n)) return Check{false, "degree " + std::to_string(n)};
    }
    return Check{true, d.to_string()};
  });
  run("splitting_certificate", [&] { return Check{verify_certificate(f, need_dec().certificate).ok(), ""}; });
  run("integral_transform_agreement", [&] {
    need_gamma();
    auto v = integral_transform_verdict(f, CheckMode::Verify);
    return Check{true, v.value() ? "integral transform" : "not an integral transform"};
  });
  run("pullback_agreement", [&] {
    need_gamma();
    auto r = is_pullback(f, CheckMode::Verify);
    return Check{true, r ? "pullback at " + r->to_string() : "not a pullback"};
  });
  return rep;
}

}  // namespace p1bimod
