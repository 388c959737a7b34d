// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "p1bimod/corpus.hpp"
#include "p1bimod/error.hpp"

using namespace p1bimod;

namespace {

const Field Q = Field::rationals();

struct Outcome {
  std::size_t passed = 0, total = 0;
  std::string note;
  void tally(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (note.empty()) {
      note = what;
    }
  }
};

struct Instance {
  ComposeSpec spec;
  FunctorData f;
  std::optional<GammaData> gamma;
  std::optional<KernelData> kernel;
  std::optional<DecomposeResult> result;
  std::string error;
};

std::string describe(const ComposeSpec& s) { return s.decomposition.to_string() + " on [" + std::to_string(s.lo) + ", " + std::to_string(s.hi) + "]"; }

// Independent Cech computation by rank: the differential C0 -> C1 for O(a)
// on a Laurent box wide enough to hold every H^1 monomial (the differential
// is diagonal in monomials, so truncation is exact), and k[t]/t^m for a
// torsion block.
std::pair<std::size_t, std::size_t> cech_by_rank(const CoherentSheaf& s) {
  std::size_t h0 = 0, h1 = 0;
  for (long long a : s.bundle) {
    const long long k = std::abs(a) + 3;
    std::vector<long long> us;  // C1 basis x0^u x1^(a-u)
    for (long long u = -k; u <= k + std::abs(a); ++u) us.push_back(u);
    std::vector<std::pair<int, long long>> c0;  // (chart, u)
    for (long long u : us) {
      if (a - u >= 0) c0.push_back({0, u});  // regular on x0 != 0
      if (u >= 0) c0.push_back({1, u});      // regular on x1 != 0
    }
    Matrix d(Q, us.size(), c0.size());
    for (std::size_t c = 0; c < c0.size(); ++c) {
      const auto row = static_cast<std::size_t>(c0[c].second - us.front());
      d(row, c) = c0[c].first == 0 ? Q.one() : -Q.one();
    }
    const std::size_t r = rank(d);
    h0 += c0.size() - r;
    h1 += us.size() - r;
  }
  for (const auto& b : s.torsion.blocks()) {
    const std::size_t k = b.mult + 4;
    Matrix m(Q, k, k - b.mult);  // multiplication by t^m on k[t]_{<k-m}
    for (std::size_t j = 0; j + b.mult < k; ++j) m(j + b.mult, j) = Q.one();
    h0 += k - rank(m);
  }
  return {h0, h1};
}

std::vector<FunctorData> edge_instances() {
  const Field f5 = Field::prime(5), f7 = Field::prime(7), f3 = Field::prime(3), f2 = Field::prime(2);
  auto pq = [](long long a, long long b) { return P1Point(Q.from_int(a), Q.from_int(b)); };
  auto pf = [](Field f, long long a, long long b) { return P1Point(f.from_int(a), f.from_int(b)); };
  auto T = [](std::vector<TorsionBlock> b) { return TorsionSheaf(std::move(b)); };
  auto dec = [](Field field, Decomposition d, long long lo, long long hi, std::uint64_t seed) {
    FunctorData f = compose(field, d, lo, hi);
    return seed ? gauge_scramble(f, seed) : f;
  };
  return {
      FunctorData(Q, -4, 4),
      FunctorData(f5, -3, 3),
      FunctorData(Q, 0, 2),
      dec(Q, {T({{pq(1, 1), 1}}), {}}, -4, 4, 0),
      dec(Q, {T({{pq(0, 1), 3}}), {}}, -4, 4, 21),
      dec(Q, {T({{pq(0, 1), 2}, {pq(0, 1), 1}, {pq(1, 0), 1}, {pq(1, 2), 2}}), {}}, -3, 5, 22),
      dec(f5, {T({{pf(f5, 1, 3), 2}}), {}}, -4, 4, 23),
      dec(f2, {T({{pf(f2, 1, 0), 1}, {pf(f2, 1, 1), 1}}), {}}, -4, 4, 24),
      generator_rq(pq(1, 2), pq(1, 0), -4, 4),
      direct_sum(generator_rq(pq(1, 2), pq(1, 0), -4, 4), generator_rq(pq(0, 1), pq(1, 0), -4, 4)),
      dec(Q, {T({}), {{0, 1}}}, -6, 4, 0),
      dec(Q, {T({}), {{-3, 1}}}, -6, 4, 25),
      dec(Q, {T({}), {{1, 2}}}, -9, 4, 26),
      dec(Q, {T({}), {{0, 1}, {-2, 1}}}, -8, 4, 27),
      dec(Q, {T({{pq(1, 1), 1}}), {{-1, 1}}}, -7, 4, 28),
      dec(f7, {T({{pf(f7, 1, 4), 2}, {pf(f7, 0, 1), 1}}), {{0, 1}}}, -8, 4, 29),
      dec(Q, {T({{pq(1, 3), 2}, {pq(1, 3), 2}, {pq(1, 3), 1}}), {{-2, 1}}}, -8, 4, 30),
      dec(f3, {T({}), {{-1, 2}}}, -7, 4, 31),
      dec(Q, {T({{pq(0, 1), 1}, {pq(1, 0), 1}, {pq(1, 1), 1}, {pq(1, 2), 1}, {pq(1, 3), 1}}), {}}, -4, 4, 32),
      dec(Q, {T({{pq(0, 1), 3}, {pq(1, 1), 1}, {pq(1, 2), 2}}), {{1, 2}, {-3, 1}}}, -9, 4, 33),
  };
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };
  constexpr std::uint64_t kSeed = 20240601;
  constexpr std::size_t kCount = 200;

  // 1. compose, gauge, decompose
  auto t0 = clock::now();
  std::vector<Instance> corpus_instances;
  Outcome c1;
  for (const auto& spec : corpus(kSeed, kCount)) {
    Instance in{spec, compose(spec), {}, {}, {}, {}};
    try {
      in.gamma = gamma_window(in.f);
      in.kernel = kernel_functor(in.f, *in.gamma);
      in.result = decompose(in.f, *in.gamma, *in.kernel);
    } catch (const std::exception& e) {
      in.error = e.what();
    }
    const bool ok = in.result && in.result->decomposition == spec.decomposition;
    c1.tally(ok, describe(spec) + (in.error.empty() ? "" : ": " + in.error));
    corpus_instances.push_back(std::move(in));
  }
  const double t1 = seconds(t0);

  std::vector<std::pair<std::string, Outcome>> lines;
  Outcome timed = c1;
  if (t1 >= 60.0) timed.tally(false, "took " + std::to_string(t1) + " s");
  timed.note = (timed.note.empty() ? "" : timed.note + "; ") + std::to_string(t1) + " s";
  lines.push_back({"round_trip_decomposition", timed});

  // 2. certificate
  Outcome c2;
  for (const auto& in : corpus_instances) {
    c2.tally(in.result && verify_certificate(in.f, in.result->certificate).ok(), describe(in.spec));
  }
  lines.push_back({"splitting_certificate", c2});

  // 3. Gamma surjective with kernel of codimension length(W)
  Outcome c3;
  for (const auto& in : corpus_instances) {
    bool ok = in.gamma.has_value() && cok_vanishes(*in.gamma);
    if (ok) {
      const std::size_t len = in.gamma->w.length();
      for (long long n = in.f.lo; n <= in.f.hi; ++n) {
        const Matrix& g = in.gamma->gamma.at(n);
        ok = ok && g.rows() == len && kernel_basis(g).dim() + len == in.f.dim(n);
      }
    }
    c3.tally(ok, describe(in.spec));
  }
  lines.push_back({"gamma_short_exact_sequence", c3});

  // 4. integral transform tri-equivalence
  Outcome c4;
  auto tri = [&](const FunctorData& f, bool expected, const std::string& what) {
    try {
      auto v = integral_transform_verdict(f, CheckMode::Verify);
      c4.tally(v.value() == expected && *v.gamma_iso == expected && *v.exact_on_bundles == expected, what);
    } catch (const std::exception& e) {
      c4.tally(false, what + ": " + e.what());
    }
  };
  for (const auto& in : corpus_instances) tri(in.f, in.spec.decomposition.h1.empty(), describe(in.spec));
  {
    std::size_t k = 0;
    for (const auto& f : edge_instances()) {
      const bool constant = std::all_of(f.dims.begin(), f.dims.end(), [&](std::size_t d) { return d == f.dims.front(); });
      tri(f, constant, "edge instance " + std::to_string(k++));
    }
  }
  lines.push_back({"integral_transform_tri_equivalence", c4});

  // 5. pullback detection
  Outcome c5;
  auto pull = [&](const FunctorData& f, std::optional<P1Point> expected, const std::string& what) {
    try {
      auto r = is_pullback(f, CheckMode::Verify);
      c5.tally(r == expected, what);
    } catch (const std::exception& e) {
      c5.tally(false, what + ": " + e.what());
    }
  };
  for (const auto& in : corpus_instances) {
    const auto& d = in.spec.decomposition;
    std::optional<P1Point> expected;
    if (d.h1.empty() && d.torsion.blocks().size() == 1 && d.torsion.blocks().front().mult == 1) {
      expected = d.torsion.blocks().front().point;
    }
    pull(in.f, expected, describe(in.spec));
  }
  {
    std::uint64_t seed = 500;
    for (const auto& p : enumerate_points(Q, 6)) {
      pull(gauge_scramble(generator_h0_torsion(Q, TorsionSheaf({{p, 1}}), -4, 4), ++seed), p, "simple " + p.to_string());
    }
  }
  lines.push_back({"pullback_detection", c5});

  // 6. mu-system and stalk colimits, first 50 instances
  Outcome c6;
  for (std::size_t k = 0; k < 50; ++k) {
    const auto& in = corpus_instances[k];
    if (!in.gamma) {
      c6.tally(false, describe(in.spec));
      continue;
    }
    const TorsionSheaf& w = in.gamma->w;
    std::vector<P1Point> pts;
    for (const auto& p : w.support()) {
      if (pts.size() < 2) pts.push_back(p);
    }
    for (const auto& p : avoiding_points(w, in.f.field, 3 - pts.size())) pts.push_back(p);
    for (const auto& p : pts) {
      c6.tally(colimit_sequence(mu_system(in.f, p)).limit_dim == 0, describe(in.spec) + " at " + p.to_string());
    }
    c6.tally(colimit_sequence(stalk_system(in.f, in.gamma->avoiding)).limit_dim == w.length(), describe(in.spec) + " stalk");
  }
  lines.push_back({"mu_colimit_zero_and_stalk_length", c6});

  // 7. kernel functor: every tested form epic, zero from n_stab on
  Outcome c7;
  const auto forms = enumerate_points(Q, 6);
  for (const auto& in : corpus_instances) {
    if (!in.kernel) {
      c7.tally(false, describe(in.spec));
      continue;
    }
    const FunctorData& k = in.kernel->functor;
    bool ok = true;
    for (const auto& p : forms) {
      const Form l = vanishing_form(p);
      for (long long n = k.lo + 1; n <= k.hi; ++n) ok = ok && rank(k.linear_action(l, n)) == k.dim(n);
    }
    for (long long n = in.gamma->stab.n_stab; n <= k.hi; ++n) ok = ok && k.dim(n) == 0;
    c7.tally(ok, describe(in.spec));
  }
  lines.push_back({"kernel_epic_and_vanishing", c7});

  // 8. R_q: l_p acts invertibly, l_q by zero, at every degree
  Outcome c8;
  {
    auto pts = enumerate_points(Q, 5);
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < pts.size() && pairs < 10; ++a) {
      for (std::size_t b = 0; b < pts.size() && pairs < 10; ++b) {
        if (a == b) continue;
        ++pairs;
        const P1Point &q = pts[a], &p = pts[b];
        FunctorData r = generator_rq(q, p, -5, 5);
        const Form lp = vanishing_form(p), lq = vanishing_form(q);
        bool ok = validate(r).empty();
        for (long long n = -4; n <= 5; ++n) {
          Matrix ap = r.linear_action(lp, n), bq = r.linear_action(lq, n);
          ok = ok && is_invertible(ap) && ap(0, 0) == lp.eval(q) && bq.is_zero();
        }
        c8.tally(ok, "q = " + q.to_string() + ", p = " + p.to_string());
      }
    }
  }
  lines.push_back({"rq_alpha_iso_beta_zero", c8});

  // 9. cohomology formulas against a Cech computation
  Outcome c9;
  {
    std::mt19937_64 rng(kSeed ^ 0x5eedULL);
    auto pts = enumerate_points(Q, 6);
    for (int s = 0; s < 30; ++s) {
      std::vector<long long> bundle;
      for (auto b = rng() % 4; b > 0; --b) bundle.push_back(static_cast<long long>(rng() % 9) - 4);
      std::vector<TorsionBlock> blocks;
      for (auto b = rng() % 3; b > 0; --b) blocks.push_back({pts[rng() % pts.size()], 1 + rng() % 3});
      CoherentSheaf sheaf(bundle, TorsionSheaf(blocks));
      for (long long i = -10; i <= 10; ++i) {
        CoherentSheaf t = twist(sheaf, i);
        auto [h0, h1] = cech_by_rank(t);
        c9.tally(h0 == h0_dim(t) && h1 == h1_dim(t), "sheaf " + std::to_string(s) + " twist " + std::to_string(i));
      }
    }
  }
  lines.push_back({"cohomology_cech_agreement", c9});

  // 10. eventual kernel independent of the avoiding point
  Outcome c10;
  for (std::size_t k = 0; k < 50; ++k) {
    const auto& in = corpus_instances[k];
    if (!in.gamma) {
      c10.tally(false, describe(in.spec));
      continue;
    }
    auto pts = avoiding_points(in.gamma->w, in.f.field, 2);
    auto a = eventual_kernels(in.f, pts[0]), b = eventual_kernels(in.f, pts[1]);
    bool ok = true;
    for (long long n = in.f.lo; n <= in.f.hi; ++n) {
      const auto idx = static_cast<std::size_t>(n - in.f.lo);
      ok = ok && a[idx] == b[idx] && a[idx] == eventual_kernel(in.f, n, pts[1]);
    }
    c10.tally(ok, describe(in.spec));
  }
  lines.push_back({"eventual_kernel_point_independent", c10});

  bool all = true;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& [name, o] = lines[k];
    const bool ok = o.total > 0 && o.passed == o.total;
    all = all && ok;
    std::printf("%s %2zu %-36s %zu/%zu  %s\n", ok ? "PASS" : "FAIL", k + 1, name.c_str(), o.passed, o.total,
                o.note.c_str());
  }
  std::printf("total %.1f s\n", seconds(t0));
  return all ? 0 : 1;
}
