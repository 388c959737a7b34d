#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1bimod/error.hpp"
#include "p1bimod/functor.hpp"

using namespace p1bimod;

namespace {

const Field Q = Field::rationals();

P1Point pt(long long a, long long b) { return P1Point(Q.from_int(a), Q.from_int(b)); }
Matrix M(const std::vector<std::vector<long long>>& rows) { return Matrix::from_ints(Q, rows); }
TorsionSheaf T(std::vector<TorsionBlock> b) { return TorsionSheaf(std::move(b)); }

// x0^a x1^b applied one factor at a time, x0 factors first.
Matrix monomial_action(const FunctorData& f, std::size_t a, std::size_t b, long long n, bool x0_first) {
  long long deg = n - static_cast<long long>(a + b);
  Matrix m = Matrix::identity(f.field, f.dim(deg));
  for (std::size_t k = 0; k < a + b; ++k) {
    bool use_x0 = x0_first ? k < a : k >= b;
    ++deg;
    m = (use_x0 ? f.A(deg) : f.B(deg)) * m;
  }
  return m;
}

}  // namespace

TEST_CASE("generators validate and restrict") {
  auto pts = enumerate_points(Q, 6);
  for (long long i = -4; i <= 2; ++i) {
    auto g = generator_h1(Q, i, -8, 3);
    CHECK(validate(g).empty());
    CHECK(restrict_window(g, -5, 1) == generator_h1(Q, i, -5, 1));
  }
  TorsionSheaf t = T({{pts[0], 2}, {pts[1], 1}, {pts[3], 3}, {pts[3], 1}});
  auto g = generator_h0_torsion(Q, t, -3, 3);
  CHECK(validate(g).empty());
  CHECK(restrict_window(g, 0, 2) == generator_h0_torsion(Q, t, 0, 2));
  CHECK(validate(generator_rq(pts[2], pts[0], -3, 3)).empty());
  CHECK(validate(FunctorData(Q, 2, 2)).empty());
  CHECK_THROWS_AS(restrict_window(g, -4, 0), EngineError);
}

TEST_CASE("validate finds a swapped pair") {
  auto g = generator_h0_torsion(Q, T({{pt(2, 1), 1}, {pt(3, 1), 1}}), -2, 2);
  std::swap(g.A(0), g.B(0));
  auto v = validate(g);
  REQUIRE_FALSE(v.empty());
  for (const auto& x : v) CHECK((x.degree == 0 || x.degree == 1));
  auto shape = generator_h1(Q, 0, -4, 0);
  shape.A(-2) = M({{1}});
  CHECK(validate(shape).size() == 1);
}

TEST_CASE("torsion generator matrices") {
  auto g = generator_h0_torsion(Q, T({{pt(2, 1), 1}}), -2, 2);
  for (long long n = -1; n <= 2; ++n) {
    CHECK(g.A(n) == M({{2}}));
    CHECK(g.B(n) == M({{1}}));
  }
  auto nil = generator_h0_torsion(Q, T({{pt(0, 1), 2}}), 0, 1);
  CHECK(nil.A(1) == M({{0, 1}, {0, 0}}));
  CHECK(nil.B(1).is_identity());
  auto inf = generator_h0_torsion(Q, T({{pt(1, 0), 2}}), 0, 1);
  CHECK(inf.A(1).is_identity());
  CHECK(inf.B(1) == M({{0, 1}, {0, 0}}));
  CHECK(generator_h0_torsion(Q, T({{pt(0, 1), 1}, {pt(1, 1), 2}}), 0, 3).dims == std::vector<std::size_t>{3, 3, 3, 3});
}

TEST_CASE("H1 generator matrices") {
  auto g = generator_h1(Q, 0, -3, 0);
  CHECK(g.dims == std::vector<std::size_t>{2, 1, 0, 0});
  CHECK(g.A(-1).rows() == 0);
  CHECK(g.A(-1).cols() == 1);
  CHECK(g.B(-1).rows() == 0);
  CHECK(g.A(-2) == M({{1, 0}}));
  CHECK(g.B(-2) == M({{0, 1}}));
}

TEST_CASE("R_q generator") {
  auto pts = enumerate_points(Q, 5);
  auto r = generator_rq(pt(1, 1), pt(0, 1), -3, 3);
  CHECK(r.A(0) == M({{1}}));
  CHECK(r.B(0) == M({{1}}));
  for (long long n = -2; n <= 3; ++n) {
    CHECK(act_poly(r, vanishing_form(pt(1, 1)), n).is_zero());
    CHECK(act_poly(r, vanishing_form(pt(0, 1)), n) == M({{1}}));
  }
  CHECK_THROWS_AS(generator_rq(pts[1], pts[1], 0, 2), EngineError);
}

TEST_CASE("direct sums") {
  auto h = generator_h1(Q, 0, -4, 2);
  auto t = generator_h0_torsion(Q, T({{pt(1, 1), 1}}), -4, 2);
  auto s = direct_sum(h, t);
  CHECK(s.dim(-2) == 2);
  CHECK(validate(s).empty());
  CHECK(direct_sum(h, FunctorData(Q, -4, 2)) == h);
  CHECK_THROWS_AS(direct_sum(h, generator_h1(Q, 0, -3, 2)), EngineError);
}

TEST_CASE("gauge scramble") {
  auto f = direct_sum(generator_h1(Q, -1, -6, 3), generator_h0_torsion(Q, T({{pt(0, 1), 2}, {pt(1, 2), 1}}), -6, 3));
  auto g1 = gauge_scramble_with_witness(f, 42);
  CHECK(g1.functor == gauge_scramble(f, 42));
  CHECK_FALSE(g1.functor == gauge_scramble(f, 43));
  CHECK(validate(g1.functor).empty());
  for (long long n = f.lo + 1; n <= f.hi; ++n) {
    const Matrix& u = g1.u[static_cast<std::size_t>(n - f.lo)];
    const Matrix& up = g1.u[static_cast<std::size_t>(n - 1 - f.lo)];
    CHECK(is_invertible(u));
    CHECK(g1.functor.A(n) * up == u * f.A(n));
    CHECK(g1.functor.B(n) * up == u * f.B(n));
  }
}

TEST_CASE("act_poly") {
  auto g = generator_h0_torsion(Q, T({{pt(2, 1), 1}}), -2, 2);
  CHECK(act_poly(g, Form::one(Q), 0).is_identity());
  CHECK(act_poly(g, Form::monomial(Q, 1, 1), 1) == M({{2}}));
  CHECK_THROWS_AS(act_poly(g, Form::monomial(Q, 2, 2), 1), EngineError);

  auto f = gauge_scramble(direct_sum(generator_h1(Q, -2, -6, 3), generator_h0_torsion(Q, T({{pt(1, 3), 2}}), -6, 3)), 7);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    std::size_t a = rng() % 3, b = rng() % 3;
    long long n = -2 + static_cast<long long>(rng() % 5);
    Matrix expect = monomial_action(f, a, b, n, true);
    CHECK(monomial_action(f, a, b, n, false) == expect);
    CHECK(act_poly(f, Form::monomial(Q, a, b), n) == expect);
  }
  // linear combination matches term by term
  Form h(Q, {Q.from_int(2), Q.from_int(-1), Q.from_int(3)});
  Matrix expect = monomial_action(f, 2, 0, 1, true) * Q.from_int(2);
  expect += monomial_action(f, 1, 1, 1, true) * Q.from_int(-1);
  expect += monomial_action(f, 0, 2, 1, true) * Q.from_int(3);
  CHECK(act_poly(f, h, 1) == expect);
}

TEST_CASE("evaluation on sheaves") {
  P1Point q = pt(1, 1), p = pt(0, 1);
  auto g = generator_h0_torsion(Q, T({{q, 1}}), -3, 3);
  CHECK(evaluate_on_sheaf(g, CoherentSheaf({}, T({{q, 1}})), 0).dim == 1);
  CHECK(evaluate_on_sheaf(g, CoherentSheaf({}, T({{p, 1}})), 0).dim == 0);
  auto h = generator_h1(Q, 0, -3, 3);
  CHECK(evaluate_on_sheaf(h, CoherentSheaf({}, T({{p, 1}})), 0).dim == 0);
  CHECK(evaluate_on_sheaf(h, CoherentSheaf({-3, 1}, {}), 0).dim == 2);
  CHECK_THROWS_AS(evaluate_on_sheaf(h, CoherentSheaf({-4}, {}), 0), EngineError);
}

TEST_CASE("torsion evaluation matches the tensor oracle and ignores the twist") {
  std::mt19937_64 rng(12);
  auto pts = enumerate_points(Q, 5);
  for (int t = 0; t < 25; ++t) {
    std::vector<TorsionBlock> tb, sb;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) tb.push_back({pts[rng() % 5], 1 + rng() % 3});
    for (std::size_t k = rng() % 3; k > 0; --k) sb.push_back({pts[rng() % 5], 1 + rng() % 3});
    std::vector<long long> bundle;
    for (std::size_t k = rng() % 3; k > 0; --k) bundle.push_back(static_cast<long long>(rng() % 7) - 3);
    TorsionSheaf tt(tb);
    CoherentSheaf s(bundle, TorsionSheaf(sb));
    auto f = gauge_scramble(generator_h0_torsion(Q, tt, -4, 4), rng());
    std::size_t expect = tensor_torsion(s, tt).length();
    for (long long d = -1; d <= 4; ++d) CHECK(evaluate_on_sheaf(f, s, d).dim == expect);
  }
}

TEST_CASE("H1 generators act surjectively by every linear form") {
  auto pts = enumerate_points(Q, 5);
  for (long long i = -3; i <= 1; ++i) {
    auto g = generator_h1(Q, i, -8, 3);
    for (long long n = g.lo + 1; n <= g.hi; ++n) {
      for (const auto& p : pts) {
        Matrix m = act_poly(g, vanishing_form(p), n);
        CHECK(rank(m) == m.rows());
      }
    }
  }
}

TEST_CASE("maps of torsion presentations") {
  P1Point p = pt(0, 1);
  auto g = generator_h0_torsion(Q, T({{p, 1}}), -2, 6);
  auto sys = local_cohomology_system(p, 3, -2);
  TorsionChainMap id{sys.terms[0], sys.terms[0], Form::one(Q), Form::one(Q)};
  CHECK(apply_to_torsion_map(g, id).is_identity());
  Matrix mu12 = apply_to_torsion_map(g, sys.maps[0]);
  CHECK(mu12.rows() == 1);
  CHECK(mu12.cols() == 1);
  CHECK(mu12.is_zero());

  auto f = gauge_scramble(direct_sum(generator_h0_torsion(Q, T({{p, 3}, {pt(1, 1), 2}}), -2, 6), generator_h1(Q, 0, -2, 6)), 5);
  auto sys5 = local_cohomology_system(p, 5, -2);
  Matrix m1 = apply_to_torsion_map(f, sys5.maps[0]), m2 = apply_to_torsion_map(f, sys5.maps[1]);
  CHECK(m2 * m1 == apply_to_torsion_map(f, compose(sys5.maps[1], sys5.maps[0])));
}

TEST_CASE("exactness on Koszul sequences") {
  P1Point p = pt(0, 1), q = pt(1, 0);
  auto [a, b] = koszul_sequence(0, p, q);
  SesOfBundles ses{a, b};
  auto t = generator_h0_torsion(Q, T({{pt(1, 1), 2}, {p, 1}}), -3, 3);
  CHECK(check_exactness_on_ses(t, ses));
  auto h = generator_h1(Q, 0, -3, 3);
  CHECK_FALSE(check_exactness_on_ses(h, ses));
  CHECK_FALSE(check_exactness_on_ses(direct_sum(t, h), ses));
  auto [a5, b5] = koszul_sequence(5, p, q);
  CHECK_THROWS_AS(check_exactness_on_ses(h, {a5, b5}), EngineError);
}
