#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1bimod/error.hpp"
#include "p1bimod/sheaves.hpp"

using namespace p1bimod;

namespace {

const Field Q = Field::rationals();

P1Point pt(long long a, long long b) { return P1Point(Q.from_int(a), Q.from_int(b)); }

Form lin(long long a, long long b) { return Form::linear(Q.from_int(a), Q.from_int(b)); }

// Cech count: H^0(O(a)) has the monomials x0^u x1^v, u + v = a, u, v >= 0;
// H^1(O(a)) the Laurent monomials x0^-u x1^-v, u + v = -a, u, v >= 1.
std::pair<std::size_t, std::size_t> cech_counts(const CoherentSheaf& s) {
  std::size_t h0 = 0, h1 = 0;
  for (long long a : s.bundle) {
    for (long long u = 0; u <= a; ++u) h0 += (a - u >= 0);
    for (long long u = 1; u <= -a; ++u) h1 += (-a - u >= 1);
  }
  for (const auto& b : s.torsion.blocks()) {
    for (std::size_t e = 0; e < b.mult; ++e) ++h0;  // 1, t, ..., t^(m-1)
  }
  return {h0, h1};
}

}  // namespace

TEST_CASE("vanishing forms") {
  CHECK(vanishing_form(pt(0, 1)) == lin(1, 0));
  CHECK(vanishing_form(pt(1, 0)) == lin(0, 1));
  CHECK(vanishing_form(pt(1, 1)) == lin(1, -1));
  auto pts = enumerate_points(Q, 8);
  for (const auto& p : pts) {
    Form l = vanishing_form(p);
    CHECK(l.eval(p).is_zero());
    for (const auto& q : pts) {
      if (!(q == p)) CHECK_FALSE(l.eval(q).is_zero());
    }
  }
}

TEST_CASE("cohomology dimensions") {
  CHECK(h0_dim(CoherentSheaf::line(3)) == 4);
  CHECK(h1_dim(CoherentSheaf::line(3)) == 0);
  CHECK(h0_dim(CoherentSheaf::line(-2)) == 0);
  CHECK(h1_dim(CoherentSheaf::line(-2)) == 1);
  CoherentSheaf s({-5}, TorsionSheaf({{pt(0, 1), 2}}));
  CHECK(h0_dim(s) == 2);
  CHECK(h1_dim(s) == 4);
  CHECK(h0_dim(CoherentSheaf{}) == 0);
}

TEST_CASE("Riemann-Roch and Cech oracle on random sheaves") {
  std::mt19937_64 rng(9);
  auto pts = enumerate_points(Q, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<long long> bundle;
    for (std::size_t k = rng() % 4; k > 0; --k) bundle.push_back(static_cast<long long>(rng() % 13) - 6);
    std::vector<TorsionBlock> blocks;
    for (std::size_t k = rng() % 3; k > 0; --k) blocks.push_back({pts[rng() % pts.size()], 1 + rng() % 3});
    CoherentSheaf s(bundle, TorsionSheaf(blocks));
    for (long long i = -10; i <= 10; ++i) {
      CoherentSheaf si = twist(s, i);
      auto [c0, c1] = cech_counts(si);
      CHECK(h0_dim(si) == c0);
      CHECK(h1_dim(si) == c1);
      long long chi = static_cast<long long>(s.torsion.length());
      for (long long a : s.bundle) chi += a + i + 1;
      CHECK(static_cast<long long>(h0_dim(si)) - static_cast<long long>(h1_dim(si)) == chi);
    }
  }
}

TEST_CASE("tensor with torsion") {
  TorsionSheaf q1({{pt(1, 1), 1}});
  CHECK(tensor_torsion(CoherentSheaf::line(7), q1) == q1);
  CoherentSheaf p2({}, TorsionSheaf({{pt(0, 1), 2}}));
  CHECK(tensor_torsion(p2, TorsionSheaf({{pt(0, 1), 3}})) == TorsionSheaf({{pt(0, 1), 2}}));
  CHECK(tensor_torsion(p2, q1).empty());
  CHECK(tensor_torsion(CoherentSheaf{}, q1).empty());

  // commutative and associative on torsion arguments
  std::mt19937_64 rng(4);
  auto pts = enumerate_points(Q, 3);
  auto random_t = [&] {
    std::vector<TorsionBlock> b;
    for (std::size_t k = rng() % 3; k > 0; --k) b.push_back({pts[rng() % 3], 1 + rng() % 3});
    return TorsionSheaf(b);
  };
  for (int t = 0; t < 40; ++t) {
    TorsionSheaf a = random_t(), b = random_t(), c = random_t();
    CHECK(tensor_torsion({{}, a}, b) == tensor_torsion({{}, b}, a));
    CHECK(tensor_torsion({{}, tensor_torsion({{}, a}, b)}, c) == tensor_torsion({{}, a}, tensor_torsion({{}, b}, c)));
  }
}

TEST_CASE("Koszul sequences") {
  auto [f, g] = koszul_sequence(0, pt(0, 1), pt(1, 0));
  CHECK(f.entry(0, 0) == lin(1, 0));
  CHECK(f.entry(1, 0) == lin(0, -1));
  CHECK(g.entry(0, 0) == lin(0, 1));
  CHECK(g.entry(0, 1) == lin(1, 0));
  CHECK((g * f).is_zero());

  auto [f2, g2] = koszul_sequence(2, pt(0, 1), pt(1, 1));
  CHECK(f2.source() == std::vector<long long>{0});
  CHECK(f2.entry(0, 0) == lin(1, 0));
  CHECK(f2.entry(1, 0) == lin(-1, 1));
  CHECK(g2.entry(0, 0) == lin(1, -1));
  CHECK(g2.entry(0, 1) == lin(1, 0));
  CHECK((g2 * f2).is_zero());

  for (long long j = 1; j <= 6; ++j) {
    auto [a, b] = koszul_sequence(j, pt(1, 2), pt(1, 3));
    CHECK((b * a).is_zero());
    // h0 is exact on this sequence for j >= 1: h0(O(j-2)) - 2 h0(O(j-1)) + h0(O(j)) = 0
    long long alt = static_cast<long long>(h0_dim(CoherentSheaf::line(j - 2))) -
                    2 * static_cast<long long>(h0_dim(CoherentSheaf::line(j - 1))) +
                    static_cast<long long>(h0_dim(CoherentSheaf::line(j)));
    CHECK(alt == 0);
  }
  CHECK_THROWS_AS(koszul_sequence(0, pt(1, 1), pt(2, 2)), EngineError);
}

TEST_CASE("local cohomology system") {
  auto sys = local_cohomology_system(pt(0, 1), 2);
  REQUIRE(sys.terms.size() == 2);
  CHECK(sys.terms[0].mult == 1);
  CHECK(sys.terms[1].mult == 2);
  CHECK(sys.maps[0].top_form == lin(1, 0));
  CHECK(sys.maps[0].bottom_form == Form::one(Q));

  auto five = local_cohomology_system(pt(1, 1), 5, -3);
  for (std::size_t i = 0; i < five.maps.size(); ++i) {
    five.maps[i].check();
    CHECK(five.terms[i + 1].top == five.terms[i].top + 1);
    CHECK(five.terms[i].bottom() == -3);
  }
  auto mu13 = compose(five.maps[1], five.maps[0]);
  mu13.check();
  CHECK(mu13.top_form == vanishing_form(pt(1, 1)).pow(2));
  CHECK(mu13.bottom_form == Form::one(Q));
  CHECK_THROWS(local_cohomology_system(pt(0, 1), 1));
}

TEST_CASE("ext1 of skyscrapers") {
  CHECK(ext1_skyscraper(1, pt(2, 1)) == TorsionSheaf({{pt(2, 1), 1}}));
  CHECK(ext1_skyscraper(3, pt(2, 1)).length() == 3);
  CHECK((ext1_skyscraper(2, pt(0, 1)) + ext1_skyscraper(3, pt(1, 0))).length() == 5);
}
