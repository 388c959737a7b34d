#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "p1bimod/error.hpp"
#include "p1bimod/io.hpp"

using namespace p1bimod;

namespace {

const Field Q = Field::rationals();

P1Point pt(long long a, long long b) { return P1Point(Q.from_int(a), Q.from_int(b)); }

ErrorCode parse_error(const std::string& text) {
  try {
    functor_from_json(Json::parse(text));
  } catch (const EngineError& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("functor documents round trip") {
  ComposeSpec spec{Q, -6, 4, {TorsionSheaf({{pt(1, 2), 2}}), {{0, 1}}}, 42};
  FunctorData f = compose(spec);
  FunctorData g = functor_from_json(Json::parse(functor_to_json(f).dump()));
  CHECK(g.dims == f.dims);
  for (long long n = f.lo + 1; n <= f.hi; ++n) {
    CHECK(g.A(n) == f.A(n));
    CHECK(g.B(n) == f.B(n));
  }

  const Field f7 = Field::prime(7);
  FunctorData h = generator_h0_torsion(f7, TorsionSheaf({{P1Point(f7.from_int(3), f7.one()), 2}}), -2, 3);
  Json j = functor_to_json(h);
  CHECK(j["field"] == "Fp:7");
  FunctorData h2 = functor_from_json(j);
  CHECK(h2.field == f7);
  CHECK(h2.A(1) == h.A(1));
}

TEST_CASE("scalars accept integers and rational strings") {
  CHECK(scalar_from_json(Json(-3), Q) == Q.from_int(-3));
  CHECK(scalar_from_json(Json("6/4"), Q) == Q.from_int(3) / Q.from_int(2));
  CHECK(scalar_to_json(Q.from_int(3) / Q.from_int(2)) == "3/2");
  const Field f5 = Field::prime(5);
  CHECK(scalar_from_json(Json("1/2"), f5) == f5.from_int(3));
  CHECK_THROWS_AS(scalar_from_json(Json(1.5), Q), EngineError);
  CHECK_THROWS_AS(scalar_from_json(Json("1/0"), Q), EngineError);
}

TEST_CASE("malformed functor documents are format errors") {
  CHECK(parse_error(R"({"field":"Q","lo":0,"hi":1,"dims":[1],"x0":[],"x1":[]})") == ErrorCode::Format);
  CHECK(parse_error(R"({"field":"Fp:8","lo":0,"hi":0,"dims":[0],"x0":[],"x1":[]})") == ErrorCode::Format);
  CHECK(parse_error(R"({"field":"Q","lo":0,"hi":1,"dims":[1,1],"x0":[[["1","2"]]],"x1":[[["1"]]]})") == ErrorCode::Format);
  CHECK(parse_error(R"({"field":"Q","lo":0,"hi":1,"dims":[1,-1],"x0":[[]],"x1":[[]]})") == ErrorCode::Format);
  CHECK(parse_error(R"({"field":"Q","lo":0,"dims":[1]})") == ErrorCode::Format);
  CHECK(parse_error(R"([1,2])") == ErrorCode::Format);
  CHECK(parse_error(R"({"field":"Q","lo":0,"hi":1,"dims":[1,1],"x0":[[["x"]]],"x1":[[["1"]]]})") == ErrorCode::Format);
}

TEST_CASE("sheaf documents") {
  Json j = Json::parse(R"({"bundle":[2,-1],"torsion":[{"point":["2","4"],"mult":3}]})");
  CoherentSheaf s = sheaf_from_json(j, Q);
  CHECK(s.bundle == std::vector<long long>{-1, 2});
  REQUIRE(s.torsion.blocks().size() == 1);
  CHECK(s.torsion.blocks().front().point == pt(1, 2));
  CHECK(sheaf_from_json(sheaf_to_json(s), Q) == s);
  CHECK_THROWS_AS(sheaf_from_json(Json::parse(R"({"torsion":[{"point":["0","0"],"mult":1}]})"), Q), EngineError);
  CHECK_THROWS_AS(sheaf_from_json(Json::parse(R"({"torsion":[{"point":["1","0"],"mult":0}]})"), Q), EngineError);
  CHECK(sheaf_field(Json::parse(R"({"field":"Fp:3"})"), Q) == Field::prime(3));
}

TEST_CASE("spec documents and window defaults") {
  ComposeSpec s = spec_from_json(Json::parse(R"({"h1":[{"i":1,"l":2},{"i":-2,"l":1}]})"));
  CHECK(s.lo == -9);
  CHECK(s.hi == 4);
  CHECK(!s.gauge_seed);
  CHECK(s.decomposition.h1 == H1Mults{{-2, 1}, {1, 2}});
  ComposeSpec t = spec_from_json(spec_to_json({Q, -7, 3, {TorsionSheaf({{pt(0, 1), 1}}), {{0, 1}}}, 9}));
  CHECK(t.lo == -7);
  CHECK(t.gauge_seed == 9u);
  CHECK(t.decomposition.torsion.length() == 1);
  CHECK_THROWS_AS(check_window({Q, -2, 4, {{}, {{0, 1}}}, {}}), EngineError);
  CHECK_THROWS_AS(check_window({Q, -8, 1, {{}, {}}, {}}), EngineError);
  CHECK_NOTHROW(check_window({Q, -3, 2, {{}, {{0, 1}}}, {}}));
}

TEST_CASE("corpus generator respects its bounds and is deterministic") {
  auto a = corpus(7, 60), b = corpus(7, 60);
  auto pts = enumerate_points(Q, 6);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].decomposition == b[k].decomposition);
    CHECK(a[k].gauge_seed == b[k].gauge_seed);
    CHECK(a[k].decomposition.torsion.blocks().size() <= 3);
    for (const auto& blk : a[k].decomposition.torsion.blocks()) {
      CHECK(blk.mult >= 1);
      CHECK(blk.mult <= 3);
      CHECK(std::find(pts.begin(), pts.end(), blk.point) != pts.end());
    }
    CHECK(a[k].decomposition.h1.size() <= 3);
    for (const auto& [i, l] : a[k].decomposition.h1) {
      CHECK(i >= -3);
      CHECK(i <= 1);
      CHECK(l >= 1);
      CHECK(l <= 2);
    }
    CHECK_NOTHROW(check_window(a[k]));
  }
}

TEST_CASE("atomic writes replace the target and leave no temporary") {
  auto dir = std::filesystem::temp_directory_path() / "p1bimod_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "out.json";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.json", "x"), EngineError);
  CHECK_THROWS_AS(read_json_file(dir / "absent.json"), EngineError);
  std::filesystem::remove_all(dir);
}
