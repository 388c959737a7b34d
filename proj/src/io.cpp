#include "p1bimod/io.hpp"

#include <fstream>
#include <sstream>

#include "p1bimod/error.hpp"

namespace p1bimod {

namespace {

[[noreturn]] void bad(const std::string& what) { throw EngineError(ErrorCode::Format, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

long long as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::size_t as_count(const Json& j, const char* what) {
  long long v = as_int(j, what);
  if (v < 0) bad(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, Field field, std::size_t rows, std::size_t cols, const std::string& what) {
  as_array(j, "matrix");
  if (j.size() != rows) bad(what + " should have " + std::to_string(rows) + " rows");
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad(what + " row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], field);
  }
  return m;
}

P1Point point_from_json(const Json& j, Field field) {
  if (!j.is_array() || j.size() != 2) bad("point must be a pair of scalars");
  Scalar a = scalar_from_json(j[0], field), b = scalar_from_json(j[1], field);
  if (a.is_zero() && b.is_zero()) bad("[0:0] is not a point");
  return P1Point(a, b);
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, Field field) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) return field.parse(j.get<std::string>());
  bad("scalar must be an integer or a string");
}

Json functor_to_json(const FunctorData& f) {
  Json j;
  j["field"] = f.field.tag();
  j["lo"] = f.lo;
  j["hi"] = f.hi;
  j["dims"] = f.dims;
  Json x0 = Json::array(), x1 = Json::array();
  for (long long n = f.lo + 1; n <= f.hi; ++n) {
    x0.push_back(matrix_to_json(f.A(n)));
    x1.push_back(matrix_to_json(f.B(n)));
  }
  j["x0"] = std::move(x0);
  j["x1"] = std::move(x1);
  return j;
}

FunctorData functor_from_json(const Json& j) {
  const Json& tag = member(j, "field");
  if (!tag.is_string()) bad("field must be a string");
  Field field = Field::from_tag(tag.get<std::string>());
  const long long lo = as_int(member(j, "lo"), "lo"), hi = as_int(member(j, "hi"), "hi");
  if (hi < lo) bad("hi < lo");
  FunctorData f(field, lo, hi);
  const Json& dims = as_array(member(j, "dims"), "dims");
  if (dims.size() != f.dims.size()) bad("dims should have hi - lo + 1 entries");
  for (std::size_t k = 0; k < dims.size(); ++k) f.dims[k] = as_count(dims[k], "dimension");
  const Json& x0 = as_array(member(j, "x0"), "x0");
  const Json& x1 = as_array(member(j, "x1"), "x1");
  if (x0.size() + 1 != dims.size() || x1.size() + 1 != dims.size()) bad("x0 and x1 should have hi - lo entries");
  for (long long n = lo + 1; n <= hi; ++n) {
    const auto k = static_cast<std::size_t>(n - lo - 1);
    const std::string at = " into degree " + std::to_string(n);
    f.A(n) = matrix_from_json(x0[k], field, f.dim(n), f.dim(n - 1), "x0" + at);
    f.B(n) = matrix_from_json(x1[k], field, f.dim(n), f.dim(n - 1), "x1" + at);
  }
  return f;
}

Json torsion_to_json(const TorsionSheaf& t) {
  Json out = Json::array();
  for (const auto& b : t.blocks()) {
    out.push_back({{"point", {scalar_to_json(b.point.p0()), scalar_to_json(b.point.p1())}}, {"mult", b.mult}});
  }
  return out;
}

TorsionSheaf torsion_from_json(const Json& j, Field field) {
  std::vector<TorsionBlock> blocks;
  for (const auto& b : as_array(j, "torsion")) {
    std::size_t mult = as_count(member(b, "mult"), "mult");
    if (mult == 0) bad("mult must be positive");
    blocks.push_back({point_from_json(member(b, "point"), field), mult});
  }
  return TorsionSheaf(std::move(blocks));
}

Json sheaf_to_json(const CoherentSheaf& s) { return {{"bundle", s.bundle}, {"torsion", torsion_to_json(s.torsion)}}; }

Field sheaf_field(const Json& j, Field fallback) {
  if (!j.is_object() || !j.contains("field")) return fallback;
  if (!j["field"].is_string()) bad("field must be a string");
  return Field::from_tag(j["field"].get<std::string>());
}

CoherentSheaf sheaf_from_json(const Json& j, Field field) {
  field = sheaf_field(j, field);
  std::vector<long long> bundle;
  if (j.contains("bundle")) {
    for (const auto& a : as_array(j["bundle"], "bundle")) bundle.push_back(as_int(a, "bundle degree"));
  }
  TorsionSheaf t = j.contains("torsion") ? torsion_from_json(j["torsion"], field) : TorsionSheaf();
  if (!j.is_object()) bad("sheaf must be an object");
  return CoherentSheaf(std::move(bundle), std::move(t));
}

Json h1_to_json(const H1Mults& h1) {
  Json out = Json::array();
  for (const auto& [i, l] : h1) out.push_back({{"i", i}, {"l", l}});
  return out;
}

Json spec_to_json(const ComposeSpec& s) {
  Json j;
  j["field"] = s.field.tag();
  j["lo"] = s.lo;
  j["hi"] = s.hi;
  j["torsion"] = torsion_to_json(s.decomposition.torsion);
  j["h1"] = h1_to_json(s.decomposition.h1);
  if (s.gauge_seed) j["gauge_seed"] = *s.gauge_seed;
  return j;
}

ComposeSpec spec_from_json(const Json& j) {
  if (!j.is_object()) bad("spec must be an object");
  ComposeSpec s;
  if (j.contains("field")) {
    if (!j["field"].is_string()) bad("field must be a string");
    s.field = Field::from_tag(j["field"].get<std::string>());
  }
  if (j.contains("torsion")) s.decomposition.torsion = torsion_from_json(j["torsion"], s.field);
  if (j.contains("h1")) {
    for (const auto& e : as_array(j["h1"], "h1")) {
      long long i = as_int(member(e, "i"), "i");
      std::size_t l = as_count(member(e, "l"), "l");
      if (l > 0) s.decomposition.h1[i] += l;
    }
  }
  std::tie(s.lo, s.hi) = default_window(s.decomposition.h1);
  if (j.contains("lo")) s.lo = as_int(j["lo"], "lo");
  if (j.contains("hi")) s.hi = as_int(j["hi"], "hi");
  if (s.hi < s.lo) bad("hi < lo");
  if (j.contains("gauge_seed") && !j["gauge_seed"].is_null()) {
    if (!j["gauge_seed"].is_number_unsigned() && !j["gauge_seed"].is_number_integer()) bad("gauge_seed must be an integer");
    s.gauge_seed = j["gauge_seed"].get<std::uint64_t>();
  }
  return s;
}

Json report_to_json(const DecomposeResult& r, const PropertyReport& props) {
  Json j;
  j["torsion"] = torsion_to_json(r.decomposition.torsion);
  j["h1"] = h1_to_json(r.decomposition.h1);
  j["certificate"] = {{"checked", r.check.ok()}, {"window", {r.certificate.lo, r.certificate.hi}}};
  Json ps = Json::array();
  for (const auto& e : props.entries) {
    ps.push_back({{"claim", e.claim}, {"pass", e.pass}, {"status", e.status}, {"detail", e.detail}});
  }
  j["properties"] = std::move(ps);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw EngineError(ErrorCode::Io, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw EngineError(ErrorCode::Io, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw EngineError(ErrorCode::Io, "failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw EngineError(ErrorCode::Io, "cannot move output into " + path.string());
  }
}

}  // namespace p1bimod
