#include "p1bimod/sheaves.hpp"

#include <algorithm>
#include <stdexcept>

#include "p1bimod/error.hpp"

namespace p1bimod {

Form vanishing_form(const P1Point& p) {
  Field f = p.field();
  if (p.is_infinity()) return Form::linear(f.zero(), f.one());
  return Form::linear(f.one(), -p.p0());
}

TorsionSheaf::TorsionSheaf(std::vector<TorsionBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.mult == 0) throw std::invalid_argument("torsion block with multiplicity 0");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

std::size_t TorsionSheaf::length() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.mult;
  return n;
}

std::vector<P1Point> TorsionSheaf::support() const {
  std::vector<P1Point> pts;
  for (const auto& b : blocks_) {
    if (pts.empty() || !(pts.back() == b.point)) pts.push_back(b.point);
  }
  return pts;
}

bool TorsionSheaf::supported_at(const P1Point& p) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const TorsionBlock& b) { return b.point == p; });
}

TorsionSheaf operator+(const TorsionSheaf& a, const TorsionSheaf& b) {
  std::vector<TorsionBlock> all = a.blocks_;
  all.insert(all.end(), b.blocks_.begin(), b.blocks_.end());
  return TorsionSheaf(std::move(all));
}

std::string TorsionSheaf::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) s += ", ";
    s += "(" + blocks_[k].point.to_string() + "," + std::to_string(blocks_[k].mult) + ")";
  }
  return s + "}";
}

CoherentSheaf::CoherentSheaf(std::vector<long long> b, TorsionSheaf t) : bundle(std::move(b)), torsion(std::move(t)) {
  std::sort(bundle.begin(), bundle.end());
}

std::size_t h0_dim(const CoherentSheaf& s) {
  std::size_t n = s.torsion.length();
  for (long long a : s.bundle) n += static_cast<std::size_t>(std::max(0LL, a + 1));
  return n;
}

std::size_t h1_dim(const CoherentSheaf& s) {
  std::size_t n = 0;
  for (long long a : s.bundle) n += static_cast<std::size_t>(std::max(0LL, -a - 1));
  return n;
}

CoherentSheaf twist(const CoherentSheaf& s, long long i) {
  CoherentSheaf out = s;
  for (auto& a : out.bundle) a += i;
  return out;
}

TorsionSheaf tensor_torsion(const CoherentSheaf& s, const TorsionSheaf& t) {
  std::vector<TorsionBlock> out;
  for (std::size_t k = 0; k < s.bundle.size(); ++k) out.insert(out.end(), t.blocks().begin(), t.blocks().end());
  for (const auto& a : s.torsion.blocks()) {
    for (const auto& b : t.blocks()) {
      if (a.point == b.point) out.push_back({a.point, std::min(a.mult, b.mult)});
    }
  }
  return TorsionSheaf(std::move(out));
}

BundleMap::BundleMap(Field field, std::vector<long long> source, std::vector<long long> target)
    : field_(field), source_(std::move(source)), target_(std::move(target)) {
  entries_.assign(target_.size(), std::vector<Form>(source_.size()));
  for (std::size_t j = 0; j < target_.size(); ++j) {
    for (std::size_t i = 0; i < source_.size(); ++i) {
      long long d = target_[j] - source_[i];
      entries_[j][i] = d < 0 ? Form::none(field) : Form::zero(field, static_cast<std::size_t>(d));
    }
  }
}

void BundleMap::set(std::size_t j, std::size_t i, Form f) {
  const long long d = target_.at(j) - source_.at(i);
  if (d < 0 ? !f.is_none() : (f.is_none() || static_cast<long long>(f.degree()) != d)) {
    throw std::invalid_argument("bundle map entry has the wrong degree");
  }
  entries_[j][i] = std::move(f);
}

bool BundleMap::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_none() && !e.is_zero()) return false;
    }
  }
  return true;
}

BundleMap operator*(const BundleMap& second, const BundleMap& first) {
  if (second.source_ != first.target_) throw std::invalid_argument("bundle maps do not compose");
  BundleMap out(first.field_, first.source_, second.target_);
  for (std::size_t j = 0; j < out.target_.size(); ++j) {
    for (std::size_t i = 0; i < out.source_.size(); ++i) {
      if (out.entries_[j][i].is_none()) continue;
      Form acc = out.entries_[j][i];
      for (std::size_t k = 0; k < first.target_.size(); ++k) {
        const Form& a = second.entries_[j][k];
        const Form& b = first.entries_[k][i];
        if (a.is_none() || b.is_none()) continue;
        acc += a * b;
      }
      out.entries_[j][i] = std::move(acc);
    }
  }
  return out;
}

std::pair<BundleMap, BundleMap> koszul_sequence(long long j, const P1Point& p, const P1Point& q) {
  if (p == q) throw EngineError(ErrorCode::EqualPoints, "Koszul sequence needs two distinct points");
  Field f = p.field();
  Form alpha = vanishing_form(p), beta = vanishing_form(q);
  BundleMap first(f, {j - 2}, {j - 1, j - 1});
  first.set(0, 0, alpha);
  first.set(1, 0, -beta);
  BundleMap second(f, {j - 1, j - 1}, {j});
  second.set(0, 0, beta);
  second.set(0, 1, alpha);
  return {first, second};
}

void TorsionChainMap::check() const {
  const long long dt = target.top - source.top;
  const long long db = target.bottom() - source.bottom();
  if (dt < 0 || db < 0 || static_cast<long long>(top_form.degree()) != dt ||
      static_cast<long long>(bottom_form.degree()) != db || top_form.is_none() || bottom_form.is_none()) {
    throw std::invalid_argument("chain map forms have the wrong degrees");
  }
  if (!(top_form * source.relation() == target.relation() * bottom_form)) {
    throw std::invalid_argument("chain map square does not commute");
  }
}

TorsionChainMap compose(const TorsionChainMap& second, const TorsionChainMap& first) {
  if (!(first.target.point == second.source.point) || first.target.mult != second.source.mult ||
      first.target.top != second.source.top) {
    throw std::invalid_argument("chain maps do not compose");
  }
  return {first.source, second.target, second.top_form * first.top_form, second.bottom_form * first.bottom_form};
}

LocalCohomologySystem local_cohomology_system(const P1Point& p, std::size_t n, long long base) {
  if (n < 2) throw std::invalid_argument("local cohomology system needs N >= 2");
  LocalCohomologySystem sys{p, {}, {}};
  for (std::size_t i = 1; i <= n; ++i) sys.terms.push_back({p, i, base + static_cast<long long>(i)});
  Form l = vanishing_form(p);
  for (std::size_t i = 0; i + 1 < n; ++i) sys.maps.push_back({sys.terms[i], sys.terms[i + 1], l, Form::one(p.field())});
  return sys;
}

TorsionSheaf ext1_skyscraper(std::size_t n, const P1Point& p) {
  if (n == 0) throw std::invalid_argument("ext1_skyscraper needs n >= 1");
  return TorsionSheaf({{p, n}});
}

}  // namespace p1bimod
