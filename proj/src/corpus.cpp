#include "p1bimod/corpus.hpp"

#include <algorithm>

#include "p1bimod/error.hpp"

namespace p1bimod {

void check_window(const ComposeSpec& spec) {
  if (spec.hi < 2) throw EngineError(ErrorCode::NotAdmissible, "window needs hi >= 2");
  for (const auto& [i, l] : spec.decomposition.h1) {
    if (spec.lo > -i - 3) {
      throw EngineError(ErrorCode::NotAdmissible,
                        "window needs lo <= " + std::to_string(-i - 3) + " for H^1 index " + std::to_string(i));
    }
  }
}

FunctorData compose(const ComposeSpec& spec) {
  check_window(spec);
  FunctorData f = compose(spec.field, spec.decomposition, spec.lo, spec.hi);
  return spec.gauge_seed ? gauge_scramble(f, *spec.gauge_seed) : f;
}

std::pair<long long, long long> default_window(const H1Mults& h1) {
  long long depth = 0;
  for (const auto& [i, l] : h1) depth = std::max(depth, i);
  return {-(8 + depth), 4};
}

ComposeSpec random_spec(std::mt19937_64& rng, Field field) {
  auto pick = [&](std::uint64_t n) { return static_cast<long long>(rng() % n); };
  auto points = enumerate_points(field, 6);
  ComposeSpec s;
  s.field = field;
  std::vector<TorsionBlock> blocks;
  for (long long b = pick(4); b > 0; --b) {
    blocks.push_back({points[static_cast<std::size_t>(pick(points.size()))], static_cast<std::size_t>(1 + pick(3))});
  }
  s.decomposition.torsion = TorsionSheaf(std::move(blocks));
  for (long long c = pick(4); c > 0; --c) {
    const long long i = -3 + pick(5);
    const auto l = static_cast<std::size_t>(1 + pick(2));
    s.decomposition.h1.emplace(i, l);  // repeated indices keep the first count
  }
  std::tie(s.lo, s.hi) = default_window(s.decomposition.h1);
  s.gauge_seed = rng();
  return s;
}

std::vector<ComposeSpec> corpus(std::uint64_t seed, std::size_t count, Field field) {
  std::mt19937_64 rng(seed);
  std::vector<ComposeSpec> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_spec(rng, field));
  return out;
}

}  // namespace p1bimod
