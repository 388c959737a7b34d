#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "p1bimod/structure.hpp"

namespace p1bimod {

/// Instance description: the composed model on [lo, hi], optionally gauged.
struct ComposeSpec {
  Field field = Field::rationals();
  long long lo = 0, hi = 0;
  Decomposition decomposition;
  std::optional<std::uint64_t> gauge_seed;
};

/// Throws NOT_ADMISSIBLE unless hi >= 2 and lo <= -i - 3 for every H^1 index.
void check_window(const ComposeSpec& spec);
FunctorData compose(const ComposeSpec& spec);

/// Default window for a decomposition: hi = 4, lo = -(8 + max(0, max i)).
std::pair<long long, long long> default_window(const H1Mults& h1);

/// Up to 3 torsion blocks of multiplicity 1..3 on the first 6 enumerated
/// points, up to 3 distinct H^1 indices in [-3, 1] with counts 1..2, the
/// default window and a gauge seed.
ComposeSpec random_spec(std::mt19937_64& rng, Field field);
std::vector<ComposeSpec> corpus(std::uint64_t seed, std::size_t count, Field field = Field::rationals());

}  // namespace p1bimod
