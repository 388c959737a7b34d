#pragma once

#include <cstddef>
#include <vector>

#include "p1bimod/matrix.hpp"

namespace p1bimod {

/// V_0 -> V_1 -> ... ; maps[j] has shape dims[j+1] x dims[j].
struct MapSequence {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  /// Throws std::invalid_argument when shapes do not chain.
  void check() const;
};

struct ColimitResult {
  std::size_t limit_dim = 0;
  std::size_t stab_index = 0;
  /// projections[j]: V_j -> stable term (limit_dim x dims[j]) for every j up
  /// to the confirmed horizon; projections[j+1] * maps[j] == projections[j].
  std::vector<Matrix> projections;
};

/// Direct limit of a finite sequence that has visibly settled.
///
/// Write rho(j) for the rank of V_j -> V_last. Index j is confirmed when
/// V_j -> V_(last-1) already has rank rho(j), i.e. its kernel has stopped
/// growing inside the window. The stable index s is the least index such that
/// s and s+1 are both confirmed with rho(s) == rho(s+1); the limit is the
/// image of V_s in V_last. Terms after the last consecutive confirmed index
/// get no projection. Throws NO_STABILIZATION if no such s exists.
ColimitResult colimit_sequence(const MapSequence& s);

}  // namespace p1bimod
