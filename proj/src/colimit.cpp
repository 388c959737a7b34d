#include "p1bimod/colimit.hpp"

#include <stdexcept>

#include "p1bimod/error.hpp"

namespace p1bimod {

void MapSequence::check() const {
  if (dims.empty()) throw std::invalid_argument("empty map sequence");
  if (maps.size() + 1 != dims.size()) throw std::invalid_argument("map sequence needs dims.size() - 1 maps");
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (maps[j].rows() != dims[j + 1] || maps[j].cols() != dims[j]) {
      throw std::invalid_argument("map " + std::to_string(j) + " has the wrong shape");
    }
  }
}

ColimitResult colimit_sequence(const MapSequence& s) {
  s.check();
  const std::size_t last = s.dims.size() - 1;
  if (last < 2) throw EngineError(ErrorCode::NoStabilization, "need at least three terms to confirm stabilization");
  Field f = s.maps.front().field();

  // to_last[j]: V_j -> V_last, to_prev[j]: V_j -> V_(last-1)
  std::vector<Matrix> to_last(last + 1), to_prev(last);
  to_last[last] = Matrix::identity(f, s.dims[last]);
  for (std::size_t j = last; j-- > 0;) to_last[j] = to_last[j + 1] * s.maps[j];
  to_prev[last - 1] = Matrix::identity(f, s.dims[last - 1]);
  for (std::size_t j = last - 1; j-- > 0;) to_prev[j] = to_prev[j + 1] * s.maps[j];

  std::vector<std::size_t> rho(last);
  std::vector<bool> confirmed(last);
  for (std::size_t j = 0; j < last; ++j) {
    rho[j] = rank(to_last[j]);
    confirmed[j] = rank(to_prev[j]) == rho[j];
  }

  std::size_t stab = last;
  for (std::size_t j = 0; j + 1 < last; ++j) {
    if (confirmed[j] && confirmed[j + 1] && rho[j] == rho[j + 1]) {
      stab = j;
      break;
    }
  }
  if (stab == last) throw EngineError(ErrorCode::NoStabilization, "sequence has not settled; supply a longer sequence");

  ColimitResult out;
  out.stab_index = stab;
  out.limit_dim = rho[stab];
  std::size_t horizon = stab;
  while (horizon + 1 < last && confirmed[horizon + 1] && rho[horizon + 1] == out.limit_dim) ++horizon;

  Subspace stable = image(to_last[stab]);
  for (std::size_t j = 0; j <= horizon; ++j) {
    auto coords = stable.coordinates(to_last[j]);
    if (!coords) throw std::logic_error("colimit: image escaped the stable term");
    out.projections.push_back(std::move(*coords));
  }
  return out;
}

}  // namespace p1bimod
