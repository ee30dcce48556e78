#pragma once

#include "maxint/lattice.hpp"

namespace maxint::exhaustive {

/// Unpruned reference computations over element sets: every subset of the
/// maximals up to the chain-length bound Omega(|G : Frat(G)|) is examined, and
/// chains are enumerated in full. Only practical for small groups.
struct Values {
  std::size_t maxdim = 0;
  std::size_t mindim = 0;
  std::size_t alpha = 0;
  std::size_t menta = 0;
  std::size_t manta = 0;
};

Values compute(const MaximalSet& maximals, const Budget& budget = {});

}  // namespace maxint::exhaustive
