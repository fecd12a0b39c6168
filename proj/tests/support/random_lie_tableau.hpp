#pragma once

#include "lie_tableau/lie_tableau.hpp"
#include "support/random_tableau.hpp"

namespace tbx::testing {

// Small Lie algebras of dimension 3 or 4 by structure constants.
inline LieAlgebra small_algebra(std::size_t which) {
  switch (which % 5) {
    case 0: return LieAlgebra::make(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}});  // so(3)
    case 1: return LieAlgebra::make(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});  // sl(2)
    case 2: return LieAlgebra::make(3, {{0, 1, 2, 1}});                             // heisenberg
    case 3: return LieAlgebra::make(4, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});  // sl(2) + R
    default: return LieAlgebra::make(4, {{0, 1, 2, 1}, {0, 2, 3, 1}});              // filiform
  }
}

// A sparse random tableau over a randomly chosen splitting of a small
// algebra; both verdicts of condition (2) occur.
inline LieTableau random_lie_tableau(SeededRng& rng) {
  const LieAlgebra g = small_algebra(static_cast<std::size_t>(rng.uniform(0, 4)));
  const std::size_t d = g.dim();
  const Matrix w = rng.invertible(d, 2);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(d) - 1));
  std::vector<Vector> a, b;
  for (std::size_t i = 0; i < d; ++i) (i < n ? a : b).push_back(w.column(i));
  RandomTableauShape shape{n, d - n, 0};
  shape.generators = static_cast<std::size_t>(
      rng.uniform(0, static_cast<std::int64_t>(std::min<std::size_t>(3, n * (d - n)))));
  auto split = SplitLieAlgebra::make(g, a, b);
  return LieTableau::make(std::move(split), random_tableau(rng, shape));
}

}  // namespace tbx::testing
