#pragma once

#include <cstdint>

#include "linalg/matrix.hpp"
#include "tableau/tableau.hpp"

namespace tbx::testing {

struct RandomTableauShape {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t generators = 0;
};

// n, s in 1..3 and at most min(6, s*n) generators.
inline RandomTableauShape random_shape(SeededRng& rng) {
  RandomTableauShape shape;
  shape.n = static_cast<std::size_t>(rng.uniform(1, 3));
  shape.s = static_cast<std::size_t>(rng.uniform(1, 3));
  const auto cap = static_cast<std::int64_t>(std::min<std::size_t>(6, shape.n * shape.s));
  shape.generators = static_cast<std::size_t>(rng.uniform(0, cap));
  return shape;
}

// Small entries on sparse supports, so degenerate tableaux show up too.
inline Tableau random_tableau(SeededRng& rng, const RandomTableauShape& shape) {
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < shape.generators; ++g) {
    Matrix m(shape.s, shape.n);
    const bool sparse = rng.uniform(0, 2) == 0;
    for (std::size_t i = 0; i < shape.s; ++i)
      for (std::size_t j = 0; j < shape.n; ++j) {
        if (sparse && rng.uniform(0, 2) != 0) continue;
        m(i, j) = rng.uniform(-3, 3);
      }
    gens.push_back(std::move(m));
  }
  return Tableau::make(shape.n, shape.s, gens);
}

inline Tableau random_tableau(SeededRng& rng) { return random_tableau(rng, random_shape(rng)); }

inline Tableau cr_tableau() {
  Matrix id(2, 2), j(2, 2);
  id(0, 0) = 1;
  id(1, 1) = 1;
  j(0, 1) = 1;
  j(1, 0) = -1;
  return Tableau::make(2, 2, {id, j});
}

}  // namespace tbx::testing
