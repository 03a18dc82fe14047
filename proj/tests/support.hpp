#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "halfdom/halfdom.hpp"

namespace halfdom::testing {

// Visits vertices in random order and keeps each one that leaves the set
// half-dependent. Stops after `limit` additions.
inline Selection random_feasible(const Neighborhoods& nb, std::mt19937& rng, int limit = -1) {
  std::vector<int> order(static_cast<std::size_t>(nb.size()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Selection sel(nb.size());
  int added = 0;
  for (int v : order) {
    if (limit >= 0 && added >= limit) break;
    sel.set(v);
    if (is_half_dependent(nb, sel)) {
      ++added;
    } else {
      sel.set(v, false);
    }
  }
  return sel;
}

inline Selection random_subset(int size, std::mt19937& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Selection sel(size);
  for (int v = 0; v < size; ++v) sel.set(v, coin(rng));
  return sel;
}

}  // namespace halfdom::testing
