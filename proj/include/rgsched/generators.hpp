#pragma once

#include <cstdint>
#include <utility>

#include "rgsched/closeness.hpp"

namespace rgsched {

/// The brittleness family with p = 1/n and M = n^2:
///   truth:     n i.i.d. jobs {1+eps: 1-1/n, n^2: 1/n}
///   predicted: n i.i.d. jobs {1:     1-1/n, n^2: 1/n}
/// Returns (truth, predicted); the pair is post-checked to be (1+eps)-close
/// per job. Requires n >= 2 and eps in (0, 1).
std::pair<Instance, Instance> lower_bound_pair(std::uint32_t n, const Rat& eps);

struct RandomInstanceParams {
  std::uint32_t max_atoms = 3;
  std::uint32_t size_cap = 8;    // sizes drawn from {1..size_cap}/den
  std::uint32_t den_cap = 4;     // common denominator drawn from {1..den_cap}
  std::uint32_t weight_cap = 20; // probability weights drawn from {1..weight_cap}
};

/// Random canonical instance with strictly positive rational sizes and exact
/// probabilities (integer weights normalized by their sum).
Instance random_instance(std::uint32_t n, const RandomInstanceParams& params, Rng& rng);

/// (truth, predicted) where predicted perturbs each truth job by a random
/// combined shift; per-job alpha-closeness is post-checked.
std::pair<Instance, Instance> alpha_close_pair(std::uint32_t n, const Rat& alpha,
                                               const RandomInstanceParams& params,
                                               Rng& rng);

}  // namespace rgsched
