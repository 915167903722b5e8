#include "rgsched/generators.hpp"

#include <algorithm>

namespace rgsched {

std::pair<Instance, Instance> lower_bound_pair(std::uint32_t n, const Rat& eps) {
  if (n < 2) fail(Err::InvalidParams, "need at least 2 jobs");
  if (eps.sign() <= 0 || eps >= Rat(1)) {
    fail(Err::InvalidParams, "eps must lie in (0, 1), got " + eps.str());
  }
  const long nl = static_cast<long>(n);
  const Rat p(1, nl);
  const Rat big(nl * nl);

  FiniteDist truth_job({Atom{Rat(1) + eps, Rat(1) - p}, Atom{big, p}});
  FiniteDist predicted_job({Atom{Rat(1), Rat(1) - p}, Atom{big, p}});

  const Rat alpha = Rat(1) + eps;
  if (!is_alpha_close(truth_job, predicted_job, alpha)) {
    fail(Err::Internal, "lower-bound pair failed its closeness post-check");
  }

  std::vector<FiniteDist> truth_jobs(n, truth_job);
  std::vector<FiniteDist> predicted_jobs(n, predicted_job);
  return {Instance(std::move(truth_jobs)), Instance(std::move(predicted_jobs))};
}

Instance random_instance(std::uint32_t n, const RandomInstanceParams& params, Rng& rng) {
  if (n == 0) fail(Err::InvalidParams, "need at least 1 job");
  if (params.max_atoms == 0 || params.size_cap == 0 || params.den_cap == 0 ||
      params.weight_cap == 0) {
    fail(Err::InvalidParams, "random instance bounds must be positive");
  }
  if (params.max_atoms > params.size_cap) {
    fail(Err::InvalidParams, "cannot draw more distinct sizes than size_cap");
  }

  std::vector<FiniteDist> jobs;
  jobs.reserve(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint32_t atoms = 1 + static_cast<std::uint32_t>(rng.below(params.max_atoms));
    long den = 1 + static_cast<long>(rng.below(params.den_cap));

    // Distinct numerators over a common denominator keep sizes distinct.
    std::vector<long> nums;
    while (nums.size() < atoms) {
      long cand = 1 + static_cast<long>(rng.below(params.size_cap));
      if (std::find(nums.begin(), nums.end(), cand) == nums.end()) {
        nums.push_back(cand);
      }
    }

    std::vector<long> weights(atoms);
    long weight_sum = 0;
    for (auto& w : weights) {
      w = 1 + static_cast<long>(rng.below(params.weight_cap));
      weight_sum += w;
    }

    std::vector<Atom> dist;
    dist.reserve(atoms);
    for (std::uint32_t i = 0; i < atoms; ++i) {
      dist.push_back(Atom{Rat(nums[i], den), Rat(weights[i], weight_sum)});
    }
    jobs.emplace_back(std::move(dist));
  }
  return Instance(std::move(jobs));
}

std::pair<Instance, Instance> alpha_close_pair(std::uint32_t n, const Rat& alpha,
                                               const RandomInstanceParams& params,
                                               Rng& rng) {
  Instance truth = random_instance(n, params, rng);
  std::vector<FiniteDist> predicted;
  predicted.reserve(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    predicted.push_back(random_perturbation(truth.job(j), alpha, rng));
  }
  Instance pred(std::move(predicted));
  if (!is_alpha_close(truth, pred, alpha)) {
    fail(Err::Internal, "perturbed pair failed its closeness post-check");
  }
  return {std::move(truth), std::move(pred)};
}

}  // namespace rgsched
