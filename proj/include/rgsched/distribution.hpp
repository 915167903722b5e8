#pragma once

#include <variant>
#include <vector>

#include "rgsched/rational.hpp"
#include "rgsched/rng.hpp"

namespace rgsched {

struct Atom {
  Rat size;
  Rat prob;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.size == b.size && a.prob == b.prob;
  }
};

/// Finite-support probability distribution over non-negative job sizes,
/// stored in canonical form: sizes strictly increasing, no zero-probability
/// atoms, probabilities summing exactly to one.
class FiniteDist {
 public:
  /// Canonicalizes the given atoms: sorts by size and merges duplicate sizes
  /// by summing their probabilities. Rejects negative sizes, atoms with
  /// non-positive probability, and total mass different from one.
  explicit FiniteDist(std::vector<Atom> atoms);

  static FiniteDist point_mass(const Rat& size);

  const std::vector<Atom>& atoms() const { return atoms_; }
  size_t support_size() const { return atoms_.size(); }

  /// P(P > x), right-continuous in x.
  Rat survival(const Rat& x) const;

  /// P(P > x | P > y). Fails with ConditionOnZeroEvent when P(P > y) = 0.
  Rat conditional_survival(const Rat& x, const Rat& y) const;

  Rat max_support() const { return atoms_.back().size; }
  Rat min_support() const { return atoms_.front().size; }
  Rat mean() const;

  /// Draws an atom size; identical seeds yield identical sequences.
  Rat sample(Rng& rng) const;

  /// Canonical-form equality (also the 1-closeness criterion).
  friend bool operator==(const FiniteDist& a, const FiniteDist& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  std::vector<Atom> atoms_;
};

struct Exponential {
  Rat rate;
};

struct Pareto {
  Rat scale;
  Rat shape;
};

/// One of the two parametric families used by the closeness module.
using ParametricDist = std::variant<Exponential, Pareto>;

ParametricDist make_exponential(const Rat& rate);
ParametricDist make_pareto(const Rat& scale, const Rat& shape);

/// Analytic tail P(P > x): e^{-rate*x} for Exponential, (scale/x)^shape for
/// Pareto when x >= scale and 1 below the scale.
double parametric_survival(const ParametricDist& d, double x);

/// Ordered collection of independent jobs; index is the job id.
class Instance {
 public:
  explicit Instance(std::vector<FiniteDist> jobs);

  size_t size() const { return jobs_.size(); }
  const FiniteDist& job(size_t j) const { return jobs_[j]; }
  const std::vector<FiniteDist>& jobs() const { return jobs_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.jobs_ == b.jobs_;
  }

 private:
  std::vector<FiniteDist> jobs_;
};

/// FNV-1a digest of the canonical text form, used to tag schedules with the
/// instance they were computed from.
std::string instance_fingerprint(const Instance& inst);

}  // namespace rgsched
