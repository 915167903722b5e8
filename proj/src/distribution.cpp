#include "rgsched/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace rgsched {

FiniteDist::FiniteDist(std::vector<Atom> atoms) {
  if (atoms.empty()) fail(Err::InvalidDistribution, "distribution needs at least one atom");
  for (const Atom& a : atoms) {
    if (a.size.sign() < 0) {
      fail(Err::InvalidDistribution, "negative atom size " + a.size.str());
    }
    if (a.prob.sign() <= 0) {
      fail(Err::InvalidDistribution,
           "atom at " + a.size.str() + " has non-positive probability " + a.prob.str());
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.size < b.size; });
  // Merge duplicate sizes so equality is decidable on the atom list.
  for (const Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().size == a.size) {
      atoms_.back().prob += a.prob;
    } else {
      atoms_.push_back(a);
    }
  }
  Rat total(0);
  for (const Atom& a : atoms_) total += a.prob;
  if (total != Rat(1)) {
    fail(Err::InvalidDistribution, "probabilities sum to " + total.str() + ", expected 1");
  }
}

FiniteDist FiniteDist::point_mass(const Rat& size) {
  return FiniteDist({Atom{size, Rat(1)}});
}

Rat FiniteDist::survival(const Rat& x) const {
  Rat tail(0);
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    if (it->size > x) {
      tail += it->prob;
    } else {
      break;
    }
  }
  return tail;
}

Rat FiniteDist::conditional_survival(const Rat& x, const Rat& y) const {
  Rat sy = survival(y);
  if (sy.sign() == 0) {
    fail(Err::ConditionOnZeroEvent, "conditioning on P > " + y.str() + " which has probability 0");
  }
  return survival(rgsched::max(x, y)) / sy;
}

Rat FiniteDist::mean() const {
  Rat m(0);
  for (const Atom& a : atoms_) m += a.size * a.prob;
  return m;
}

Rat FiniteDist::sample(Rng& rng) const {
  double u = rng.unit();
  double acc = 0.0;
  for (const Atom& a : atoms_) {
    acc += a.prob.to_double();
    if (u < acc) return a.size;
  }
  return atoms_.back().size;
}

ParametricDist make_exponential(const Rat& rate) {
  if (rate.sign() <= 0) fail(Err::InvalidParams, "Exponential rate must be positive");
  return Exponential{rate};
}

ParametricDist make_pareto(const Rat& scale, const Rat& shape) {
  if (scale.sign() <= 0 || shape.sign() <= 0) {
    fail(Err::InvalidParams, "Pareto parameters must be positive");
  }
  return Pareto{scale, shape};
}

double parametric_survival(const ParametricDist& d, double x) {
  if (x < 0) fail(Err::InvalidParams, "survival evaluated at negative x");
  if (const auto* e = std::get_if<Exponential>(&d)) {
    return std::exp(-e->rate.to_double() * x);
  }
  const auto& p = std::get<Pareto>(d);
  double m = p.scale.to_double();
  if (x < m) return 1.0;
  return std::pow(m / x, p.shape.to_double());
}

Instance::Instance(std::vector<FiniteDist> jobs) : jobs_(std::move(jobs)) {
  if (jobs_.empty()) fail(Err::InvalidParams, "instance needs at least one job");
}

std::string instance_fingerprint(const Instance& inst) {
  std::string text;
  for (const FiniteDist& d : inst.jobs()) {
    for (const Atom& a : d.atoms()) {
      text += a.size.str();
      text += ':';
      text += a.prob.str();
      text += ',';
    }
    text += ';';
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rgsched
