#include "rgsched/closeness.hpp"

#include <algorithm>
#include <cmath>

namespace rgsched {

namespace {

void require_alpha(const Rat& alpha) {
  if (alpha < Rat(1)) {
    fail(Err::InvalidAlpha, "alpha must be >= 1, got " + alpha.str());
  }
}

// x = 0 plus every point where one of the three step functions in the
// closeness definition changes value.
std::vector<Rat> breakpoints(const FiniteDist& d, const FiniteDist& e, const Rat& alpha) {
  std::vector<Rat> xs;
  xs.push_back(Rat(0));
  for (const Atom& a : e.atoms()) xs.push_back(a.size);
  for (const Atom& a : d.atoms()) {
    xs.push_back(a.size / alpha);
    xs.push_back(a.size * alpha);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Rational r on a 2^-20 grid with 1 <= r and r*r <= a, close to sqrt(a).
Rat sqrt_lower_bound(const Rat& a) {
  const long grid = 1L << 20;
  mpq_class approx(std::sqrt(a.to_double()));  // exact value of the double
  mpz_class ticks = approx.get_num() * grid / approx.get_den();
  mpq_class q(ticks, mpz_class(grid));
  q.canonicalize();
  Rat r(q);
  while (r * r > a) r -= Rat(1, grid);
  if (r < Rat(1)) r = Rat(1);
  return r;
}

}  // namespace

bool is_alpha_close(const FiniteDist& d, const FiniteDist& e, const Rat& alpha) {
  require_alpha(alpha);
  for (const Rat& x : breakpoints(d, e, alpha)) {
    Rat mid = e.survival(x);
    // (1/a) S_d(a x) <= S_e(x), written multiplication-only.
    if (d.survival(alpha * x) > alpha * mid) return false;
    // S_e(x) <= a S_d(x/a)
    if (mid > alpha * d.survival(x / alpha)) return false;
  }
  return true;
}

bool is_alpha_close(const Instance& a, const Instance& b, const Rat& alpha) {
  if (a.size() != b.size()) {
    fail(Err::InvalidParams, "instances have different job counts");
  }
  for (size_t j = 0; j < a.size(); ++j) {
    if (!is_alpha_close(a.job(j), b.job(j), alpha)) return false;
  }
  return true;
}

Rat minimal_alpha(const FiniteDist& d, const FiniteDist& e, const Rat& tol,
                  int max_doublings) {
  if (tol.sign() <= 0) fail(Err::InvalidParams, "tolerance must be positive");
  if (is_alpha_close(d, e, Rat(1))) return Rat(1);

  // Initial upper bound from the extreme size and tail-mass ratios; doubled
  // until feasible.
  Rat hi(2);
  if (d.max_support().sign() > 0 && e.max_support().sign() > 0) {
    hi = rgsched::max(hi, d.max_support() / e.max_support());
    hi = rgsched::max(hi, e.max_support() / d.max_support());
  }
  Rat sd0 = d.survival(Rat(0));
  Rat se0 = e.survival(Rat(0));
  if (sd0.sign() > 0 && se0.sign() > 0) {
    hi = rgsched::max(hi, sd0 / se0);
    hi = rgsched::max(hi, se0 / sd0);
  }
  int doublings = 0;
  while (!is_alpha_close(d, e, hi)) {
    if (++doublings > max_doublings) {
      fail(Err::NotCloseForAnyAlpha,
           "no feasible alpha found up to " + hi.str());
    }
    hi *= Rat(2);
  }

  Rat lo(1);
  while (hi - lo > tol) {
    Rat mid = (hi + lo) / Rat(2);
    if (is_alpha_close(d, e, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Rat minimal_alpha(const Instance& a, const Instance& b, const Rat& tol,
                  int max_doublings) {
  if (a.size() != b.size()) {
    fail(Err::InvalidParams, "instances have different job counts");
  }
  Rat worst(1);
  for (size_t j = 0; j < a.size(); ++j) {
    worst = rgsched::max(worst, minimal_alpha(a.job(j), b.job(j), tol, max_doublings));
  }
  return worst;
}

std::optional<Rat> parametric_alpha(const ParametricDist& a, const ParametricDist& b) {
  if (const auto* ea = std::get_if<Exponential>(&a)) {
    const auto* eb = std::get_if<Exponential>(&b);
    if (!eb) fail(Err::UnsupportedPair, "cannot compare Exponential with Pareto");
    return rgsched::max(ea->rate, eb->rate) / rgsched::min(ea->rate, eb->rate);
  }
  const auto& pa = std::get<Pareto>(a);
  const auto* pb = std::get_if<Pareto>(&b);
  if (!pb) fail(Err::UnsupportedPair, "cannot compare Pareto with Exponential");
  if (pa.shape != pb->shape) return std::nullopt;
  return rgsched::max(pa.scale, pb->scale) / rgsched::min(pa.scale, pb->scale);
}

FiniteDist combined_shift(const FiniteDist& d, const ShiftSpec& spec, const Rat& alpha) {
  require_alpha(alpha);
  if (spec.size() != d.atoms().size()) {
    fail(Err::InvalidParams, "shift spec must list replacements for every atom");
  }
  std::vector<Atom> out;
  for (size_t i = 0; i < spec.size(); ++i) {
    const Atom& orig = d.atoms()[i];
    if (spec[i].empty()) {
      fail(Err::ShiftOutOfRange,
           "atom at " + orig.size.str() + " has no replacement atoms");
    }
    Rat group_mass(0);
    for (const Atom& rep : spec[i]) {
      if (rep.size < orig.size / alpha || rep.size > orig.size * alpha) {
        fail(Err::ShiftOutOfRange,
             "replacement size " + rep.size.str() + " outside [" +
                 (orig.size / alpha).str() + ", " + (orig.size * alpha).str() + "]");
      }
      group_mass += rep.prob;
      out.push_back(rep);
    }
    if (group_mass < orig.prob / alpha || group_mass > orig.prob * alpha) {
      fail(Err::ShiftOutOfRange,
           "replacement mass " + group_mass.str() + " for atom at " + orig.size.str() +
               " outside [" + (orig.prob / alpha).str() + ", " + (orig.prob * alpha).str() + "]");
    }
  }
  Rat total(0);
  for (const Atom& a : out) total += a.prob;
  if (total != Rat(1)) {
    fail(Err::MassNotNormalized, "shifted mass sums to " + total.str());
  }
  FiniteDist result(std::move(out));
  if (!is_alpha_close(d, result, alpha)) {
    fail(Err::Internal, "combined shift produced a non-close distribution");
  }
  return result;
}

FiniteDist random_perturbation(const FiniteDist& d, const Rat& alpha, Rng& rng,
                               int max_retries) {
  require_alpha(alpha);
  if (alpha == Rat(1)) return d;

  const Rat hi = sqrt_lower_bound(alpha);  // hi^2 <= alpha
  const Rat lo = Rat(1) / hi;
  const long steps = 64;
  auto draw_factor = [&]() {
    return lo + (hi - lo) * Rat(static_cast<long>(rng.below(steps + 1)), steps);
  };

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Atom> atoms;
    Rat mass(0);
    for (const Atom& a : d.atoms()) {
      Atom moved{a.size * draw_factor(), a.prob * draw_factor()};
      mass += moved.prob;
      atoms.push_back(moved);
    }
    for (Atom& a : atoms) a.prob /= mass;
    FiniteDist candidate(std::move(atoms));
    if (is_alpha_close(d, candidate, alpha)) return candidate;
  }
  fail(Err::GenerationFailed,
       "no alpha-close perturbation found in " + std::to_string(max_retries) + " attempts");
}

}  // namespace rgsched
