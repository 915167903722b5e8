#pragma once

#include <optional>
#include <vector>

#include "rgsched/distribution.hpp"

namespace rgsched {

/// Multiplicative tail proximity: true iff for all x >= 0
///   (1/alpha) * P(P > alpha*x)  <=  P(P' > x)  <=  alpha * P(P > x/alpha).
/// All three sides are right-continuous step functions of x, so the check is
/// exact over the finite set of segment left endpoints.
bool is_alpha_close(const FiniteDist& d, const FiniteDist& e, const Rat& alpha);

/// Per-job closeness of two equally sized families.
bool is_alpha_close(const Instance& a, const Instance& b, const Rat& alpha);

/// Smallest alpha >= 1 making the pair alpha-close, within `tol`, found by
/// bisection (feasibility is monotone in alpha). The returned value is always
/// feasible. Fails with NotCloseForAnyAlpha when the doubling search for an
/// upper bound exceeds `max_doublings`.
Rat minimal_alpha(const FiniteDist& d, const FiniteDist& e, const Rat& tol,
                  int max_doublings = 64);

Rat minimal_alpha(const Instance& a, const Instance& b, const Rat& tol,
                  int max_doublings = 64);

/// Closed-form closeness for the parametric families:
///   Exponential(r), Exponential(r')      -> max(r,r')/min(r,r')
///   Pareto(m,b), Pareto(m',b)            -> max(m,m')/min(m,m')
///   Pareto with different shapes         -> nullopt (not close for any alpha)
/// Mixed families fail with UnsupportedPair.
std::optional<Rat> parametric_alpha(const ParametricDist& a, const ParametricDist& b);

/// Replacement atoms for each original atom, in the original atom order.
using ShiftSpec = std::vector<std::vector<Atom>>;

/// Replaces each atom (s_i, p_i) by its listed atoms, requiring every
/// replacement size in [s_i/alpha, alpha*s_i] and each group's probability
/// mass in [p_i/alpha, alpha*p_i], with total mass one. The result is
/// guaranteed (and post-checked) to be alpha-close to the input.
FiniteDist combined_shift(const FiniteDist& d, const ShiftSpec& spec, const Rat& alpha);

/// Random combined shift with sqrt(alpha) headroom per shift type, accepted
/// only if the output is alpha-close to the input.
FiniteDist random_perturbation(const FiniteDist& d, const Rat& alpha, Rng& rng,
                               int max_retries = 64);

}  // namespace rgsched
