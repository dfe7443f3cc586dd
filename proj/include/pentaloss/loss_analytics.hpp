#ifndef PENTALOSS_LOSS_ANALYTICS_HPP
#define PENTALOSS_LOSS_ANALYTICS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "pentaloss/polynomial.hpp"

namespace pentaloss {

enum class LossMode { Preannounced, NonPreannounced };

using FailureFn = std::function<double(double)>;

/// Level-to-level failure map for preannounced loss: a pentagon is lost when
/// three or more of its five children are, so
/// f(P) = P^5 + 5 P^4 (1-P) + 10 P^3 (1-P)^2 = 10 P^3 - 15 P^4 + 6 P^5.
double pre_failure(double P);
Rational pre_failure_exact(const Rational& P);
const LossPolynomial& pre_failure_polynomial();

/// N-fold composition of a failure map applied to the physical loss rate.
double iterate_levels(const FailureFn& base, double p, int levels);
Rational iterate_levels_exact(const LossPolynomial& base, const Rational& p, int levels);

struct ThresholdResult {
    bool found = false;
    double value = 0.0;
};

/// Nontrivial fixed point of `base` on (delta, 1-delta) by sign-change
/// bisection of base(p) - p, to 1e-9 absolute. No interior sign change is a
/// valid "no threshold" outcome, not an error.
ThresholdResult find_threshold(const FailureFn& base, double delta = 1e-6,
                               double tolerance = 1e-9);

struct OverheadResult {
    bool reachable = false;
    int levels = 0;
    std::uint64_t qubits = 0;
    double achieved = 1.0;
};

/// Smallest N <= max_levels with base^N(p) <= epsilon, and Q = 5^N.
OverheadResult overhead_for_target(const FailureFn& base, double p, double epsilon,
                                   int max_levels = 20);

/// Generic concatenation picture for a distance-3 code with combinatorial
/// constant gamma: (gamma p)^(2^N) / gamma, evaluated in the log domain.
double gamma_effective(double gamma, double p, int levels);

struct AsymptoticFit {
    double exponent = 0.0;
    double coefficient = 0.0;
    bool degenerate = false;
};

/// Log-log least-squares fit of base(P) ~ c P^k over P in [1e-4, 1e-2].
AsymptoticFit asymptotic_coefficient(const FailureFn& base);

struct CurvePoint {
    LossMode mode;
    int level;
    double p;
    double value;
};

/// Grid samples of base^level over p in [start, end] stepping by `step`,
/// for each level in [level_lo, level_hi].
std::vector<CurvePoint> sample_curves(LossMode mode, const FailureFn& base, int level_lo,
                                      int level_hi, double start, double end, double step);

}  // namespace pentaloss

#endif
