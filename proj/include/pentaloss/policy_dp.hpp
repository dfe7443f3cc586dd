#ifndef PENTALOSS_POLICY_DP_HPP
#define PENTALOSS_POLICY_DP_HPP

#include <array>

#include "pentaloss/loss_analytics.hpp"
#include "pentaloss/policy.hpp"

namespace pentaloss {

struct OptimalPolicyResult {
    MeasurementPolicy policy;
    LossPolynomial failure;
    /// States where no probe dominated uniformly on (0,1) and the reference
    /// point p = 0.15 broke the tie. Empty for this code; kept as a report.
    std::vector<std::string> tie_states;
};

/// Exact expectimax over per-qubit statuses {untouched, lost, clicked-X/Y/Z}:
/// SUCCESS once the clicked probes certify the target logical against the
/// code stabilizers, FAILURE once no completion over the untouched qubits can
/// ever certify it, otherwise the probe maximizing
/// (1-p) V(clicked) + p V(lost) with polynomial-valued memoization. A probe
/// is chosen only if it dominates every alternative pointwise on (0,1);
/// ties break toward the lowest qubit index, then basis order X < Y < Z.
OptimalPolicyResult optimal_policy(const PentagonCode& code, Basis basis);

/// Located-loss variant: losses are revealed before any basis choice, so a
/// loss pattern fails exactly when no coset representative avoids it. For
/// this code the result is the preannounced level map as an exact polynomial
/// identity, for every basis.
LossPolynomial located_loss_polynomial(const PentagonCode& code, Basis basis);

/// Failure machinery for non-preannounced loss across concatenation levels.
struct NonPreRecurrence {
    std::array<OptimalPolicyResult, 3> per_basis;  // indexed by Basis
    bool symmetric = false;

    const OptimalPolicyResult& for_basis(Basis b) const {
        return per_basis[static_cast<int>(b)];
    }

    /// Scalar level map (valid because the three failure polynomials agree;
    /// throws if they do not).
    const LossPolynomial& scalar() const;
    FailureFn scalar_fn() const;

    /// General per-basis level step: feeds the lower level's failure vector
    /// through each basis policy.
    std::array<double, 3> step(const std::array<double, 3>& lower) const;

    /// N-fold iteration from physical loss p (per-basis vector; equals the
    /// scalar composition when symmetric).
    std::array<double, 3> iterate(double p, int levels) const;
};

NonPreRecurrence nonpre_recurrence(const PentagonCode& code);

}  // namespace pentaloss

#endif
