#ifndef PENTALOSS_MONTECARLO_HPP
#define PENTALOSS_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pentaloss/policy_dp.hpp"

namespace pentaloss {

/// splitmix64 finalizer; the avalanche step behind all sampling streams.
std::uint64_t mix64(std::uint64_t z);

struct SimConfig {
    LossMode mode = LossMode::Preannounced;
    double p = 0.0;
    int levels = 1;
    std::uint64_t shots = 1;
    std::uint64_t seed = 0;
    Basis basis = Basis::Z;  // top-level logical basis (non-preannounced mode)
    int jobs = 1;

    void validate() const;
};

struct SimReport {
    SimConfig config;
    std::uint64_t failures = 0;
    double estimate = 0.0;
    double stderr_est = 0.0;  // sqrt(e(1-e)/shots)
    double analytic = 0.0;
    double z = 0.0;
    std::string error;  // nonempty when the config was rejected

    static std::string csv_header();
    std::string to_csv_row() const;
    std::string to_json_line() const;
};

/// Seeded sampler over the 5^N-leaf layout. Each leaf's loss is a pure
/// function of (seed, shot, leaf index), so estimates are bit-identical for
/// any evaluation order and any worker count.
class MonteCarlo {
  public:
    explicit MonteCarlo(const PentagonCode& code);
    explicit MonteCarlo(NonPreRecurrence recurrence);

    const NonPreRecurrence& recurrence() const { return rec_; }

    SimReport run(const SimConfig& config) const;

    /// Independent runs with per-config derived sub-seeds, reported in input
    /// order. A rejected config yields a report carrying its error message
    /// instead of aborting the rest of the sweep.
    std::vector<SimReport> sweep(const std::vector<SimConfig>& configs) const;

    /// Cross-check mode: losses revealed up front, every pentagon recovers
    /// iff at most two children failed. Semantically the preannounced walk,
    /// executed without early exits.
    SimReport run_revealed(const SimConfig& config) const;

  private:
    SimReport finish(const SimConfig& config, std::uint64_t failures, double analytic) const;
    std::uint64_t count_failures(const SimConfig& config, bool revealed) const;

    NonPreRecurrence rec_;
};

}  // namespace pentaloss

#endif
