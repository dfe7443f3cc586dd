#ifndef PENTALOSS_POLICY_HPP
#define PENTALOSS_POLICY_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pentaloss/code.hpp"
#include "pentaloss/polynomial.hpp"

namespace pentaloss {

struct Probe {
    std::size_t qubit = 0;  // 0-based
    Basis basis = Basis::X;
    bool operator==(const Probe&) const = default;
};

/// Human-readable probe label with 1-based qubit numbering, e.g. "1X".
std::string probe_label(const Probe& p);

enum class LeafKind { Success, Failure };

struct SuccessCertificate {
    std::vector<Probe> probes_used;
    std::vector<std::size_t> stabilizer_indices;
    int sign = 1;  // certificate product equals sign * logical representative
    std::optional<Basis> certifies;
};

struct PolicyNode {
    bool is_leaf = false;
    LeafKind leaf = LeafKind::Failure;
    Probe probe;
    std::int32_t on_click = -1;
    std::int32_t on_lost = -1;
    std::optional<SuccessCertificate> certificate;
};

/// An adaptive measurement plan over the five ring qubits: a binary tree of
/// (qubit, basis) probes with click/lost branches ending in SUCCESS or
/// FAILURE leaves. nodes[0] is the root.
struct MeasurementPolicy {
    std::string name;
    Basis target = Basis::Z;
    std::vector<PolicyNode> nodes;

    std::string to_json() const;
    static MeasurementPolicy from_json(const std::string& text);
};

/// Literal transcription of the published decision tree for a logical-Z
/// measurement, anomalies and all: probing an already-lost qubit and leaves
/// whose clicks certify the wrong coset are preserved verbatim.
MeasurementPolicy published_tree();

/// Exact failure polynomial of a policy. A probe of a qubit already recorded
/// lost follows the lost branch with certainty (the qubit is gone); a repeat
/// probe of a clicked qubit follows the click branch with certainty.
LossPolynomial policy_failure(const MeasurementPolicy& policy);
LossPolynomial policy_success(const MeasurementPolicy& policy);

/// Failure probability when a probe in basis B fails independently with
/// probability basis_fail[B] -- the per-basis level step of the recursion.
double policy_failure_at(const MeasurementPolicy& policy,
                         const std::array<double, 3>& basis_fail);

struct PolicyAnomaly {
    enum class Kind { UnreachableBranch, RepeatedProbe, SuccessWithoutTarget, PrematureFailure };
    Kind kind;
    std::string path;    // probe trail like "1X+ 2Z+ 5Z-"
    std::string detail;
};

struct SuccessLeafInfo {
    std::string path;
    std::vector<Probe> clicked;
    std::vector<Basis> certifiable;  // which logical cosets the clicks reach
    int sign = 1;                    // certificate sign for the first certifiable basis
};

struct PolicyValidation {
    std::vector<PolicyAnomaly> anomalies;
    std::vector<SuccessLeafInfo> success_leaves;
    bool clean() const { return anomalies.empty(); }
    std::string to_json() const;
    std::string summary() const;
};

/// Walks every root-to-leaf path and reports (a) SUCCESS leaves whose clicked
/// probes certify no logical in `targets`, (b) structurally dead branches
/// (probes of qubits already lost or already measured), and (c) FAILURE
/// leaves declared while a certificate was still reachable through the
/// untouched qubits.
PolicyValidation validate_policy(const MeasurementPolicy& policy, const PentagonCode& code,
                                 const std::set<Basis>& targets);

}  // namespace pentaloss

#endif
