#ifndef PENTALOSS_TABLEAU_HPP
#define PENTALOSS_TABLEAU_HPP

#include <optional>
#include <vector>

#include "pentaloss/graph.hpp"
#include "pentaloss/stabilizer.hpp"

namespace pentaloss {

struct MeasurementRecord {
    int outcome = 0;         // 0 -> +1 eigenvalue, 1 -> -1
    bool deterministic = false;
};

/// Pure stabilizer state as a list of n independent commuting generators
/// with exact signs. Enough machinery for graph-state preparation, CZ
/// application and forced-outcome Pauli measurements on a dozen qubits.
class StabilizerTableau {
  public:
    /// |+>^n, generators X_1..X_n.
    static StabilizerTableau plus_state(std::size_t n);

    /// Arbitrary full set of independent commuting generators.
    static StabilizerTableau from_generators(std::vector<PauliOperator> gens);

    /// Graph state built by applying a CZ per edge to |+>^n.
    static StabilizerTableau graph_state(const GraphSpec& g);

    std::size_t n_qubits() const { return n_; }
    const std::vector<PauliOperator>& generators() const { return gens_; }

    void apply_cz(std::size_t i, std::size_t j);

    /// Measures the Hermitian Pauli `op`. If the outcome is random the
    /// branch given by `forced` (default +1) is taken, so runs are
    /// deterministic and both branches can be explored.
    MeasurementRecord measure(const PauliOperator& op, std::optional<int> forced = std::nullopt);

    /// Convenience: measure qubit q in basis b.
    MeasurementRecord measure_qubit(std::size_t q, Basis b, std::optional<int> forced = std::nullopt);

    /// After `measure_qubit(q, b)` the state factorizes; removes qubit q and
    /// returns the tableau on the remaining qubits (indices compacted,
    /// original order preserved).
    StabilizerTableau drop_qubit(std::size_t q, Basis b) const;

    /// Whether `target` is a product of the current generators up to sign;
    /// reports the exact residual phase when it is.
    std::optional<int> contains_up_to_sign(const PauliOperator& target) const;

    /// Same span check with extra generators adjoined (e.g. code stabilizers
    /// when testing membership modulo a code).
    std::optional<int> contains_modulo(const std::vector<PauliOperator>& extra,
                                       const PauliOperator& target) const;

    /// Exact group equality: every generator of one lies in the other's
    /// span with zero residual phase, both directions.
    static bool same_group(const StabilizerTableau& a, const StabilizerTableau& b);

  private:
    StabilizerTableau(std::size_t n, std::vector<PauliOperator> gens)
        : n_(n), gens_(std::move(gens)) {}

    std::size_t n_;
    std::vector<PauliOperator> gens_;
};

}  // namespace pentaloss

#endif
