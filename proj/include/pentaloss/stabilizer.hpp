#ifndef PENTALOSS_STABILIZER_HPP
#define PENTALOSS_STABILIZER_HPP

#include <optional>
#include <vector>

#include "pentaloss/pauli.hpp"

namespace pentaloss {

/// An independent, pairwise-commuting set of Pauli generators. Construction
/// validates both properties; independence over GF(2) also rules out any
/// signed product collapsing to minus identity.
class StabilizerGroup {
  public:
    StabilizerGroup(std::size_t n_qubits, std::vector<PauliOperator> generators);

    std::size_t n_qubits() const { return n_; }
    const std::vector<PauliOperator>& generators() const { return gens_; }
    std::size_t size() const { return std::size_t{1} << gens_.size(); }

    /// All 2^k signed group elements, exact phases, in subset-mask order.
    std::vector<PauliOperator> elements() const;

  private:
    std::size_t n_;
    std::vector<PauliOperator> gens_;
};

/// Outcome of a span query. `extra_indices` / `generator_indices` select the
/// certificate factors; `phase_mismatch_quarter` is k such that the exact
/// certificate product equals i^k * target (0 means exact equality, 2 means
/// the product is minus the target).
struct SpanCertificate {
    std::vector<std::size_t> extra_indices;
    std::vector<std::size_t> generator_indices;
    int phase_mismatch_quarter = 0;
};

/// Decides by GF(2) elimination on symplectic vectors whether `target` is a
/// product of group elements and a subset of `extra`, up to global sign.
/// Letter bits decide membership; the certificate reports the exact residual
/// phase of the product (always 0 or 2 for Hermitian inputs).
std::optional<SpanCertificate> in_span(const StabilizerGroup& group,
                                       const std::vector<PauliOperator>& extra,
                                       const PauliOperator& target);

/// All |group| products rep*s with exact phases, sorted by
/// (weight, x bits, z bits). `rep` must commute with every generator.
std::vector<PauliOperator> coset_elements(const StabilizerGroup& group,
                                          const PauliOperator& rep);

/// Incremental GF(2) solver over packed symplectic rows (x bits in the low
/// half, z bits in the high half); shared by span queries, the policy engine
/// and the tableau. Tracks combinations so solutions report which input rows
/// participate.
class SymplecticSolver {
  public:
    explicit SymplecticSolver(std::size_t n_qubits);

    static std::vector<std::uint64_t> symplectic_row(const PauliOperator& p);

    void add_row(const std::vector<std::uint64_t>& row);
    void add_operator(const PauliOperator& p) { add_row(symplectic_row(p)); }

    std::size_t rank() const { return pivots_.size(); }

    /// If `row` lies in the span, returns the mask of added rows (by insertion
    /// index) whose XOR equals it.
    std::optional<std::vector<std::uint64_t>> solve(const std::vector<std::uint64_t>& row) const;
    std::optional<std::vector<std::uint64_t>> solve(const PauliOperator& p) const {
        return solve(symplectic_row(p));
    }

  private:
    struct PivotRow {
        std::vector<std::uint64_t> row;
        std::vector<std::uint64_t> combo;  // mask over inserted rows
        std::size_t lead;                  // index of leading bit
    };
    std::size_t n_qubits_;
    std::size_t words_;
    std::size_t added_ = 0;
    std::vector<PivotRow> pivots_;
};

}  // namespace pentaloss

#endif
