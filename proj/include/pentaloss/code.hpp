#ifndef PENTALOSS_CODE_HPP
#define PENTALOSS_CODE_HPP

#include <array>
#include <string>
#include <vector>

#include "pentaloss/graph.hpp"
#include "pentaloss/stabilizer.hpp"

namespace pentaloss {

/// The five-qubit graph code obtained from the ring graph state: four
/// independent products of adjacent ring stabilizers K_i, plus one logical
/// qubit. Logical representatives are XXXXX / YYYYY / ZZZZZ; every K_i sits
/// in the logical-X coset (as -K_i relative to the +XXXXX representative).
class PentagonCode {
  public:
    static PentagonCode build();

    const GraphSpec& ring() const { return ring_; }
    const std::vector<PauliOperator>& ring_stabilizers() const { return ring_stabs_; }
    const StabilizerGroup& code_stabilizers() const { return code_; }
    const PauliOperator& logical(Basis b) const { return logicals_[static_cast<int>(b)]; }

    std::vector<PauliOperator> logical_coset(Basis b) const {
        return coset_elements(code_, logical(b));
    }

    /// Minimum weight over the three nontrivial logical cosets (always 3).
    std::size_t distance() const;

    /// The same code with ring labels cycled by `offset` positions. Logical
    /// representatives are rotation invariant; stabilizer generators move.
    PentagonCode rotated(int offset) const;

    /// JSON with the stabilizer strings and logical representatives.
    std::string to_json() const;

  private:
    PentagonCode(GraphSpec ring, std::vector<PauliOperator> ring_stabs, StabilizerGroup code,
                 std::array<PauliOperator, 3> logicals);

    GraphSpec ring_;
    std::vector<PauliOperator> ring_stabs_;
    StabilizerGroup code_;
    std::array<PauliOperator, 3> logicals_;
};

PentagonCode build_pentagon_code();

/// All minimum-weight elements of the requested logical coset, sorted by
/// (weight, x bits, z bits). For every basis this yields ten weight-3
/// operators in two rotational families of five.
std::vector<PauliOperator> minimal_representatives(const PentagonCode& code, Basis b);

/// Base-5 addressing for N levels of self-concatenation: 5^N leaves, each
/// identified by its digit path from the level-0 logical qubit.
struct ConcatenationLayout {
    std::size_t levels = 0;
    std::uint64_t physical_count = 0;

    /// Digits (0..4) of the path from level 0 down to the given leaf.
    std::vector<int> path_of(std::uint64_t leaf) const;
    std::uint64_t leaf_of(const std::vector<int>& path) const;
};

/// Throws unless 1 <= levels <= 12.
ConcatenationLayout layout(std::size_t levels);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EncodingReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_json() const;
};

/// Verifies the encoding construction at the operator level: the centre
/// conjugation tables for the five-fold controlled-Z, and the teleportation
/// of centre stabilizer eigenstates into the code (centre Z -> logical X
/// coset, centre X -> outcome-framed logical Z) via a 6-qubit tableau run.
EncodingReport verify_encoding_identities(const PentagonCode& code);

}  // namespace pentaloss

#endif
