#include "pentaloss/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pentaloss {

namespace {

std::size_t lead_bit(const std::vector<std::uint64_t>& row) {
    for (std::size_t w = row.size(); w-- > 0;) {
        if (row[w] != 0) {
            return w * 64 + (63 - std::countl_zero(row[w]));
        }
    }
    return SIZE_MAX;
}

void xor_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

bool is_zero(const std::vector<std::uint64_t>& a) {
    for (auto w : a) {
        if (w != 0) return false;
    }
    return true;
}

}  // namespace

SymplecticSolver::SymplecticSolver(std::size_t n_qubits)
    : n_qubits_(n_qubits), words_((2 * n_qubits + 63) / 64) {}

std::vector<std::uint64_t> SymplecticSolver::symplectic_row(const PauliOperator& p) {
    std::size_t n = p.n_qubits();
    std::vector<std::uint64_t> row((2 * n + 63) / 64, 0);
    for (std::size_t q = 0; q < n; ++q) {
        if (p.x_bit(q)) row[q / 64] |= std::uint64_t{1} << (q % 64);
        if (p.z_bit(q)) {
            std::size_t b = n + q;
            row[b / 64] |= std::uint64_t{1} << (b % 64);
        }
    }
    return row;
}

void SymplecticSolver::add_row(const std::vector<std::uint64_t>& row) {
    if (row.size() != words_) {
        throw std::invalid_argument("SymplecticSolver: row width mismatch");
    }
    std::vector<std::uint64_t> cur = row;
    std::vector<std::uint64_t> combo(added_ / 64 + 1, 0);
    combo[added_ / 64] = std::uint64_t{1} << (added_ % 64);
    ++added_;
    for (auto& p : pivots_) {
        p.combo.resize(combo.size(), 0);
    }
    for (const auto& p : pivots_) {
        if ((cur[p.lead / 64] >> (p.lead % 64)) & 1) {
            xor_into(cur, p.row);
            xor_into(combo, p.combo);
        }
    }
    if (is_zero(cur)) return;
    std::size_t lead = lead_bit(cur);
    // Keep rows fully reduced: clear the new lead from every existing pivot
    // so span reduction stays order-independent.
    for (auto& p : pivots_) {
        if ((p.row[lead / 64] >> (lead % 64)) & 1) {
            xor_into(p.row, cur);
            xor_into(p.combo, combo);
        }
    }
    pivots_.push_back({std::move(cur), std::move(combo), lead});
}

std::optional<std::vector<std::uint64_t>> SymplecticSolver::solve(
        const std::vector<std::uint64_t>& row) const {
    if (row.size() != words_) {
        throw std::invalid_argument("SymplecticSolver: row width mismatch");
    }
    std::vector<std::uint64_t> cur = row;
    std::vector<std::uint64_t> combo(added_ == 0 ? 1 : (added_ - 1) / 64 + 1, 0);
    for (const auto& p : pivots_) {
        if ((cur[p.lead / 64] >> (p.lead % 64)) & 1) {
            xor_into(cur, p.row);
            std::vector<std::uint64_t> pc = p.combo;
            pc.resize(combo.size(), 0);
            xor_into(combo, pc);
        }
    }
    if (!is_zero(cur)) return std::nullopt;
    return combo;
}

StabilizerGroup::StabilizerGroup(std::size_t n_qubits, std::vector<PauliOperator> generators)
    : n_(n_qubits), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
        if (g.n_qubits() != n_) {
            throw std::invalid_argument("StabilizerGroup: generator qubit count mismatch");
        }
        if (!g.is_hermitian()) {
            throw std::invalid_argument("StabilizerGroup: generators must be Hermitian");
        }
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        for (std::size_t j = i + 1; j < gens_.size(); ++j) {
            if (!commutes(gens_[i], gens_[j])) {
                throw std::invalid_argument("StabilizerGroup: generators must commute");
            }
        }
    }
    SymplecticSolver solver(n_);
    for (const auto& g : gens_) {
        solver.add_operator(g);
    }
    // Full GF(2) rank means no nonempty subset multiplies to +-identity,
    // so the generated group cannot contain minus identity.
    if (solver.rank() != gens_.size()) {
        throw std::invalid_argument("StabilizerGroup: generators must be independent");
    }
}

std::vector<PauliOperator> StabilizerGroup::elements() const {
    std::vector<PauliOperator> out;
    out.reserve(size());
    for (std::size_t mask = 0; mask < size(); ++mask) {
        PauliOperator e(n_);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if ((mask >> i) & 1) e = multiply(e, gens_[i]);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<SpanCertificate> in_span(const StabilizerGroup& group,
                                       const std::vector<PauliOperator>& extra,
                                       const PauliOperator& target) {
    if (target.n_qubits() != group.n_qubits()) {
        throw std::invalid_argument("in_span: qubit count mismatch");
    }
    for (const auto& e : extra) {
        if (e.n_qubits() != group.n_qubits()) {
            throw std::invalid_argument("in_span: qubit count mismatch");
        }
    }
    SymplecticSolver solver(group.n_qubits());
    const auto& gens = group.generators();
    for (const auto& g : gens) solver.add_operator(g);
    for (const auto& e : extra) solver.add_operator(e);
    auto combo = solver.solve(target);
    if (!combo) return std::nullopt;

    SpanCertificate cert;
    PauliOperator prod(group.n_qubits());
    for (std::size_t i = 0; i < gens.size() + extra.size(); ++i) {
        if (((*combo)[i / 64] >> (i % 64)) & 1) {
            if (i < gens.size()) {
                cert.generator_indices.push_back(i);
                prod = multiply(prod, gens[i]);
            } else {
                cert.extra_indices.push_back(i - gens.size());
                prod = multiply(prod, extra[i - gens.size()]);
            }
        }
    }
    cert.phase_mismatch_quarter = ((prod.phase_quarter() - target.phase_quarter()) % 4 + 4) % 4;
    return cert;
}

std::vector<PauliOperator> coset_elements(const StabilizerGroup& group,
                                          const PauliOperator& rep) {
    for (const auto& g : group.generators()) {
        if (!commutes(rep, g)) {
            throw std::invalid_argument("coset_elements: representative must commute with the group");
        }
    }
    std::vector<PauliOperator> out;
    out.reserve(group.size());
    for (const auto& s : group.elements()) {
        out.push_back(multiply(rep, s));
    }
    std::sort(out.begin(), out.end(), weight_lex_less);
    return out;
}

}  // namespace pentaloss
