#include "pentaloss/tableau.hpp"

#include <stdexcept>

namespace pentaloss {

StabilizerTableau StabilizerTableau::plus_state(std::size_t n) {
    std::vector<PauliOperator> gens;
    gens.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        gens.push_back(PauliOperator::single(n, q, Basis::X));
    }
    return StabilizerTableau(n, std::move(gens));
}

StabilizerTableau StabilizerTableau::from_generators(std::vector<PauliOperator> gens) {
    if (gens.empty()) {
        throw std::invalid_argument("tableau needs at least one generator");
    }
    std::size_t n = gens[0].n_qubits();
    if (gens.size() != n) {
        throw std::invalid_argument("pure stabilizer state needs exactly n generators");
    }
    // StabilizerGroup validates commutation and independence.
    StabilizerGroup check(n, gens);
    return StabilizerTableau(n, std::move(gens));
}

StabilizerTableau StabilizerTableau::graph_state(const GraphSpec& g) {
    StabilizerTableau t = plus_state(g.n_vertices);
    for (const auto& [u, v] : g.edges) {
        t.apply_cz(u - 1, v - 1);
    }
    return t;
}

void StabilizerTableau::apply_cz(std::size_t i, std::size_t j) {
    for (auto& g : gens_) {
        g = conjugate_by_cz(g, i, j);
    }
}

MeasurementRecord StabilizerTableau::measure(const PauliOperator& op, std::optional<int> forced) {
    if (op.n_qubits() != n_) {
        throw std::invalid_argument("measure: qubit count mismatch");
    }
    if (!op.is_hermitian()) {
        throw std::invalid_argument("measure: operator must be Hermitian");
    }
    std::vector<std::size_t> anti;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (!commutes(gens_[k], op)) anti.push_back(k);
    }
    if (anti.empty()) {
        // Deterministic: +-op is a product of generators; the residual phase
        // of the certificate product is the outcome sign.
        SymplecticSolver solver(n_);
        for (const auto& g : gens_) solver.add_operator(g);
        auto combo = solver.solve(op);
        if (!combo) {
            throw std::logic_error("measure: commuting operator outside the group");
        }
        PauliOperator prod(n_);
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            if (((*combo)[k / 64] >> (k % 64)) & 1) prod = multiply(prod, gens_[k]);
        }
        int dk = ((prod.phase_quarter() - op.phase_quarter()) % 4 + 4) % 4;
        if (dk != 0 && dk != 2) {
            throw std::logic_error("measure: non-Hermitian residual phase");
        }
        return {dk == 0 ? 0 : 1, true};
    }
    std::size_t pivot = anti[0];
    for (std::size_t idx = 1; idx < anti.size(); ++idx) {
        gens_[anti[idx]] = multiply(gens_[anti[idx]], gens_[pivot]);
    }
    int m = forced.value_or(0);
    PauliOperator replacement = op;
    replacement.set_phase_quarter(op.phase_quarter() + 2 * m);
    gens_[pivot] = replacement;
    return {m, false};
}

MeasurementRecord StabilizerTableau::measure_qubit(std::size_t q, Basis b,
                                                   std::optional<int> forced) {
    return measure(PauliOperator::single(n_, q, b), forced);
}

StabilizerTableau StabilizerTableau::drop_qubit(std::size_t q, Basis b) const {
    PauliOperator meas = PauliOperator::single(n_, q, b);
    // Locate the generator holding the measured single-qubit operator.
    std::size_t holder = SIZE_MAX;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (gens_[k].x_words() == meas.x_words() && gens_[k].z_words() == meas.z_words()) {
            holder = k;
            break;
        }
    }
    if (holder == SIZE_MAX) {
        throw std::invalid_argument("drop_qubit: qubit was not measured in that basis");
    }
    std::vector<PauliOperator> kept;
    kept.reserve(n_ - 1);
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k == holder) continue;
        PauliOperator g = gens_[k];
        if (g.x_bit(q) || g.z_bit(q)) {
            g = multiply(g, gens_[holder]);
        }
        if (g.x_bit(q) || g.z_bit(q)) {
            throw std::logic_error("drop_qubit: residual support on measured qubit");
        }
        PauliOperator shrunk(n_ - 1);
        std::size_t out = 0;
        for (std::size_t in = 0; in < n_; ++in) {
            if (in == q) continue;
            shrunk.set_x(out, g.x_bit(in));
            shrunk.set_z(out, g.z_bit(in));
            ++out;
        }
        shrunk.set_phase_quarter(g.phase_quarter());
        kept.push_back(std::move(shrunk));
    }
    return StabilizerTableau(n_ - 1, std::move(kept));
}

std::optional<int> StabilizerTableau::contains_up_to_sign(const PauliOperator& target) const {
    return contains_modulo({}, target);
}

std::optional<int> StabilizerTableau::contains_modulo(const std::vector<PauliOperator>& extra,
                                                      const PauliOperator& target) const {
    SymplecticSolver solver(n_);
    std::vector<const PauliOperator*> all;
    for (const auto& g : gens_) {
        solver.add_operator(g);
        all.push_back(&g);
    }
    for (const auto& e : extra) {
        solver.add_operator(e);
        all.push_back(&e);
    }
    auto combo = solver.solve(target);
    if (!combo) return std::nullopt;
    PauliOperator prod(n_);
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (((*combo)[k / 64] >> (k % 64)) & 1) prod = multiply(prod, *all[k]);
    }
    return ((prod.phase_quarter() - target.phase_quarter()) % 4 + 4) % 4;
}

bool StabilizerTableau::same_group(const StabilizerTableau& a, const StabilizerTableau& b) {
    if (a.n_qubits() != b.n_qubits()) return false;
    for (const auto& g : b.generators()) {
        auto dk = a.contains_up_to_sign(g);
        if (!dk || *dk != 0) return false;
    }
    for (const auto& g : a.generators()) {
        auto dk = b.contains_up_to_sign(g);
        if (!dk || *dk != 0) return false;
    }
    return true;
}

}  // namespace pentaloss
