#include "pentaloss/policy_dp.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace pentaloss {

namespace {

enum Status : int { kUntouched = 0, kLost = 1, kClickedX = 2, kClickedY = 3, kClickedZ = 4 };

using State = std::array<int, 5>;

std::size_t encode(const State& s) {
    std::size_t code = 0;
    for (int v : s) code = code * 5 + static_cast<std::size_t>(v);
    return code;
}

// Symplectic vectors over ten bits: x part low, z part high.
using Vec = std::uint32_t;

Vec vec_of(const PauliOperator& p) {
    Vec v = 0;
    for (std::size_t q = 0; q < 5; ++q) {
        if (p.x_bit(q)) v |= 1u << q;
        if (p.z_bit(q)) v |= 1u << (q + 5);
    }
    return v;
}

Vec probe_vec(std::size_t q, Basis b) {
    Vec v = 0;
    if (b != Basis::Z) v |= 1u << q;
    if (b != Basis::X) v |= 1u << (q + 5);
    return v;
}

bool in_gf2_span(const std::vector<Vec>& rows, Vec target) {
    std::array<Vec, 10> basis{};
    std::size_t rank = 0;
    auto reduce = [&](Vec v) {
        for (std::size_t i = 0; i < rank; ++i) {
            Vec lower = v ^ basis[i];
            if (lower < v) v = lower;
        }
        return v;
    };
    for (Vec r : rows) {
        Vec v = reduce(r);
        if (v != 0 && rank < basis.size()) {
            basis[rank++] = v;
            // keep descending leading-bit order
            for (std::size_t i = rank - 1; i > 0 && basis[i] > basis[i - 1]; --i) {
                std::swap(basis[i], basis[i - 1]);
            }
        }
    }
    return reduce(target) == 0;
}

enum class NodeClass { Success, Failure, Open };

struct DpSolver {
    const PentagonCode& code;
    Basis basis;
    std::vector<Vec> gen_vecs;
    Vec target_vec;
    std::vector<std::optional<std::pair<LossPolynomial, int>>> memo;  // action < 0 on leaves
    std::vector<std::string> tie_states;

    DpSolver(const PentagonCode& c, Basis b) : code(c), basis(b), memo(3125) {
        for (const auto& g : c.code_stabilizers().generators()) {
            gen_vecs.push_back(vec_of(g));
        }
        target_vec = vec_of(c.logical(b));
    }

    NodeClass classify(const State& s) const {
        std::vector<Vec> rows = gen_vecs;
        for (std::size_t q = 0; q < 5; ++q) {
            if (s[q] >= kClickedX) {
                rows.push_back(probe_vec(q, static_cast<Basis>(s[q] - kClickedX)));
            }
        }
        if (in_gf2_span(rows, target_vec)) return NodeClass::Success;
        for (std::size_t q = 0; q < 5; ++q) {
            if (s[q] == kUntouched) {
                rows.push_back(probe_vec(q, Basis::X));
                rows.push_back(probe_vec(q, Basis::Z));
            }
        }
        if (!in_gf2_span(rows, target_vec)) return NodeClass::Failure;
        return NodeClass::Open;
    }

    static std::string state_label(const State& s) {
        std::string out;
        static const char* names[] = {".", "-", "X", "Y", "Z"};
        for (int v : s) out += names[v];
        return out;
    }

    const LossPolynomial& solve(const State& s) {
        std::size_t key = encode(s);
        if (memo[key]) return memo[key]->first;
        NodeClass cls = classify(s);
        if (cls == NodeClass::Success) {
            memo[key] = {LossPolynomial::constant(1), -1};
            return memo[key]->first;
        }
        if (cls == NodeClass::Failure) {
            memo[key] = {LossPolynomial::constant(0), -2};
            return memo[key]->first;
        }
        std::optional<LossPolynomial> best;
        int best_action = -1;
        bool had_tie = false;
        for (std::size_t q = 0; q < 5; ++q) {
            if (s[q] != kUntouched) continue;
            for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
                State clicked = s;
                clicked[q] = kClickedX + static_cast<int>(b);
                State lost = s;
                lost[q] = kLost;
                LossPolynomial value = solve(clicked).times_one_minus_p() +
                                       solve(lost).times_p();
                if (!best) {
                    best = std::move(value);
                    best_action = static_cast<int>(q) * 3 + static_cast<int>(b);
                    continue;
                }
                bool b_dominates = best->dominates(value);
                bool v_dominates = value.dominates(*best);
                if (b_dominates) continue;  // covers equality: earlier action wins
                if (v_dominates) {
                    best = std::move(value);
                    best_action = static_cast<int>(q) * 3 + static_cast<int>(b);
                } else {
                    had_tie = true;
                    if (value.eval(Rational(3, 20)) > best->eval(Rational(3, 20))) {
                        best = std::move(value);
                        best_action = static_cast<int>(q) * 3 + static_cast<int>(b);
                    }
                }
            }
        }
        if (had_tie) tie_states.push_back(state_label(s));
        memo[key] = {std::move(*best), best_action};
        return memo[key]->first;
    }

    std::int32_t extract(const State& s, MeasurementPolicy& policy) {
        std::size_t key = encode(s);
        solve(s);
        int action = memo[key]->second;
        PolicyNode node;
        if (action == -1) {
            node.is_leaf = true;
            node.leaf = LeafKind::Success;
            node.certificate = make_certificate(s);
            policy.nodes.push_back(std::move(node));
            return static_cast<std::int32_t>(policy.nodes.size() - 1);
        }
        if (action == -2) {
            node.is_leaf = true;
            node.leaf = LeafKind::Failure;
            policy.nodes.push_back(std::move(node));
            return static_cast<std::int32_t>(policy.nodes.size() - 1);
        }
        std::size_t q = static_cast<std::size_t>(action) / 3;
        Basis b = static_cast<Basis>(action % 3);
        node.probe = {q, b};
        policy.nodes.push_back(node);
        std::int32_t slot = static_cast<std::int32_t>(policy.nodes.size() - 1);
        State clicked = s;
        clicked[q] = kClickedX + static_cast<int>(b);
        State lost = s;
        lost[q] = kLost;
        std::int32_t c = extract(clicked, policy);
        std::int32_t l = extract(lost, policy);
        policy.nodes[slot].on_click = c;
        policy.nodes[slot].on_lost = l;
        return slot;
    }

    SuccessCertificate make_certificate(const State& s) const {
        std::vector<PauliOperator> clicked;
        std::vector<Probe> probes;
        for (std::size_t q = 0; q < 5; ++q) {
            if (s[q] >= kClickedX) {
                Basis b = static_cast<Basis>(s[q] - kClickedX);
                clicked.push_back(PauliOperator::single(5, q, b));
                probes.push_back({q, b});
            }
        }
        auto cert = in_span(code.code_stabilizers(), clicked, code.logical(basis));
        if (!cert) {
            throw std::logic_error("optimal_policy: SUCCESS leaf without certificate");
        }
        SuccessCertificate out;
        for (std::size_t idx : cert->extra_indices) out.probes_used.push_back(probes[idx]);
        out.stabilizer_indices = cert->generator_indices;
        out.sign = cert->phase_mismatch_quarter == 0 ? 1 : -1;
        out.certifies = basis;
        return out;
    }
};

}  // namespace

OptimalPolicyResult optimal_policy(const PentagonCode& code, Basis basis) {
    DpSolver solver(code, basis);
    State root{};
    solver.solve(root);

    OptimalPolicyResult out;
    out.policy.name = std::string("dp-optimal-") + basis_letter(basis);
    out.policy.target = basis;
    // Root goes in first so nodes[0] is the entry point.
    solver.extract(root, out.policy);
    out.failure = LossPolynomial::constant(1) - solver.memo[encode(root)]->first;
    out.tie_states = std::move(solver.tie_states);
    return out;
}

LossPolynomial located_loss_polynomial(const PentagonCode& code, Basis basis) {
    auto coset = code.logical_coset(basis);
    std::vector<std::uint32_t> supports;
    for (const auto& e : coset) {
        std::uint32_t m = 0;
        for (std::size_t q = 0; q < 5; ++q) {
            if (e.x_bit(q) || e.z_bit(q)) m |= 1u << q;
        }
        supports.push_back(m);
    }
    LossPolynomial fail = LossPolynomial::constant(0);
    for (std::uint32_t lost = 0; lost < 32; ++lost) {
        bool recoverable = false;
        for (std::uint32_t s : supports) {
            if ((s & lost) == 0) {
                recoverable = true;
                break;
            }
        }
        if (recoverable) continue;
        LossPolynomial term = LossPolynomial::constant(1);
        int nl = std::popcount(lost);
        for (int i = 0; i < nl; ++i) term = term.times_p();
        for (int i = 0; i < 5 - nl; ++i) term = term.times_one_minus_p();
        fail = fail + term;
    }
    return fail;
}

const LossPolynomial& NonPreRecurrence::scalar() const {
    if (!symmetric) {
        throw std::logic_error("per-basis failure polynomials differ; no scalar recursion");
    }
    return per_basis[static_cast<int>(Basis::Z)].failure;
}

FailureFn NonPreRecurrence::scalar_fn() const {
    LossPolynomial poly = scalar();
    return [poly](double p) {
        double v = poly(p);
        return std::min(1.0, std::max(0.0, v));
    };
}

std::array<double, 3> NonPreRecurrence::step(const std::array<double, 3>& lower) const {
    std::array<double, 3> out{};
    for (int b = 0; b < 3; ++b) {
        out[b] = policy_failure_at(per_basis[b].policy, lower);
    }
    return out;
}

std::array<double, 3> NonPreRecurrence::iterate(double p, int levels) const {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    std::array<double, 3> v = {p, p, p};
    for (int i = 0; i < levels; ++i) v = step(v);
    return v;
}

NonPreRecurrence nonpre_recurrence(const PentagonCode& code) {
    NonPreRecurrence out{
        {optimal_policy(code, Basis::X), optimal_policy(code, Basis::Y),
         optimal_policy(code, Basis::Z)},
        false};
    out.symmetric = out.per_basis[0].failure == out.per_basis[1].failure &&
                    out.per_basis[1].failure == out.per_basis[2].failure;
    return out;
}

}  // namespace pentaloss
