#include "pentaloss/gates.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace pentaloss {

bool VerdictReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const GateCheck& c) { return c.pass; });
}

std::string VerdictReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) {
        j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return j.dump(2);
}

namespace {

// Twelve-qubit layout: ring A on 0..4, centre A on 5, ring B on 6..10,
// centre B on 11.
StabilizerTableau build_double_wheel(bool bridge) {
    StabilizerTableau t = StabilizerTableau::plus_state(12);
    for (std::size_t i = 0; i < 5; ++i) {
        t.apply_cz(i, (i + 1) % 5);
        t.apply_cz(6 + i, 6 + (i + 1) % 5);
        t.apply_cz(i, 5);
        t.apply_cz(6 + i, 11);
    }
    if (bridge) t.apply_cz(5, 11);
    return t;
}

PauliOperator block_logical(const PentagonCode& code, Basis b, int block) {
    PauliOperator out(10);
    const PauliOperator& l = code.logical(b);
    std::size_t off = block == 0 ? 0 : 5;
    for (std::size_t q = 0; q < 5; ++q) {
        out.set_x(off + q, l.x_bit(q));
        out.set_z(off + q, l.z_bit(q));
    }
    out.set_phase_quarter(l.phase_quarter());
    return out;
}

std::vector<PauliOperator> block_codes(const PentagonCode& code) {
    std::vector<PauliOperator> out;
    for (int block = 0; block < 2; ++block) {
        std::size_t off = block == 0 ? 0 : 5;
        for (const auto& g : code.code_stabilizers().generators()) {
            PauliOperator e(10);
            for (std::size_t q = 0; q < 5; ++q) {
                e.set_x(off + q, g.x_bit(q));
                e.set_z(off + q, g.z_bit(q));
            }
            e.set_phase_quarter(g.phase_quarter());
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::string sign_str(int dk) {
    return dk == 0 ? "+1" : "-1";
}

}  // namespace

VerdictReport simulate_cz_flow(const PentagonCode& code) {
    VerdictReport report;
    auto extra = block_codes(code);
    PauliOperator xa_zb = multiply(block_logical(code, Basis::X, 0),
                                   block_logical(code, Basis::Z, 1));
    PauliOperator za_xb = multiply(block_logical(code, Basis::Z, 0),
                                   block_logical(code, Basis::X, 1));

    for (int ma = 0; ma < 2; ++ma) {
        for (int mb = 0; mb < 2; ++mb) {
            StabilizerTableau t = build_double_wheel(true);
            t.measure_qubit(5, Basis::X, ma);
            t.measure_qubit(11, Basis::X, mb);
            StabilizerTableau rest = t.drop_qubit(11, Basis::X).drop_qubit(5, Basis::X);

            auto d1 = rest.contains_modulo(extra, xa_zb);
            auto d2 = rest.contains_modulo(extra, za_xb);
            std::string tag = std::to_string(ma) + std::to_string(mb);
            report.checks.push_back({"cz_flow_xa_zb_outcomes_" + tag, d1.has_value(),
                                     d1 ? "present, frame sign " + sign_str(*d1) : "absent"});
            report.checks.push_back({"cz_flow_za_xb_outcomes_" + tag, d2.has_value(),
                                     d2 ? "present, frame sign " + sign_str(*d2) : "absent"});
        }
    }

    // Measuring the centres in the other order leaves the same group.
    {
        StabilizerTableau t1 = build_double_wheel(true);
        t1.measure_qubit(5, Basis::X, 0);
        t1.measure_qubit(11, Basis::X, 0);
        StabilizerTableau r1 = t1.drop_qubit(11, Basis::X).drop_qubit(5, Basis::X);
        StabilizerTableau t2 = build_double_wheel(true);
        t2.measure_qubit(11, Basis::X, 0);
        t2.measure_qubit(5, Basis::X, 0);
        StabilizerTableau r2 = t2.drop_qubit(11, Basis::X).drop_qubit(5, Basis::X);
        report.checks.push_back({"cz_flow_order_invariance",
                                 StabilizerTableau::same_group(r1, r2),
                                 "centre measurement order does not matter"});
    }

    // Without the centre-centre edge the logical correlations must vanish.
    {
        StabilizerTableau t = build_double_wheel(false);
        t.measure_qubit(5, Basis::X, 0);
        t.measure_qubit(11, Basis::X, 0);
        StabilizerTableau rest = t.drop_qubit(11, Basis::X).drop_qubit(5, Basis::X);
        bool absent = !rest.contains_modulo(extra, xa_zb).has_value() &&
                      !rest.contains_modulo(extra, za_xb).has_value();
        report.checks.push_back({"cz_flow_negative_control", absent,
                                 "correlations absent without the centre-centre edge"});
    }
    return report;
}

const std::vector<PauliOperator>& cx_correlation_operators() {
    static const std::vector<PauliOperator> ops = {
        PauliOperator::from_string("XIXIXIIX"),  // qubit 6 reads as identity
        PauliOperator::from_string("ZXIXZIII"),
        PauliOperator::from_string("IIIXZZXZ"),
        PauliOperator::from_string("IIIIIXIX"),
    };
    return ops;
}

CxReport check_cx_correlations(const GraphSpec& adjacency) {
    if (adjacency.n_vertices != 8) {
        throw std::invalid_argument("check_cx_correlations: graph must have 8 vertices");
    }
    CxReport report;
    const auto& ops = cx_correlation_operators();
    report.commute_ok = true;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (!commutes(ops[i], ops[j])) report.commute_ok = false;
        }
    }
    auto ks = graph_stabilizers(adjacency);
    for (const auto& op : ops) {
        CxMembership m;
        m.op = op.str();
        // Graph-group membership in bits is z = A x with the x support naming
        // the stabilizers; multiply them out for the exact sign.
        PauliOperator prod(8);
        for (std::size_t v = 0; v < 8; ++v) {
            if (op.x_bit(v)) {
                prod = multiply(prod, ks[v]);
                m.vertices.push_back(v + 1);
            }
        }
        if (prod.x_words() == op.x_words() && prod.z_words() == op.z_words()) {
            m.member = true;
            m.sign = prod.phase_quarter() == op.phase_quarter() ? 1 : -1;
        } else {
            m.member = false;
            m.vertices.clear();
        }
        report.memberships.push_back(std::move(m));
    }
    return report;
}

bool CxReport::all_member() const {
    return std::all_of(memberships.begin(), memberships.end(),
                       [](const CxMembership& m) { return m.member; });
}

std::string CxReport::to_json() const {
    nlohmann::json j;
    j["pairwise_commute"] = commute_ok;
    j["memberships"] = nlohmann::json::array();
    for (const auto& m : memberships) {
        nlohmann::json jm;
        jm["operator"] = m.op;
        jm["member"] = m.member;
        if (m.member) {
            jm["sign"] = m.sign;
            jm["stabilizer_vertices"] = m.vertices;
        }
        j["memberships"].push_back(jm);
    }
    return j.dump(2);
}

namespace {

// Edge variables in lexicographic order over vertex pairs (0-based).
std::vector<std::pair<int, int>> edge_list8() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) edges.push_back({i, j});
    }
    return edges;
}

GraphSpec graph_from_mask(std::uint32_t mask) {
    auto edges = edge_list8();
    GraphSpec g;
    g.n_vertices = 8;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if ((mask >> k) & 1) g.add_edge(edges[k].first + 1, edges[k].second + 1);
    }
    return g;
}

bool all_plus_signs(const GraphSpec& g) {
    auto report = check_cx_correlations(g);
    for (const auto& m : report.memberships) {
        if (!m.member || m.sign != 1) return false;
    }
    return true;
}

}  // namespace

CxAdjacencySearch find_cx_adjacencies(std::size_t max_examples) {
    auto edges = edge_list8();
    const std::size_t n_vars = edges.size();  // 28
    std::vector<std::uint32_t> rows;
    std::vector<int> rhs;
    for (const auto& op : cx_correlation_operators()) {
        for (int i = 0; i < 8; ++i) {
            std::uint32_t r = 0;
            for (int j = 0; j < 8; ++j) {
                if (j == i || !op.x_bit(j)) continue;
                auto e = std::make_pair(std::min(i, j), std::max(i, j));
                std::size_t k = std::find(edges.begin(), edges.end(), e) - edges.begin();
                r |= 1u << k;
            }
            rows.push_back(r);
            rhs.push_back(op.z_bit(i) ? 1 : 0);
        }
    }
    // Gaussian elimination to reduced form.
    struct Pivot { std::uint32_t row; int rhs; int lead; };
    std::vector<Pivot> pivots;
    bool consistent = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::uint32_t cur = rows[k];
        int b = rhs[k];
        for (const auto& p : pivots) {
            if ((cur >> p.lead) & 1) {
                cur ^= p.row;
                b ^= p.rhs;
            }
        }
        if (cur == 0) {
            if (b) consistent = false;
            continue;
        }
        int lead = std::countr_zero(cur);
        for (auto& p : pivots) {
            if ((p.row >> lead) & 1) {
                p.row ^= cur;
                p.rhs ^= b;
            }
        }
        pivots.push_back({cur, b, lead});
    }
    CxAdjacencySearch out;
    if (!consistent) {
        out.candidate.n_vertices = 8;
        return out;
    }
    std::vector<int> free_vars;
    for (std::size_t v = 0; v < n_vars; ++v) {
        bool is_pivot = false;
        for (const auto& p : pivots) {
            if (p.lead == static_cast<int>(v)) is_pivot = true;
        }
        if (!is_pivot) free_vars.push_back(static_cast<int>(v));
    }
    out.solution_count = std::size_t{1} << free_vars.size();

    auto solution_for = [&](std::uint32_t freeval) {
        std::uint32_t sol = 0;
        for (std::size_t i = 0; i < free_vars.size(); ++i) {
            if ((freeval >> i) & 1) sol |= 1u << free_vars[i];
        }
        for (const auto& p : pivots) {
            int v = p.rhs;
            std::uint32_t rest = p.row & ~(1u << p.lead);
            v ^= std::popcount(rest & sol) & 1;
            if (v) sol |= 1u << p.lead;
        }
        return sol;
    };

    // Rank all solutions: all-plus certificate signs first, then fewest
    // edges, then lexicographic edge mask.
    std::vector<std::tuple<int, int, std::uint32_t>> ranked;
    for (std::uint32_t fv = 0; fv < out.solution_count; ++fv) {
        std::uint32_t sol = solution_for(fv);
        GraphSpec g = graph_from_mask(sol);
        bool plus = all_plus_signs(g);
        if (plus) ++out.all_plus_count;
        ranked.push_back({plus ? 0 : 1, std::popcount(sol), sol});
    }
    std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return graph_from_mask(std::get<2>(a)).edges < graph_from_mask(std::get<2>(b)).edges;
    });
    out.candidate = graph_from_mask(std::get<2>(ranked.front()));
    for (std::size_t i = 0; i < std::min(max_examples, ranked.size()); ++i) {
        out.examples.push_back(graph_from_mask(std::get<2>(ranked[i])));
    }
    return out;
}

const GraphSpec& default_cx_adjacency() {
    static const GraphSpec g = find_cx_adjacencies().candidate;
    return g;
}

VerdictReport check_hadamard_chain() {
    VerdictReport report;
    // Input Z (qubit 1 in |0>): the output must be stabilized by +X for
    // either outcome, since the X^m frame commutes with X.
    for (int m = 0; m < 2; ++m) {
        StabilizerTableau t = StabilizerTableau::from_generators(
            {PauliOperator::from_string("ZI"), PauliOperator::from_string("IX")});
        t.apply_cz(0, 1);
        t.measure_qubit(0, Basis::X, m);
        StabilizerTableau rest = t.drop_qubit(0, Basis::X);
        auto dk = rest.contains_up_to_sign(PauliOperator::from_string("X"));
        report.checks.push_back({"hadamard_z_to_x_outcome_" + std::to_string(m),
                                 dk.has_value() && *dk == 0,
                                 dk ? "output X with sign " + sign_str(*dk) : "X absent"});
    }
    // Input X (qubit 1 in |+>): the output is (-1)^m Z, the X^m byproduct
    // conjugating Z.
    for (int m = 0; m < 2; ++m) {
        StabilizerTableau t = StabilizerTableau::plus_state(2);
        t.apply_cz(0, 1);
        t.measure_qubit(0, Basis::X, m);
        StabilizerTableau rest = t.drop_qubit(0, Basis::X);
        auto dk = rest.contains_up_to_sign(PauliOperator::from_string("Z"));
        int expect = m == 0 ? 0 : 2;
        report.checks.push_back({"hadamard_x_to_z_outcome_" + std::to_string(m),
                                 dk.has_value() && *dk == expect,
                                 dk ? "output Z with sign " + sign_str(*dk) : "Z absent"});
    }
    return report;
}

}  // namespace pentaloss
