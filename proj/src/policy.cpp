#include "pentaloss/policy.hpp"

#include <stdexcept>

#include <json.hpp>

namespace pentaloss {

namespace {

enum Status : int { kUntouched = 0, kLost = 1, kClickedX = 2, kClickedY = 3, kClickedZ = 4 };

int clicked_status(Basis b) {
    return kClickedX + static_cast<int>(b);
}

bool is_clicked(int s) {
    return s >= kClickedX;
}

Basis clicked_basis(int s) {
    return static_cast<Basis>(s - kClickedX);
}

}  // namespace

std::string probe_label(const Probe& p) {
    return std::to_string(p.qubit + 1) + basis_letter(p.basis);
}

namespace {

struct TreeBuilder {
    std::vector<PolicyNode> nodes;

    std::int32_t leaf(LeafKind kind) {
        PolicyNode n;
        n.is_leaf = true;
        n.leaf = kind;
        nodes.push_back(n);
        return static_cast<std::int32_t>(nodes.size() - 1);
    }
    std::int32_t probe(std::size_t qubit1, Basis b, std::int32_t on_click, std::int32_t on_lost) {
        PolicyNode n;
        n.probe = {qubit1 - 1, b};
        n.on_click = on_click;
        n.on_lost = on_lost;
        nodes.push_back(n);
        return static_cast<std::int32_t>(nodes.size() - 1);
    }
};

}  // namespace

MeasurementPolicy published_tree() {
    TreeBuilder t;
    auto S = [&] { return t.leaf(LeafKind::Success); };
    auto F = [&] { return t.leaf(LeafKind::Failure); };

    // IF 1X / IF 2Z / IF 5Z -> SUCCESS; ELSIF 3Y / IF 5Y -> SUCCESS ...
    // transcribed branch for branch, including the second probe of qubit 5
    // after its Z probe already failed.
    std::int32_t inner_3y_5y = t.probe(3, Basis::Y, t.probe(5, Basis::Y, S(), F()), F());
    std::int32_t after_2z = t.probe(5, Basis::Z, S(), inner_3y_5y);
    std::int32_t alt_3y_5y = t.probe(3, Basis::Y, t.probe(5, Basis::Y, S(), F()), F());
    std::int32_t after_1x = t.probe(2, Basis::Z, after_2z, alt_3y_5y);

    std::int32_t b2x = t.probe(2, Basis::X, t.probe(4, Basis::Y, t.probe(5, Basis::Y, S(), F()), F()), -1);
    std::int32_t b4x = t.probe(4, Basis::X, t.probe(3, Basis::Z, t.probe(5, Basis::Z, S(), F()), F()), F());
    t.nodes[b2x].on_lost = b4x;

    std::int32_t root = t.probe(1, Basis::X, after_1x, b2x);

    MeasurementPolicy p;
    p.name = "published-tree";
    p.target = Basis::Z;
    p.nodes = std::move(t.nodes);
    // Make nodes[0] the root by swapping; children indices must follow.
    if (root != 0) {
        std::swap(p.nodes[0], p.nodes[root]);
        for (auto& n : p.nodes) {
            if (n.is_leaf) continue;
            if (n.on_click == 0) n.on_click = root;
            else if (n.on_click == root) n.on_click = 0;
            if (n.on_lost == 0) n.on_lost = root;
            else if (n.on_lost == root) n.on_lost = 0;
        }
    }
    return p;
}

namespace {

LossPolynomial success_walk(const MeasurementPolicy& policy, std::int32_t idx,
                            std::array<int, 5>& status) {
    const PolicyNode& node = policy.nodes.at(idx);
    if (node.is_leaf) {
        return LossPolynomial::constant(node.leaf == LeafKind::Success ? 1 : 0);
    }
    std::size_t q = node.probe.qubit;
    if (status[q] == kLost) {
        return success_walk(policy, node.on_lost, status);
    }
    if (is_clicked(status[q])) {
        return success_walk(policy, node.on_click, status);
    }
    status[q] = clicked_status(node.probe.basis);
    LossPolynomial clicked = success_walk(policy, node.on_click, status);
    status[q] = kLost;
    LossPolynomial lost = success_walk(policy, node.on_lost, status);
    status[q] = kUntouched;
    return clicked.times_one_minus_p() + lost.times_p();
}

double fail_walk(const MeasurementPolicy& policy, std::int32_t idx, std::array<int, 5>& status,
                 const std::array<double, 3>& basis_fail) {
    const PolicyNode& node = policy.nodes.at(idx);
    if (node.is_leaf) {
        return node.leaf == LeafKind::Failure ? 1.0 : 0.0;
    }
    std::size_t q = node.probe.qubit;
    if (status[q] == kLost) {
        return fail_walk(policy, node.on_lost, status, basis_fail);
    }
    if (is_clicked(status[q])) {
        return fail_walk(policy, node.on_click, status, basis_fail);
    }
    double f = basis_fail[static_cast<int>(node.probe.basis)];
    status[q] = clicked_status(node.probe.basis);
    double clicked = fail_walk(policy, node.on_click, status, basis_fail);
    status[q] = kLost;
    double lost = fail_walk(policy, node.on_lost, status, basis_fail);
    status[q] = kUntouched;
    return (1.0 - f) * clicked + f * lost;
}

}  // namespace

LossPolynomial policy_success(const MeasurementPolicy& policy) {
    std::array<int, 5> status = {};
    return success_walk(policy, 0, status);
}

LossPolynomial policy_failure(const MeasurementPolicy& policy) {
    return LossPolynomial::constant(1) - policy_success(policy);
}

double policy_failure_at(const MeasurementPolicy& policy,
                         const std::array<double, 3>& basis_fail) {
    std::array<int, 5> status = {};
    return fail_walk(policy, 0, status, basis_fail);
}

namespace {

const char* anomaly_kind_name(PolicyAnomaly::Kind k) {
    switch (k) {
        case PolicyAnomaly::Kind::UnreachableBranch: return "unreachable_branch";
        case PolicyAnomaly::Kind::RepeatedProbe: return "repeated_probe";
        case PolicyAnomaly::Kind::SuccessWithoutTarget: return "success_without_target";
        case PolicyAnomaly::Kind::PrematureFailure: return "premature_failure";
    }
    return "?";
}

struct Validator {
    const MeasurementPolicy& policy;
    const PentagonCode& code;
    const std::set<Basis>& targets;
    PolicyValidation out;

    std::vector<PauliOperator> clicked_ops(const std::array<int, 5>& status) const {
        std::vector<PauliOperator> ops;
        for (std::size_t q = 0; q < 5; ++q) {
            if (is_clicked(status[q])) {
                ops.push_back(PauliOperator::single(5, q, clicked_basis(status[q])));
            }
        }
        return ops;
    }

    void visit(std::int32_t idx, std::array<int, 5> status, const std::string& path) {
        const PolicyNode& node = policy.nodes.at(idx);
        if (node.is_leaf) {
            if (node.leaf == LeafKind::Success) {
                SuccessLeafInfo info;
                info.path = path;
                for (std::size_t q = 0; q < 5; ++q) {
                    if (is_clicked(status[q])) info.clicked.push_back({q, clicked_basis(status[q])});
                }
                auto ops = clicked_ops(status);
                bool any_target = false;
                for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
                    auto cert = in_span(code.code_stabilizers(), ops, code.logical(b));
                    if (cert) {
                        if (info.certifiable.empty()) {
                            info.sign = cert->phase_mismatch_quarter == 0 ? 1 : -1;
                        }
                        info.certifiable.push_back(b);
                        if (targets.count(b)) any_target = true;
                    }
                }
                if (!any_target) {
                    std::string what = info.certifiable.empty()
                        ? "clicks certify no logical operator"
                        : "clicks certify only logical " +
                              std::string(1, basis_letter(info.certifiable.front()));
                    out.anomalies.push_back(
                        {PolicyAnomaly::Kind::SuccessWithoutTarget, path, what});
                }
                out.success_leaves.push_back(std::move(info));
            } else {
                // Could probing the remaining untouched qubits still certify
                // a target?
                auto ops = clicked_ops(status);
                for (std::size_t q = 0; q < 5; ++q) {
                    if (status[q] == kUntouched) {
                        ops.push_back(PauliOperator::single(5, q, Basis::X));
                        ops.push_back(PauliOperator::single(5, q, Basis::Z));
                    }
                }
                for (Basis b : targets) {
                    if (in_span(code.code_stabilizers(), ops, code.logical(b))) {
                        out.anomalies.push_back(
                            {PolicyAnomaly::Kind::PrematureFailure, path,
                             "a logical " + std::string(1, basis_letter(b)) +
                                 " certificate was still reachable"});
                        break;
                    }
                }
            }
            return;
        }

        std::size_t q = node.probe.qubit;
        std::string label = probe_label(node.probe);
        if (status[q] == kLost) {
            out.anomalies.push_back(
                {PolicyAnomaly::Kind::UnreachableBranch, path,
                 "probe " + label + " targets a qubit already lost; its click branch is dead"});
            visit(node.on_lost, status, path.empty() ? label + "-" : path + " " + label + "-");
            return;
        }
        if (is_clicked(status[q])) {
            out.anomalies.push_back(
                {PolicyAnomaly::Kind::RepeatedProbe, path,
                 "probe " + label + " repeats a measured qubit; its lost branch is dead"});
            visit(node.on_click, status, path.empty() ? label + "+" : path + " " + label + "+");
            return;
        }
        auto with = [&](int st, std::int32_t child, char mark) {
            std::array<int, 5> s2 = status;
            s2[q] = st;
            visit(child, s2, path.empty() ? label + mark : path + " " + label + mark);
        };
        with(clicked_status(node.probe.basis), node.on_click, '+');
        with(kLost, node.on_lost, '-');
    }
};

}  // namespace

PolicyValidation validate_policy(const MeasurementPolicy& policy, const PentagonCode& code,
                                 const std::set<Basis>& targets) {
    if (policy.nodes.empty()) {
        throw std::invalid_argument("validate_policy: empty policy");
    }
    for (const auto& n : policy.nodes) {
        if (!n.is_leaf) {
            if (n.on_click < 0 || n.on_lost < 0 ||
                n.on_click >= static_cast<std::int32_t>(policy.nodes.size()) ||
                n.on_lost >= static_cast<std::int32_t>(policy.nodes.size())) {
                throw std::invalid_argument("validate_policy: malformed tree link");
            }
            if (n.probe.qubit >= 5) {
                throw std::invalid_argument("validate_policy: probe qubit out of range");
            }
        }
    }
    Validator v{policy, code, targets, {}};
    v.visit(0, {}, "");
    return std::move(v.out);
}

std::string PolicyValidation::summary() const {
    std::string s;
    s += "anomalies: " + std::to_string(anomalies.size()) + "\n";
    for (const auto& a : anomalies) {
        s += "  [" + std::string(anomaly_kind_name(a.kind)) + "] at \"" + a.path + "\": " +
             a.detail + "\n";
    }
    s += "success leaves:\n";
    for (const auto& l : success_leaves) {
        s += "  \"" + l.path + "\" clicks {";
        for (std::size_t i = 0; i < l.clicked.size(); ++i) {
            if (i) s += ",";
            s += probe_label(l.clicked[i]);
        }
        s += "} certify ";
        if (l.certifiable.empty()) {
            s += "none";
        } else {
            for (std::size_t i = 0; i < l.certifiable.size(); ++i) {
                if (i) s += ",";
                s += basis_letter(l.certifiable[i]);
            }
            s += (l.sign > 0 ? " (sign +1)" : " (sign -1)");
        }
        s += "\n";
    }
    return s;
}

std::string PolicyValidation::to_json() const {
    nlohmann::json j;
    j["anomalies"] = nlohmann::json::array();
    for (const auto& a : anomalies) {
        j["anomalies"].push_back({{"kind", anomaly_kind_name(a.kind)},
                                  {"path", a.path},
                                  {"detail", a.detail}});
    }
    j["success_leaves"] = nlohmann::json::array();
    for (const auto& l : success_leaves) {
        nlohmann::json jl;
        jl["path"] = l.path;
        jl["clicked"] = nlohmann::json::array();
        for (const auto& p : l.clicked) jl["clicked"].push_back(probe_label(p));
        jl["certifies"] = nlohmann::json::array();
        for (Basis b : l.certifiable) jl["certifies"].push_back(std::string(1, basis_letter(b)));
        if (!l.certifiable.empty()) jl["sign"] = l.sign;
        j["success_leaves"].push_back(jl);
    }
    return j.dump(2);
}

namespace {

nlohmann::json node_to_json(const MeasurementPolicy& p, std::int32_t idx) {
    const PolicyNode& n = p.nodes.at(idx);
    nlohmann::json j;
    if (n.is_leaf) {
        j["leaf"] = n.leaf == LeafKind::Success ? "SUCCESS" : "FAILURE";
        if (n.certificate) {
            nlohmann::json c;
            for (const auto& pr : n.certificate->probes_used) {
                c["probes"].push_back(probe_label(pr));
            }
            c["stabilizers"] = n.certificate->stabilizer_indices;
            c["sign"] = n.certificate->sign;
            if (n.certificate->certifies) {
                c["logical"] = std::string(1, basis_letter(*n.certificate->certifies));
            }
            j["certificate"] = c;
        }
        return j;
    }
    j["probe"] = {{"qubit", n.probe.qubit + 1}, {"basis", std::string(1, basis_letter(n.probe.basis))}};
    j["on_click"] = node_to_json(p, n.on_click);
    j["on_lost"] = node_to_json(p, n.on_lost);
    return j;
}

std::int32_t node_from_json(const nlohmann::json& j, MeasurementPolicy& p) {
    PolicyNode n;
    if (j.contains("leaf")) {
        n.is_leaf = true;
        n.leaf = j.at("leaf").get<std::string>() == "SUCCESS" ? LeafKind::Success
                                                              : LeafKind::Failure;
        p.nodes.push_back(n);
        return static_cast<std::int32_t>(p.nodes.size() - 1);
    }
    n.probe.qubit = j.at("probe").at("qubit").get<std::size_t>() - 1;
    n.probe.basis = basis_from_letter(j.at("probe").at("basis").get<std::string>().at(0));
    p.nodes.push_back(n);
    std::int32_t slot = static_cast<std::int32_t>(p.nodes.size() - 1);
    std::int32_t click = node_from_json(j.at("on_click"), p);
    std::int32_t lost = node_from_json(j.at("on_lost"), p);
    p.nodes[slot].on_click = click;
    p.nodes[slot].on_lost = lost;
    return slot;
}

}  // namespace

std::string MeasurementPolicy::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["target_basis"] = std::string(1, basis_letter(target));
    j["root"] = node_to_json(*this, 0);
    return j.dump(2);
}

MeasurementPolicy MeasurementPolicy::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    MeasurementPolicy p;
    p.name = j.value("name", "");
    p.target = basis_from_letter(j.at("target_basis").get<std::string>().at(0));
    // Parse into a scratch vector, then rotate the root to slot 0.
    MeasurementPolicy scratch;
    std::int32_t root = node_from_json(j.at("root"), scratch);
    if (root != 0) {
        std::swap(scratch.nodes[0], scratch.nodes[root]);
        for (auto& n : scratch.nodes) {
            if (n.is_leaf) continue;
            if (n.on_click == 0) n.on_click = root;
            else if (n.on_click == root) n.on_click = 0;
            if (n.on_lost == 0) n.on_lost = root;
            else if (n.on_lost == root) n.on_lost = 0;
        }
    }
    p.nodes = std::move(scratch.nodes);
    return p;
}

}  // namespace pentaloss
