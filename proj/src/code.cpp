#include "pentaloss/code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pentaloss/tableau.hpp"

#include <json.hpp>

namespace pentaloss {

PentagonCode::PentagonCode(GraphSpec ring, std::vector<PauliOperator> ring_stabs,
                           StabilizerGroup code, std::array<PauliOperator, 3> logicals)
    : ring_(std::move(ring)),
      ring_stabs_(std::move(ring_stabs)),
      code_(std::move(code)),
      logicals_(std::move(logicals)) {}

PentagonCode PentagonCode::build() {
    GraphSpec ring = ring_graph(5);
    std::vector<PauliOperator> ks = graph_stabilizers(ring);

    // Adjacent products K1K2, K2K3, K3K4, K4K5 generate the index-2 even
    // subgroup of <K1..K5>; the fifth product K5K1 is dependent.
    std::vector<PauliOperator> gens;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        gens.push_back(multiply(ks[i], ks[i + 1]));
    }
    StabilizerGroup code(5, gens);

    PauliOperator lx = PauliOperator::from_string("XXXXX");
    PauliOperator lz = PauliOperator::from_string("ZZZZZ");
    // Ybar = i * Xbar * Zbar, which lands on the Hermitian +YYYYY.
    PauliOperator ly = multiply(lx, lz);
    ly.set_phase_quarter(ly.phase_quarter() + 1);

    PentagonCode out(std::move(ring), std::move(ks), std::move(code), {lx, ly, lz});

    for (const auto& g : out.code_stabilizers().generators()) {
        for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
            if (!commutes(out.logical(b), g)) {
                throw std::logic_error("pentagon code: logical fails to commute with stabilizer");
            }
        }
    }
    if (commutes(out.logical(Basis::X), out.logical(Basis::Z)) ||
        commutes(out.logical(Basis::X), out.logical(Basis::Y)) ||
        commutes(out.logical(Basis::Y), out.logical(Basis::Z))) {
        throw std::logic_error("pentagon code: logicals must pairwise anticommute");
    }
    if (out.distance() != 3) {
        throw std::logic_error("pentagon code: distance is not 3");
    }
    // Every ring stabilizer K_i must sit in the logical-X coset.
    for (const auto& k : out.ring_stabilizers()) {
        if (!in_span(out.code_stabilizers(), {out.logical(Basis::X)}, k)) {
            throw std::logic_error("pentagon code: K_i outside the logical-X coset");
        }
    }
    return out;
}

PentagonCode build_pentagon_code() {
    return PentagonCode::build();
}

namespace {

PauliOperator rotate_op(const PauliOperator& p, int offset) {
    PauliOperator out(p.n_qubits());
    std::size_t n = p.n_qubits();
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t to = (q + static_cast<std::size_t>(offset)) % n;
        out.set_x(to, p.x_bit(q));
        out.set_z(to, p.z_bit(q));
    }
    out.set_phase_quarter(p.phase_quarter());
    return out;
}

}  // namespace

PentagonCode PentagonCode::rotated(int offset) const {
    offset = ((offset % 5) + 5) % 5;
    std::vector<PauliOperator> ring_stabs;
    for (const auto& k : ring_stabs_) ring_stabs.push_back(rotate_op(k, offset));
    std::vector<PauliOperator> gens;
    for (const auto& g : code_.generators()) gens.push_back(rotate_op(g, offset));
    std::array<PauliOperator, 3> logicals = {rotate_op(logicals_[0], offset),
                                             rotate_op(logicals_[1], offset),
                                             rotate_op(logicals_[2], offset)};
    return PentagonCode(ring_, std::move(ring_stabs), StabilizerGroup(5, std::move(gens)),
                        std::move(logicals));
}

std::size_t PentagonCode::distance() const {
    std::size_t best = 5;
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        for (const auto& e : logical_coset(b)) {
            best = std::min(best, e.weight());
        }
    }
    return best;
}

std::string PentagonCode::to_json() const {
    nlohmann::json j;
    j["n_qubits"] = 5;
    j["ring_edges"] = nlohmann::json::array();
    for (const auto& [u, v] : ring_.edges) {
        j["ring_edges"].push_back({u, v});
    }
    for (const auto& k : ring_stabs_) {
        j["graph_stabilizers"].push_back(k.str());
    }
    for (const auto& g : code_.generators()) {
        j["code_stabilizers"].push_back(g.str());
    }
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        std::string key{basis_letter(b)};
        j["logicals"][key]["representative"] = logical(b).str();
        for (const auto& r : minimal_representatives(*this, b)) {
            j["logicals"][key]["minimal"].push_back(r.str());
        }
        for (const auto& e : logical_coset(b)) {
            j["logicals"][key]["coset"].push_back(e.str());
        }
    }
    return j.dump(2);
}

std::vector<PauliOperator> minimal_representatives(const PentagonCode& code, Basis b) {
    auto coset = code.logical_coset(b);
    std::size_t mw = 5;
    for (const auto& e : coset) mw = std::min(mw, e.weight());
    std::vector<PauliOperator> out;
    for (const auto& e : coset) {
        if (e.weight() == mw) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), weight_lex_less);
    return out;
}

std::vector<int> ConcatenationLayout::path_of(std::uint64_t leaf) const {
    if (leaf >= physical_count) {
        throw std::invalid_argument("leaf index out of range");
    }
    std::vector<int> digits(levels, 0);
    for (std::size_t d = levels; d-- > 0;) {
        digits[d] = static_cast<int>(leaf % 5);
        leaf /= 5;
    }
    return digits;
}

std::uint64_t ConcatenationLayout::leaf_of(const std::vector<int>& path) const {
    if (path.size() != levels) {
        throw std::invalid_argument("path length must equal levels");
    }
    std::uint64_t leaf = 0;
    for (int d : path) {
        if (d < 0 || d > 4) throw std::invalid_argument("path digit out of range");
        leaf = leaf * 5 + static_cast<std::uint64_t>(d);
    }
    return leaf;
}

ConcatenationLayout layout(std::size_t levels) {
    if (levels < 1 || levels > 12) {
        throw std::invalid_argument("levels must be in 1..12");
    }
    ConcatenationLayout out;
    out.levels = levels;
    out.physical_count = 1;
    for (std::size_t i = 0; i < levels; ++i) out.physical_count *= 5;
    return out;
}

bool EncodingReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string EncodingReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) {
        j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return j.dump(2);
}

namespace {

// Conjugates by the five controlled-Z gates joining the centre (qubit index 5)
// to each ring qubit 0..4.
PauliOperator conjugate_by_logical_cz(PauliOperator p) {
    for (std::size_t q = 0; q < 5; ++q) {
        p = conjugate_by_cz(p, q, 5);
    }
    return p;
}

PauliOperator six_qubit(const std::string& ring_letters, char centre_letter) {
    return PauliOperator::from_string(ring_letters + centre_letter);
}

}  // namespace

EncodingReport verify_encoding_identities(const PentagonCode& code) {
    EncodingReport report;
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back({name, pass, detail});
    };

    // Centre X picks up Z on all five ring qubits.
    {
        PauliOperator in = six_qubit("IIIII", 'X');
        PauliOperator expect = six_qubit("ZZZZZ", 'X');
        PauliOperator got = conjugate_by_logical_cz(in);
        check("cz_conjugation_centre_x", got == expect, got.str());
    }
    // Centre Z is a spectator.
    {
        PauliOperator in = six_qubit("IIIII", 'Z');
        PauliOperator got = conjugate_by_logical_cz(in);
        check("cz_conjugation_centre_z", got == in, got.str());
    }
    // A ring X (here X_5 with Z_1 Z_4 spectators) dresses the centre with Z.
    {
        PauliOperator in = six_qubit("ZIIZX", 'I');
        PauliOperator expect = six_qubit("ZIIZX", 'Z');
        PauliOperator got = conjugate_by_logical_cz(in);
        check("cz_conjugation_ring_x", got == expect, got.str());
    }
    // Ring Z operators are spectators too.
    {
        PauliOperator in = six_qubit("ZZIIZ", 'I');
        PauliOperator got = conjugate_by_logical_cz(in);
        check("cz_conjugation_ring_z", got == in, got.str());
    }

    // Teleportation runs: ring graph state plus centre, five CZ gates,
    // centre measured in X. Starting the centre in |0> must land the code
    // in the +1 eigenspace of the logical-X coset for either outcome.
    for (int m = 0; m < 2; ++m) {
        std::vector<PauliOperator> gens;
        for (std::size_t q = 0; q < 5; ++q) {
            gens.push_back(PauliOperator::single(6, q, Basis::X));
        }
        gens.push_back(PauliOperator::single(6, 5, Basis::Z));
        StabilizerTableau t = StabilizerTableau::from_generators(std::move(gens));
        for (std::size_t i = 0; i < 5; ++i) t.apply_cz(i, (i + 1) % 5);
        for (std::size_t i = 0; i < 5; ++i) t.apply_cz(i, 5);
        t.measure_qubit(5, Basis::X, m);
        StabilizerTableau rest = t.drop_qubit(5, Basis::X);

        bool stabs_ok = true;
        for (const auto& g : code.code_stabilizers().generators()) {
            auto dk = rest.contains_up_to_sign(g);
            if (!dk || *dk != 0) stabs_ok = false;
        }
        auto k1 = rest.contains_up_to_sign(code.ring_stabilizers()[0]);
        bool logical_ok = k1.has_value() && *k1 == 0;
        // The expected group is exactly <code stabilizers, K_1>.
        std::vector<PauliOperator> expected = code.code_stabilizers().generators();
        expected.push_back(code.ring_stabilizers()[0]);
        bool group_ok = StabilizerTableau::same_group(
            rest, StabilizerTableau::from_generators(expected));
        check("teleport_centre_zero_outcome_" + std::to_string(m),
              stabs_ok && logical_ok && group_ok,
              "group equals code stabilizers plus the K_1 logical-X representative");
    }

    // Centre in |+> teleports to the outcome-framed logical-Z eigenstate,
    // the Hadamard action of the X measurement.
    for (int m = 0; m < 2; ++m) {
        StabilizerTableau t = StabilizerTableau::plus_state(6);
        for (std::size_t i = 0; i < 5; ++i) t.apply_cz(i, (i + 1) % 5);
        for (std::size_t i = 0; i < 5; ++i) t.apply_cz(i, 5);
        t.measure_qubit(5, Basis::X, m);
        StabilizerTableau rest = t.drop_qubit(5, Basis::X);

        bool stabs_ok = true;
        for (const auto& g : code.code_stabilizers().generators()) {
            auto dk = rest.contains_up_to_sign(g);
            if (!dk || *dk != 0) stabs_ok = false;
        }
        auto dz = rest.contains_up_to_sign(code.logical(Basis::Z));
        bool frame_ok = dz.has_value() && *dz == (m == 0 ? 0 : 2);
        check("teleport_centre_plus_outcome_" + std::to_string(m), stabs_ok && frame_ok,
              dz ? ("Zbar residual phase quarter " + std::to_string(*dz)) : "Zbar absent");
    }

    return report;
}

}  // namespace pentaloss
