#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "pentaloss/code.hpp"
#include "pentaloss/stabilizer.hpp"

using namespace pentaloss;

namespace {

// Exhaustive oracle: does target match (up to sign) any group element times
// any subset product of the extras?
bool brute_force_in_span(const StabilizerGroup& group, const std::vector<PauliOperator>& extra,
                         const PauliOperator& target) {
    auto elems = group.elements();
    for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
        for (const auto& s : elems) {
            PauliOperator prod = s;
            for (std::size_t i = 0; i < extra.size(); ++i) {
                if ((mask >> i) & 1) prod = multiply(prod, extra[i]);
            }
            if (prod.x_words() == target.x_words() && prod.z_words() == target.z_words()) {
                return true;
            }
        }
    }
    return false;
}

PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
        int c = rng() % 4;
        p.set_x(q, c & 2);
        p.set_z(q, c & 1);
    }
    return p;
}

}  // namespace

TEST_CASE("group construction validates invariants") {
    // Anticommuting pair rejected.
    CHECK_THROWS_AS(StabilizerGroup(1, {PauliOperator::from_string("X"),
                                        PauliOperator::from_string("Z")}),
                    std::invalid_argument);
    // Dependent generators rejected.
    CHECK_THROWS_AS(StabilizerGroup(2, {PauliOperator::from_string("XX"),
                                        PauliOperator::from_string("XX")}),
                    std::invalid_argument);
    // Non-Hermitian generator rejected.
    CHECK_THROWS_AS(StabilizerGroup(1, {PauliOperator::from_string("+iX")}),
                    std::invalid_argument);
}

TEST_CASE("in_span finds a generator trivially") {
    auto code = build_pentagon_code();
    const auto& g1 = code.code_stabilizers().generators()[0];
    auto cert = in_span(code.code_stabilizers(), {}, g1);
    REQUIRE(cert.has_value());
    CHECK(cert->extra_indices.empty());
    CHECK(cert->generator_indices == std::vector<std::size_t>{0});
    CHECK(cert->phase_mismatch_quarter == 0);
}

TEST_CASE("in_span certifies ZZZZZ from X2 X3 Z5 probes") {
    auto code = build_pentagon_code();
    std::vector<PauliOperator> extra = {
        PauliOperator::single(5, 1, Basis::X),
        PauliOperator::single(5, 2, Basis::X),
        PauliOperator::single(5, 4, Basis::Z),
    };
    auto cert = in_span(code.code_stabilizers(), extra, PauliOperator::from_string("ZZZZZ"));
    REQUIRE(cert.has_value());
    CHECK(cert->extra_indices.size() == 3);
    // Certificate product is exactly minus the target here; the sign is
    // recorded, not hidden.
    CHECK(cert->phase_mismatch_quarter == 2);

    // Verify the certificate multiplies out as claimed.
    PauliOperator prod(5);
    for (auto gi : cert->generator_indices) {
        prod = multiply(prod, code.code_stabilizers().generators()[gi]);
    }
    for (auto ei : cert->extra_indices) prod = multiply(prod, extra[ei]);
    PauliOperator expect = PauliOperator::from_string("ZZZZZ");
    expect.set_phase_quarter(cert->phase_mismatch_quarter);
    CHECK(prod == expect);
}

TEST_CASE("in_span rejects mismatched qubit counts") {
    auto code = build_pentagon_code();
    CHECK_THROWS_AS(in_span(code.code_stabilizers(), {}, PauliOperator::from_string("ZZ")),
                    std::invalid_argument);
    CHECK_THROWS_AS(in_span(code.code_stabilizers(), {PauliOperator::from_string("X")},
                            PauliOperator::from_string("ZZZZZ")),
                    std::invalid_argument);
}

TEST_CASE("in_span rejects Z2 Z5 for ZZZZZ") {
    auto code = build_pentagon_code();
    std::vector<PauliOperator> extra = {
        PauliOperator::single(5, 1, Basis::Z),
        PauliOperator::single(5, 4, Basis::Z),
    };
    CHECK_FALSE(in_span(code.code_stabilizers(), extra, PauliOperator::from_string("ZZZZZ")));
}

TEST_CASE("in_span agrees with exhaustive enumeration") {
    auto code = build_pentagon_code();
    std::mt19937_64 rng(0x5eed0101);
    int positives = 0;
    for (int it = 0; it < 250; ++it) {
        std::size_t n_extra = rng() % 7;
        std::vector<PauliOperator> extra;
        for (std::size_t i = 0; i < n_extra; ++i) extra.push_back(random_pauli(rng, 5));
        auto target = random_pauli(rng, 5);
        bool fast = in_span(code.code_stabilizers(), extra, target).has_value();
        bool brute = brute_force_in_span(code.code_stabilizers(), extra, target);
        CHECK(fast == brute);
        positives += fast;
    }
    CHECK(positives > 0);  // the instance mix must exercise both outcomes
}

TEST_CASE("coset has group size and canonical order") {
    auto code = build_pentagon_code();
    auto coset = coset_elements(code.code_stabilizers(), PauliOperator::from_string("ZZZZZ"));
    REQUIRE(coset.size() == 16);
    CHECK(std::is_sorted(coset.begin(), coset.end(), weight_lex_less));

    int w3 = 0, w3x = 0, w3y = 0;
    bool has_x2x3z5 = false, has_y1y4z5 = false;
    for (const auto& e : coset) {
        if (e.weight() != 3) continue;
        ++w3;
        int xs = 0, ys = 0;
        for (std::size_t q = 0; q < 5; ++q) {
            if (e.letter_code(q) == 2) ++xs;
            if (e.letter_code(q) == 3) ++ys;
        }
        if (xs == 2) ++w3x;
        if (ys == 2) ++w3y;
        if (e.str() == "-IXXIZ") has_x2x3z5 = true;
        if (e.str() == "-YIIYZ") has_y1y4z5 = true;
    }
    CHECK(w3 == 10);
    CHECK(w3x == 5);
    CHECK(w3y == 5);
    CHECK(has_x2x3z5);
    CHECK(has_y1y4z5);
}

TEST_CASE("coset rejects anticommuting representative") {
    auto code = build_pentagon_code();
    CHECK_THROWS_AS(coset_elements(code.code_stabilizers(), PauliOperator::from_string("XIIII")),
                    std::invalid_argument);
}

TEST_CASE("incremental solver agrees with restart-from-scratch elimination") {
    std::mt19937_64 rng(0x5eed0102);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 3 + rng() % 6;  // up to 8 qubits -> 16-bit rows
        SymplecticSolver solver(n);
        std::vector<std::vector<std::uint64_t>> rows;
        std::size_t n_rows = 1 + rng() % 12;
        for (std::size_t k = 0; k < n_rows; ++k) {
            std::vector<std::uint64_t> row(1, rng() & ((1ULL << (2 * n)) - 1));
            rows.push_back(row);
            solver.add_row(row);
        }
        // Rank oracle: plain dense elimination.
        auto rank_of = [&](std::vector<std::uint64_t> vs) {
            std::size_t rank = 0;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) vs[i] = std::min(vs[i], vs[i] ^ vs[j]);
                if (vs[i]) {
                    std::swap(vs[rank], vs[i]);
                    for (std::size_t j = 0; j < vs.size(); ++j) {
                        if (j != rank) vs[j] = std::min(vs[j], vs[j] ^ vs[rank]);
                    }
                    ++rank;
                }
            }
            return rank;
        };
        std::vector<std::uint64_t> flat;
        for (const auto& row : rows) flat.push_back(row[0]);
        CHECK(solver.rank() == rank_of(flat));

        for (int probe = 0; probe < 10; ++probe) {
            std::vector<std::uint64_t> target(1, rng() & ((1ULL << (2 * n)) - 1));
            auto combo = solver.solve(target);
            auto with_target = flat;
            with_target.push_back(target[0]);
            bool oracle = rank_of(with_target) == solver.rank();
            CHECK(combo.has_value() == oracle);
            if (combo) {
                // The reported combination must XOR to the target.
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    if (((*combo)[k / 64] >> (k % 64)) & 1) acc ^= flat[k];
                }
                CHECK(acc == target[0]);
            }
        }
    }
}
