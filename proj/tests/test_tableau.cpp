#include <doctest.h>

#include <stdexcept>

#include "pentaloss/tableau.hpp"

using namespace pentaloss;

TEST_CASE("graph state tableau reproduces graph stabilizers") {
    for (std::size_t n : {3, 5, 6, 8}) {
        auto g = ring_graph(n);
        auto t = StabilizerTableau::graph_state(g);
        auto ks = graph_stabilizers(g);
        REQUIRE(t.generators().size() == n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(t.generators()[i] == ks[i]);
        }
    }
}

TEST_CASE("deterministic measurement of a stabilizer") {
    auto t = StabilizerTableau::graph_state(ring_graph(5));
    auto k1 = graph_stabilizers(ring_graph(5))[0];
    auto rec = t.measure(k1);
    CHECK(rec.deterministic);
    CHECK(rec.outcome == 0);
    // Minus the stabilizer measures -1, deterministically.
    PauliOperator mk1 = k1;
    mk1.set_phase_quarter(2);
    auto rec2 = t.measure(mk1);
    CHECK(rec2.deterministic);
    CHECK(rec2.outcome == 1);
}

TEST_CASE("random measurement takes the forced branch") {
    auto t = StabilizerTableau::graph_state(ring_graph(5));
    auto z1 = PauliOperator::single(5, 0, Basis::Z);
    auto copy = t;
    auto rec = copy.measure(z1, 1);
    CHECK_FALSE(rec.deterministic);
    CHECK(rec.outcome == 1);
    // After collapsing, the measured operator is deterministic.
    auto rec2 = copy.measure(z1);
    CHECK(rec2.deterministic);
    CHECK(rec2.outcome == 1);
}

TEST_CASE("measure validates input") {
    auto t = StabilizerTableau::plus_state(2);
    CHECK_THROWS_AS(t.measure(PauliOperator::from_string("X")), std::invalid_argument);
    CHECK_THROWS_AS(t.measure(PauliOperator::from_string("+iXX")), std::invalid_argument);
}

TEST_CASE("drop qubit after measurement") {
    auto t = StabilizerTableau::graph_state(ring_graph(3));
    t.measure_qubit(2, Basis::X, 0);
    auto rest = t.drop_qubit(2, Basis::X);
    CHECK(rest.n_qubits() == 2);
    CHECK(rest.generators().size() == 2);
    CHECK_THROWS_AS(t.drop_qubit(0, Basis::X), std::invalid_argument);
}

TEST_CASE("group membership with sign") {
    auto t = StabilizerTableau::graph_state(ring_graph(5));
    // Product of all five ring stabilizers is -XXXXX.
    auto target = PauliOperator::from_string("XXXXX");
    auto dk = t.contains_up_to_sign(target);
    REQUIRE(dk.has_value());
    CHECK(*dk == 2);
    CHECK_FALSE(t.contains_up_to_sign(PauliOperator::from_string("ZIIII")).has_value());
}

TEST_CASE("same_group detects sign differences") {
    auto a = StabilizerTableau::from_generators({PauliOperator::from_string("XI"),
                                                 PauliOperator::from_string("IX")});
    auto b = StabilizerTableau::from_generators({PauliOperator::from_string("XI"),
                                                 PauliOperator::from_string("-IX")});
    CHECK(StabilizerTableau::same_group(a, a));
    CHECK_FALSE(StabilizerTableau::same_group(a, b));
}
