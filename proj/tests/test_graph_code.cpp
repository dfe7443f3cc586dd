#include <doctest.h>

#include <set>
#include <stdexcept>

#include "pentaloss/code.hpp"

using namespace pentaloss;

TEST_CASE("ring graph construction") {
    auto g = ring_graph(5);
    CHECK(g.n_vertices == 5);
    std::set<std::pair<std::size_t, std::size_t>> expect = {
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
    CHECK(g.edges == expect);
    CHECK(ring_graph(3).edges.size() == 3);
    CHECK(ring_graph(6).edges.size() == 6);
    CHECK_THROWS_AS(ring_graph(2), std::invalid_argument);
}

TEST_CASE("graph invariants") {
    GraphSpec g;
    g.n_vertices = 3;
    g.add_edge(1, 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 1), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(g.add_edge(1, 4), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    auto g = ring_graph(5);
    auto back = GraphSpec::from_edge_list(5, g.to_edge_list());
    CHECK(back.edges == g.edges);
}

TEST_CASE("five ring stabilizers") {
    auto ks = graph_stabilizers(ring_graph(5));
    REQUIRE(ks.size() == 5);
    CHECK(ks[0].str() == "XZIIZ");
    CHECK(ks[1].str() == "ZXZII");
    CHECK(ks[2].str() == "IZXZI");
    CHECK(ks[3].str() == "IIZXZ");
    CHECK(ks[4].str() == "ZIIZX");
}

TEST_CASE("path graph stabilizers") {
    GraphSpec path(3, {{1, 2}, {2, 3}});
    auto ks = graph_stabilizers(path);
    CHECK(ks[0].str() == "XZI");
    CHECK(ks[1].str() == "ZXZ");
    CHECK(ks[2].str() == "IZX");
}

TEST_CASE("graph stabilizers always commute") {
    for (std::size_t n : {3, 5, 6, 9}) {
        auto ks = graph_stabilizers(ring_graph(n));
        for (std::size_t i = 0; i < ks.size(); ++i) {
            for (std::size_t j = i + 1; j < ks.size(); ++j) {
                CHECK(commutes(ks[i], ks[j]));
            }
        }
    }
}

TEST_CASE("pentagon code structure") {
    auto code = build_pentagon_code();
    CHECK(code.code_stabilizers().generators().size() == 4);
    CHECK(code.code_stabilizers().size() == 16);
    CHECK(code.distance() == 3);

    // The generated group contains +ZYYZI.
    auto zyyzi = in_span(code.code_stabilizers(), {}, PauliOperator::from_string("ZYYZI"));
    REQUIRE(zyyzi.has_value());
    CHECK(zyyzi->phase_mismatch_quarter == 0);

    // ZIIZX (= K_5) and XXXXX share the logical-X coset.
    auto k5 = in_span(code.code_stabilizers(), {code.logical(Basis::X)},
                      PauliOperator::from_string("ZIIZX"));
    REQUIRE(k5.has_value());
    CHECK(k5->extra_indices.size() == 1);

    // Ybar is the Hermitian form of i Xbar Zbar.
    auto ixz = multiply(code.logical(Basis::X), code.logical(Basis::Z));
    ixz.set_phase_quarter(ixz.phase_quarter() + 1);
    CHECK(code.logical(Basis::Y) == ixz);
    CHECK(code.logical(Basis::Y).str() == "YYYYY");
}

TEST_CASE("minimal representatives form two rotational families") {
    auto code = build_pentagon_code();
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        auto mins = minimal_representatives(code, b);
        CHECK(mins.size() == 10);
        for (const auto& m : mins) CHECK(m.weight() == 3);
    }
    auto minz = minimal_representatives(code, Basis::Z);
    std::set<std::string> strs;
    for (const auto& m : minz) strs.insert(m.str());
    CHECK(strs.count("-IXXIZ") == 1);  // X2 X3 Z5
    CHECK(strs.count("-YIIYZ") == 1);  // Y1 Y4 Z5

    // Rotational symmetry: cycling labels by one maps the set to itself.
    std::set<std::string> rotated;
    for (const auto& m : minz) {
        PauliOperator r(5);
        for (std::size_t q = 0; q < 5; ++q) {
            r.set_x((q + 1) % 5, m.x_bit(q));
            r.set_z((q + 1) % 5, m.z_bit(q));
        }
        r.set_phase_quarter(m.phase_quarter());
        rotated.insert(r.str());
    }
    CHECK(rotated == strs);

    // X basis contains the ring stabilizers and the X5 Y2 Y3 pattern.
    std::set<std::string> xstrs;
    for (const auto& m : minimal_representatives(code, Basis::X)) xstrs.insert(m.str());
    CHECK(xstrs.count("-XZIIZ") == 1);  // K_1
    CHECK(xstrs.count("-IYYIX") == 1);  // X5 Y2 Y3
}

TEST_CASE("every double loss is recoverable and every triple is fatal") {
    auto code = build_pentagon_code();
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        auto coset = code.logical_coset(b);
        for (std::size_t t1 = 0; t1 < 5; ++t1) {
            for (std::size_t t2 = t1 + 1; t2 < 5; ++t2) {
                bool found = false;
                for (const auto& e : coset) {
                    if (!e.x_bit(t1) && !e.z_bit(t1) && !e.x_bit(t2) && !e.z_bit(t2)) {
                        found = true;
                        break;
                    }
                }
                CHECK_MESSAGE(found, "pair ", t1 + 1, ",", t2 + 1);
            }
        }
        for (std::size_t t1 = 0; t1 < 5; ++t1) {
            for (std::size_t t2 = t1 + 1; t2 < 5; ++t2) {
                for (std::size_t t3 = t2 + 1; t3 < 5; ++t3) {
                    for (const auto& e : coset) {
                        bool avoids = true;
                        for (std::size_t t : {t1, t2, t3}) {
                            if (e.x_bit(t) || e.z_bit(t)) avoids = false;
                        }
                        CHECK_FALSE(avoids);
                    }
                }
            }
        }
    }
}

TEST_CASE("ring stabilizers all sit in one coset and pair products in the group") {
    auto code = build_pentagon_code();
    for (const auto& k : code.ring_stabilizers()) {
        CHECK(in_span(code.code_stabilizers(), {code.logical(Basis::X)}, k).has_value());
        CHECK_FALSE(in_span(code.code_stabilizers(), {}, k).has_value());
    }
    const auto& ks = code.ring_stabilizers();
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            auto cert = in_span(code.code_stabilizers(), {}, multiply(ks[i], ks[j]));
            REQUIRE(cert.has_value());
            CHECK(cert->phase_mismatch_quarter == 0);
        }
    }
}

TEST_CASE("concatenation layout addressing") {
    CHECK(layout(1).physical_count == 5);
    CHECK(layout(2).physical_count == 25);
    CHECK(layout(5).physical_count == 3125);
    CHECK_THROWS_AS(layout(0), std::invalid_argument);
    CHECK_THROWS_AS(layout(13), std::invalid_argument);

    auto l2 = layout(2);
    CHECK(l2.path_of(0) == std::vector<int>{0, 0});
    CHECK(l2.path_of(24) == std::vector<int>{4, 4});
    CHECK(l2.path_of(7) == std::vector<int>{1, 2});
    for (std::uint64_t leaf = 0; leaf < 25; ++leaf) {
        CHECK(l2.leaf_of(l2.path_of(leaf)) == leaf);
    }
    CHECK_THROWS_AS(l2.path_of(25), std::invalid_argument);
}

TEST_CASE("encoding identities all verify") {
    auto code = build_pentagon_code();
    auto report = verify_encoding_identities(code);
    for (const auto& c : report.checks) {
        CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);
    }
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 8);
}

TEST_CASE("code serializes to json with the expected strings") {
    auto code = build_pentagon_code();
    auto j = code.to_json();
    CHECK(j.find("ZYYZI") != std::string::npos);
    CHECK(j.find("XXXXX") != std::string::npos);
    CHECK(j.find("ZZZZZ") != std::string::npos);
}
