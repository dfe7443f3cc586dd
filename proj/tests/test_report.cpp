#include <doctest.h>

#include "pentaloss/report.hpp"

using namespace pentaloss;

namespace {
const NonPreRecurrence& rec() {
    static const NonPreRecurrence r = nonpre_recurrence(build_pentagon_code());
    return r;
}
}  // namespace

TEST_CASE("table2 reproduces the published cells") {
    auto t = make_table2();
    REQUIRE(t.row_labels.size() == 5);
    REQUIRE(t.cells.size() == 5);
    CHECK(t.row_labels[0] == "5");
    CHECK(t.row_labels[4] == "3125");
    // Column order is p = 0.4, 0.3, 0.2.
    CHECK(t.cells[0][2].display == "0.058");
    CHECK(t.cells[0][1].display == "0.163");
    CHECK(t.cells[3][1].display == "4.5e-10");
    CHECK(t.cells[4][2].display == "5.5e-62");
    int mismatches = 0;
    for (const auto& row : t.cells) {
        for (const auto& c : row) {
            if (!c.matches_published) ++mismatches;
        }
    }
    // The lone divergent cell: computed 1.2e-8 against published 1.5e-8.
    CHECK(mismatches == 1);
    CHECK_FALSE(t.cells[4][0].matches_published);
    CHECK(t.cells[4][0].display == "1.2e-8");
    CHECK(t.cells[4][0].published == "1.5e-8");
    REQUIRE_FALSE(t.notes.empty());
}

TEST_CASE("table1 pentagon row") {
    auto t = make_table1();
    REQUIRE(t.cells.size() == 2);
    CHECK(t.cells[1][0].display == "125");
    CHECK(t.cells[1][1].display == "625");
    CHECK(t.cells[1][2].display == "3125");
    CHECK(t.cells[0][0].display == "22188");
    for (const auto& c : t.cells[1]) CHECK(c.matches_published);
    REQUIRE_FALSE(t.notes.empty());

    auto strict = make_table1(true);
    CHECK(strict.cells[1][0].display == "625");
    CHECK(strict.cells[1][1].display == "625");
    CHECK(strict.cells[1][2].display == "15625");
}

TEST_CASE("table3 cells agree with the published values within the band") {
    auto t = make_table3(rec());
    REQUIRE(t.cells.size() == 5);
    for (const auto& row : t.cells) {
        for (const auto& c : row) {
            CHECK(c.matches_published);
        }
    }
    CHECK(t.cells[0][1].display == "0.052");
    CHECK(t.cells[0][2].display == "0.014");
    CHECK(t.provenance.find("dynamic programming") != std::string::npos);
}

TEST_CASE("csv and json carry the same displayed values") {
    auto t = make_table2();
    auto csv = t.to_csv();
    auto json = t.to_json();
    CHECK(csv.find("0.058") != std::string::npos);
    CHECK(csv.find("5.5e-62") != std::string::npos);
    CHECK(json.find("0.058") != std::string::npos);
    CHECK(json.find("\"exact\"") != std::string::npos);
    // Byte-identical regeneration.
    CHECK(make_table2().to_csv() == csv);
    CHECK(make_table2().to_json() == json);
}

TEST_CASE("comparison embeds the cited tree overheads") {
    auto rep = make_comparison();
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].tree_qubits == 22188.0);
    CHECK(rep.rows[0].pentagon_qubits == 125);
    CHECK(rep.rows[2].pentagon_qubits == 3125);
    CHECK(rep.to_csv().find("22188") != std::string::npos);
    CHECK(rep.to_json().find("22188") != std::string::npos);
}
