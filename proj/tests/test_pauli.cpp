#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pentaloss/pauli.hpp"

using namespace pentaloss;

namespace {

PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n) {
    PauliOperator p(n);
    std::uniform_int_distribution<int> letter(0, 3);
    for (std::size_t q = 0; q < n; ++q) {
        int c = letter(rng);
        p.set_x(q, c & 2);
        p.set_z(q, c & 1);
    }
    p.set_phase_quarter(letter(rng));
    return p;
}

}  // namespace

TEST_CASE("pauli string round trip") {
    for (const char* s : {"ZYYZI", "-XXXXX", "+iZZZZZ", "-iIXYZI", "IIIII"}) {
        auto p = PauliOperator::from_string(s);
        std::string expect = s;
        if (expect[0] == '+' && expect[1] != 'i') expect = expect.substr(1);
        CHECK(p.str() == expect);
    }
    CHECK(PauliOperator::from_string("+XYZ").str() == "XYZ");
    CHECK_THROWS_AS(PauliOperator::from_string("XQZ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::from_string("-"), std::invalid_argument);
}

TEST_CASE("single qubit products") {
    auto X = PauliOperator::from_string("X");
    auto Y = PauliOperator::from_string("Y");
    auto Z = PauliOperator::from_string("Z");
    // XZ = -iY and the cyclic relations.
    CHECK(multiply(X, Z).str() == "-iY");
    CHECK(multiply(Z, X).str() == "+iY");
    CHECK(multiply(X, Y).str() == "+iZ");
    CHECK(multiply(Y, X).str() == "-iZ");
    CHECK(multiply(Y, Z).str() == "+iX");
    CHECK(multiply(Z, Y).str() == "-iX");
    CHECK(multiply(Z, Z).str() == "I");
    CHECK(multiply(Y, Y).str() == "I");
}

TEST_CASE("graph stabilizer product reproduces ZYYZI") {
    auto k2 = PauliOperator::from_string("ZXZII");
    auto k3 = PauliOperator::from_string("IZXZI");
    auto prod = multiply(k2, k3);
    CHECK(prod.str() == "ZYYZI");
    CHECK(prod.phase_quarter() == 0);
}

TEST_CASE("multiply rejects mismatched sizes") {
    CHECK_THROWS_AS(
        multiply(PauliOperator::from_string("XX"), PauliOperator::from_string("X")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        commutes(PauliOperator::from_string("XX"), PauliOperator::from_string("X")),
        std::invalid_argument);
}

TEST_CASE("commutation via the symplectic form") {
    auto X = PauliOperator::from_string("X");
    auto Z = PauliOperator::from_string("Z");
    CHECK_FALSE(commutes(X, Z));
    CHECK_FALSE(commutes(PauliOperator::from_string("XXXXX"),
                         PauliOperator::from_string("ZZZZZ")));
    CHECK(commutes(PauliOperator::from_string("XZIIZ"),
                   PauliOperator::from_string("IZXZI")));
}

TEST_CASE("anticommutation phase consistency on random pairs") {
    std::mt19937_64 rng(0x5eed0001);
    for (int it = 0; it < 500; ++it) {
        std::size_t n = 1 + rng() % 8;
        auto p = random_pauli(rng, n);
        auto q = random_pauli(rng, n);
        auto pq = multiply(p, q);
        auto qp = multiply(q, p);
        int dk = ((pq.phase_quarter() - qp.phase_quarter()) % 4 + 4) % 4;
        CHECK(pq.x_words() == qp.x_words());
        CHECK(pq.z_words() == qp.z_words());
        if (commutes(p, q)) {
            CHECK(dk == 0);
        } else {
            CHECK(dk == 2);
        }
    }
}

TEST_CASE("hermitian involution") {
    std::mt19937_64 rng(0x5eed0002);
    for (int it = 0; it < 200; ++it) {
        auto p = random_pauli(rng, 1 + rng() % 8);
        p.set_phase_quarter(2 * (rng() % 2));  // Hermitian representative
        auto sq = multiply(p, p);
        CHECK(sq.is_identity_letters());
        CHECK(sq.phase_quarter() == 0);
    }
}

TEST_CASE("associativity with exact phases") {
    std::mt19937_64 rng(0x5eed0003);
    for (int it = 0; it < 300; ++it) {
        std::size_t n = 1 + rng() % 6;
        auto a = random_pauli(rng, n);
        auto b = random_pauli(rng, n);
        auto c = random_pauli(rng, n);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("cz conjugation rules") {
    // X on one qubit of the pair picks up Z on the other.
    auto xi = PauliOperator::from_string("XI");
    CHECK(conjugate_by_cz(xi, 0, 1).str() == "XZ");
    auto yi = PauliOperator::from_string("YI");
    CHECK(conjugate_by_cz(yi, 0, 1).str() == "YZ");
    // Z and I are spectators.
    auto zi = PauliOperator::from_string("ZI");
    CHECK(conjugate_by_cz(zi, 0, 1) == zi);
    // Both qubits carrying X components: sign flips iff Z parts differ.
    CHECK(conjugate_by_cz(PauliOperator::from_string("XX"), 0, 1).str() == "YY");
    CHECK(conjugate_by_cz(PauliOperator::from_string("XY"), 0, 1).str() == "-YX");
    CHECK(conjugate_by_cz(PauliOperator::from_string("YX"), 0, 1).str() == "-XY");
    CHECK(conjugate_by_cz(PauliOperator::from_string("YY"), 0, 1).str() == "XX");

    CHECK_THROWS_AS(conjugate_by_cz(xi, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(conjugate_by_cz(xi, 0, 5), std::invalid_argument);
}

TEST_CASE("cz conjugation is an involution and preserves products") {
    std::mt19937_64 rng(0x5eed0004);
    for (int it = 0; it < 300; ++it) {
        std::size_t n = 2 + rng() % 6;
        std::size_t i = rng() % n;
        std::size_t j = (i + 1 + rng() % (n - 1)) % n;
        auto p = random_pauli(rng, n);
        auto q = random_pauli(rng, n);
        CHECK(conjugate_by_cz(conjugate_by_cz(p, i, j), i, j) == p);
        // U (pq) U^dag == (U p U^dag)(U q U^dag)
        CHECK(conjugate_by_cz(multiply(p, q), i, j) ==
              multiply(conjugate_by_cz(p, i, j), conjugate_by_cz(q, i, j)));
    }
}

TEST_CASE("centre qubit dressed by five cz gates") {
    auto p = PauliOperator::from_string("IIIIIX");  // X on the centre, qubit 6
    for (std::size_t q = 0; q < 5; ++q) p = conjugate_by_cz(p, q, 5);
    CHECK(p.str() == "ZZZZZX");
}

TEST_CASE("weight and ordering") {
    CHECK(PauliOperator::from_string("IXXIZ").weight() == 3);
    CHECK(PauliOperator::from_string("IIIII").weight() == 0);
    auto a = PauliOperator::from_string("IXXIZ");
    auto b = PauliOperator::from_string("ZZZZZ");
    CHECK(weight_lex_less(a, b));
    CHECK_FALSE(weight_lex_less(b, a));
}
