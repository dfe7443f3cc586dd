#ifndef PENTALOSS_PAULI_HPP
#define PENTALOSS_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pentaloss {

enum class Basis : std::uint8_t { X = 0, Y = 1, Z = 2 };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

/// An n-qubit Pauli operator in binary symplectic form with exact phase.
///
/// The stored operator is i^phase_quarter * (tensor product of I/X/Y/Z
/// letters), where qubit q carries the letter selected by the bit pair
/// (x_bit(q), z_bit(q)): 00=I, 10=X, 11=Y, 01=Z. Hermitian operators have
/// phase_quarter in {0,2}. Single-qubit products follow XZ = -iY.
///
/// Bit vectors are packed into 64-bit words, one word up to 64 qubits.
/// Instances are immutable values after construction apart from the
/// explicit mutating helpers used by the algebra routines.
class PauliOperator {
  public:
    explicit PauliOperator(std::size_t n_qubits);

    /// Parses "[sign]LETTERS" where sign is one of "", "+", "-", "+i", "-i"
    /// and letters are from {I,X,Y,Z}; qubit 1 is the leftmost letter.
    static PauliOperator from_string(std::string_view text);

    /// Identity with a single letter placed on `qubit`.
    static PauliOperator single(std::size_t n_qubits, std::size_t qubit, Basis b);

    std::size_t n_qubits() const { return n_; }
    int phase_quarter() const { return phase_; }
    bool x_bit(std::size_t q) const;
    bool z_bit(std::size_t q) const;
    void set_x(std::size_t q, bool v);
    void set_z(std::size_t q, bool v);
    void set_phase_quarter(int k);

    bool is_identity_letters() const;
    bool is_hermitian() const { return phase_ == 0 || phase_ == 2; }

    /// Number of qubits where the letter is not I.
    std::size_t weight() const;

    /// Letter on qubit q as 0=I, 1=Z, 2=X, 3=Y (2*x + z).
    int letter_code(std::size_t q) const;

    std::string str() const;

    const std::vector<std::uint64_t>& x_words() const { return x_; }
    const std::vector<std::uint64_t>& z_words() const { return z_; }

    bool operator==(const PauliOperator& other) const = default;

  private:
    std::size_t n_;
    int phase_;  // exponent k of the global i^k factor, 0..3
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
};

/// Exact group product p*q with phase accumulated per qubit.
/// Throws std::invalid_argument on qubit-count mismatch.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

/// True iff the binary symplectic form x_p.z_q + z_p.x_q vanishes mod 2.
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Exact conjugation by the controlled-Z gate on qubits (i, j):
/// X_i -> X_i Z_j, Y_i -> Y_i Z_j and symmetrically for j; Z and I are
/// untouched. When both qubits carry an X component the conjugation also
/// flips the sign iff their Z components differ.
PauliOperator conjugate_by_cz(const PauliOperator& p, std::size_t i, std::size_t j);

/// Ordering used for canonical coset listings: weight first, then the
/// x bit vector, then the z bit vector, then phase.
bool weight_lex_less(const PauliOperator& a, const PauliOperator& b);

}  // namespace pentaloss

#endif
