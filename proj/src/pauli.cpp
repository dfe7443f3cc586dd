#include "pentaloss/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace pentaloss {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) {
    return (n + kWordBits - 1) / kWordBits;
}

// sigma_a sigma_b = i^t sigma_{a xor b}; letters encoded 0=I 1=Z 2=X 3=Y.
constexpr int kMulPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

}  // namespace

char basis_letter(Basis b) {
    switch (b) {
        case Basis::X: return 'X';
        case Basis::Y: return 'Y';
        case Basis::Z: return 'Z';
    }
    throw std::invalid_argument("bad basis");
}

Basis basis_from_letter(char c) {
    switch (c) {
        case 'X': return Basis::X;
        case 'Y': return Basis::Y;
        case 'Z': return Basis::Z;
    }
    throw std::invalid_argument(std::string("bad basis letter: ") + c);
}

PauliOperator::PauliOperator(std::size_t n_qubits)
    : n_(n_qubits), phase_(0), x_(word_count(n_qubits), 0), z_(word_count(n_qubits), 0) {
    if (n_qubits == 0) {
        throw std::invalid_argument("PauliOperator needs at least one qubit");
    }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    int phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        bool minus = text[0] == '-';
        text.remove_prefix(1);
        if (!text.empty() && text[0] == 'i') {
            phase = minus ? 3 : 1;
            text.remove_prefix(1);
        } else {
            phase = minus ? 2 : 0;
        }
    }
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    PauliOperator p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I': break;
            case 'X': p.set_x(q, true); break;
            case 'Y': p.set_x(q, true); p.set_z(q, true); break;
            case 'Z': p.set_z(q, true); break;
            default:
                throw std::invalid_argument(std::string("bad Pauli letter: ") + text[q]);
        }
    }
    p.set_phase_quarter(phase);
    return p;
}

PauliOperator PauliOperator::single(std::size_t n_qubits, std::size_t qubit, Basis b) {
    PauliOperator p(n_qubits);
    if (qubit >= n_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    if (b != Basis::Z) p.set_x(qubit, true);
    if (b != Basis::X) p.set_z(qubit, true);
    return p;
}

bool PauliOperator::x_bit(std::size_t q) const {
    return (x_[q / kWordBits] >> (q % kWordBits)) & 1;
}

bool PauliOperator::z_bit(std::size_t q) const {
    return (z_[q / kWordBits] >> (q % kWordBits)) & 1;
}

void PauliOperator::set_x(std::size_t q, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (q % kWordBits);
    if (v) x_[q / kWordBits] |= mask; else x_[q / kWordBits] &= ~mask;
}

void PauliOperator::set_z(std::size_t q, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (q % kWordBits);
    if (v) z_[q / kWordBits] |= mask; else z_[q / kWordBits] &= ~mask;
}

void PauliOperator::set_phase_quarter(int k) {
    phase_ = ((k % 4) + 4) % 4;
}

bool PauliOperator::is_identity_letters() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
        if (x_[w] != 0 || z_[w] != 0) return false;
    }
    return true;
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
        w += std::popcount(x_[i] | z_[i]);
    }
    return w;
}

int PauliOperator::letter_code(std::size_t q) const {
    return 2 * static_cast<int>(x_bit(q)) + static_cast<int>(z_bit(q));
}

std::string PauliOperator::str() const {
    static const char* prefix[4] = {"", "+i", "-", "-i"};
    std::string s = prefix[phase_];
    static const char letters[4] = {'I', 'Z', 'X', 'Y'};
    for (std::size_t q = 0; q < n_; ++q) {
        s += letters[letter_code(q)];
    }
    return s;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw std::invalid_argument("multiply: qubit count mismatch");
    }
    PauliOperator r(p.n_qubits());
    int k = p.phase_quarter() + q.phase_quarter();
    for (std::size_t j = 0; j < p.n_qubits(); ++j) {
        int a = p.letter_code(j);
        int b = q.letter_code(j);
        k += kMulPhase[a][b];
        r.set_x(j, p.x_bit(j) ^ q.x_bit(j));
        r.set_z(j, p.z_bit(j) ^ q.z_bit(j));
    }
    r.set_phase_quarter(k);
    return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw std::invalid_argument("commutes: qubit count mismatch");
    }
    int parity = 0;
    const auto& px = p.x_words();
    const auto& pz = p.z_words();
    const auto& qx = q.x_words();
    const auto& qz = q.z_words();
    for (std::size_t w = 0; w < px.size(); ++w) {
        parity ^= std::popcount(px[w] & qz[w]) & 1;
        parity ^= std::popcount(pz[w] & qx[w]) & 1;
    }
    return parity == 0;
}

PauliOperator conjugate_by_cz(const PauliOperator& p, std::size_t i, std::size_t j) {
    if (i == j) {
        throw std::invalid_argument("conjugate_by_cz: qubits must differ");
    }
    if (i >= p.n_qubits() || j >= p.n_qubits()) {
        throw std::invalid_argument("conjugate_by_cz: qubit index out of range");
    }
    PauliOperator r = p;
    bool xi = p.x_bit(i), xj = p.x_bit(j);
    bool zi = p.z_bit(i), zj = p.z_bit(j);
    r.set_z(j, zj ^ xi);
    r.set_z(i, zi ^ xj);
    if (xi && xj && (zi ^ zj)) {
        r.set_phase_quarter(r.phase_quarter() + 2);
    }
    return r;
}

bool weight_lex_less(const PauliOperator& a, const PauliOperator& b) {
    std::size_t wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    if (a.x_words() != b.x_words()) return a.x_words() < b.x_words();
    if (a.z_words() != b.z_words()) return a.z_words() < b.z_words();
    return a.phase_quarter() < b.phase_quarter();
}

}  // namespace pentaloss
