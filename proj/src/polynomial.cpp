#include "pentaloss/polynomial.hpp"

#include <stdexcept>

#include <json.hpp>

namespace pentaloss {

namespace {

// Binomial coefficients up to the degrees used here (loss polynomials stay
// at degree <= 5, Bernstein work needs one extra row).
Rational binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Rational r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= Rational(static_cast<long>(n - i), static_cast<long>(i + 1));
    }
    return r;
}

// Bernstein coefficients of the polynomial on [0,1].
std::vector<Rational> bernstein_coeffs(const std::vector<Rational>& a) {
    std::size_t d = a.empty() ? 0 : a.size() - 1;
    std::vector<Rational> b(d + 1, 0);
    for (std::size_t k = 0; k <= d; ++k) {
        Rational s = 0;
        for (std::size_t i = 0; i <= k && i < a.size(); ++i) {
            s += binom(k, i) / binom(d, i) * a[i];
        }
        b[k] = s;
    }
    return b;
}

enum class Verdict { NonNeg, NonPos, Zero, Split, Mixed };

Verdict classify_coeffs(const std::vector<Rational>& b) {
    bool any_pos = false, any_neg = false;
    for (const auto& v : b) {
        if (v > 0) any_pos = true;
        if (v < 0) any_neg = true;
    }
    if (!any_pos && !any_neg) return Verdict::Zero;
    if (!any_neg) return Verdict::NonNeg;
    if (!any_pos) return Verdict::NonPos;
    // Endpoint values are exact Bernstein coefficients; a strict sign clash
    // there settles the matter without subdividing.
    if ((b.front() > 0 && b.back() < 0) || (b.front() < 0 && b.back() > 0)) {
        return Verdict::Mixed;
    }
    return Verdict::Split;
}

// de Casteljau subdivision of Bernstein coefficients at t = 1/2.
void subdivide(const std::vector<Rational>& b, std::vector<Rational>& left,
               std::vector<Rational>& right) {
    std::vector<Rational> work = b;
    std::size_t d = b.size() - 1;
    left.assign(d + 1, 0);
    right.assign(d + 1, 0);
    left[0] = work[0];
    right[d] = work[d];
    for (std::size_t r = 1; r <= d; ++r) {
        for (std::size_t i = 0; i + r <= d; ++i) {
            work[i] = (work[i] + work[i + 1]) / 2;
        }
        left[r] = work[0];
        right[d - r] = work[d - r];
    }
}

SignOnUnit analyze(const std::vector<Rational>& b, int depth, bool& saw_pos, bool& saw_neg) {
    switch (classify_coeffs(b)) {
        case Verdict::Zero: return SignOnUnit::Zero;
        case Verdict::NonNeg: saw_pos = true; return SignOnUnit::NonNegative;
        case Verdict::NonPos: saw_neg = true; return SignOnUnit::NonPositive;
        case Verdict::Mixed: return SignOnUnit::Mixed;
        case Verdict::Split: break;
    }
    if (depth <= 0) return SignOnUnit::Unknown;
    std::vector<Rational> l, r;
    subdivide(b, l, r);
    SignOnUnit sl = analyze(l, depth - 1, saw_pos, saw_neg);
    if (sl == SignOnUnit::Mixed || sl == SignOnUnit::Unknown) return sl;
    SignOnUnit sr = analyze(r, depth - 1, saw_pos, saw_neg);
    if (sr == SignOnUnit::Mixed || sr == SignOnUnit::Unknown) return sr;
    if (saw_pos && saw_neg) return SignOnUnit::Mixed;
    if (saw_pos) return SignOnUnit::NonNegative;
    if (saw_neg) return SignOnUnit::NonPositive;
    return SignOnUnit::Zero;
}

}  // namespace

LossPolynomial::LossPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

LossPolynomial LossPolynomial::constant(const Rational& c) {
    return LossPolynomial(std::vector<Rational>{c});
}

void LossPolynomial::trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
}

std::size_t LossPolynomial::degree() const {
    return c_.size() - 1;
}

double LossPolynomial::operator()(double p) const {
    double v = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        v = v * p + to_double_safe(c_[i]);
    }
    return v;
}

Rational LossPolynomial::eval(const Rational& p) const {
    Rational v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        v = v * p + c_[i];
    }
    return v;
}

LossPolynomial LossPolynomial::operator+(const LossPolynomial& other) const {
    std::vector<Rational> out(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] += other.c_[i];
    return LossPolynomial(std::move(out));
}

LossPolynomial LossPolynomial::operator-(const LossPolynomial& other) const {
    std::vector<Rational> out(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] -= other.c_[i];
    return LossPolynomial(std::move(out));
}

bool LossPolynomial::operator==(const LossPolynomial& other) const {
    return c_ == other.c_;
}

LossPolynomial LossPolynomial::times_p() const {
    std::vector<Rational> out(c_.size() + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i];
    return LossPolynomial(std::move(out));
}

LossPolynomial LossPolynomial::times_one_minus_p() const {
    std::vector<Rational> out(c_.size() + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out[i] += c_[i];
        out[i + 1] -= c_[i];
    }
    return LossPolynomial(std::move(out));
}

std::pair<std::size_t, Rational> LossPolynomial::lowest_term() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) return {i, c_[i]};
    }
    return {0, Rational(0)};
}

SignOnUnit LossPolynomial::sign_on_unit(int max_depth) const {
    bool saw_pos = false, saw_neg = false;
    return analyze(bernstein_coeffs(c_), max_depth, saw_pos, saw_neg);
}

bool LossPolynomial::dominates(const LossPolynomial& other, int max_depth) const {
    SignOnUnit s = (*this - other).sign_on_unit(max_depth);
    return s == SignOnUnit::NonNegative || s == SignOnUnit::Zero;
}

std::string LossPolynomial::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : c_) {
        j.push_back({{"num", boost::multiprecision::numerator(c).str()},
                     {"den", boost::multiprecision::denominator(c).str()}});
    }
    return j.dump();
}

LossPolynomial LossPolynomial::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Rational> coeffs;
    for (const auto& item : j) {
        BigInt num(item.at("num").get<std::string>());
        BigInt den(item.at("den").get<std::string>());
        if (den == 0) throw std::invalid_argument("zero denominator");
        coeffs.push_back(Rational(num, den));
    }
    return LossPolynomial(std::move(coeffs));
}

}  // namespace pentaloss
