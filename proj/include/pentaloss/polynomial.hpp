#ifndef PENTALOSS_POLYNOMIAL_HPP
#define PENTALOSS_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "pentaloss/rational.hpp"

namespace pentaloss {

enum class SignOnUnit { NonNegative, NonPositive, Mixed, Zero, Unknown };

/// Polynomial in the loss probability p with exact rational coefficients,
/// coefficient k multiplying p^k.
class LossPolynomial {
  public:
    LossPolynomial() = default;
    explicit LossPolynomial(std::vector<Rational> coeffs);
    static LossPolynomial constant(const Rational& c);

    const std::vector<Rational>& coefficients() const { return c_; }
    std::size_t degree() const;

    double operator()(double p) const;
    Rational eval(const Rational& p) const;

    LossPolynomial operator+(const LossPolynomial& other) const;
    LossPolynomial operator-(const LossPolynomial& other) const;
    bool operator==(const LossPolynomial& other) const;

    /// p * this and (1-p) * this, the two branch weights of a probe.
    LossPolynomial times_p() const;
    LossPolynomial times_one_minus_p() const;

    /// Lowest-order nonzero term as (exponent, coefficient); (0,0) when zero.
    std::pair<std::size_t, Rational> lowest_term() const;

    /// Exact sign analysis on [0,1] via Bernstein-coefficient subdivision.
    SignOnUnit sign_on_unit(int max_depth = 40) const;

    /// True iff this >= other everywhere on [0,1] (exact).
    bool dominates(const LossPolynomial& other, int max_depth = 40) const;

    /// Coefficients as {"num","den"} string pairs.
    std::string to_json() const;
    static LossPolynomial from_json(const std::string& text);

  private:
    std::vector<Rational> c_;
    void trim();
};

}  // namespace pentaloss

#endif
