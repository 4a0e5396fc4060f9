#pragma once

#include "lstar/intlin.hpp"

#include <string>
#include <vector>

namespace lstar {

/// Dense univariate polynomial with exact integer coefficients,
/// coefficient of t^i at index i. Trailing zeros are trimmed so equality
/// is canonical; the zero polynomial has an empty coefficient list and
/// degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(Int v);
    static IntPolynomial t_power(std::size_t k);
    /// (t + a)^n
    static IntPolynomial binomial_power(const Int& a, std::size_t n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Int& k, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Quotient by t^k when exactly divisible.
    std::optional<IntPolynomial> divided_by_t_power(std::size_t k) const;

    Int evaluate(const Int& x) const;

    bool nonnegative() const;
    bool palindromic_over(std::size_t span) const;  // c_i == c_{span - i} for 0 <= i <= span

    std::string to_string() const;  // "[c0, c1, ...]"

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

}  // namespace lstar
