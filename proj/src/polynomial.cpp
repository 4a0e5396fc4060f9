#include "lstar/polynomial.hpp"

#include <sstream>

namespace lstar {

IntPolynomial IntPolynomial::constant(Int v) {
    return IntPolynomial(std::vector<Int>{std::move(v)});
}

IntPolynomial IntPolynomial::t_power(std::size_t k) {
    std::vector<Int> c(k + 1);
    c[k] = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::binomial_power(const Int& a, std::size_t n) {
    IntPolynomial base(std::vector<Int>{a, 1});
    IntPolynomial acc = constant(1);
    for (std::size_t i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Int& k, const IntPolynomial& p) {
    std::vector<Int> c = p.c_;
    for (Int& x : c) x *= k;
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divided_by_t_power(std::size_t k) const {
    if (is_zero()) return IntPolynomial();
    if (c_.size() <= k) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        if (c_[i] != 0) return std::nullopt;
    return IntPolynomial(std::vector<Int>(c_.begin() + k, c_.end()));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

bool IntPolynomial::nonnegative() const {
    for (const Int& x : c_)
        if (x < 0) return false;
    return true;
}

bool IntPolynomial::palindromic_over(std::size_t span) const {
    for (std::size_t i = 0; i <= span; ++i)
        if (coeff(i) != coeff(span - i)) return false;
    return true;
}

std::string IntPolynomial::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

}  // namespace lstar
