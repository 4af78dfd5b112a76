#ifndef GIE_GRAND_CONSTANT_HPP
#define GIE_GRAND_CONSTANT_HPP

#include <gie/scalar.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gie {

// A rational plus a formal Q-linear combination of logarithms of rationals.
//
// Logarithms are never evaluated. Arguments are split into multiplicative
// atoms (-1 and primes, or an unfactored cofactor when factoring gives up),
// so ln(6) == ln(2) + ln(3) and ln(-4) == ln(-1) + 2 ln(2) compare equal.
// ln(-1) is kept as an opaque token: 2 ln(-1) is not reduced to zero.
class GrandConstant {
public:
    GrandConstant() = default;
    GrandConstant(Scalar rational) : rational_(std::move(rational)) {}

    // coeff * ln(argument); argument must be nonzero.
    static GrandConstant log(const Scalar& argument, const Scalar& coeff = Scalar(1));

    const Scalar& rational_part() const { return rational_; }
    // Canonical atoms with nonzero coefficients, keyed by atom (-1 first).
    const std::map<Integer, Scalar>& log_atoms() const { return logs_; }
    // Canonical (coefficient, argument) list; one entry per atom.
    std::vector<std::pair<Scalar, Scalar>> log_terms() const;

    bool has_logs() const { return !logs_.empty(); }
    bool is_rational() const { return logs_.empty(); }
    bool is_zero() const { return logs_.empty() && gie::is_zero(rational_); }

    GrandConstant& operator+=(const GrandConstant& other);
    GrandConstant& operator-=(const GrandConstant& other);
    GrandConstant& operator*=(const Scalar& factor);

    friend GrandConstant operator+(GrandConstant a, const GrandConstant& b) { return a += b; }
    friend GrandConstant operator-(GrandConstant a, const GrandConstant& b) { return a -= b; }
    friend GrandConstant operator-(GrandConstant a) { return a *= Scalar(-1); }
    friend GrandConstant operator*(GrandConstant a, const Scalar& s) { return a *= s; }
    friend GrandConstant operator*(const Scalar& s, GrandConstant a) { return a *= s; }

    friend bool operator==(const GrandConstant& a, const GrandConstant& b) {
        return a.rational_ == b.rational_ && a.logs_ == b.logs_;
    }

    // Numeric value for display only; nullopt-like NaN when ln(-1) appears.
    double approximate() const;

    std::string to_string() const;

private:
    void add_log_of_integer(const Integer& value, const Scalar& coeff);

    Scalar rational_;
    std::map<Integer, Scalar> logs_;
};

// Multiplicative atoms of |value| with multiplicities; exposed for tests.
std::vector<std::pair<Integer, unsigned long>> factor_atoms(const Integer& value);

} // namespace gie

#endif
