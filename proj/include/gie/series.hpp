#ifndef GIE_SERIES_HPP
#define GIE_SERIES_HPP

#include <gie/scalar.hpp>

#include <string>
#include <vector>

namespace gie {

// Univariate power series with rational coefficients, known through
// max_degree; every operation truncates there.
class TruncSeries {
public:
    explicit TruncSeries(int max_degree);
    TruncSeries(std::vector<Scalar> coeffs, int max_degree);

    static TruncSeries variable(int max_degree);

    int max_degree() const { return max_degree_; }
    // Zero beyond the stored range.
    Scalar coeff(int k) const;
    void set(int k, Scalar value);

    // Same coefficients known to a lower degree.
    TruncSeries truncated(int max_degree) const;
    // Known through max_degree - 1.
    TruncSeries derivative() const;
    // self(inner) for inner(0) = 0; precision is the smaller of the two.
    TruncSeries compose(const TruncSeries& inner) const;
    // Multiplies the t^(2j+1) coefficient by (-1)^j and the t^(2j) one by (-1)^j.
    TruncSeries alternate() const;

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const Scalar& factor);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Scalar& s) { return a *= s; }
    friend TruncSeries operator*(const Scalar& s, TruncSeries a) { return a *= s; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    // Compares coefficients through the common precision.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    std::string to_string(const std::string& var = "t") const;

private:
    int max_degree_;
    std::vector<Scalar> coeffs_;
};

// Series with Gaussian-rational coefficients: re + i im.
struct ComplexSeries {
    TruncSeries re;
    TruncSeries im;

    ComplexSeries operator*(const ComplexSeries& other) const;
    ComplexSeries operator+(const ComplexSeries& other) const;
    ComplexSeries compose(const ComplexSeries& inner) const;
};

// b(t) = t G'(t^2) through t^max_t_degree. Throws InsufficientDegree.
TruncSeries odd_profile(const TruncSeries& g_of_s, int max_t_degree);

// d(d(t)) for d = i b.
ComplexSeries imaginary_double_iterate(const TruncSeries& b);

// b(b(t)) = t through t^degree. Throws InsufficientDegree.
bool babbage_check(const TruncSeries& b, int degree);

// With b = t G'(t^2) and d = i b: d(d(t)) = -t through t^degree.
// Needs G through s^((degree + 1) / 2). Throws InsufficientDegree.
bool iterative_root_check(const TruncSeries& g_of_s, int degree);

// G(s) = G(-s G'(s)^2) + 2 s G'(s) through s^degree. Throws InsufficientDegree.
bool legendre_series_check(const TruncSeries& g_of_s, int degree);

// s - s^2/2 + s^3/2 - 3 s^4/8.
TruncSeries non_gaussian_series();

} // namespace gie

#endif
