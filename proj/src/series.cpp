#include <gie/error.hpp>
#include <gie/series.hpp>

#include <algorithm>

namespace gie {

TruncSeries::TruncSeries(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw Error(Errc::InsufficientDegree, "negative precision");
    coeffs_.assign(static_cast<size_t>(max_degree) + 1, Scalar(0));
}

TruncSeries::TruncSeries(std::vector<Scalar> coeffs, int max_degree) : TruncSeries(max_degree) {
    for (size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= max_degree; ++k) coeffs_[k] = coeffs[k];
}

TruncSeries TruncSeries::variable(int max_degree) {
    TruncSeries t(max_degree);
    if (max_degree >= 1) t.coeffs_[1] = 1;
    return t;
}

Scalar TruncSeries::coeff(int k) const {
    return (k >= 0 && k <= max_degree_) ? coeffs_[k] : Scalar(0);
}

void TruncSeries::set(int k, Scalar value) {
    if (k < 0 || k > max_degree_) throw Error(Errc::InsufficientDegree, "coefficient beyond precision");
    coeffs_[k] = std::move(value);
}

TruncSeries TruncSeries::truncated(int max_degree) const {
    return TruncSeries(coeffs_, std::min(max_degree, max_degree_));
}

TruncSeries TruncSeries::derivative() const {
    if (max_degree_ == 0) throw Error(Errc::InsufficientDegree, "derivative of a constant-only series");
    TruncSeries d(max_degree_ - 1);
    for (int k = 1; k <= max_degree_; ++k) d.coeffs_[k - 1] = coeffs_[k] * k;
    return d;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
    if (!is_zero(inner.coeff(0))) throw Error(Errc::Unsupported, "inner series must vanish at 0");
    int deg = std::min(max_degree_, inner.max_degree_);
    // Horner from the top; terms beyond deg cannot contribute since inner(0) = 0.
    TruncSeries acc(deg);
    TruncSeries in = inner.truncated(deg);
    for (int k = deg; k >= 0; --k) {
        acc = acc * in;
        acc.coeffs_[0] += coeffs_[k];
    }
    return acc;
}

TruncSeries TruncSeries::alternate() const {
    TruncSeries out = *this;
    for (int k = 0; k <= max_degree_; ++k)
        if ((k / 2) % 2 == 1) out.coeffs_[k] = -out.coeffs_[k];
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    int deg = std::min(max_degree_, other.max_degree_);
    coeffs_.resize(static_cast<size_t>(deg) + 1);
    max_degree_ = deg;
    for (int k = 0; k <= deg; ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
    int deg = std::min(max_degree_, other.max_degree_);
    coeffs_.resize(static_cast<size_t>(deg) + 1);
    max_degree_ = deg;
    for (int k = 0; k <= deg; ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Scalar& factor) {
    for (auto& c : coeffs_) c *= factor;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int deg = std::min(a.max_degree_, b.max_degree_);
    TruncSeries out(deg);
    for (int i = 0; i <= deg; ++i) {
        if (is_zero(a.coeffs_[i])) continue;
        for (int j = 0; i + j <= deg; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    int deg = std::min(a.max_degree_, b.max_degree_);
    for (int k = 0; k <= deg; ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
}

std::string TruncSeries::to_string(const std::string& var) const {
    std::string out;
    for (int k = 0; k <= max_degree_; ++k) {
        if (is_zero(coeffs_[k])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + gie::to_string(coeffs_[k]) + ")";
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var + "^" + std::to_string(max_degree_ + 1) + ")";
}

ComplexSeries ComplexSeries::operator*(const ComplexSeries& o) const {
    return ComplexSeries{re * o.re - im * o.im, re * o.im + im * o.re};
}

ComplexSeries ComplexSeries::operator+(const ComplexSeries& o) const {
    return ComplexSeries{re + o.re, im + o.im};
}

ComplexSeries ComplexSeries::compose(const ComplexSeries& inner) const {
    if (!is_zero(inner.re.coeff(0)) || !is_zero(inner.im.coeff(0)))
        throw Error(Errc::Unsupported, "inner series must vanish at 0");
    int deg = std::min({re.max_degree(), im.max_degree(), inner.re.max_degree(), inner.im.max_degree()});
    ComplexSeries acc{TruncSeries(deg), TruncSeries(deg)};
    ComplexSeries in{inner.re.truncated(deg), inner.im.truncated(deg)};
    for (int k = deg; k >= 0; --k) {
        acc = acc * in;
        acc.re.set(0, acc.re.coeff(0) + re.coeff(k));
        acc.im.set(0, acc.im.coeff(0) + im.coeff(k));
    }
    return acc;
}

TruncSeries odd_profile(const TruncSeries& g, int max_t_degree) {
    // t^(2j+1) needs G through s^(j+1).
    int needed = (max_t_degree + 1) / 2;
    if (g.max_degree() < needed)
        throw Error(Errc::InsufficientDegree, "G must be known through s^" + std::to_string(needed));
    TruncSeries b(max_t_degree);
    for (int j = 0; 2 * j + 1 <= max_t_degree; ++j) b.set(2 * j + 1, g.coeff(j + 1) * (j + 1));
    return b;
}

ComplexSeries imaginary_double_iterate(const TruncSeries& b) {
    ComplexSeries d{TruncSeries(b.max_degree()), b};
    return d.compose(d);
}

bool babbage_check(const TruncSeries& b, int degree) {
    if (b.max_degree() < degree) throw Error(Errc::InsufficientDegree, "b must be known through the check degree");
    TruncSeries bt = b.truncated(degree);
    return bt.compose(bt) == TruncSeries::variable(degree);
}

bool iterative_root_check(const TruncSeries& g, int degree) {
    ComplexSeries dd = imaginary_double_iterate(odd_profile(g, degree));
    TruncSeries minus_t = TruncSeries::variable(degree) * Scalar(-1);
    return dd.re == minus_t && dd.im == TruncSeries(degree);
}

bool legendre_series_check(const TruncSeries& g, int degree) {
    if (g.max_degree() < degree)
        throw Error(Errc::InsufficientDegree, "G must be known through s^" + std::to_string(degree));
    TruncSeries gs = g.truncated(degree);
    // G' is known only through s^(degree-1), which is all that s G'(s) needs.
    TruncSeries s = TruncSeries::variable(degree);
    TruncSeries dg(degree);
    for (int k = 0; k < degree; ++k) dg.set(k, gs.coeff(k + 1) * (k + 1));
    TruncSeries inner = s * dg * dg * Scalar(-1);
    TruncSeries rhs = gs.compose(inner) + s * dg * Scalar(2);
    return gs == rhs;
}

TruncSeries non_gaussian_series() {
    return TruncSeries({Scalar(0), Scalar(1), Scalar(-1, 2), Scalar(1, 2), Scalar(-3, 8)}, 4);
}

} // namespace gie
