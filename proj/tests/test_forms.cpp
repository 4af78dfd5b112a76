#include <doctest.h>

#include <gie/error.hpp>
#include <gie/forms.hpp>
#include <gie/random.hpp>

#include <array>
#include <functional>

using namespace gie;
using namespace gie::forms;

namespace {

constexpr int N = 4;
constexpr int kTrials = 3;

using T4 = std::array<Scalar, 256>;

int at(int a, int b, int c, int d) { return ((a * N + b) * N + c) * N + d; }

int eps(int a, int b, int c, int d) { return permutation_sign({a, b, c, d}); }

T4 four_index(const RatMatrix& x) {
    T4 t;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) t[at(a, b, c, d)] = pair_entry(x, a, b, c, d);
    return t;
}

// Product of two four-index arrays over an unrestricted index pair, halved.
T4 contract(const T4& x, const T4& y) {
    T4 t;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    Scalar acc = 0;
                    for (int p = 0; p < N; ++p)
                        for (int q = 0; q < N; ++q) acc += x[at(a, b, p, q)] * y[at(p, q, c, d)];
                    t[at(a, b, c, d)] = acc / 2;
                }
    return t;
}

const T4& E() {
    static const T4 e = four_index(e_matrix(N, 2));
    return e;
}

RatMatrix from_four_index(const T4& t) {
    const auto& pairs = subsets(N, 2);
    RatMatrix out(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out(i, j) = t[at(pairs[i][0], pairs[i][1], pairs[j][0], pairs[j][1])];
    return out;
}

RatMatrix pair_matrix(RationalStream& rng) { return rng.matrix(6, 6); }

RatMatrix naive_f_a(const RatMatrix& x, const RatMatrix& y) {
    T4 y4 = four_index(y);
    RatMatrix out(N, N);
    for (int l = 0; l < N; ++l)
        for (int m = 0; m < N; ++m) {
            Scalar acc = 0;
            for (int r = 0; r < N; ++r)
                for (int s = 0; s < N; ++s)
                    for (int k1 = 0; k1 < N; ++k1)
                        for (int k2 = 0; k2 < N; ++k2)
                            for (int n1 = 0; n1 < N; ++n1)
                                for (int n2 = 0; n2 < N; ++n2)
                                    acc += eps(l, r, k1, k2) * eps(m, s, n1, n2) * x(s, r) * y4[at(n1, n2, k1, k2)];
            out(l, m) = acc / 4;
        }
    return out;
}

RatMatrix naive_f_b(const RatMatrix& x) {
    T4 t;
    for (int l1 = 0; l1 < N; ++l1)
        for (int l2 = 0; l2 < N; ++l2)
            for (int m1 = 0; m1 < N; ++m1)
                for (int m2 = 0; m2 < N; ++m2) {
                    Scalar acc = 0;
                    for (int r = 0; r < N; ++r)
                        for (int s = 0; s < N; ++s)
                            for (int k = 0; k < N; ++k) acc += eps(l1, l2, r, k) * x(s, r) * eps(s, k, m1, m2);
                    t[at(l1, l2, m1, m2)] = acc;
                }
    return from_four_index(t);
}

using Body = std::function<Scalar(const T4&, const RatMatrix&, const T4&, int, int, int, int, int, int)>;

// out_{lm} = sum over (i, j, k, p) of body(XE, Y, EZ, l, m, i, j, k, p).
RatMatrix naive_lm(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z, const Body& body) {
    T4 xe = contract(four_index(x), E());
    T4 ez = contract(E(), four_index(z));
    RatMatrix out(N, N);
    for (int l = 0; l < N; ++l)
        for (int m = 0; m < N; ++m) {
            Scalar acc = 0;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k)
                        for (int p = 0; p < N; ++p) acc += body(xe, y, ez, l, m, i, j, k, p);
            out(l, m) = acc;
        }
    return out;
}

} // namespace

TEST_CASE("pair entries are antisymmetric") {
    RationalStream rng(1);
    RatMatrix x = pair_matrix(rng);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    CHECK(pair_entry(x, a, b, c, d) == -pair_entry(x, b, a, c, d));
                    CHECK(pair_entry(x, a, b, c, d) == -pair_entry(x, a, b, d, c));
                }
    CHECK(pair_entry(x, 0, 1, 2, 3) == x(0, 5));
    CHECK(pair_entry(x, 1, 0, 2, 3) == -x(0, 5));
    CHECK(pair_entry(x, 2, 2, 0, 1) == 0);
    // Matrix products of pair-indexed matrices are half-contractions.
    RatMatrix y = pair_matrix(rng);
    CHECK(from_four_index(contract(four_index(x), four_index(y))) == x * y);
}

TEST_CASE("F_a and F_b against direct sums") {
    RationalStream rng(2);
    for (int t = 0; t < kTrials; ++t) {
        RatMatrix x = rng.matrix(4, 4), y = pair_matrix(rng);
        CHECK(f_a(x, y) == naive_f_a(x, y));
        CHECK(f_b(x) == naive_f_b(x));
    }
}

TEST_CASE("F_c, F_d1, F_d2, F_f against direct sums") {
    RationalStream rng(3);
    for (int t = 0; t < kTrials; ++t) {
        RatMatrix x = pair_matrix(rng), y = rng.matrix(4, 4), z = pair_matrix(rng);
        // (XE)_{ltur} Y_{sr} (EZ)_{stum}
        CHECK(f_c(x, y, z) == naive_lm(x, y, z, [](const T4& xe, const RatMatrix& yy, const T4& ez, int l, int m,
                                                   int t_, int u, int r, int s) -> Scalar {
                  return xe[at(l, t_, u, r)] * yy(s, r) * ez[at(s, t_, u, m)];
              }));
        // (XE)_{lrtu} Y_{sr} (EZ)_{tsum}
        CHECK(f_d1(x, y, z) == naive_lm(x, y, z, [](const T4& xe, const RatMatrix& yy, const T4& ez, int l, int m,
                                                    int r, int t_, int u, int s) -> Scalar {
                  return xe[at(l, r, t_, u)] * yy(s, r) * ez[at(t_, s, u, m)];
              }));
        // (XE)_{lutr} Y_{sr} (EZ)_{tusm}
        CHECK(f_d2(x, y, z) == naive_lm(x, y, z, [](const T4& xe, const RatMatrix& yy, const T4& ez, int l, int m,
                                                    int u, int t_, int r, int s) -> Scalar {
                  return xe[at(l, u, t_, r)] * yy(s, r) * ez[at(t_, u, s, m)];
              }));
        // (XE)_{lcda} Y_{ba} (EZ)_{bdcm}
        CHECK(f_f(x, y, z) == naive_lm(x, y, z, [](const T4& xe, const RatMatrix& yy, const T4& ez, int l, int m,
                                                   int c, int d, int a, int b) -> Scalar {
                  return xe[at(l, c, d, a)] * yy(b, a) * ez[at(b, d, c, m)];
              }));
    }
}

TEST_CASE("F_e and F_g against direct sums") {
    RationalStream rng(4);
    const auto& pairs = subsets(N, 2);
    for (int t = 0; t < 2; ++t) {
        RatMatrix x1 = pair_matrix(rng), x2 = pair_matrix(rng);
        RatMatrix y1 = rng.matrix(4, 4), y2 = rng.matrix(4, 4);
        T4 ex1 = contract(E(), four_index(x1));
        T4 x2e = contract(four_index(x2), E());

        RatMatrix fe(6, 6), fg(6, 6);
        for (int li = 0; li < 6; ++li)
            for (int mi = 0; mi < 6; ++mi) {
                int l1 = pairs[li][0], l2 = pairs[li][1], m1 = pairs[mi][0], m2 = pairs[mi][1];
                Scalar acc_e = 0, acc_g = 0;
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b) {
                        const Scalar& el = E()[at(l1, l2, a, b)];
                        if (is_zero(el)) continue;
                        for (int c = 0; c < N; ++c)
                            for (int d = 0; d < N; ++d) {
                                const Scalar& er = E()[at(c, d, m1, m2)];
                                if (is_zero(er)) continue;
                                for (int r = 0; r < N; ++r)
                                    for (int s = 0; s < N; ++s)
                                        for (int t_ = 0; t_ < N; ++t_)
                                            for (int u = 0; u < N; ++u) {
                                                // E_{Lab} Y1_{ra} (E X1)_{rtbu} (X2 E)_{dtsu} Y2_{cs} E_{cdM}
                                                acc_e += el * y1(r, a) * ex1[at(r, t_, b, u)] * x2e[at(d, t_, s, u)] *
                                                         y2(c, s) * er;
                                                // E_{Lab} (E X1)_{arbt} Y1_{rs} Y2_{tu} (X2 E)_{csdu} E_{cdM}
                                                acc_g += el * ex1[at(a, r, b, t_)] * y1(r, s) * y2(t_, u) *
                                                         x2e[at(c, s, d, u)] * er;
                                            }
                            }
                    }
                fe(li, mi) = acc_e;
                fg(li, mi) = acc_g;
            }
        CHECK(f_e(y1, x1, x2, y2) == fe);
        CHECK(f_g(x1, y1, y2, x2) == fg);
    }
}

TEST_CASE("forms reject wrong shapes") {
    RatMatrix four = RatMatrix::identity(4), six = RatMatrix::identity(6);
    CHECK_THROWS_AS(f_a(six, six), Error);
    CHECK_THROWS_AS(f_b(six), Error);
    CHECK_THROWS_AS(f_c(four, four, six), Error);
    CHECK_THROWS_AS(f_e(six, six, six, four), Error);
    CHECK_THROWS_AS(pair_entry(four, 0, 1, 2, 3), Error);
}
