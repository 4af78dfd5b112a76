#include <gie/error.hpp>
#include <gie/forms.hpp>

#include <array>

namespace gie::forms {

namespace {

constexpr int N = 4;

using T4 = std::array<Scalar, 256>;
using T3 = std::array<Scalar, 6 * 16>;

inline int idx4(int a, int b, int c, int d) { return ((a * N + b) * N + c) * N + d; }

void require_pair(const RatMatrix& x) {
    if (x.rows() != 6 || x.cols() != 6) throw Error(Errc::SizeMismatch, "expected a 6x6 pair-indexed matrix");
}

void require_vector(const RatMatrix& x) {
    if (x.rows() != N || x.cols() != N) throw Error(Errc::SizeMismatch, "expected a 4x4 matrix");
}

// 0-based pair position plus sign, or sign 0 on a repeated index.
inline int pair_pos(int a, int b, int& sign) {
    if (a == b) {
        sign = 0;
        return 0;
    }
    sign = a < b ? 1 : -1;
    if (a > b) std::swap(a, b);
    return subset_index(N, {a, b});
}

T4 expand(const RatMatrix& x) {
    require_pair(x);
    T4 t;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) t[idx4(a, b, c, d)] = pair_entry(x, a, b, c, d);
    return t;
}

// E_{L a b}: pair row L, antisymmetric column pair (a, b).
T3 e_row(const RatMatrix& e) {
    T3 t;
    for (int l = 0; l < 6; ++l)
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                int s;
                int p = pair_pos(a, b, s);
                t[(l * N + a) * N + b] = s == 0 ? Scalar(0) : Scalar(s * e(l, p));
            }
    return t;
}

// E_{c d M}: antisymmetric row pair (c, d), pair column M.
T3 e_col(const RatMatrix& e) {
    T3 t;
    for (int m = 0; m < 6; ++m)
        for (int c = 0; c < N; ++c)
            for (int d = 0; d < N; ++d) {
                int s;
                int p = pair_pos(c, d, s);
                t[(m * N + c) * N + d] = s == 0 ? Scalar(0) : Scalar(s * e(p, m));
            }
    return t;
}

int levi(int a, int b, int c, int d) { return permutation_sign({a, b, c, d}); }

const RatMatrix& e2() {
    static const RatMatrix e = e_matrix(N, 2);
    return e;
}

} // namespace

Scalar pair_entry(const RatMatrix& x, int a, int b, int c, int d) {
    require_pair(x);
    int s1, s2;
    int p = pair_pos(a, b, s1);
    int q = pair_pos(c, d, s2);
    if (s1 == 0 || s2 == 0) return Scalar(0);
    return s1 * s2 > 0 ? x(p, q) : Scalar(-x(p, q));
}

RatMatrix f_a(const RatMatrix& x, const RatMatrix& y) {
    require_vector(x);
    require_pair(y);
    const auto& pairs = subsets(N, 2);
    RatMatrix out(N, N);
    for (int l = 0; l < N; ++l)
        for (int m = 0; m < N; ++m) {
            Scalar acc = 0;
            for (int r = 0; r < N; ++r)
                for (int s = 0; s < N; ++s) {
                    if (is_zero(x(s, r))) continue;
                    for (int k = 0; k < 6; ++k) {
                        int e1 = levi(l, r, pairs[k][0], pairs[k][1]);
                        if (!e1) continue;
                        for (int n = 0; n < 6; ++n) {
                            int e2v = levi(m, s, pairs[n][0], pairs[n][1]);
                            if (!e2v) continue;
                            Scalar t = x(s, r) * y(n, k);
                            if (e1 * e2v > 0) acc += t; else acc -= t;
                        }
                    }
                }
            out(l, m) = acc;
        }
    return out;
}

RatMatrix f_b(const RatMatrix& x) {
    require_vector(x);
    const auto& pairs = subsets(N, 2);
    RatMatrix out(6, 6);
    for (int li = 0; li < 6; ++li)
        for (int mi = 0; mi < 6; ++mi) {
            Scalar acc = 0;
            for (int r = 0; r < N; ++r)
                for (int k = 0; k < N; ++k) {
                    int e1 = levi(pairs[li][0], pairs[li][1], r, k);
                    if (!e1) continue;
                    for (int s = 0; s < N; ++s) {
                        int e2v = levi(s, k, pairs[mi][0], pairs[mi][1]);
                        if (!e2v) continue;
                        if (e1 * e2v > 0) acc += x(s, r); else acc -= x(s, r);
                    }
                }
            out(li, mi) = acc;
        }
    return out;
}

namespace {

// Shared skeleton of F_c, F_d1, F_d2, F_f: out_{lm} = sum L_{l..} Y_{sr} R_{..m}
// with index placement chosen by the callback.
template <class Fn>
RatMatrix contract_lm(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z, Fn term) {
    require_pair(x);
    require_vector(y);
    require_pair(z);
    T4 left = expand(x * e2());
    T4 right = expand(e2() * z);
    RatMatrix out(N, N);
    for (int l = 0; l < N; ++l)
        for (int m = 0; m < N; ++m) out(l, m) = term(left, y, right, l, m);
    return out;
}

} // namespace

RatMatrix f_c(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z) {
    return contract_lm(x, y, z, [](const T4& xe, const RatMatrix& y, const T4& ez, int l, int m) {
        Scalar acc = 0;
        for (int t = 0; t < N; ++t)
            for (int u = 0; u < N; ++u)
                for (int r = 0; r < N; ++r) {
                    const Scalar& a = xe[idx4(l, t, u, r)];
                    if (is_zero(a)) continue;
                    for (int s = 0; s < N; ++s) acc += a * y(s, r) * ez[idx4(s, t, u, m)];
                }
        return acc;
    });
}

RatMatrix f_d1(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z) {
    return contract_lm(x, y, z, [](const T4& xe, const RatMatrix& y, const T4& ez, int l, int m) {
        Scalar acc = 0;
        for (int r = 0; r < N; ++r)
            for (int t = 0; t < N; ++t)
                for (int u = 0; u < N; ++u) {
                    const Scalar& a = xe[idx4(l, r, t, u)];
                    if (is_zero(a)) continue;
                    for (int s = 0; s < N; ++s) acc += a * y(s, r) * ez[idx4(t, s, u, m)];
                }
        return acc;
    });
}

RatMatrix f_d2(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z) {
    return contract_lm(x, y, z, [](const T4& xe, const RatMatrix& y, const T4& ez, int l, int m) {
        Scalar acc = 0;
        for (int u = 0; u < N; ++u)
            for (int t = 0; t < N; ++t)
                for (int r = 0; r < N; ++r) {
                    const Scalar& a = xe[idx4(l, u, t, r)];
                    if (is_zero(a)) continue;
                    for (int s = 0; s < N; ++s) acc += a * y(s, r) * ez[idx4(t, u, s, m)];
                }
        return acc;
    });
}

RatMatrix f_f(const RatMatrix& x, const RatMatrix& y, const RatMatrix& z) {
    return contract_lm(x, y, z, [](const T4& xe, const RatMatrix& y, const T4& ez, int l, int m) {
        Scalar acc = 0;
        for (int c = 0; c < N; ++c)
            for (int d = 0; d < N; ++d)
                for (int a = 0; a < N; ++a) {
                    const Scalar& v = xe[idx4(l, c, d, a)];
                    if (is_zero(v)) continue;
                    for (int b = 0; b < N; ++b) acc += v * y(b, a) * ez[idx4(b, d, c, m)];
                }
        return acc;
    });
}

RatMatrix f_e(const RatMatrix& y1, const RatMatrix& x1, const RatMatrix& x2, const RatMatrix& y2) {
    require_vector(y1);
    require_vector(y2);
    T4 ex1 = expand(e2() * x1);
    T4 x2e = expand(x2 * e2());
    T3 el = e_row(e2());
    T3 ec = e_col(e2());
    // U_{L r b} = E_{Lab} Y1_{ra};  V_{L t u} = U_{L r b} (E X1)_{rtbu}.
    std::vector<Scalar> v(6 * 16);
    for (int li = 0; li < 6; ++li) {
        std::array<Scalar, 16> u;
        for (int r = 0; r < N; ++r)
            for (int b = 0; b < N; ++b) {
                Scalar acc = 0;
                for (int a = 0; a < N; ++a) acc += el[(li * N + a) * N + b] * y1(r, a);
                u[r * N + b] = acc;
            }
        for (int t = 0; t < N; ++t)
            for (int uu = 0; uu < N; ++uu) {
                Scalar acc = 0;
                for (int r = 0; r < N; ++r)
                    for (int b = 0; b < N; ++b) acc += u[r * N + b] * ex1[idx4(r, t, b, uu)];
                v[(li * N + t) * N + uu] = acc;
            }
    }
    // R_{t u M} = (X2 E)_{dtsu} Y2_{cs} E_{cdM}.
    std::vector<Scalar> w(6 * 16);
    for (int mi = 0; mi < 6; ++mi) {
        std::array<Scalar, 16> q; // q_{s d} = Y2_{cs} E_{cdM}
        for (int s = 0; s < N; ++s)
            for (int d = 0; d < N; ++d) {
                Scalar acc = 0;
                for (int c = 0; c < N; ++c) acc += y2(c, s) * ec[(mi * N + c) * N + d];
                q[s * N + d] = acc;
            }
        for (int t = 0; t < N; ++t)
            for (int uu = 0; uu < N; ++uu) {
                Scalar acc = 0;
                for (int d = 0; d < N; ++d)
                    for (int s = 0; s < N; ++s) acc += x2e[idx4(d, t, s, uu)] * q[s * N + d];
                w[(mi * N + t) * N + uu] = acc;
            }
    }
    RatMatrix out(6, 6);
    for (int li = 0; li < 6; ++li)
        for (int mi = 0; mi < 6; ++mi) {
            Scalar acc = 0;
            for (int k = 0; k < 16; ++k) acc += v[li * 16 + k] * w[mi * 16 + k];
            out(li, mi) = acc;
        }
    return out;
}

RatMatrix f_g(const RatMatrix& x1, const RatMatrix& y1, const RatMatrix& y2, const RatMatrix& x2) {
    require_vector(y1);
    require_vector(y2);
    T4 ex1 = expand(e2() * x1);
    T4 x2e = expand(x2 * e2());
    T3 el = e_row(e2());
    T3 ec = e_col(e2());
    // B_{L s u} = E_{Lab} (E X1)_{arbt} Y1_{rs} Y2_{tu}.
    std::vector<Scalar> bl(6 * 16);
    for (int li = 0; li < 6; ++li) {
        std::array<Scalar, 16> a_rt;
        for (int r = 0; r < N; ++r)
            for (int t = 0; t < N; ++t) {
                Scalar acc = 0;
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b) acc += el[(li * N + a) * N + b] * ex1[idx4(a, r, b, t)];
                a_rt[r * N + t] = acc;
            }
        for (int s = 0; s < N; ++s)
            for (int u = 0; u < N; ++u) {
                Scalar acc = 0;
                for (int r = 0; r < N; ++r)
                    for (int t = 0; t < N; ++t) acc += a_rt[r * N + t] * y1(r, s) * y2(t, u);
                bl[(li * N + s) * N + u] = acc;
            }
    }
    // C_{s u M} = (X2 E)_{csdu} E_{cdM}.
    std::vector<Scalar> cr(6 * 16);
    for (int mi = 0; mi < 6; ++mi)
        for (int s = 0; s < N; ++s)
            for (int u = 0; u < N; ++u) {
                Scalar acc = 0;
                for (int c = 0; c < N; ++c)
                    for (int d = 0; d < N; ++d) acc += x2e[idx4(c, s, d, u)] * ec[(mi * N + c) * N + d];
                cr[(mi * N + s) * N + u] = acc;
            }
    RatMatrix out(6, 6);
    for (int li = 0; li < 6; ++li)
        for (int mi = 0; mi < 6; ++mi) {
            Scalar acc = 0;
            for (int k = 0; k < 16; ++k) acc += bl[li * 16 + k] * cr[mi * 16 + k];
            out(li, mi) = acc;
        }
    return out;
}

} // namespace gie::forms
