#include <doctest.h>

#include <gie/error.hpp>
#include <gie/matrix.hpp>
#include <gie/random.hpp>

#include <algorithm>
#include <numeric>

using namespace gie;

namespace {

constexpr int kTrials = 25;

Scalar laplace_det(const RatMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Scalar sum = 0;
    for (int j = 0; j < n; ++j) {
        RatMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Scalar term = m(0, j) * laplace_det(minor);
        sum += (j % 2 == 0) ? term : Scalar(-term);
    }
    return sum;
}

// d/dB_{r_1 c_1} ... d/dB_{r_k c_k} det B: sum over permutations with
// sigma(r_t) = c_t of sign(sigma) times the untouched diagonal product.
Scalar det_derivative(const RatMatrix& b, const std::vector<int>& r, const std::vector<int>& c) {
    int n = b.rows();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Scalar total = 0;
    do {
        bool fits = true;
        for (size_t t = 0; t < r.size(); ++t) fits = fits && sigma[r[t]] == c[t];
        if (!fits) continue;
        Scalar prod = permutation_sign(sigma);
        for (int i = 0; i < n; ++i)
            if (std::find(r.begin(), r.end(), i) == r.end()) prod *= b(i, sigma[i]);
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

} // namespace

TEST_CASE("determinant") {
    CHECK(determinant(RatMatrix::diagonal({Scalar(2), Scalar(3)})) == 6);
    CHECK(determinant(RatMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(RatMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(RatMatrix(3, 3)) == 0);
    RationalStream rng(1);
    for (int t = 0; t < kTrials; ++t) {
        RatMatrix m = rng.matrix(4, 4);
        CHECK(determinant(m) == laplace_det(m));
    }
    try {
        determinant(RatMatrix(2, 3));
        FAIL("expected NotSquare");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSquare);
    }
}

TEST_CASE("inverse and adjugate") {
    RationalStream rng(2);
    for (int t = 0; t < kTrials; ++t) {
        RatMatrix m = rng.invertible(4);
        CHECK(m * inverse(m) == RatMatrix::identity(4));
        CHECK(m * adjugate(m) == RatMatrix::identity(4) * determinant(m));
    }
    try {
        inverse(RatMatrix{{1, 2}, {2, 4}});
        FAIL("expected Singular");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Singular);
    }
}

TEST_CASE("subsets are lexicographic") {
    const auto& s = subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == std::vector<int>{0, 1});
    CHECK(s[1] == std::vector<int>{0, 2});
    CHECK(s[2] == std::vector<int>{0, 3});
    CHECK(s[3] == std::vector<int>{1, 2});
    CHECK(s[5] == std::vector<int>{2, 3});
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto& all = subsets(n, k);
            CHECK(static_cast<long>(all.size()) == binomial(n, k));
            for (size_t i = 0; i < all.size(); ++i) CHECK(subset_index(n, all[i]) == static_cast<int>(i));
        }
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    CHECK(permutation_sign({1, 1}) == 0);
}

TEST_CASE("compound matrices") {
    CHECK(compound(RatMatrix::identity(4), 2) == RatMatrix::identity(6));
    CHECK(compound(RatMatrix::identity(4) * Scalar(3), 2) == RatMatrix::identity(6) * Scalar(9));
    CHECK(compound(RatMatrix::diagonal({1, 2, 3}), 2) == RatMatrix::diagonal({2, 3, 6}));
    CHECK(compound(RatMatrix::diagonal({1, 2, 3}), 0) == RatMatrix::identity(1));
    CHECK(compound(RatMatrix{{1, 2}, {3, 4}}, 2) == RatMatrix::scalar(-2));
    RationalStream rng(3);
    for (int t = 0; t < kTrials; ++t)
        for (int n : {3, 4}) {
            RatMatrix b = rng.matrix(n, n), d = rng.matrix(n, n);
            for (int k = 0; k <= n; ++k) CHECK(compound(b, k) * compound(d, k) == compound(b * d, k));
            RatMatrix inv = rng.invertible(n);
            for (int k = 0; k <= n; ++k) CHECK(compound(inverse(inv), k) == inverse(compound(inv, k)));
        }
    try {
        compound(RatMatrix::identity(3), 4);
        FAIL("expected BadOrder");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadOrder);
    }
}

TEST_CASE("star operation and e-matrices") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            RatMatrix e = e_matrix(n, k);
            RatMatrix one = RatMatrix::identity(static_cast<int>(binomial(n, k)));
            CHECK(e * e.transpose() == one);
            CHECK(e.transpose() * e == one);
            Scalar sign = ((n - k) * k) % 2 == 0 ? Scalar(1) : Scalar(-1);
            CHECK(e.transpose() == e_matrix(n, n - k) * sign);
        }
    RationalStream rng(4);
    for (int t = 0; t < kTrials; ++t)
        for (int n : {3, 4})
            for (int k = 0; k <= n; ++k) {
                int size = static_cast<int>(binomial(n, k));
                RatMatrix b = rng.matrix(size, size);
                RatMatrix s = star(b, k, n);
                CHECK(s == e_matrix(n, k) * b.transpose() * e_matrix(n, k).transpose());
                CHECK(star(s, n - k, n) == b);
            }
    try {
        star(RatMatrix::identity(3), 2, 4);
        FAIL("expected SizeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SizeMismatch);
    }
}

TEST_CASE("supplementary compounds: laplace, jacobi, sylvester-franke") {
    RationalStream rng(5);
    for (int t = 0; t < kTrials; ++t)
        for (int n : {3, 4}) {
            RatMatrix b = rng.matrix(n, n);
            Scalar det = determinant(b);
            CHECK(supplementary_compound(b, 1) == adjugate(b));
            for (int k = 0; k <= n; ++k) {
                RatMatrix c = compound(b, k), s = supplementary_compound(b, k);
                RatMatrix want = RatMatrix::identity(c.rows()) * det;
                CHECK(c * s == want);
                CHECK(s * c == want);
                CHECK(s == star(compound(b, n - k), n - k, n));
                if (k >= 1) CHECK(determinant(c) == pow(det, binomial(n - 1, k - 1)));
            }
            RatMatrix inv = rng.invertible(n);
            for (int k = 0; k <= n; ++k)
                CHECK(compound(inverse(inv), k) == supplementary_compound(inv, k) * (1 / determinant(inv)));
        }
    CHECK_THROWS_AS(supplementary_compound(RatMatrix(2, 3), 1), Error);
}

TEST_CASE("supplementary compound entries are determinant derivatives") {
    RationalStream rng(6);
    for (int t = 0; t < kTrials; ++t) {
        RatMatrix b = rng.matrix(3, 3);
        for (int k = 0; k <= 3; ++k) {
            RatMatrix s = supplementary_compound(b, k);
            const auto& sets = subsets(3, k);
            for (size_t i = 0; i < sets.size(); ++i)
                for (size_t j = 0; j < sets.size(); ++j) {
                    // Entry (L, M) pairs B_{m_t l_t}; the literal pairing B_{l_t m_t}
                    // lands on the transposed position.
                    CHECK(s(int(i), int(j)) == det_derivative(b, sets[j], sets[i]));
                    CHECK(s.transpose()(int(i), int(j)) == det_derivative(b, sets[i], sets[j]));
                }
        }
    }
}

TEST_CASE("cayley-hamilton forms of the 3x3 adjugate") {
    RatMatrix d = RatMatrix::diagonal({1, 2, 3});
    CHECK(trace(adjugate(d)) == 11);
    CHECK(trace(d) * trace(d) / 2 - trace(d * d) / 2 == 11);
    RationalStream rng(7);
    for (int t = 0; t < kTrials; ++t) {
        RatMatrix b = rng.matrix(3, 3);
        Scalar tr = trace(b), tr2 = trace(b * b);
        CHECK(adjugate(b) == b * b - b * tr + RatMatrix::identity(3) * (tr * tr / 2 - tr2 / 2));
        CHECK(trace(adjugate(b)) == tr * tr / 2 - tr2 / 2);
    }
}
