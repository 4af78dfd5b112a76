#include <doctest.h>

#include <gie/error.hpp>
#include <gie/series.hpp>

using namespace gie;

namespace {

TruncSeries poly(std::vector<Scalar> c, int deg) { return TruncSeries(std::move(c), deg); }

} // namespace

TEST_CASE("series arithmetic") {
    TruncSeries t = TruncSeries::variable(5);
    TruncSeries one_plus = poly({1, 1}, 5);
    TruncSeries sq = one_plus * one_plus;
    CHECK(sq == poly({1, 2, 1}, 5));
    CHECK(poly({1, 2, 3, 4}, 3).derivative() == poly({2, 6, 12}, 2));
    CHECK(poly({0, 1, 1}, 4).compose(poly({0, 1, 1}, 4)) == poly({0, 1, 2, 2, 1}, 4));
    CHECK(poly({0, 1, 1, 1, 1, 1}, 5).alternate() == poly({0, 1, -1, -1, 1, 1}, 5));
    CHECK((t * Scalar(3) - t * Scalar(3)) == TruncSeries(5));
    CHECK(poly({1, 2, 3}, 2).truncated(1) == poly({1, 2}, 1));
    CHECK(!poly({0, 1, -1}, 2).to_string().empty());
    CHECK_THROWS_AS(t.compose(poly({1, 1}, 3)), Error);
}

TEST_CASE("odd profile and degree requirements") {
    TruncSeries b = odd_profile(non_gaussian_series(), 7);
    // t G'(t^2) with G' = 1 - s + 3/2 s^2 - 3/2 s^3
    CHECK(b == poly({0, 1, 0, -1, 0, Scalar(3, 2), 0, Scalar(-3, 2)}, 7));
    try {
        odd_profile(poly({0, 1}, 1), 7);
        FAIL("expected InsufficientDegree");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InsufficientDegree);
    }
    CHECK_THROWS_AS(iterative_root_check(poly({0, 1, Scalar(-1, 2)}, 2), 7), Error);
    CHECK_THROWS_AS(legendre_series_check(poly({0, 1}, 1), 4), Error);
}

TEST_CASE("babbage equation") {
    CHECK(babbage_check(TruncSeries::variable(9), 9));
    CHECK(babbage_check(poly({0, -1}, 9), 9));
    // t/(1+t) composed with itself is t/(1+2t): not an involution.
    CHECK(!babbage_check(poly({0, 1, -1, 1, -1, 1}, 5), 5));
    // -t/(1+t) is.
    CHECK(babbage_check(poly({0, -1, 1, -1, 1, -1, 1, -1}, 7), 7));
}

TEST_CASE("iterative root of minus one") {
    CHECK(non_gaussian_series() == poly({0, 1, Scalar(-1, 2), Scalar(1, 2), Scalar(-3, 8)}, 4));
    CHECK(iterative_root_check(non_gaussian_series(), 7));
    CHECK(iterative_root_check(poly({0, 1}, 4), 7));
    CHECK(!iterative_root_check(poly({0, 1, 1}, 4), 7));
    // The t^5 coefficient of d(d(t)) sees G's s^3 coefficient linearly; t^3 and t^7 do not.
    TruncSeries wrong = non_gaussian_series();
    wrong.set(3, 0);
    CHECK(!iterative_root_check(wrong, 7));

    ComplexSeries dd = imaginary_double_iterate(odd_profile(non_gaussian_series(), 7));
    CHECK(dd.re == poly({0, -1}, 7));
    CHECK(dd.im == TruncSeries(7));
}

TEST_CASE("legendre series identity") {
    CHECK(legendre_series_check(non_gaussian_series(), 4));
    CHECK(legendre_series_check(poly({0, 1}, 4), 4));
    CHECK(!legendre_series_check(poly({0, 1, 1}, 4), 4));
    TruncSeries wrong = non_gaussian_series();
    wrong.set(3, 1);
    CHECK(!legendre_series_check(wrong, 4));
}
