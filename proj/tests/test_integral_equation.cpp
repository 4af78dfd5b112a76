#include <doctest.h>

#include <gie/action.hpp>
#include <gie/error.hpp>
#include <gie/integral_equation.hpp>
#include <gie/random.hpp>

using namespace gie;

namespace {

RatMatrix symplectic_pair() {
    RatMatrix j(4, 4);
    j(0, 1) = 1;
    j(1, 0) = -1;
    j(2, 3) = 1;
    j(3, 2) = -1;
    return j;
}

template <class F>
Errc error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::ParseError;
}

} // namespace

TEST_CASE("mu must be positive") {
    CHECK(error_of([] { Mu(0); }) == Errc::NonPositiveMu);
    CHECK(error_of([] { Mu(Scalar(-1, 4)); }) == Errc::NonPositiveMu);
    CHECK(Mu(Scalar(2, 3)).value() == Scalar(2, 3));
}

TEST_CASE("surd arithmetic") {
    // (1 + lambda)(1 - lambda) = 1 - mu
    Surd p = surd_mul({1, 1}, {1, -1}, 5);
    CHECK(p.a == -4);
    CHECK(p.b == 0);
    CHECK(surd_is_zero({-2, 1}, 4));
    CHECK(!surd_is_zero({2, 1}, 4));
    CHECK(!surd_is_zero({-2, 1}, 5));
    CHECK(surd_is_zero({0, 0}, 3));
    CHECK(!surd_is_zero({1, 0}, 3));
}

TEST_CASE("rescale residuals") {
    ActionSpec s = ActionSpec::gaussian(RatMatrix::identity(2), GrandConstant::log(3));
    RescaleResidual same = rescale_residual(s, s, Mu(1));
    CHECK(same.blocks_zero());
    CHECK(same.delta_f.is_zero());
    RescaleResidual doubled = rescale_residual(s, scale_blocks(s, 2), Mu(2));
    CHECK(doubled.blocks_zero());
    CHECK(!rescale_residual(s, s, Mu(2)).blocks_zero());
    CHECK(error_of([&] { rescale_residual(s, ActionSpec::zero(3), Mu(1)); }) == Errc::ShapeMismatch);
}

TEST_CASE("n=2 solutions for every mu") {
    RationalStream rng(31);
    for (Scalar mu : {Scalar(1, 4), Scalar(1), Scalar(4), Scalar(2, 3)}) {
        RatMatrix a2 = rng.invertible(2);
        SolveOutcome out = solve_n2(a2, Mu(mu));
        REQUIRE(out.spec.has_value());
        CHECK(out.status == SolveStatus::Solution);
        CHECK(out.spec->block(2)(0, 0) == (1 - mu) * determinant(a2));
        CHECK(out.delta_f == GrandConstant::log(mu, 2));
        CHECK(verify_fixed_point(*out.spec, Mu(mu)));
        EffectiveAction eff = effective_action_bruteforce(*out.spec);
        CHECK(eff.a0 - out.spec->a0 == out.delta_f);

        // Two independent pairs compose into an n = 4 solution.
        ActionSpec composed = direct_sum(*out.spec, *solve_n2(rng.invertible(2), Mu(mu)).spec);
        CHECK(composed.n == 4);
        CHECK(verify_fixed_point(composed, Mu(mu)));
    }
    CHECK(solve_n2(RatMatrix::identity(2), Mu(1)).delta_f.is_zero());
    CHECK(error_of([] { solve_n2(RatMatrix{{1, 2}, {2, 4}}, Mu(1)); }) == Errc::SingularA2);
    CHECK(error_of([] { solve_n2(RatMatrix::identity(3), Mu(1)); }) == Errc::ShapeMismatch);
}

TEST_CASE("n=3 has no non-gaussian solution") {
    for (Scalar mu : {Scalar(4), Scalar(1, 4), Scalar(9), Scalar(2, 3), Scalar(2), Scalar(3), Scalar(1, 9),
                      Scalar(16), Scalar(5, 7), Scalar(25, 4)}) {
        SolveOutcome out = solve_n3(Mu(mu));
        CHECK(out.status == SolveStatus::NoSolution);
        CHECK(!out.spec.has_value());
        REQUIRE(out.branches.size() == 2);
        CHECK(!out.branches[0].consistent);
        CHECK(!out.branches[1].consistent);
    }
    SolveOutcome one = solve_n3(Mu(1));
    CHECK(one.status == SolveStatus::GaussianOnly);
    CHECK(one.branches[0].consistent);
    CHECK(!one.branches[1].consistent);

    RationalStream rng(32);
    for (Scalar lambda : {Scalar(2), Scalar(1, 2), Scalar(3), Scalar(2, 3)})
        for (int sign : {1, -1}) {
            ActionSpec cand = n3_candidate(rng.invertible(3), lambda, sign);
            CHECK(!verify_fixed_point(cand, Mu(lambda * lambda)));
        }
    ActionSpec gaussian = n3_candidate(rng.invertible(3), 1, 1);
    CHECK(gaussian.is_gaussian());
    CHECK(verify_fixed_point(gaussian, Mu(1)));
}

TEST_CASE("n=4 kappa branch") {
    RationalStream rng(33);
    for (Scalar kappa : {Scalar(0), Scalar(1), Scalar(2), Scalar(1, 2), Scalar(-1, 3)}) {
        RatMatrix a2 = rng.invertible(4);
        SolveOutcome out = solve_n4(a2, kappa);
        REQUIRE(out.spec.has_value());
        CHECK(out.mu == 3 * kappa * (kappa - 1) + 1);
        CHECK(*out.first_residual == 0);
        CHECK(*out.second_residual == 0);
        CHECK(verify_fixed_point(*out.spec, Mu(out.mu)));
        CHECK(out.spec->is_gaussian() == (kappa == 1));
    }

    RatMatrix j = symplectic_pair();
    ActionSpec g = *solve_n4(j, 0).spec;
    CHECK(g.block(2) == compound(j, 2));
    CHECK(star(g.block(3), 3, 4) == adjugate(j) * Scalar(-3));
    CHECK(g.block(4)(0, 0) == -9);
    ActionSpec perturbed = g;
    perturbed.block(4)(0, 0) += 1;
    CHECK(!verify_fixed_point(perturbed, Mu(1)));
    // The ansatz off the consistency curve is not a solution.
    CHECK(!verify_fixed_point(n4_ansatz(j, 0, 3), Mu(3)));
    CHECK(!verify_fixed_point(n4_ansatz(j, 2, 8), Mu(8)));
}

TEST_CASE("the second n=4 consistency condition follows from the first") {
    // Both are cubic in kappa once mu is eliminated; agreement at five points is an identity.
    for (int k = -2; k <= 2; ++k) {
        Scalar kappa(k, 3);
        Scalar mu = 3 * kappa * (kappa - 1) + 1;
        CHECK(n4_first_residual(kappa, mu) == 0);
        CHECK(n4_second_residual(kappa, mu) == 0);
    }
    CHECK(n4_first_residual(0, 2) != 0);
    CHECK(n4_second_residual(0, 2) != 0);
}

TEST_CASE("self-reciprocal actions") {
    RatMatrix j = symplectic_pair();
    CHECK(self_reciprocal_check(*solve_n4(j, 0).spec));
    CHECK(self_reciprocal_check(*solve_n4(j, 1).spec));
    CHECK(error_of([] { self_reciprocal_check(ActionSpec::gaussian(RatMatrix::identity(4))); }) ==
          Errc::PreconditionViolated);
    CHECK(error_of([] { self_reciprocal_check(ActionSpec::gaussian(RatMatrix::identity(2))); }) ==
          Errc::PreconditionViolated);
}

TEST_CASE("transform covariance of polynomial actions") {
    RationalStream rng(34);
    for (int t = 0; t < 10; ++t) {
        RatMatrix b = rng.invertible(4);
        CHECK(transform_covariance_check(b, non_gaussian_profile()));
        CHECK(transform_covariance_check(b, {0, 1}));
    }
    // A generic polynomial profile does not transform covariantly.
    CHECK(!transform_covariance_check(rng.invertible(2), {0, 1, 3}));
    CHECK(error_of([&] { transform_covariance_check(RatMatrix::identity(2), {1, 1}); }) == Errc::OddOrConstantPart);
}
