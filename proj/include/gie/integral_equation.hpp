#ifndef GIE_INTEGRAL_EQUATION_HPP
#define GIE_INTEGRAL_EQUATION_HPP

#include <gie/action.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gie {

// mu = lambda^2 > 0. Throws NonPositiveMu.
class Mu {
public:
    explicit Mu(Scalar value);
    const Scalar& value() const { return value_; }

private:
    Scalar value_;
};

// Element a + b*lambda of Q(lambda) with lambda = +sqrt(mu).
struct Surd {
    Scalar a;
    Scalar b;

    std::string to_string() const;
};

Surd surd_mul(const Surd& x, const Surd& y, const Scalar& mu);
// Exact test, valid whether or not mu is a rational square.
bool surd_is_zero(const Surd& x, const Scalar& mu);

struct RescaleResidual {
    // blocks[k-1] = A^(2k)' - mu^k A^(2k)
    std::vector<RatMatrix> blocks;
    // A^(0)' - A^(0)
    GrandConstant delta_f;

    bool blocks_zero() const;
};

// Throws ShapeMismatch.
RescaleResidual rescale_residual(const ActionSpec& spec, const EffectiveAction& eff, const Mu& mu);

enum class SolveStatus { Solution, NoSolution, GaussianOnly };

const char* solve_status_name(SolveStatus status) noexcept;

// One sign branch of a branch analysis; `sign` is +1 for the upper sign.
struct BranchReport {
    int sign = 1;
    std::string residual;
    bool consistent = false;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::NoSolution;
    Scalar mu;
    std::optional<ActionSpec> spec;
    GrandConstant delta_f;
    std::string reason;
    std::vector<BranchReport> branches;
    // n = 4 only: the two consistency residuals in (kappa, mu).
    std::optional<Scalar> kappa;
    std::optional<Scalar> first_residual;
    std::optional<Scalar> second_residual;
};

// Blocks of `spec` scaled by factor^k; a0 untouched.
ActionSpec scale_blocks(const ActionSpec& spec, const Scalar& factor);

// Action on n_a + n_b pairs equal to a(first pairs) + b(remaining pairs).
ActionSpec direct_sum(const ActionSpec& a, const ActionSpec& b);

// A^(4) = (1 - mu) det A2, A0 = ln det A2 - ln mu. Throws SingularA2.
SolveOutcome solve_n2(const RatMatrix& a2, const Mu& mu);

// Enumerates both sign branches; only mu = 1 with the upper sign survives.
SolveOutcome solve_n3(const Mu& mu);

// The n = 3 candidate coefficients of one sign branch for a rational lambda:
// A^(4)* = (1 -+ lambda) adj A2, A^(6) = (lambda -+ 1)^2 (+-lambda - 4) det A2.
ActionSpec n3_candidate(const RatMatrix& a2, const Scalar& lambda, int sign);

// The n = 4 ansatz blocks for given kappa and mu (not necessarily consistent).
ActionSpec n4_ansatz(const RatMatrix& a2, const Scalar& kappa, const Scalar& mu);

// mu = 3 kappa (kappa - 1) + 1. Throws SingularA2, NonPositiveMu.
SolveOutcome solve_n4(const RatMatrix& a2, const Scalar& kappa);

// The second consistency residual of the n = 4 ansatz as a function of (kappa, mu).
Scalar n4_second_residual(const Scalar& kappa, const Scalar& mu);
Scalar n4_first_residual(const Scalar& kappa, const Scalar& mu);

// Brute-force effective action, then all k > 0 rescale residuals must vanish.
bool verify_fixed_point(const ActionSpec& spec, const Mu& mu);

// n = 4, A2^2 = -1: transform of exp(G0) (without A0) equals exp(G0) in the
// source variables. Throws PreconditionViolated.
bool self_reciprocal_check(const ActionSpec& spec);

// Polynomial f(x) = sum_j coeffs[j] x^j with coeffs[0] = 0. Checks that the
// transform of exp f(chibar B chi) equals det B exp f(-etabar B^-1 eta).
bool transform_covariance_check(const RatMatrix& b, const std::vector<Scalar>& coeffs);

// 0, 1, -1/2, 1/2, -3/8: the polynomial of the non-Gaussian n = 4 fixed point.
const std::vector<Scalar>& non_gaussian_profile();

} // namespace gie

#endif
