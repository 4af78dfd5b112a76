#include <gie/error.hpp>
#include <gie/integral_equation.hpp>

namespace gie {

Mu::Mu(Scalar value) : value_(std::move(value)) {
    if (sgn(value_) <= 0) throw Error(Errc::NonPositiveMu, "mu must be positive, got " + gie::to_string(value_));
}

std::string Surd::to_string() const {
    if (is_zero(b)) return gie::to_string(a);
    std::string lam = (b == 1) ? "λ" : (b == -1) ? "-λ" : "(" + gie::to_string(b) + ")λ";
    if (is_zero(a)) return lam;
    return gie::to_string(a) + " + " + lam;
}

Surd surd_mul(const Surd& x, const Surd& y, const Scalar& mu) {
    return Surd{x.a * y.a + x.b * y.b * mu, x.a * y.b + x.b * y.a};
}

bool surd_is_zero(const Surd& x, const Scalar& mu) {
    if (is_zero(x.b)) return is_zero(x.a);
    // a + b lambda = 0 forces lambda = -a/b, which must be the positive root.
    Scalar root = -x.a / x.b;
    return sgn(root) > 0 && root * root == mu;
}

bool RescaleResidual::blocks_zero() const {
    for (const auto& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

RescaleResidual rescale_residual(const ActionSpec& spec, const EffectiveAction& eff, const Mu& mu) {
    spec.validate();
    eff.validate();
    if (spec.n != eff.n) throw Error(Errc::ShapeMismatch, "spec and effective action differ in n");
    RescaleResidual r;
    Scalar factor = mu.value();
    for (int k = 1; k <= spec.n; ++k) {
        r.blocks.push_back(eff.block(k) - spec.block(k) * factor);
        factor *= mu.value();
    }
    r.delta_f = eff.a0 - spec.a0;
    return r;
}

const char* solve_status_name(SolveStatus status) noexcept {
    switch (status) {
    case SolveStatus::Solution: return "Solution";
    case SolveStatus::NoSolution: return "NoSolution";
    case SolveStatus::GaussianOnly: return "GaussianOnly";
    }
    return "?";
}

ActionSpec scale_blocks(const ActionSpec& spec, const Scalar& factor) {
    ActionSpec out = spec;
    Scalar f = factor;
    for (int k = 1; k <= spec.n; ++k) {
        out.block(k) *= f;
        f *= factor;
    }
    return out;
}

ActionSpec direct_sum(const ActionSpec& a, const ActionSpec& b) {
    a.validate();
    b.validate();
    int n = a.n + b.n;
    ActionSpec out = ActionSpec::zero(n);
    out.a0 = a.a0 + b.a0;
    auto place = [&](const ActionSpec& part, int offset) {
        for (int k = 1; k <= part.n; ++k) {
            const auto& sets = subsets(part.n, k);
            for (size_t i = 0; i < sets.size(); ++i)
                for (size_t j = 0; j < sets.size(); ++j) {
                    std::vector<int> rows = sets[i], cols = sets[j];
                    for (int& r : rows) r += offset;
                    for (int& c : cols) c += offset;
                    out.block(k)(subset_index(n, rows), subset_index(n, cols)) =
                        part.block(k)(static_cast<int>(i), static_cast<int>(j));
                }
        }
    };
    place(a, 0);
    place(b, a.n);
    return out;
}

namespace {

Scalar require_regular_a2(const RatMatrix& a2, int n) {
    if (a2.rows() != n || a2.cols() != n)
        throw Error(Errc::ShapeMismatch, "A2 must be " + std::to_string(n) + "x" + std::to_string(n));
    Scalar det = determinant(a2);
    if (is_zero(det)) throw Error(Errc::SingularA2, "det A2 vanishes");
    return det;
}

// A0 = ln P(G_{-1}) with G_{-1}(psi) = G0(psi / lambda); Delta_f = ln P(G0) - A0.
void attach_constants(SolveOutcome& out, const Scalar& mu) {
    ActionSpec& spec = *out.spec;
    Scalar p_prev = partition_function(scale_blocks(spec, 1 / mu));
    Scalar p_now = partition_function(spec);
    if (is_zero(p_prev) || is_zero(p_now))
        throw Error(Errc::SingularPartition, "partition function of the solution vanishes");
    spec.a0 = GrandConstant::log(p_prev);
    out.delta_f = GrandConstant::log(p_now) - spec.a0;
}

} // namespace

SolveOutcome solve_n2(const RatMatrix& a2, const Mu& mu) {
    Scalar det = require_regular_a2(a2, 2);
    SolveOutcome out;
    out.mu = mu.value();
    out.status = SolveStatus::Solution;
    ActionSpec spec = ActionSpec::gaussian(a2);
    spec.block(2)(0, 0) = (1 - mu.value()) * det;
    out.spec = spec;
    attach_constants(out, mu.value());
    out.reason = mu.value() == 1 ? "Gaussian solution" : "non-Gaussian solution for every mu > 0";
    return out;
}

SolveOutcome solve_n3(const Mu& mu) {
    const Scalar& m = mu.value();
    SolveOutcome out;
    out.mu = m;
    bool any = false;
    for (int sign : {1, -1}) {
        // (lambda - s)^3 = (mu + 3) lambda - s (3 mu + 1)
        Surd residual{Scalar(-sign) * (3 * m + 1), m + 3};
        bool ok = surd_is_zero(residual, m);
        any = any || ok;
        out.branches.push_back(BranchReport{sign, residual.to_string(), ok});
    }
    if (any) {
        out.status = SolveStatus::GaussianOnly;
        out.reason = "only λ = 1 with the upper sign is consistent; the solution is Gaussian";
    } else {
        out.status = SolveStatus::NoSolution;
        out.reason = "consistency (λ∓1)³ ≠ 0";
    }
    return out;
}

ActionSpec n3_candidate(const RatMatrix& a2, const Scalar& lambda, int sign) {
    Scalar det = require_regular_a2(a2, 3);
    Scalar s(sign > 0 ? 1 : -1);
    ActionSpec spec = ActionSpec::gaussian(a2);
    spec.block(2) = star(adjugate(a2) * (1 - s * lambda), 1, 3);
    Scalar t = lambda - s;
    spec.block(3)(0, 0) = t * t * (s * lambda - 4) * det;
    return spec;
}

Scalar n4_first_residual(const Scalar& kappa, const Scalar& mu) { return mu - 3 * kappa * (kappa - 1) - 1; }

Scalar n4_second_residual(const Scalar& kappa, const Scalar& mu) {
    Scalar k2 = kappa * kappa;
    return 2 * mu - 3 * mu * kappa + 9 * k2 * kappa - 15 * k2 + 9 * kappa - 2;
}

ActionSpec n4_ansatz(const RatMatrix& a2, const Scalar& kappa, const Scalar& mu) {
    Scalar det = require_regular_a2(a2, 4);
    Scalar k2 = kappa * kappa, k3 = k2 * kappa;
    ActionSpec spec = ActionSpec::gaussian(a2);
    spec.block(2) = compound(a2, 2) * (1 - kappa);
    spec.block(3) = star(adjugate(a2) * (mu - 6 * k2 + 9 * kappa - 4), 1, 4);
    spec.block(4)(0, 0) = (mu * mu + 20 * mu - 24 * mu * kappa + 72 * k3 - 147 * k2 + 108 * kappa - 30) * det;
    return spec;
}

SolveOutcome solve_n4(const RatMatrix& a2, const Scalar& kappa) {
    require_regular_a2(a2, 4);
    Scalar m = 3 * kappa * (kappa - 1) + 1;
    Mu mu(m);
    SolveOutcome out;
    out.mu = m;
    out.kappa = kappa;
    out.first_residual = n4_first_residual(kappa, m);
    out.second_residual = n4_second_residual(kappa, m);
    out.spec = n4_ansatz(a2, kappa, m);
    attach_constants(out, m);
    out.status = SolveStatus::Solution;
    if (kappa == 1)
        out.reason = "Gaussian branch";
    else if (kappa == 0)
        out.reason = "non-Gaussian fixed point";
    else
        out.reason = "non-Gaussian solution of the rescaled equation";
    return out;
}

bool verify_fixed_point(const ActionSpec& spec, const Mu& mu) {
    EffectiveAction eff = effective_action_bruteforce(spec);
    return rescale_residual(spec, eff, mu).blocks_zero();
}

bool self_reciprocal_check(const ActionSpec& spec) {
    spec.validate();
    if (spec.n != 4) throw Error(Errc::PreconditionViolated, "self-reciprocity check needs n = 4");
    const RatMatrix& a2 = spec.a2();
    if (!(a2 * a2 == -RatMatrix::identity(4))) throw Error(Errc::PreconditionViolated, "A2^2 must equal -1");
    LayoutPtr layout = transform_layout(4);
    ActionSpec body = spec;
    body.a0 = GrandConstant();
    Element lhs = fourier_laplace(exp_nilpotent(encode_action(body, layout, Sector::ChiBar, Sector::Chi)));
    Element rhs = exp_nilpotent(encode_action(body, layout, Sector::EtaBar, Sector::Eta));
    return lhs == rhs;
}

namespace {

Element polynomial_of(const Element& x, const std::vector<Scalar>& coeffs) {
    Element result(x.layout());
    Element power(x.layout(), GrandConstant(Scalar(1)));
    for (size_t j = 1; j < coeffs.size(); ++j) {
        power = power * x;
        if (!is_zero(coeffs[j])) result += power * coeffs[j];
    }
    return result;
}

} // namespace

bool transform_covariance_check(const RatMatrix& b, const std::vector<Scalar>& coeffs) {
    if (!b.is_square()) throw Error(Errc::NotSquare, "B must be square");
    if (!coeffs.empty() && !is_zero(coeffs[0])) throw Error(Errc::OddOrConstantPart, "f(0) must vanish");
    int n = b.rows();
    LayoutPtr layout = transform_layout(n);
    Element gq = encode_action(ActionSpec::gaussian(b), layout, Sector::ChiBar, Sector::Chi);
    Element wq = encode_action(ActionSpec::gaussian(-inverse(b)), layout, Sector::EtaBar, Sector::Eta);
    Element lhs = fourier_laplace(exp_nilpotent(polynomial_of(gq, coeffs)));
    Element rhs = exp_nilpotent(polynomial_of(wq, coeffs)) * determinant(b);
    return lhs == rhs;
}

const std::vector<Scalar>& non_gaussian_profile() {
    static const std::vector<Scalar> coeffs{Scalar(0), Scalar(1), Scalar(-1, 2), Scalar(1, 2), Scalar(-3, 8)};
    return coeffs;
}

} // namespace gie
