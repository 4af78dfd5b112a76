#include <gie/closed_form.hpp>
#include <gie/error.hpp>
#include <gie/forms.hpp>

namespace gie {

namespace {

void require_n(const ActionSpec& spec, int n) {
    spec.validate();
    if (spec.n != n) throw Error(Errc::BadShape, "closed form expects n = " + std::to_string(n));
}

void require_nonzero(const Scalar& v, const char* what) {
    if (is_zero(v)) throw Error(Errc::SingularInput, std::string(what) + " vanishes");
}

RatMatrix one_by_one(const Scalar& v) { return RatMatrix::scalar(v); }

} // namespace

ClosedFormResult closed_form_n2(const ActionSpec& spec) {
    require_n(spec, 2);
    const RatMatrix& a2 = spec.a2();
    Scalar det2 = determinant(a2);
    require_nonzero(det2, "det A2");
    Scalar a4 = spec.block(2)(0, 0);
    Scalar p = det2 - a4;
    require_nonzero(p, "P^(4)*");
    Scalar ratio = p / det2;

    ClosedFormResult r;
    r.action = ActionSpec::zero(2);
    r.action.a0 = GrandConstant::log(p);
    r.action.block(1) = a2 * ratio;
    r.action.block(2)(0, 0) = ratio * ratio * a4;
    r.tower[4] = one_by_one(p);
    r.tower[2] = adjugate(a2);
    r.primed_tower[4] = one_by_one(p * ratio * ratio);
    return r;
}

ClosedFormResult closed_form_n3(const ActionSpec& spec) {
    require_n(spec, 3);
    const RatMatrix& a2 = spec.a2();
    RatMatrix a4s = star(spec.block(2), 2, 3);
    Scalar a6 = spec.block(3)(0, 0);
    RatMatrix p4s = adjugate(a2) - a4s;
    Scalar p = determinant(a2) - trace(a4s * a2) - a6;
    require_nonzero(p, "P^(6)*");
    Scalar d = determinant(p4s);
    require_nonzero(d, "det P^(4)*");

    RatMatrix pap = p4s * a2 * p4s;
    Scalar tr_pa = trace(p4s * a2);
    Scalar tr_adj = trace(adjugate(p4s * a2));
    Scalar p3 = pow(p, 3), p4 = pow(p, 4), p5 = pow(p, 5);

    ClosedFormResult r;
    r.action = ActionSpec::zero(3);
    r.action.a0 = GrandConstant::log(p);
    r.action.block(1) = inverse(p4s) * p;
    RatMatrix a4s_primed = (pap * (p / d) - p4s) * Scalar(-p * p / d);
    r.action.block(2) = star(a4s_primed, 1, 3);
    r.action.block(3)(0, 0) = p5 / (d * d) * (1 - 2 / d * tr_adj) + 3 * p4 / (d * d) * tr_pa - 4 * p3 / d;

    r.tower[6] = one_by_one(p);
    r.tower[4] = p4s;
    r.primed_tower[4] = pap * (p3 / (d * d));
    r.primed_tower[6] =
        one_by_one(-p5 / (d * d) * (1 - 2 / d * tr_adj) - 2 * p4 / (d * d) * tr_pa + 2 * p3 / d);
    return r;
}

namespace {

struct N4Inputs {
    RatMatrix a2, c2, p4, p4s, p6s, p6s_inv, c2p6, c2p6s, q;
    Scalar p, d;
};

N4Inputs n4_inputs(const ActionSpec& spec) {
    require_n(spec, 4);
    N4Inputs in;
    in.a2 = spec.a2();
    const RatMatrix& a4 = spec.block(2);
    RatMatrix a4s = star(a4, 2, 4);
    RatMatrix a6s = star(spec.block(3), 3, 4);
    Scalar a8 = spec.block(4)(0, 0);
    in.c2 = compound(in.a2, 2);
    in.p4 = in.c2 - a4;
    in.p4s = star(in.c2, 2, 4) - a4s;
    in.p6s = adjugate(in.a2) - forms::f_a(in.a2, a4) - a6s;
    in.p = determinant(in.a2) - trace(a4s * in.c2) + Scalar(1, 2) * trace(a4s * a4) - trace(a6s * in.a2) + a8;
    require_nonzero(in.p, "P^(8)*");
    in.d = determinant(in.p6s);
    require_nonzero(in.d, "det P^(6)*");
    in.p6s_inv = inverse(in.p6s);
    in.c2p6 = compound(in.p6s, 2);
    in.c2p6s = star(in.c2p6, 2, 4);
    in.q = in.c2p6 * in.p4 * in.c2p6;
    return in;
}

} // namespace

ClosedFormResult closed_form_n4(const ActionSpec& spec) {
    N4Inputs in = n4_inputs(spec);
    const Scalar& p = in.p;
    const Scalar& d = in.d;
    Scalar d2 = d * d, d4 = d2 * d2;
    Scalar p3 = pow(p, 3), p4 = pow(p, 4), p5 = pow(p, 5), p6 = pow(p, 6), p7 = pow(p, 7);
    RatMatrix one = RatMatrix::identity(4);

    RatMatrix pap = in.p6s * in.a2 * in.p6s;
    RatMatrix fc_q = forms::f_c(in.q, in.p6s, in.q);
    RatMatrix pfp = in.p6s * forms::f_a(in.p6s, in.p4s) * in.p6s;

    ClosedFormResult r;
    r.action = ActionSpec::zero(4);
    r.action.a0 = GrandConstant::log(p);
    r.action.block(1) = in.p6s_inv * p;
    RatMatrix a4s_primed = (in.q * (p / d) - in.c2p6) * Scalar(-p * p / d);
    r.action.block(2) = star(a4s_primed, 2, 4);
    RatMatrix a6s_primed = pap * (p5 / d2) + fc_q * (p5 / d4) + pfp * (3 * p4 / d2) - in.p6s * (4 * p3 / d);
    r.action.block(3) = star(a6s_primed, 1, 4);

    // Shared traces of the A^(8)' and P^(8)*' expressions.
    Scalar t1 = 1 - 2 * trace(in.a2 * forms::f_a(in.p6s_inv, in.p4));
    Scalar t_g = trace(in.p4 * forms::f_g(in.c2p6 * in.p4, in.p6s, in.p6s, in.p4 * in.c2p6));
    Scalar t_c1 = trace(forms::f_c(in.c2p6 * in.p4 * in.p4s * in.c2p6s, one, in.c2p6 * in.p4));
    Scalar t_c2 = trace(forms::f_c(in.c2p6s * in.p4s * in.p4 * in.c2p6, one, in.p4 * in.c2p6));
    Scalar t2 = t_g - Scalar(1, 2) * t_c1 - Scalar(1, 2) * t_c2;
    Scalar tr_pp = trace(in.p4 * in.p4s);
    Scalar tr_pa = trace(in.p6s * in.a2);
    Scalar tr_ff = trace(forms::f_a(one, in.c2p6 * in.p4) * forms::f_a(one, in.p4s * in.c2p6s));
    Scalar tr_pc = trace(in.p4 * in.c2p6);

    r.action.block(4)(0, 0) = p7 / d2 * t1 + p7 / d4 * t2 +
                              p6 / d2 * (Scalar(11, 2) * tr_pp + 5 * tr_pa - 5 / d * tr_ff) +
                              18 * p5 / d2 * tr_pc - 30 * p4 / d;

    r.tower[8] = one_by_one(p);
    r.tower[6] = in.p6s;
    r.tower[4] = in.p4s;
    r.primed_tower[4] = in.q * (p3 / d2);
    r.primed_tower[6] = pap * (-p5 / d2) - fc_q * (p5 / d4) - pfp * (2 * p4 / d2) + in.p6s * (2 * p3 / d);
    r.primed_tower[8] = one_by_one(p7 / d2 * t1 + p7 / d4 * t2 + 4 * p6 / d2 * (tr_pp + tr_pa - tr_ff / d) +
                                   12 * p5 / d2 * tr_pc - 16 * p4 / d);
    return r;
}

namespace {

RatMatrix n4_d_bracket(const N4Inputs& in) {
    RatMatrix fd1 = forms::f_d1(in.p4, in.p6s, in.c2p6 * in.p4);
    RatMatrix fd2 = forms::f_d2(in.p4 * in.c2p6, in.p6s, in.p4);
    return in.p6s * (in.a2 - (fd1 + fd2) * (1 / (2 * in.d))) * in.p6s;
}

} // namespace

RatMatrix closed_form_n4_a6_star_via_d(const ActionSpec& spec) {
    N4Inputs in = n4_inputs(spec);
    const Scalar& p = in.p;
    Scalar d2 = in.d * in.d;
    RatMatrix pfp = in.p6s * forms::f_a(in.p6s, in.p4s) * in.p6s;
    return n4_d_bracket(in) * (pow(p, 5) / d2) + pfp * (3 * pow(p, 4) / d2) - in.p6s * (4 * pow(p, 3) / in.d);
}

RatMatrix closed_form_n4_p6_star_primed_via_d(const ActionSpec& spec) {
    N4Inputs in = n4_inputs(spec);
    const Scalar& p = in.p;
    Scalar d2 = in.d * in.d;
    RatMatrix pfp = in.p6s * forms::f_a(in.p6s, in.p4s) * in.p6s;
    return n4_d_bracket(in) * (-pow(p, 5) / d2) - pfp * (2 * pow(p, 4) / d2) + in.p6s * (2 * pow(p, 3) / in.d);
}

ClosedFormResult closed_form(const ActionSpec& spec) {
    switch (spec.n) {
    case 2: return closed_form_n2(spec);
    case 3: return closed_form_n3(spec);
    case 4: return closed_form_n4(spec);
    default: throw Error(Errc::Unsupported, "closed forms exist for n = 2, 3, 4");
    }
}

ActionSpec inverse_map(const EffectiveAction& primed) {
    primed.validate();
    const RatMatrix& a2p = primed.a2();
    Scalar detp = determinant(a2p);
    require_nonzero(detp, "det A2'");
    ActionSpec out = ActionSpec::zero(primed.n);
    if (primed.n == 2) {
        Scalar p4p = detp - primed.block(2)(0, 0);
        require_nonzero(p4p, "P^(4)*'");
        Scalar ratio = detp / p4p;
        out.block(1) = a2p * ratio;
        out.block(2)(0, 0) = ratio * ratio * primed.block(2)(0, 0);
        return out;
    }
    if (primed.n == 3) {
        RatMatrix a4sp = star(primed.block(2), 2, 3);
        RatMatrix adjp = adjugate(a2p);
        RatMatrix p4sp = adjp - a4sp;
        Scalar p6sp = detp - trace(a4sp * a2p) - primed.block(3)(0, 0);
        Scalar braces = 2 * detp - 2 * trace(p4sp * a2p) + 2 / detp * trace(adjugate(p4sp * a2p)) - p6sp;
        require_nonzero(braces, "inverse partition denominator");
        Scalar p = detp * detp / braces;
        RatMatrix a4s = (adjugate(a2p * p4sp * a2p) * (p / pow(detp, 3)) - adjp) * (p / detp);
        RatMatrix a2 = a2p * p4sp * a2p * (p / (detp * detp));
        out.block(1) = a2;
        out.block(2) = star(a4s, 1, 3);
        out.block(3)(0, 0) = determinant(a2) - trace(a4s * a2) - p;
        return out;
    }
    throw Error(Errc::Unsupported, "inverse map exists for n = 2, 3");
}

QuadraticQuartic general_quadratic_quartic(const PartitionTower& tower, int n) {
    if (n < 2) throw Error(Errc::Unsupported, "general formulas need n >= 2");
    const Scalar& p = tower.partition();
    require_nonzero(p, "P^(2n)*");
    const RatMatrix& prev = tower.starred(n - 1);
    Scalar d = determinant(prev);
    require_nonzero(d, "det P^(2n-2)*");
    RatMatrix cs = star(compound(prev, n - 2), n - 2, n);
    QuadraticQuartic out;
    out.a2 = inverse(prev) * p;
    out.a4 = (cs * tower.starred(n - 2) * cs * (p / d) - cs) * Scalar(-p * p / d);
    return out;
}

QuadraticQuartic general_quadratic_quartic(const ActionSpec& spec) {
    return general_quadratic_quartic(partition_tower(spec), spec.n);
}

} // namespace gie
