#ifndef GIE_CLOSED_FORM_HPP
#define GIE_CLOSED_FORM_HPP

#include <gie/action.hpp>

#include <map>

namespace gie {

// Output of a closed-form action map. Partition matrices are keyed by 2k:
// `tower` holds P^{(2k)*} of the input action, `primed_tower` the predicted
// P^{(2k)*'} of the effective action.
struct ClosedFormResult {
    EffectiveAction action;
    std::map<int, RatMatrix> tower;
    std::map<int, RatMatrix> primed_tower;
};

// All throw SingularInput when a required determinant or partition scalar vanishes.
ClosedFormResult closed_form_n2(const ActionSpec& spec);
ClosedFormResult closed_form_n3(const ActionSpec& spec);
ClosedFormResult closed_form_n4(const ActionSpec& spec);
// Dispatches on spec.n (2..4).
ClosedFormResult closed_form(const ActionSpec& spec);

// The alternative A^(6)*' expression of the n = 4 map written with F_d1 and F_d2.
RatMatrix closed_form_n4_a6_star_via_d(const ActionSpec& spec);
// The corresponding P^(6)*' expression.
RatMatrix closed_form_n4_p6_star_primed_via_d(const ActionSpec& spec);

// Inverse action map on the k > 0 blocks, n in {2, 3}. The returned a0 is zero.
ActionSpec inverse_map(const EffectiveAction& primed);

struct QuadraticQuartic {
    RatMatrix a2;
    RatMatrix a4;
};

// General-n expressions for A^(2)' and A^(4)' from the partition tower.
QuadraticQuartic general_quadratic_quartic(const ActionSpec& spec);
QuadraticQuartic general_quadratic_quartic(const PartitionTower& tower, int n);

} // namespace gie

#endif
