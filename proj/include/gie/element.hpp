#ifndef GIE_ELEMENT_HPP
#define GIE_ELEMENT_HPP

#include <gie/grand_constant.hpp>
#include <gie/layout.hpp>
#include <gie/scalar.hpp>

#include <unordered_map>
#include <utility>
#include <vector>

namespace gie {

struct Term {
    Mask mask;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// True when merging the generators of `left` followed by `right` (disjoint
// masks, each in canonical order) into canonical order takes an odd number
// of transpositions.
inline bool merge_sign_odd(Mask left, Mask right) {
    int count = 0;
    for (Mask r = right; r != 0; r &= r - 1) {
        int j = __builtin_ctz(r);
        count += __builtin_popcount(left >> (j + 1));
    }
    return (count & 1) != 0;
}

// An element of the Grassmann algebra over a fixed layout. The grade-0 part
// is a GrandConstant so that formal logarithms can ride along; all other
// terms carry rational coefficients and are kept sorted by mask, with no
// stored zeros.
class Element {
public:
    explicit Element(LayoutPtr layout);
    Element(LayoutPtr layout, GrandConstant constant);

    static Element generator(LayoutPtr layout, Sector sector, int index);
    static Element monomial(LayoutPtr layout, Mask mask, Scalar coeff);

    const LayoutPtr& layout() const { return layout_; }
    const GrandConstant& constant() const { return constant_; }
    const std::vector<Term>& terms() const { return terms_; }

    // Coefficient of a monomial in canonical order; mask 0 gives the rational part.
    Scalar coefficient(Mask mask) const;

    bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
    // No grade-0 part and every term of even degree.
    bool is_even_nilpotent() const;
    // No grade-0 part and every term of odd degree.
    bool is_odd() const;
    // Union of all masks that occur.
    Mask support() const;

    Element without_constant() const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Scalar& factor);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Scalar(-1); }
    friend Element operator*(Element a, const Scalar& s) { return a *= s; }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b);

    // Same element expressed in another layout, matching slots by sector and
    // index. Throws UnknownGenerator if a used slot is absent from `target`.
    Element rebind(LayoutPtr target) const;

    std::string to_string() const;

    // Builds from an unsorted accumulator; zero coefficients are dropped.
    static Element from_accumulator(LayoutPtr layout, GrandConstant constant,
                                    std::unordered_map<Mask, Scalar>&& acc);

private:
    LayoutPtr layout_;
    GrandConstant constant_;
    std::vector<Term> terms_;
};

Element mul(const Element& a, const Element& b);

Element left_deriv(const Element& a, Slot generator);

// Berezin integral with respect to one generator: int d(theta) theta = 1.
Element berezin(const Element& a, Slot generator);

// Integration against prod_l (d chi_l d chibar_l), `pairs` listed as (chi_l, chibar_l)
// left to right; the rightmost differential acts first.
Element berezin_pairs(const Element& a, const std::vector<std::pair<Slot, Slot>>& pairs);

Element exp_nilpotent(const Element& a);
Element log_one_plus(const Element& a);

using OddMap = std::vector<std::pair<Slot, Element>>;

// Algebra homomorphism sending each listed generator to an odd element.
// Monomial images are memoised, so applying one substitution to many
// elements shares work.
class OddSubstitution {
public:
    OddSubstitution(LayoutPtr layout, const OddMap& images);

    Element apply(const Element& a);

private:
    const Element& image_of(Mask mask);

    LayoutPtr layout_;
    Mask domain_ = 0;
    std::vector<const Element*> generator_images_;
    std::vector<Element> owned_;
    std::unordered_map<Mask, Element> memo_;
};

Element substitute_odd(const Element& a, const OddMap& images);

// Solution eta-bar_l(Psi), eta_l(Psi) of the stationarity conditions
// Psi-bar_l = -dW/d eta_l, Psi_l = dW/d eta-bar_l.
struct StationarityMap {
    std::vector<Element> eta_bar;
    std::vector<Element> eta;
    int sweeps = 0;

    OddMap as_odd_map() const;
};

// W must live in a layout carrying PsiBar, Psi, EtaBar and Eta sectors and be
// supported on the eta slots only.
StationarityMap solve_stationarity(const Element& w);

// G = W - sum_l (eta-bar_l Psi_l + Psi-bar_l eta_l) at the stationary point,
// returned in the layout of `w`.
Element legendre_transform(const Element& w, const StationarityMap& map);

} // namespace gie

#endif
