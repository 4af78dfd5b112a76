#ifndef GIE_TEST_SUPPORT_HPP
#define GIE_TEST_SUPPORT_HPP

#include <gie/action.hpp>
#include <gie/element.hpp>
#include <gie/random.hpp>

#include <unordered_map>
#include <utility>
#include <vector>

namespace gie::testing {

inline Element gen(const LayoutPtr& layout, Sector s, int index) { return Element::generator(layout, s, index); }

inline Element one(const LayoutPtr& layout) { return Element(layout, GrandConstant(Scalar(1))); }

// Product of generators in the order written.
inline Element word(const LayoutPtr& layout, const std::vector<Slot>& slots, const Scalar& coeff = Scalar(1)) {
    Element e = one(layout) * coeff;
    for (const Slot& s : slots) e = e * gen(layout, s.sector, s.index);
    return e;
}

// Sign of bubble-sorting slot positions into ascending order; 0 on a repeat.
inline int bubble_sign(std::vector<int> seq) {
    int sign = 1;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = 0; j + 1 < seq.size() - i; ++j) {
            if (seq[j] == seq[j + 1]) return 0;
            if (seq[j] > seq[j + 1]) {
                std::swap(seq[j], seq[j + 1]);
                sign = -sign;
            }
        }
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1]) return 0;
    return sign;
}

inline std::vector<int> mask_positions(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(__builtin_ctz(m));
    return out;
}

// parity: 0 even, 1 odd, -1 any. Never includes the empty monomial.
inline Element random_element(RationalStream& rng, const LayoutPtr& layout, int terms, int parity,
                              int max_degree = 4) {
    std::unordered_map<Mask, Scalar> acc;
    int size = layout->size();
    for (int t = 0; t < terms; ++t) {
        int degree = static_cast<int>(rng.next_int(1, max_degree));
        if (parity == 0 && degree % 2) ++degree;
        if (parity == 1 && degree % 2 == 0) ++degree;
        if (degree > size) continue;
        Mask m = 0;
        while (__builtin_popcount(m) < degree) m |= Mask(1) << rng.next_int(0, size - 1);
        acc[m] += rng.next();
    }
    return Element::from_accumulator(layout, GrandConstant(), std::move(acc));
}

} // namespace gie::testing

#endif
