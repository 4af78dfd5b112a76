#ifndef GIE_ACTION_HPP
#define GIE_ACTION_HPP

#include <gie/element.hpp>
#include <gie/grand_constant.hpp>
#include <gie/matrix.hpp>

#include <vector>

namespace gie {

// Coefficients of an action sum_k A^(2k)_{LM} psibar_L psi_M with ordered
// multi-indices L, M (lexicographic k-subsets). blocks[k-1] is A^(2k), of size
// C(n,k) x C(n,k); the last block is 1x1.
struct ActionSpec {
    int n = 0;
    GrandConstant a0;
    std::vector<RatMatrix> blocks;

    static ActionSpec zero(int n);
    static ActionSpec gaussian(const RatMatrix& a2, GrandConstant a0 = {});

    RatMatrix& block(int k) { return blocks.at(k - 1); }
    const RatMatrix& block(int k) const { return blocks.at(k - 1); }
    const RatMatrix& a2() const { return block(1); }

    bool is_gaussian() const;
    // Throws BadShape when block sizes disagree with n.
    void validate() const;

    friend bool operator==(const ActionSpec& a, const ActionSpec& b) {
        return a.n == b.n && a.a0 == b.a0 && a.blocks == b.blocks;
    }
};

using EffectiveAction = ActionSpec;

// Same coefficients with respect to the k > 0 blocks.
bool same_blocks(const ActionSpec& a, const ActionSpec& b);

// Monomial mask of barred_L unbarred_M in canonical order for the given sectors.
Mask block_mask(const AlgebraLayout& layout, Sector barred, Sector unbarred,
                const std::vector<int>& rows, const std::vector<int>& cols);

// The action as an Element over (barred, unbarred) sectors of `layout`,
// constant term included.
Element encode_action(const ActionSpec& spec, const LayoutPtr& layout,
                      Sector barred = Sector::PsiBar, Sector unbarred = Sector::Psi);
Element encode_action(const ActionSpec& spec);

// Inverse of encode_action on the PsiBar/Psi sectors. Throws UnbalancedTerm.
ActionSpec decode_action(const Element& e);

// levels[k] holds P^{(2n-2k)*}, indexed by k-subsets; levels[0] is 1x1 = P.
struct PartitionTower {
    std::vector<RatMatrix> levels;

    const Scalar& partition() const { return levels.at(0)(0, 0); }
    // P^{(2k)*} for k = 1..n, i.e. levels[n-k].
    const RatMatrix& starred(int k) const { return levels.at(levels.size() - 1 - k); }
};

PartitionTower partition_tower(const ActionSpec& spec);

// P = int exp(G0 - A0), the top tower level alone.
Scalar partition_function(const ActionSpec& spec);

// Intermediate objects of the brute-force map, kept for diagnostics.
struct BruteForceTrace {
    Element z{field_layout(1)};
    Element w{field_layout(1)};
    StationarityMap stationarity;
};

// Z = C int exp(G0 + etabar chi + chibar eta), W = ln Z, G = Legendre(W).
// Throws SingularPartition, SingularQuadraticBlock.
EffectiveAction effective_action_bruteforce(const ActionSpec& spec, BruteForceTrace* trace = nullptr);

// int prod_l (d chi_l d chibar_l) integrand * exp(etabar chi + chibar eta) for an
// integrand in the transform layout. Throws LayoutMismatch.
Element fourier_laplace(const Element& integrand);

// exp(G0 - A0) integrated against the source terms, in the transform layout.
Element source_transform(const ActionSpec& spec);

// Drops generator pair n. Throws PreconditionViolated unless A^(2)_{nn} = 1
// and every other coefficient touching index n vanishes.
ActionSpec reduce_dimension(const ActionSpec& spec);

} // namespace gie

#endif
