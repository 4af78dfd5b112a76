#include <gie/action.hpp>
#include <gie/error.hpp>

namespace gie {

ActionSpec ActionSpec::zero(int n) {
    if (n < 1 || n > 5) throw Error(Errc::BadShape, "n must be between 1 and 5");
    ActionSpec s;
    s.n = n;
    for (int k = 1; k <= n; ++k) {
        int size = static_cast<int>(binomial(n, k));
        s.blocks.emplace_back(size, size);
    }
    return s;
}

ActionSpec ActionSpec::gaussian(const RatMatrix& a2, GrandConstant a0) {
    if (!a2.is_square()) throw Error(Errc::BadShape, "A2 must be square");
    ActionSpec s = zero(a2.rows());
    s.blocks[0] = a2;
    s.a0 = std::move(a0);
    return s;
}

bool ActionSpec::is_gaussian() const {
    for (int k = 2; k <= n; ++k)
        if (!block(k).is_zero()) return false;
    return true;
}

void ActionSpec::validate() const {
    if (n < 1 || n > 5) throw Error(Errc::BadShape, "n must be between 1 and 5");
    if (static_cast<int>(blocks.size()) != n) throw Error(Errc::BadShape, "expected one block per order");
    for (int k = 1; k <= n; ++k) {
        long size = binomial(n, k);
        if (block(k).rows() != size || block(k).cols() != size)
            throw Error(Errc::BadShape, "block A" + std::to_string(2 * k) + " has the wrong size");
    }
}

bool same_blocks(const ActionSpec& a, const ActionSpec& b) { return a.n == b.n && a.blocks == b.blocks; }

Mask block_mask(const AlgebraLayout& layout, Sector barred, Sector unbarred,
                const std::vector<int>& rows, const std::vector<int>& cols) {
    Mask m = 0;
    for (int l : rows) m |= Mask(1) << layout.position(barred, l + 1);
    for (int c : cols) m |= Mask(1) << layout.position(unbarred, c + 1);
    return m;
}

namespace {

// Sign of the ordered string barred_L unbarred_M relative to canonical order.
bool block_sign_odd(const AlgebraLayout& layout, Sector barred, Sector unbarred,
                    const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<int> seq;
    for (int l : rows) seq.push_back(layout.position(barred, l + 1));
    for (int c : cols) seq.push_back(layout.position(unbarred, c + 1));
    return permutation_sign(seq) < 0;
}

} // namespace

Element encode_action(const ActionSpec& spec, const LayoutPtr& layout, Sector barred, Sector unbarred) {
    spec.validate();
    if (layout->n() != spec.n) throw Error(Errc::BadShape, "layout and spec disagree on n");
    std::unordered_map<Mask, Scalar> acc;
    for (int k = 1; k <= spec.n; ++k) {
        const auto& sets = subsets(spec.n, k);
        const RatMatrix& a = spec.block(k);
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = 0; j < sets.size(); ++j) {
                const Scalar& c = a(static_cast<int>(i), static_cast<int>(j));
                if (is_zero(c)) continue;
                Mask m = block_mask(*layout, barred, unbarred, sets[i], sets[j]);
                acc[m] = block_sign_odd(*layout, barred, unbarred, sets[i], sets[j]) ? Scalar(-c) : c;
            }
    }
    return Element::from_accumulator(layout, spec.a0, std::move(acc));
}

Element encode_action(const ActionSpec& spec) { return encode_action(spec, field_layout(spec.n)); }

ActionSpec decode_action(const Element& e) {
    const AlgebraLayout& layout = *e.layout();
    int n = layout.n();
    if (!layout.has(Sector::PsiBar) || !layout.has(Sector::Psi))
        throw Error(Errc::LayoutMismatch, "decode needs PsiBar and Psi sectors");
    Mask bar = layout.sector_mask(Sector::PsiBar);
    Mask unbar = layout.sector_mask(Sector::Psi);
    ActionSpec spec = ActionSpec::zero(n);
    spec.a0 = e.constant();
    for (const auto& t : e.terms()) {
        if (t.mask & ~(bar | unbar)) throw Error(Errc::UnbalancedTerm, "term outside the Psi sectors");
        int kb = __builtin_popcount(t.mask & bar);
        int ku = __builtin_popcount(t.mask & unbar);
        if (kb != ku) throw Error(Errc::UnbalancedTerm, "term with unequal Psi-bar and Psi counts");
        std::vector<int> rows, cols;
        for (int l = 0; l < n; ++l) {
            if (t.mask & (Mask(1) << layout.position(Sector::PsiBar, l + 1))) rows.push_back(l);
            if (t.mask & (Mask(1) << layout.position(Sector::Psi, l + 1))) cols.push_back(l);
        }
        bool odd = block_sign_odd(layout, Sector::PsiBar, Sector::Psi, rows, cols);
        spec.block(kb)(subset_index(n, rows), subset_index(n, cols)) = odd ? Scalar(-t.coeff) : t.coeff;
    }
    return spec;
}

namespace {

std::vector<std::pair<Slot, Slot>> chi_measure(int n) {
    std::vector<std::pair<Slot, Slot>> pairs;
    for (int l = 1; l <= n; ++l) pairs.push_back({Slot{Sector::Chi, l}, Slot{Sector::ChiBar, l}});
    return pairs;
}

} // namespace

PartitionTower partition_tower(const ActionSpec& spec) {
    spec.validate();
    int n = spec.n;
    LayoutPtr layout = make_layout(n, {Sector::ChiBar, Sector::Chi});
    ActionSpec body = spec;
    body.a0 = GrandConstant();
    Element weight = exp_nilpotent(encode_action(body, layout, Sector::ChiBar, Sector::Chi));
    auto measure = chi_measure(n);
    PartitionTower tower;
    // Entry (L, M) inserts prod_i chibar_{m_i} chi_{l_i}, the k-fold A^(2)
    // derivative with index pairs read in the order matching the star duality.
    for (int k = 0; k <= n; ++k) {
        const auto& sets = subsets(n, k);
        int size = static_cast<int>(sets.size());
        RatMatrix level(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                Element insert(layout, GrandConstant(Scalar(1)));
                for (int t = 0; t < k; ++t)
                    insert = insert * Element::generator(layout, Sector::ChiBar, sets[j][t] + 1) *
                             Element::generator(layout, Sector::Chi, sets[i][t] + 1);
                level(i, j) = berezin_pairs(insert * weight, measure).constant().rational_part();
            }
        tower.levels.push_back(std::move(level));
    }
    return tower;
}

Element fourier_laplace(const Element& integrand) {
    const LayoutPtr& layout = integrand.layout();
    int n = layout->n();
    if (!(*layout == *transform_layout(n)))
        throw Error(Errc::LayoutMismatch, "integrand must live in the transform layout");
    Element body = integrand;
    // exp(etabar chi + chibar eta) factorises into commuting nilpotent pairs.
    for (int l = 1; l <= n; ++l) {
        Element one(layout, GrandConstant(Scalar(1)));
        Element a = one + Element::generator(layout, Sector::EtaBar, l) * Element::generator(layout, Sector::Chi, l);
        Element b = one + Element::generator(layout, Sector::ChiBar, l) * Element::generator(layout, Sector::Eta, l);
        body = body * a * b;
    }
    return berezin_pairs(body, chi_measure(n));
}

Scalar partition_function(const ActionSpec& spec) {
    spec.validate();
    LayoutPtr layout = make_layout(spec.n, {Sector::ChiBar, Sector::Chi});
    ActionSpec body = spec;
    body.a0 = GrandConstant();
    Element weight = exp_nilpotent(encode_action(body, layout, Sector::ChiBar, Sector::Chi));
    return berezin_pairs(weight, chi_measure(spec.n)).constant().rational_part();
}

Element source_transform(const ActionSpec& spec) {
    spec.validate();
    ActionSpec body = spec;
    body.a0 = GrandConstant();
    return fourier_laplace(exp_nilpotent(encode_action(body, transform_layout(spec.n), Sector::ChiBar, Sector::Chi)));
}

EffectiveAction effective_action_bruteforce(const ActionSpec& spec, BruteForceTrace* trace) {
    int n = spec.n;
    Element z = source_transform(spec);
    if (z.constant().has_logs()) throw Error(Errc::SingularPartition, "unexpected formal constant in Z");
    Scalar p = z.constant().rational_part();
    if (is_zero(p)) throw Error(Errc::SingularPartition, "partition function P vanishes");

    // W = ln P + ln(1 + (Z - P)/P).
    Element body = z.without_constant() * Scalar(1 / p);
    Element w = log_one_plus(body) + Element(z.layout(), GrandConstant::log(p));
    Element wl = w.rebind(legendre_layout(n));
    StationarityMap map = solve_stationarity(wl);
    Element g = legendre_transform(wl, map).rebind(field_layout(n));
    if (trace) *trace = BruteForceTrace{z, wl, map};
    return decode_action(g);
}

ActionSpec reduce_dimension(const ActionSpec& spec) {
    spec.validate();
    int n = spec.n;
    if (n < 2) throw Error(Errc::PreconditionViolated, "cannot reduce below n = 1");
    int last = n - 1;
    if (spec.a2()(last, last) != 1) throw Error(Errc::PreconditionViolated, "A2_nn must equal 1");
    ActionSpec out = ActionSpec::zero(n - 1);
    out.a0 = spec.a0;
    for (int k = 1; k <= n; ++k) {
        const auto& sets = subsets(n, k);
        const RatMatrix& a = spec.block(k);
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = 0; j < sets.size(); ++j) {
                bool touches = sets[i].back() == last || sets[j].back() == last;
                const Scalar& c = a(static_cast<int>(i), static_cast<int>(j));
                if (!touches) {
                    out.block(k)(subset_index(n - 1, sets[i]), subset_index(n - 1, sets[j])) = c;
                } else if (!(k == 1 && sets[i][0] == last && sets[j][0] == last) && !is_zero(c)) {
                    throw Error(Errc::PreconditionViolated, "a coefficient involving index n is nonzero");
                }
            }
    }
    return out;
}

} // namespace gie
