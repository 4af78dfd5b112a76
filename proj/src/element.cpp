#include <gie/element.hpp>
#include <gie/error.hpp>
#include <gie/matrix.hpp>

#include <algorithm>
#include <sstream>

namespace gie {

namespace {

void require_same_layout(const Element& a, const Element& b) {
    if (a.layout() != b.layout() && !(*a.layout() == *b.layout()))
        throw Error(Errc::LayoutMismatch, "elements live in different layouts");
}

int slot_position(const AlgebraLayout& layout, Slot slot) {
    int p = layout.find(slot);
    if (p < 0) throw Error(Errc::UnknownGenerator, slot_name(slot) + " is not in the layout");
    return p;
}

} // namespace

Element::Element(LayoutPtr layout) : layout_(std::move(layout)) {}

Element::Element(LayoutPtr layout, GrandConstant constant)
    : layout_(std::move(layout)), constant_(std::move(constant)) {}

Element Element::generator(LayoutPtr layout, Sector sector, int index) {
    int p = layout->position(sector, index);
    return monomial(std::move(layout), Mask(1) << p, Scalar(1));
}

Element Element::monomial(LayoutPtr layout, Mask mask, Scalar coeff) {
    if (layout->size() < 32 && (mask >> layout->size()) != 0)
        throw Error(Errc::UnknownGenerator, "mask outside the layout");
    Element e(std::move(layout));
    if (mask == 0) {
        e.constant_ = GrandConstant(std::move(coeff));
    } else if (!gie::is_zero(coeff)) {
        e.terms_.push_back({mask, std::move(coeff)});
    }
    return e;
}

Element Element::from_accumulator(LayoutPtr layout, GrandConstant constant,
                                  std::unordered_map<Mask, Scalar>&& acc) {
    Element e(std::move(layout), std::move(constant));
    e.terms_.reserve(acc.size());
    for (auto& [mask, coeff] : acc)
        if (!gie::is_zero(coeff)) e.terms_.push_back({mask, std::move(coeff)});
    std::sort(e.terms_.begin(), e.terms_.end(), [](const Term& x, const Term& y) { return x.mask < y.mask; });
    return e;
}

Scalar Element::coefficient(Mask mask) const {
    if (mask == 0) return constant_.rational_part();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, Mask m) { return t.mask < m; });
    if (it != terms_.end() && it->mask == mask) return it->coeff;
    return Scalar(0);
}

bool Element::is_even_nilpotent() const {
    if (!constant_.is_zero()) return false;
    for (const auto& t : terms_)
        if (__builtin_popcount(t.mask) % 2 != 0) return false;
    return true;
}

bool Element::is_odd() const {
    if (!constant_.is_zero()) return false;
    for (const auto& t : terms_)
        if (__builtin_popcount(t.mask) % 2 == 0) return false;
    return true;
}

Mask Element::support() const {
    Mask m = 0;
    for (const auto& t : terms_) m |= t.mask;
    return m;
}

Element Element::without_constant() const {
    Element e = *this;
    e.constant_ = GrandConstant();
    return e;
}

namespace {

// Merge of two sorted term lists with a sign on the right operand.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mask < b[j].mask)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mask < a[i].mask) {
            out.push_back({b[j].mask, negate ? Scalar(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Scalar c = negate ? Scalar(a[i].coeff - b[j].coeff) : Scalar(a[i].coeff + b[j].coeff);
            if (!gie::is_zero(c)) out.push_back({a[i].mask, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Element& Element::operator+=(const Element& other) {
    require_same_layout(*this, other);
    terms_ = merge_terms(terms_, other.terms_, false);
    constant_ += other.constant_;
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same_layout(*this, other);
    terms_ = merge_terms(terms_, other.terms_, true);
    constant_ -= other.constant_;
    return *this;
}

Element& Element::operator*=(const Scalar& factor) {
    if (gie::is_zero(factor)) {
        terms_.clear();
        constant_ = GrandConstant();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= factor;
    constant_ *= factor;
    return *this;
}

Element operator*(const Element& a, const Element& b) { return mul(a, b); }

bool operator==(const Element& a, const Element& b) {
    return *a.layout_ == *b.layout_ && a.constant_ == b.constant_ && a.terms_ == b.terms_;
}

Element mul(const Element& a, const Element& b) {
    require_same_layout(a, b);
    const GrandConstant& ca = a.constant();
    const GrandConstant& cb = b.constant();
    if ((ca.has_logs() && (cb.has_logs() || !b.terms().empty())) ||
        (cb.has_logs() && !a.terms().empty()))
        throw Error(Errc::FormalLogProduct, "formal logarithm multiplied by a non-rational factor");

    GrandConstant constant;
    if (ca.has_logs())
        constant = ca * cb.rational_part();
    else
        constant = cb * ca.rational_part();

    std::unordered_map<Mask, Scalar> acc;
    acc.reserve(a.terms().size() * b.terms().size() + a.terms().size() + b.terms().size());
    const Scalar& ra = ca.rational_part();
    const Scalar& rb = cb.rational_part();
    if (!is_zero(ra))
        for (const auto& t : b.terms()) acc[t.mask] += ra * t.coeff;
    if (!is_zero(rb))
        for (const auto& t : a.terms()) acc[t.mask] += t.coeff * rb;
    Scalar prod;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            if (x.mask & y.mask) continue;
            prod = x.coeff * y.coeff;
            Scalar& slot = acc[x.mask | y.mask];
            if (merge_sign_odd(x.mask, y.mask))
                slot -= prod;
            else
                slot += prod;
        }
    return Element::from_accumulator(a.layout(), std::move(constant), std::move(acc));
}

namespace {

// Removes generator g from each term containing it, with the sign of moving
// it to the front; the kernel shared by left derivatives and Berezin integrals.
Element strip_generator(const Element& a, int g) {
    Mask bit = Mask(1) << g;
    Mask below = bit - 1;
    std::unordered_map<Mask, Scalar> acc;
    for (const auto& t : a.terms()) {
        if (!(t.mask & bit)) continue;
        Scalar c = t.coeff;
        if (__builtin_popcount(t.mask & below) & 1) c = -c;
        acc.emplace(t.mask & ~bit, std::move(c));
    }
    GrandConstant constant;
    auto it = acc.find(0);
    if (it != acc.end()) {
        constant = GrandConstant(it->second);
        acc.erase(it);
    }
    return Element::from_accumulator(a.layout(), std::move(constant), std::move(acc));
}

} // namespace

Element left_deriv(const Element& a, Slot generator) {
    return strip_generator(a, slot_position(*a.layout(), generator));
}

Element berezin(const Element& a, Slot generator) {
    return strip_generator(a, slot_position(*a.layout(), generator));
}

Element berezin_pairs(const Element& a, const std::vector<std::pair<Slot, Slot>>& pairs) {
    const AlgebraLayout& layout = *a.layout();
    Mask seen = 0;
    std::vector<std::pair<int, int>> positions;
    for (const auto& [chi, chibar] : pairs) {
        int p = slot_position(layout, chi);
        int q = slot_position(layout, chibar);
        for (int s : {p, q}) {
            if (seen & (Mask(1) << s)) throw Error(Errc::DuplicateSlot, "slot listed twice in the measure");
            seen |= Mask(1) << s;
        }
        positions.emplace_back(p, q);
    }
    Element r = a;
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
        r = strip_generator(r, it->second);
        r = strip_generator(r, it->first);
    }
    return r;
}

Element exp_nilpotent(const Element& a) {
    if (!a.is_even_nilpotent())
        throw Error(Errc::OddOrConstantPart, "exp needs an even element without grade-0 part");
    Element result(a.layout(), GrandConstant(Scalar(1)));
    Element power = result;
    for (long k = 1; ; ++k) {
        power = mul(power, a) * Scalar(1, k);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

Element log_one_plus(const Element& a) {
    if (!a.is_even_nilpotent())
        throw Error(Errc::OddOrConstantPart, "log needs an even element without grade-0 part");
    Element result(a.layout());
    Element power(a.layout(), GrandConstant(Scalar(1)));
    for (long k = 1; ; ++k) {
        power = mul(power, a);
        if (power.is_zero()) break;
        Scalar c(k % 2 == 1 ? 1 : -1, k);
        c.canonicalize();
        result += power * c;
    }
    return result;
}

Element Element::rebind(LayoutPtr target) const {
    const AlgebraLayout& from = *layout_;
    std::vector<int> map(from.size());
    Mask used = support();
    for (int i = 0; i < from.size(); ++i) {
        map[i] = target->find(from.slots()[i]);
        if (map[i] < 0 && (used & (Mask(1) << i)))
            throw Error(Errc::UnknownGenerator, slot_name(from.slots()[i]) + " is not in the target layout");
    }
    // Slot maps need not preserve order, so each monomial is re-sorted.
    std::unordered_map<Mask, Scalar> acc;
    for (const auto& t : terms_) {
        std::vector<int> seq;
        for (Mask m = t.mask; m; m &= m - 1) seq.push_back(map[__builtin_ctz(m)]);
        Mask out = 0;
        for (int p : seq) out |= Mask(1) << p;
        Scalar c = t.coeff;
        if (permutation_sign(seq) < 0) c = -c;
        acc.emplace(out, std::move(c));
    }
    return from_accumulator(std::move(target), constant_, std::move(acc));
}

std::string Element::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (!constant_.is_zero()) {
        out << constant_.to_string();
        first = false;
    }
    for (const auto& t : terms_) {
        std::string c = gie::to_string(t.coeff);
        if (first) {
            out << c;
        } else if (c[0] == '-') {
            out << " - " << c.substr(1);
        } else {
            out << " + " << c;
        }
        first = false;
        for (Mask m = t.mask; m; m &= m - 1) out << '*' << slot_name(layout_->slots()[__builtin_ctz(m)]);
    }
    if (first) out << '0';
    return out.str();
}

OddSubstitution::OddSubstitution(LayoutPtr layout, const OddMap& images)
    : layout_(std::move(layout)), generator_images_(layout_->size(), nullptr) {
    owned_.reserve(images.size());
    std::vector<Slot> mapped;
    Mask seen = 0;
    for (const auto& [slot, image] : images) {
        if (*image.layout() != *layout_) throw Error(Errc::LayoutMismatch, "substitution image in another layout");
        int p = slot_position(*layout_, slot);
        if (seen & (Mask(1) << p)) throw Error(Errc::DuplicateSlot, "generator substituted twice");
        seen |= Mask(1) << p;
        if (!image.is_odd()) throw Error(Errc::NonOddImage, "image of " + slot_name(slot) + " is not odd");
        // g -> g is no substitution at all.
        if (image == Element::monomial(layout_, Mask(1) << p, Scalar(1))) continue;
        domain_ |= Mask(1) << p;
        mapped.push_back(slot);
        owned_.push_back(image);
    }
    for (size_t i = 0; i < owned_.size(); ++i) {
        if (owned_[i].support() & domain_)
            throw Error(Errc::DomainOverlap, "substitution image uses a substituted generator");
        generator_images_[layout_->find(mapped[i])] = &owned_[i];
    }
}

const Element& OddSubstitution::image_of(Mask mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    Element value(layout_);
    int low = __builtin_ctz(mask);
    Mask rest = mask & (mask - 1);
    const Element* g = generator_images_[low];
    if (!(rest & domain_)) {
        // Untouched tail: the image is g's image times a plain monomial.
        Element tail = Element::monomial(layout_, rest, Scalar(1));
        value = g ? mul(*g, tail) : Element::monomial(layout_, mask, Scalar(1));
    } else {
        Element head = g ? *g : Element::monomial(layout_, Mask(1) << low, Scalar(1));
        value = mul(head, image_of(rest));
    }
    return memo_.emplace(mask, std::move(value)).first->second;
}

Element OddSubstitution::apply(const Element& a) {
    if (*a.layout() != *layout_) throw Error(Errc::LayoutMismatch, "substitution applied in another layout");
    std::unordered_map<Mask, Scalar> acc;
    for (const auto& t : a.terms()) {
        if (!(t.mask & domain_)) {
            acc[t.mask] += t.coeff;
            continue;
        }
        for (const auto& u : image_of(t.mask).terms()) acc[u.mask] += t.coeff * u.coeff;
    }
    return Element::from_accumulator(layout_, a.constant(), std::move(acc));
}

Element substitute_odd(const Element& a, const OddMap& images) {
    OddSubstitution s(a.layout(), images);
    return s.apply(a);
}

OddMap StationarityMap::as_odd_map() const {
    OddMap m;
    for (size_t l = 0; l < eta_bar.size(); ++l) m.emplace_back(Slot{Sector::EtaBar, int(l + 1)}, eta_bar[l]);
    for (size_t l = 0; l < eta.size(); ++l) m.emplace_back(Slot{Sector::Eta, int(l + 1)}, eta[l]);
    return m;
}

StationarityMap solve_stationarity(const Element& w) {
    const LayoutPtr& layout = w.layout();
    for (Sector s : {Sector::PsiBar, Sector::Psi, Sector::EtaBar, Sector::Eta})
        if (!layout->has(s)) throw Error(Errc::LayoutMismatch, "stationarity needs Psi and eta sectors");
    int n = layout->n();
    Mask eta_mask = layout->sector_mask(Sector::EtaBar) | layout->sector_mask(Sector::Eta);
    if (w.support() & ~eta_mask) throw Error(Errc::LayoutMismatch, "W must depend on eta slots only");

    // W contains sum M_lm etabar_l eta_m; etabar slots precede eta slots.
    RatMatrix m(n, n);
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            Mask mask = (Mask(1) << layout->position(Sector::EtaBar, l + 1)) |
                        (Mask(1) << layout->position(Sector::Eta, k + 1));
            m(l, k) = w.coefficient(mask);
        }
    if (is_zero(determinant(m))) throw Error(Errc::SingularQuadraticBlock, "quadratic eta block is singular");
    RatMatrix minv = inverse(m);

    // Nonlinear remainders R_l = dW/d etabar_l - (M eta)_l and
    // S_l = -dW/d eta_l - (M^T etabar)_l.
    std::vector<Element> r, s, psi, psibar;
    for (int l = 0; l < n; ++l) {
        Element dl = left_deriv(w, {Sector::EtaBar, l + 1});
        Element dr = -left_deriv(w, {Sector::Eta, l + 1});
        for (int k = 0; k < n; ++k) {
            dl -= Element::generator(layout, Sector::Eta, k + 1) * m(l, k);
            dr -= Element::generator(layout, Sector::EtaBar, k + 1) * m(k, l);
        }
        r.push_back(std::move(dl));
        s.push_back(std::move(dr));
        psi.push_back(Element::generator(layout, Sector::Psi, l + 1));
        psibar.push_back(Element::generator(layout, Sector::PsiBar, l + 1));
    }

    auto update = [&](const std::vector<Element>& rv, const std::vector<Element>& sv, StationarityMap& out) {
        out.eta.assign(n, Element(layout));
        out.eta_bar.assign(n, Element(layout));
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                if (!is_zero(minv(k, l))) out.eta[k] += (psi[l] - rv[l]) * minv(k, l);
                if (!is_zero(minv(l, k))) out.eta_bar[k] += (psibar[l] - sv[l]) * minv(l, k);
            }
    };

    StationarityMap current;
    std::vector<Element> zero(n, Element(layout));
    update(zero, zero, current);
    for (int sweep = 1; sweep <= n + 1; ++sweep) {
        OddSubstitution sub(layout, current.as_odd_map());
        std::vector<Element> rv, sv;
        for (int l = 0; l < n; ++l) {
            rv.push_back(sub.apply(r[l]));
            sv.push_back(sub.apply(s[l]));
        }
        StationarityMap next;
        update(rv, sv, next);
        next.sweeps = sweep;
        bool same = next.eta == current.eta && next.eta_bar == current.eta_bar;
        current = std::move(next);
        if (same) return current;
    }
    throw Error(Errc::SingularQuadraticBlock, "stationarity iteration did not terminate");
}

Element legendre_transform(const Element& w, const StationarityMap& map) {
    const LayoutPtr& layout = w.layout();
    int n = layout->n();
    Element g = substitute_odd(w, map.as_odd_map());
    for (int l = 0; l < n; ++l) {
        g -= map.eta_bar[l] * Element::generator(layout, Sector::Psi, l + 1);
        g -= Element::generator(layout, Sector::PsiBar, l + 1) * map.eta[l];
    }
    return g;
}

} // namespace gie
