#include <gie/error.hpp>
#include <gie/layout.hpp>

#include <algorithm>

namespace gie {

const char* sector_name(Sector sector) noexcept {
    switch (sector) {
    case Sector::PsiBar: return "psibar";
    case Sector::Psi: return "psi";
    case Sector::ChiBar: return "chibar";
    case Sector::Chi: return "chi";
    case Sector::EtaBar: return "etabar";
    case Sector::Eta: return "eta";
    }
    return "?";
}

std::string slot_name(const Slot& slot) { return sector_name(slot.sector) + std::to_string(slot.index); }

AlgebraLayout::AlgebraLayout(int n, std::vector<Sector> sectors) : n_(n), sectors_(std::move(sectors)) {
    if (n < 1)
        throw Error(Errc::BadShape, "layout needs n >= 1");
    for (std::size_t i = 0; i < sectors_.size(); ++i)
        for (std::size_t j = i + 1; j < sectors_.size(); ++j)
            if (sectors_[i] == sectors_[j])
                throw Error(Errc::DuplicateSlot, std::string("sector listed twice: ") + sector_name(sectors_[i]));
    if (n * static_cast<int>(sectors_.size()) > kMaxSlots)
        throw Error(Errc::BadShape, "layout exceeds " + std::to_string(kMaxSlots) + " slots");
    for (Sector s : sectors_)
        for (int l = 1; l <= n; ++l)
            slots_.push_back({s, l});
}

bool AlgebraLayout::has(Sector sector) const {
    return std::find(sectors_.begin(), sectors_.end(), sector) != sectors_.end();
}

int AlgebraLayout::position(Sector sector, int index) const {
    auto it = std::find(sectors_.begin(), sectors_.end(), sector);
    if (it == sectors_.end() || index < 1 || index > n_)
        throw Error(Errc::UnknownGenerator, slot_name({sector, index}) + " not in layout");
    return static_cast<int>(it - sectors_.begin()) * n_ + (index - 1);
}

int AlgebraLayout::find(const Slot& slot) const {
    auto it = std::find(sectors_.begin(), sectors_.end(), slot.sector);
    if (it == sectors_.end() || slot.index < 1 || slot.index > n_)
        return -1;
    return static_cast<int>(it - sectors_.begin()) * n_ + (slot.index - 1);
}

Mask AlgebraLayout::sector_mask(Sector sector) const {
    auto it = std::find(sectors_.begin(), sectors_.end(), sector);
    if (it == sectors_.end())
        return 0;
    int offset = static_cast<int>(it - sectors_.begin()) * n_;
    return ((Mask(1) << n_) - 1) << offset;
}

LayoutPtr make_layout(int n, std::vector<Sector> sectors) {
    return std::make_shared<const AlgebraLayout>(n, std::move(sectors));
}

LayoutPtr field_layout(int n) { return make_layout(n, {Sector::PsiBar, Sector::Psi}); }

LayoutPtr transform_layout(int n) {
    return make_layout(n, {Sector::ChiBar, Sector::Chi, Sector::EtaBar, Sector::Eta});
}

LayoutPtr legendre_layout(int n) {
    return make_layout(n, {Sector::PsiBar, Sector::Psi, Sector::EtaBar, Sector::Eta});
}

} // namespace gie
