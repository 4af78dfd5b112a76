#ifndef GIE_LAYOUT_HPP
#define GIE_LAYOUT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gie {

using Mask = std::uint32_t;

inline constexpr int kMaxSlots = 24;

enum class Sector { PsiBar, Psi, ChiBar, Chi, EtaBar, Eta };

const char* sector_name(Sector sector) noexcept;

struct Slot {
    Sector sector;
    int index; // 1-based generator index within the sector

    friend bool operator==(const Slot&, const Slot&) = default;
};

std::string slot_name(const Slot& slot);

// Ordered list of generator slots. Slot i is bit i of a Mask; the canonical
// ordering of a monomial is ascending slot index.
class AlgebraLayout {
public:
    // Each sector gets n slots, appended in the order given.
    AlgebraLayout(int n, std::vector<Sector> sectors);

    int n() const { return n_; }
    int size() const { return static_cast<int>(slots_.size()); }
    const std::vector<Slot>& slots() const { return slots_; }
    const std::vector<Sector>& sectors() const { return sectors_; }

    bool has(Sector sector) const;
    // Slot position of generator `index` (1-based) in `sector`; throws UnknownGenerator.
    int position(Sector sector, int index) const;
    // Position of a slot by value, or -1.
    int find(const Slot& slot) const;
    Mask sector_mask(Sector sector) const;

    friend bool operator==(const AlgebraLayout& a, const AlgebraLayout& b) {
        return a.n_ == b.n_ && a.sectors_ == b.sectors_;
    }

private:
    int n_;
    std::vector<Sector> sectors_;
    std::vector<Slot> slots_;
};

using LayoutPtr = std::shared_ptr<const AlgebraLayout>;

LayoutPtr make_layout(int n, std::vector<Sector> sectors);

// Psi-bar_1..n, Psi_1..n.
LayoutPtr field_layout(int n);
// chi-bar, chi, eta-bar, eta: the algebra in which the Berezin transform runs.
LayoutPtr transform_layout(int n);
// Psi-bar, Psi, eta-bar, eta: the algebra in which the Legendre step runs.
LayoutPtr legendre_layout(int n);

} // namespace gie

#endif
