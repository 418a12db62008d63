#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontwave/conjugacy.hpp"
#include "frontwave/group.hpp"

namespace frontwave {

// Equivalence class families attached to crossings of the discriminant:
// dangerous and safe self tangencies, triple points, and cusp crossings.
enum class ClassFamily { Kplus, Kminus, T, Pi };

// A canonical orbit representative. The refined families carry a Maslov index
// in maslov; Pi classes carry the coorientation tag or_tag. certified is false
// only when the residual conjugation search on a closed higher genus surface
// was cut off at the search window, in which case the key compares literally.
struct ClassKey {
    ClassFamily family = ClassFamily::Kplus;
    SurfaceSpec surface;
    std::vector<GroupElem> payload;
    std::optional<long long> maslov;
    std::optional<int> or_tag;
    bool certified = true;

    bool operator==(const ClassKey&) const = default;
};

bool key_less(const ClassKey& a, const ClassKey& b);
inline bool operator<(const ClassKey& a, const ClassKey& b) { return key_less(a, b); }

ClassKey kplus_key(const GroupElem& d1, const GroupElem& d2,
                   std::optional<long long> maslov = std::nullopt);
ClassKey kminus_key(const GroupElem& p1, const GroupElem& p2,
                    std::optional<long long> maslov = std::nullopt);
ClassKey t_key(const GroupElem& d1, const GroupElem& d2, const GroupElem& d3,
               std::optional<long long> maslov = std::nullopt);
ClassKey pi_key(const GroupElem& d1, const GroupElem& d2, int or_tag,
                std::optional<long long> maslov = std::nullopt);

// Sends a cusp crossing class to the triple point class absorbing it.
ClassKey g_map(const ClassKey& pi);

// Position of k2 relative to k1 inside the fiber shift family of dangerous
// tangency classes sharing the same base data; nullopt when the base pairs
// disagree.
std::optional<long long> order_index(const ClassKey& k1, const ClassKey& k2);

std::string key_to_string(const ClassKey& k);
ClassKey key_from_string(const SurfaceSpec& surface, const std::string& text);

}  // namespace frontwave
