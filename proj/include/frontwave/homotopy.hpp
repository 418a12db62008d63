#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontwave/group.hpp"
#include "frontwave/surface.hpp"

namespace frontwave {

enum class AtomKind { Z2, Z4, SpherePi, Pi1STF, Pi1PresSTF, Pi1STK, Pi1K };

struct DescriptorAtom {
    AtomKind kind = AtomKind::Z2;
    int degree = 0;  // SpherePi only

    bool operator==(const DescriptorAtom&) const = default;
};

bool atom_less(const DescriptorAtom& a, const DescriptorAtom& b);

// Normalized direct sum: free_rank copies of Z followed by symbolic atoms in
// atom_less order. index_two marks the parity subgroup wrapper around the sum.
struct GroupDescriptor {
    int free_rank = 0;
    std::vector<DescriptorAtom> atoms;
    bool index_two = false;

    bool operator==(const GroupDescriptor&) const = default;
};

GroupDescriptor descriptor_zn(int n);
GroupDescriptor descriptor_atom(AtomKind kind, int degree = 0);
GroupDescriptor direct_sum(const GroupDescriptor& a, const GroupDescriptor& b);
GroupDescriptor index_two_subgroup(const GroupDescriptor& inner);

// `Z^4`, `Z (+) Z_2`, `Idx2(Z (+) pi1STK)`, `0` for the trivial group.
std::string descriptor_to_string(const GroupDescriptor& d);

// Component data of a front: either the class of its coorienting lift in the
// circle bundle group, or the flags the dispatch needs directly. When a lift
// is given the flags are recomputed from it and any asserted flag must agree.
struct FrontClassData {
    std::optional<GroupElem> lift;
    std::optional<bool> base_trivial;
    std::optional<bool> reversing;
    std::optional<bool> even_reversing_power;
};

FrontClassData class_data_from_lift(const GroupElem& lift);

// True when l equals b^(2k) for some orientation reversing b in the circle
// bundle group of the Klein bottle.
bool klein_even_reversing_power(const GroupElem& l);

GroupDescriptor pi1_front_space(const SurfaceSpec& surface, const FrontClassData& front);

// Degree n >= 2 homotopy of the component. Sphere homotopy beyond the Hopf
// degree stays symbolic.
GroupDescriptor pi_n_front_space(const SurfaceSpec& surface, int n);

GroupDescriptor pi1_cstf_descriptor(const SurfaceSpec& surface);

// How the two summands inside the index two wrapper pair up.
std::string cstf_parity_rule();

// Component classes on nonorientable surfaces beyond the projective plane and
// the Klein bottle. The caller asserts the case; the group layer has no model
// of those surfaces to check it against.
enum class NonorientableClassCase {
    ReversingBase,
    EvenReversingPower,
    PreservingOther,
    TrivialBaseNontrivialLift,
    TrivialBaseTrivialLift,
};

GroupDescriptor pi1_front_space_lookup(NonorientableClassCase c);

}  // namespace frontwave
