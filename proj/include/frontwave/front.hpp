#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frontwave/group.hpp"
#include "frontwave/surface.hpp"

namespace frontwave {

enum class Slot { first, second };

// Local configuration tag of a double point. R1/R2 are the two transversal
// patterns, C1/C2 their coorientation reversed copies. The tag is an input
// datum; its only computational meaning is the fiber twist table used by the
// invariants module.
enum class XType { R1, R2, C1, C2 };

struct DoublePointEvent {
    int id = 0;
    Slot slot = Slot::first;
    XType xtype = XType::R1;

    bool operator==(const DoublePointEvent&) const = default;
};

struct CuspEvent {
    int maslov_sign = 1;
    int rotation_sign = 1;

    bool operator==(const CuspEvent&) const = default;
};

using Event = std::variant<DoublePointEvent, CuspEvent>;

// Combinatorial encoding of a generic cooriented oriented front. events is a
// cyclic sequence; arcs[i] labels the arc from events[i] to events[i+1 mod m]
// as a loop class in the circle bundle group, closed through fixed tail paths
// to a global basepoint. A code with no events carries exactly one arc.
struct FrontCode {
    SurfaceSpec surface;
    std::vector<Event> events;
    std::vector<GroupElem> arcs;

    bool operator==(const FrontCode&) const = default;
};

struct ValidationReport {
    struct Item {
        std::string code;
        int index = -1;
        std::string message;
    };
    std::vector<Item> problems;

    bool ok() const { return problems.empty(); }
};

ValidationReport validate(const FrontCode& code);

// Positions of the two visits of a double point, first slot then second.
std::pair<int, int> visit_positions(const FrontCode& code, int id);

// The two oriented loops based at the double point: cyclic partial products
// of the arc labels from one visit to the other and back.
std::pair<GroupElem, GroupElem> loop_pair_at(const FrontCode& code, int id);

// Product of the arc labels from event position from (inclusive) to position
// to (exclusive), walking cyclically. from == to gives the identity.
GroupElem arc_product(const FrontCode& code, int from, int to);

struct FrontIndices {
    long long maslov = 0;
    std::optional<long long> whitney;
};

FrontIndices indices(const FrontCode& code);

// Product of all arc labels from the event basepoint. Well defined up to
// conjugation under basepoint rotation.
GroupElem global_class(const FrontCode& code);

std::vector<int> double_point_ids(const FrontCode& code);
int cusp_count(const FrontCode& code);

// Label of a built-in planar front with omega kinks and k alternating cusp
// pairs. Carries no geometry; only the label feeds the base value tables.
struct StandardFrontId {
    int omega = 0;
    int k = 0;

    bool operator==(const StandardFrontId&) const = default;
};

FrontCode standard_code(const StandardFrontId& id);

}  // namespace frontwave
