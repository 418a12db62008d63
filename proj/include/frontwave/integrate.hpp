#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontwave/classes.hpp"
#include "frontwave/front.hpp"
#include "frontwave/moves.hpp"

namespace frontwave {

// Integer weight function on crossing classes, vector valued. Lookups coarsen
// stepwise until a table entry matches: the exact key, the key with its
// Maslov refinement dropped, then for cusp crossing classes the absorbing
// triple point class with and without the refinement, and finally zero. All
// table keys must live over one surface and queries must match it.
struct WeightFn {
    int dim = 1;
    std::map<ClassKey, std::vector<long long>> table;

    std::vector<long long> operator()(const ClassKey& key) const;
};

void set_weight(WeightFn& psi, const ClassKey& key, std::vector<long long> value);

// Half integer vector stored doubled.
struct DeltaValue {
    std::vector<long long> doubled;

    bool is_zero() const;
    bool operator==(const DeltaValue&) const = default;
};

// Signed weighted sum of psi over the crossing events. Events without a class
// key contribute nothing. The doubled convention makes weight 2 events count
// their value once and weight 1 events half.
DeltaValue delta_along(const std::vector<CrossingEvent>& events, const WeightFn& psi);

struct LocalCheck {
    struct Item {
        LoopKind kind = LoopKind::TT;
        DeltaValue delta;
        bool pass = false;
    };
    std::vector<Item> items;
    bool pass = false;
};

// Runs psi along the eight codimension two wall templates instantiated with
// the given witness loops. A weight function passes exactly when its cusp
// crossing values factor through the absorbing triple point classes.
LocalCheck check_local_integrability(const WeightFn& psi, const SurfaceSpec& surface,
                                     const std::vector<GroupElem>& witnesses = {});

enum class Verdict { Integrable, NotIntegrable, Conditional };

// Connected component data of the space of fronts realizing a given class:
// whether the underlying free homotopy class reverses orientation.
struct ComponentInfo {
    bool reversing = false;
};

struct VerdictReport {
    Verdict verdict = Verdict::Integrable;
    std::string obstruction;
    std::vector<std::pair<std::string, DeltaValue>> deltas;
};

// Decides whether a locally integrable weight function integrates to an
// invariant on the component of the sample code. Reversing components carry
// no monodromy condition. Preserving components need the kink slide to
// vanish, and on the Klein bottle additionally the cover slide, whose events
// must be supplied since they are not derivable from the code alone.
VerdictReport integrability_verdict(
    const WeightFn& psi, const FrontCode& sample, const ComponentInfo& component,
    const std::optional<std::vector<CrossingEvent>>& gamma2_events = std::nullopt);

std::vector<long long> integrate_along(const std::vector<long long>& base_doubled,
                                       const std::vector<CrossingEvent>& events,
                                       const WeightFn& psi);

std::string verdict_to_string(Verdict v);

}  // namespace frontwave
