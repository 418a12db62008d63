#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "frontwave/classes.hpp"
#include "frontwave/front.hpp"

namespace frontwave {

enum class Stratum { Lambda, Kplus, Kminus, T, Pi };

// Orientation data of a vanishing triangle: for each side, whether its own
// orientation matches the cyclic ordering of the triangle.
struct TriangleData {
    std::array<bool, 3> side_matches = {false, false, false};
};

// Parses a three character string over '+'/'-', '+' marking a matching side.
TriangleData triangle_from_string(const std::string& text);

// (-1)^q where q is the number of matching sides.
int triangle_sign(const TriangleData& t);

// Cusp crossing sign data: the triangle obtained by substituting the small
// loop at the cusp.
struct PiLocalData {
    TriangleData substituted;
};

int pi_crossing_sign(const PiLocalData& p);

// A transversal crossing of a codimension one stratum, described by where it
// rewrites the code. site semantics per stratum:
//   Lambda birth:   {arc index}          (direction +1)
//   Lambda death:   {event index of the first cusp of the adjacent pair}
//   K insert:       {arc index i, arc index j}   (i == j allowed)
//   K remove:       {double point id X, double point id Y}
//   T:              {id1, id2, id3}
//   Pi:             {event index of the double point visit next to the cusp}
// For K strata the rewrite action is insert when (direction > 0) differs from
// inverse_tangency as dictated by the double point count law.
struct MoveSpec {
    Stratum stratum = Stratum::Lambda;
    int direction = 1;
    std::vector<int> site;
    std::vector<GroupElem> witness;
    std::string triangle;
    int rotation_sign = 1;
    bool inverse_tangency = false;
    int new_id1 = 0;
    int new_id2 = 0;

    bool operator==(const MoveSpec&) const = default;
};

struct CrossingEvent {
    Stratum stratum = Stratum::Lambda;
    int sign = 1;
    std::optional<ClassKey> key;
    int weight = 2;

    bool operator==(const CrossingEvent&) const = default;
};

struct MoveResult {
    FrontCode code;
    CrossingEvent event;
};

MoveResult apply_move(const FrontCode& code, const MoveSpec& m);

enum class LoopKind { Gamma1, Gamma2, Gamma3, TT, KPi, KT, KK, TPi, PiLambda, PiPi, LambdaLambda };

// Witness data for canned loops that are not derived from the code alone.
// gamma2_events carries the cover slide events on the Klein bottle; the
// witnesses pool parameterizes the codimension two templates and is padded
// from the code when too short.
struct CannedContext {
    std::vector<GroupElem> witnesses;
    std::optional<std::vector<CrossingEvent>> gamma2_events;
};

std::vector<CrossingEvent> canned_loop(LoopKind kind, const FrontCode& code,
                                       const CannedContext& ctx = {});

std::string stratum_to_string(Stratum s);
Stratum stratum_from_string(const std::string& text);
std::string loop_kind_to_string(LoopKind k);
LoopKind loop_kind_from_string(const std::string& text);

}  // namespace frontwave
