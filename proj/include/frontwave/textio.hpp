#pragma once

#include <string>
#include <vector>

#include "frontwave/front.hpp"
#include "frontwave/integrate.hpp"
#include "frontwave/moves.hpp"

namespace frontwave {

// Versioned line formats. Parsers accept blank lines and '#' comments and
// report exact 1-based line/column positions; serializers emit the canonical
// form, which round trips byte identically.

// frontcode v1
// surface <kind> [genus=N|rank=N]
// event <n>: D <id> <first|second> <R1|R2|C1|C2>
// event <n>: C <+|-> <+|->
// arc <n>: <word>
FrontCode parse_front_text(const std::string& text);
std::string serialize_front(const FrontCode& code);

// moves v1
// <lambda|k+|k-|t|pi> <+|-> site=<ints,> [witness=<w>|<w>] [triangle=+--]
//   [rot=-] [tang=inverse] [ids=<n>,<m>]
// Witness words replace spaces with commas.
std::vector<MoveSpec> parse_moves_text(const SurfaceSpec& surface, const std::string& text);
std::string serialize_moves(const std::vector<MoveSpec>& moves);

// weights v1
// surface <spec>
// dim <k>
// <key literal> <k ints>
struct WeightsFile {
    SurfaceSpec surface;
    WeightFn psi;
};
WeightsFile parse_weights_text(const std::string& text);
std::string serialize_weights(const WeightsFile& w);

// events v1
// surface <spec>
// <stratum> <+|-> <weight> <key literal or ->
struct EventsFile {
    SurfaceSpec surface;
    std::vector<CrossingEvent> events;
};
EventsFile parse_events_text(const std::string& text);
std::string serialize_events(const EventsFile& e);

}  // namespace frontwave
