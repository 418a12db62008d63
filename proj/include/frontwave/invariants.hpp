#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontwave/classes.hpp"
#include "frontwave/front.hpp"
#include "frontwave/moves.hpp"

namespace frontwave {

enum class PlanarInvariant { Stp, Jplus, Jminus };

std::string planar_invariant_to_string(PlanarInvariant inv);
PlanarInvariant planar_invariant_from_string(const std::string& text);

// Half integral values are stored as doubled integers. Printing renders odd
// doubles as exact halves, for example 3 prints as "3/2".
std::string doubled_to_string(long long doubled);

// Closed form value of the chosen invariant on the standard planar front
// labelled by id, as a doubled integer.
long long planar_base_value(PlanarInvariant inv, const StandardFrontId& id);

// Base value plus the axiom weighted signed crossing count along the path.
long long planar_invariant(PlanarInvariant inv, const StandardFrontId& id,
                           const std::vector<CrossingEvent>& path);

// Finite integer combination of dangerous tangency classes with doubled
// coefficients. Zero coefficients are pruned; all keys share one surface.
struct ModuleVector {
    std::map<ClassKey, long long> terms;

    bool is_zero() const { return terms.empty(); }

    bool operator==(const ModuleVector&) const = default;
};

void add_term(ModuleVector& vec, const ClassKey& key, long long doubled);
ModuleVector add(const ModuleVector& a, const ModuleVector& b);
ModuleVector scale(const ModuleVector& vec, long long factor);
long long coefficient_sum(const ModuleVector& vec);

// One sorted "<coeff> * <key>" line per term; "0" for the zero vector.
std::string module_vector_to_string(const ModuleVector& vec);

// The tangency class vector of a front on an orientable surface: one positive
// and one negative term per double point through the fiber twist table, plus
// rotation grouped cusp terms on the global class.
ModuleVector iplus(const FrontCode& code);

// Change of iplus under a positive dangerous tangency crossing with loop pair
// (s1, s2): doubled 4[s1,s2] - 2[s1 f, s2 f^-1] - 2[s1 f^-1, s2 f].
ModuleVector iplus_delta(const GroupElem& s1, const GroupElem& s2);

}  // namespace frontwave
