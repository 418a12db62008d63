#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontwave/group.hpp"

namespace frontwave {

enum class ConjVerdict { Yes, No, Inconclusive };

struct ConjugacyResult {
    ConjVerdict verdict = ConjVerdict::No;
    std::optional<GroupElem> witness;  // t with t * a * t^-1 == b when verdict is Yes
    long long radius = 0;              // search effort spent when Inconclusive
};

struct CyclicNormal {
    GroupElem canon;    // distinguished representative of the conjugacy class
    GroupElem witness;  // witness * e * witness^-1 == canon
    bool certified = true;
};

CyclicNormal cyclic_normal_form(const GroupElem& e);

ConjugacyResult is_conjugate(const GroupElem& a, const GroupElem& b);

// Difference of fiber exponents between b and a after aligning their base
// parts by conjugation; nullopt when the base parts are not conjugate.
// Orientable surfaces other than the sphere only.
std::optional<long long> fiber_shift_index(const GroupElem& a, const GroupElem& b);

struct RootResult {
    GroupElem root;
    long long exponent = 1;  // root^exponent == the input
};
RootResult primitive_root(const GroupElem& a);

struct CentralizerInfo {
    bool whole_group = false;
    std::string shape;
    std::vector<GroupElem> generators;  // empty when whole_group
};
CentralizerInfo centralizer_descriptor(const GroupElem& l);

// A primitive root lift that centralizes e; identity when e is base trivial.
// Orientable surfaces only.
GroupElem centralizer_root(const GroupElem& e);

std::string stf_group_descriptor(const SurfaceSpec& surface);

int search_radius(int fallback);

}  // namespace frontwave
