#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frontwave/errors.hpp"
#include "frontwave/surface.hpp"

namespace frontwave {

// Ambient spaces an element can live in. BaseF is the fundamental group of the
// surface itself, STF the spherical tangent-frame space (circle bundle), PTF its
// projectivized quotient (orientable surfaces only), CSTFModel the pair model
// (cover index, STF part) for the cooriented variant.
enum class Ambient { BaseF, STF, PTF, CSTFModel };

// Signed 1-indexed base letter. Positive n is the n-th generator, negative its
// inverse. Generator numbering per surface kind:
//   Torus, OrientableClosed:  2i-1 -> a_i, 2i -> b_i
//   OrientableFree:           i -> x_i
//   ProjectivePlane:          1 -> c
//   KleinBottle:              1 -> c (orientation preserving), 2 -> d (reversing)
using Gen = std::int16_t;

struct GroupElem {
    Ambient ambient = Ambient::STF;
    SurfaceSpec surface;
    std::vector<Gen> word;  // base part, always in normal form
    long long fiber = 0;    // STF: f exponent; PTF: h exponent; CSTFModel: f exponent of the STF part
    long long cover = 0;    // CSTFModel only

    bool operator==(const GroupElem&) const = default;
};

bool elem_less(const GroupElem& a, const GroupElem& b);
inline bool operator<(const GroupElem& a, const GroupElem& b) { return elem_less(a, b); }

GroupElem identity(Ambient ambient, const SurfaceSpec& surface);

// name is a base letter ("a1", "b2", "x3", "c", "d"), the fiber class "f"
// (STF/CSTFModel), the half fiber "h" (PTF), the cover fiber "f1" (CSTFModel),
// or "1" for the identity.
GroupElem generator(Ambient ambient, const SurfaceSpec& surface, const std::string& name);

// Parses a whitespace separated word of tokens name or name^exp.
GroupElem from_word(Ambient ambient, const SurfaceSpec& surface, const std::string& text);
std::string to_word(const GroupElem& e);

GroupElem compose(const GroupElem& a, const GroupElem& b);
GroupElem inverse(const GroupElem& a);
GroupElem power(const GroupElem& a, long long n);

// Normal form. Elements produced by this module are already normalized, so this
// is idempotent and mostly useful for externally assembled values.
GroupElem reduce(const GroupElem& e);

bool is_identity(const GroupElem& e);
bool base_trivial(const GroupElem& e);

// +1 if the base projection preserves orientation, -1 if it reverses it.
int orientation_parity(const GroupElem& e);

long long fiber_exp(const GroupElem& e);
long long cover_index(const GroupElem& e);

// STF -> PTF inclusion, doubling the fiber exponent. Orientable surfaces only.
GroupElem iota_stf_to_ptf(const GroupElem& e);

// True when a PTF element lies outside the image of iota (odd half fiber).
bool ptf_minus(const GroupElem& e);

// Forgets the fiber data, landing in BaseF.
GroupElem base_project(const GroupElem& e);

GroupElem make_cstf(long long cover, const GroupElem& stf_part);

// Klein bottle normal form accessors: element c^i d^j f^k.
struct KleinForm {
    long long i = 0;
    long long j = 0;
    long long k = 0;
};
KleinForm klein_form(const GroupElem& e);
GroupElem klein_elem(Ambient ambient, long long i, long long j, long long k);

std::vector<std::string> base_letter_names(const SurfaceSpec& surface);
std::string letter_name(const SurfaceSpec& surface, Gen g);

}  // namespace frontwave
