#pragma once

#include <string>

#include "frontwave/errors.hpp"

namespace frontwave {

enum class SurfaceKind {
    Plane,
    Sphere,
    Torus,
    OrientableClosed,
    OrientableFree,
    ProjectivePlane,
    KleinBottle,
};

struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::Plane;
    int genus = 0;  // OrientableClosed only, >= 2
    int rank = 0;   // OrientableFree only, >= 1

    bool operator==(const SurfaceSpec&) const = default;
};

inline SurfaceSpec plane() { return {SurfaceKind::Plane, 0, 0}; }
inline SurfaceSpec sphere() { return {SurfaceKind::Sphere, 0, 0}; }
inline SurfaceSpec torus() { return {SurfaceKind::Torus, 0, 0}; }

inline SurfaceSpec orientable_closed(int genus) {
    if (genus < 2) throw UnsupportedSurface("orientable_closed requires genus >= 2");
    return {SurfaceKind::OrientableClosed, genus, 0};
}

inline SurfaceSpec orientable_free(int rank) {
    if (rank < 1) throw UnsupportedSurface("orientable_free requires rank >= 1");
    return {SurfaceKind::OrientableFree, 0, rank};
}

inline SurfaceSpec projective_plane() { return {SurfaceKind::ProjectivePlane, 0, 0}; }
inline SurfaceSpec klein_bottle() { return {SurfaceKind::KleinBottle, 0, 0}; }

inline bool is_orientable(const SurfaceSpec& s) {
    return s.kind != SurfaceKind::ProjectivePlane && s.kind != SurfaceKind::KleinBottle;
}

inline bool is_closed(const SurfaceSpec& s) {
    return s.kind != SurfaceKind::Plane && s.kind != SurfaceKind::OrientableFree;
}

inline int base_generator_count(const SurfaceSpec& s) {
    switch (s.kind) {
        case SurfaceKind::Plane: return 0;
        case SurfaceKind::Sphere: return 0;
        case SurfaceKind::Torus: return 2;
        case SurfaceKind::OrientableClosed: return 2 * s.genus;
        case SurfaceKind::OrientableFree: return s.rank;
        case SurfaceKind::ProjectivePlane: return 1;
        case SurfaceKind::KleinBottle: return 2;
    }
    return 0;
}

std::string surface_to_string(const SurfaceSpec& s);
SurfaceSpec surface_from_string(const std::string& text);

}  // namespace frontwave
