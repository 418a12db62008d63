#include "frontwave/surface.hpp"

#include <sstream>

namespace frontwave {

std::string surface_to_string(const SurfaceSpec& s) {
    switch (s.kind) {
        case SurfaceKind::Plane: return "plane";
        case SurfaceKind::Sphere: return "sphere";
        case SurfaceKind::Torus: return "torus";
        case SurfaceKind::OrientableClosed: return "orientable genus=" + std::to_string(s.genus);
        case SurfaceKind::OrientableFree: return "free rank=" + std::to_string(s.rank);
        case SurfaceKind::ProjectivePlane: return "rp2";
        case SurfaceKind::KleinBottle: return "klein";
    }
    throw UnsupportedSurface("unknown surface kind");
}

SurfaceSpec surface_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    if (head == "plane") return plane();
    if (head == "sphere") return sphere();
    if (head == "torus") return torus();
    if (head == "rp2") return projective_plane();
    if (head == "klein") return klein_bottle();
    if (head == "orientable" || head == "free") {
        std::string param;
        in >> param;
        auto eq = param.find('=');
        if (eq == std::string::npos) throw UnsupportedSurface("surface '" + head + "' needs genus=/rank= parameter");
        std::string name = param.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(param.substr(eq + 1));
        } catch (const std::exception&) {
            throw UnsupportedSurface("bad surface parameter: " + param);
        }
        if (head == "orientable") {
            if (name != "genus") throw UnsupportedSurface("orientable surface takes genus=");
            return orientable_closed(value);
        }
        if (name != "rank") throw UnsupportedSurface("free surface takes rank=");
        return orientable_free(value);
    }
    throw UnsupportedSurface("unknown surface: " + text);
}

}  // namespace frontwave
