#include "frontwave/homotopy.hpp"

#include <algorithm>

#include "frontwave/errors.hpp"

namespace frontwave {

bool atom_less(const DescriptorAtom& a, const DescriptorAtom& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.degree < b.degree;
}

GroupDescriptor descriptor_zn(int n) {
    if (n < 0) throw FrontwaveError("free rank cannot be negative");
    GroupDescriptor d;
    d.free_rank = n;
    return d;
}

GroupDescriptor descriptor_atom(AtomKind kind, int degree) {
    GroupDescriptor d;
    d.atoms.push_back({kind, kind == AtomKind::SpherePi ? degree : 0});
    return d;
}

GroupDescriptor direct_sum(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (a.index_two || b.index_two)
        throw FrontwaveError("parity subgroup wrappers do not enter sums");
    GroupDescriptor d;
    d.free_rank = a.free_rank + b.free_rank;
    d.atoms = a.atoms;
    d.atoms.insert(d.atoms.end(), b.atoms.begin(), b.atoms.end());
    std::sort(d.atoms.begin(), d.atoms.end(), atom_less);
    return d;
}

GroupDescriptor index_two_subgroup(const GroupDescriptor& inner) {
    if (inner.index_two) throw FrontwaveError("parity subgroup wrappers do not nest");
    GroupDescriptor d = inner;
    d.index_two = true;
    return d;
}

namespace {

std::string atom_to_string(const DescriptorAtom& a) {
    switch (a.kind) {
        case AtomKind::Z2: return "Z_2";
        case AtomKind::Z4: return "Z_4";
        case AtomKind::SpherePi: return "pi_" + std::to_string(a.degree) + "(S^2)";
        case AtomKind::Pi1STF: return "pi1STF";
        case AtomKind::Pi1PresSTF: return "pi1presSTF";
        case AtomKind::Pi1STK: return "pi1STK";
        case AtomKind::Pi1K: return "pi1K";
    }
    throw FrontwaveError("unknown descriptor atom");
}

}  // namespace

std::string descriptor_to_string(const GroupDescriptor& d) {
    std::vector<std::string> parts;
    if (d.free_rank == 1) parts.push_back("Z");
    if (d.free_rank > 1) parts.push_back("Z^" + std::to_string(d.free_rank));
    for (const DescriptorAtom& a : d.atoms) parts.push_back(atom_to_string(a));
    std::string body;
    if (parts.empty()) {
        body = "0";
    } else {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) body += " (+) ";
            body += parts[i];
        }
    }
    return d.index_two ? "Idx2(" + body + ")" : body;
}

FrontClassData class_data_from_lift(const GroupElem& lift) {
    FrontClassData d;
    d.lift = lift;
    return d;
}

bool klein_even_reversing_power(const GroupElem& l) {
    if (l.surface.kind != SurfaceKind::KleinBottle)
        throw UnsupportedSurface("even reversing powers live over the Klein bottle");
    if (l.ambient != Ambient::STF)
        throw AmbientMismatch("even reversing powers live in the circle bundle group");
    KleinForm kf = klein_form(l);
    return kf.i == 0 && kf.k == 0 && kf.j % 2 == 0;
}

GroupDescriptor pi1_front_space(const SurfaceSpec& surface, const FrontClassData& front) {
    std::optional<bool> bt = front.base_trivial;
    std::optional<bool> rev = front.reversing;
    std::optional<bool> erp = front.even_reversing_power;

    if (front.lift) {
        const GroupElem& l = *front.lift;
        if (l.ambient != Ambient::STF)
            throw AmbientMismatch("class data lifts live in the circle bundle group");
        if (!(l.surface == surface))
            throw AmbientMismatch("class data lift lives over a different surface");
        bool c_bt = base_trivial(l);
        bool c_rev = orientation_parity(l) == -1;
        if (bt && *bt != c_bt)
            throw ClassDataMismatch("asserted base triviality disagrees with the lift");
        if (rev && *rev != c_rev)
            throw ClassDataMismatch("asserted orientation parity disagrees with the lift");
        bt = c_bt;
        rev = c_rev;
        if (surface.kind == SurfaceKind::KleinBottle) {
            bool c_erp = klein_even_reversing_power(l);
            if (erp && *erp != c_erp)
                throw ClassDataMismatch("asserted even reversing power flag disagrees with the lift");
            erp = c_erp;
        }
    }

    if (rev && *rev && is_orientable(surface))
        throw ClassDataMismatch("orientable surfaces have no reversing classes");
    if (bt && *bt && rev && *rev)
        throw ClassDataMismatch("a trivial base class cannot reverse orientation");

    switch (surface.kind) {
        case SurfaceKind::Sphere:
            if (bt && !*bt) throw ClassDataMismatch("the sphere has no nontrivial base classes");
            return direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Z2));
        case SurfaceKind::Plane:
            if (bt && !*bt) throw ClassDataMismatch("the plane has no nontrivial base classes");
            return descriptor_zn(2);
        case SurfaceKind::Torus:
            return descriptor_zn(4);
        case SurfaceKind::OrientableClosed:
            if (!bt) throw ClassDataMismatch("closed surface dispatch needs base triviality data");
            return *bt ? direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1STF))
                       : descriptor_zn(3);
        case SurfaceKind::OrientableFree:
            if (surface.rank == 1) return descriptor_zn(3);
            if (!bt) throw ClassDataMismatch("free surface dispatch needs base triviality data");
            return *bt ? direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1STF))
                       : descriptor_zn(3);
        case SurfaceKind::ProjectivePlane:
            return direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Z2));
        case SurfaceKind::KleinBottle:
            if (!rev) throw ClassDataMismatch("Klein bottle dispatch needs orientation parity data");
            if (*rev) {
                if (erp && *erp)
                    throw ClassDataMismatch("a reversing class is never an even power");
                return descriptor_zn(2);
            }
            if (!erp)
                throw ClassDataMismatch(
                    "preserving Klein bottle classes need the even reversing power flag");
            return *erp ? direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1STK))
                        : descriptor_zn(4);
    }
    throw UnsupportedSurface("unknown surface kind");
}

GroupDescriptor pi_n_front_space(const SurfaceSpec& surface, int n) {
    if (n < 2) throw FrontwaveError("higher homotopy descriptors start at degree 2");
    bool spherical =
        surface.kind == SurfaceKind::Sphere || surface.kind == SurfaceKind::ProjectivePlane;
    if (!spherical) return descriptor_zn(0);
    if (n == 2) return descriptor_zn(1);
    return direct_sum(descriptor_atom(AtomKind::SpherePi, n),
                      descriptor_atom(AtomKind::SpherePi, n + 1));
}

GroupDescriptor pi1_cstf_descriptor(const SurfaceSpec& surface) {
    GroupDescriptor stf;
    switch (surface.kind) {
        case SurfaceKind::Plane: stf = descriptor_zn(1); break;
        case SurfaceKind::Sphere: stf = descriptor_atom(AtomKind::Z2); break;
        case SurfaceKind::Torus: stf = descriptor_zn(3); break;
        case SurfaceKind::OrientableClosed: stf = descriptor_atom(AtomKind::Pi1STF); break;
        case SurfaceKind::OrientableFree:
            stf = surface.rank == 1 ? descriptor_zn(2) : descriptor_atom(AtomKind::Pi1STF);
            break;
        case SurfaceKind::ProjectivePlane: stf = descriptor_atom(AtomKind::Z4); break;
        case SurfaceKind::KleinBottle: stf = descriptor_atom(AtomKind::Pi1STK); break;
    }
    return index_two_subgroup(direct_sum(descriptor_zn(1), stf));
}

std::string cstf_parity_rule() {
    return "even cover classes pair with orientation preserving classes, odd cover classes "
           "with reversing ones";
}

GroupDescriptor pi1_front_space_lookup(NonorientableClassCase c) {
    switch (c) {
        case NonorientableClassCase::ReversingBase:
            return descriptor_zn(2);
        case NonorientableClassCase::EvenReversingPower:
            return direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1K));
        case NonorientableClassCase::PreservingOther:
            return descriptor_zn(3);
        case NonorientableClassCase::TrivialBaseNontrivialLift:
            return direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1PresSTF));
        case NonorientableClassCase::TrivialBaseTrivialLift:
            return index_two_subgroup(direct_sum(descriptor_zn(1), descriptor_atom(AtomKind::Pi1STF)));
    }
    throw FrontwaveError("unknown class case");
}

}  // namespace frontwave
