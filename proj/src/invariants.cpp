#include "frontwave/invariants.hpp"

#include <variant>

#include "frontwave/errors.hpp"

namespace frontwave {

std::string planar_invariant_to_string(PlanarInvariant inv) {
    switch (inv) {
        case PlanarInvariant::Stp: return "Stp";
        case PlanarInvariant::Jplus: return "Jplus";
        case PlanarInvariant::Jminus: return "Jminus";
    }
    return "Stp";
}

PlanarInvariant planar_invariant_from_string(const std::string& text) {
    if (text == "Stp") return PlanarInvariant::Stp;
    if (text == "Jplus") return PlanarInvariant::Jplus;
    if (text == "Jminus") return PlanarInvariant::Jminus;
    throw FrontwaveError("unknown planar invariant name: " + text);
}

std::string doubled_to_string(long long doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

long long planar_base_value(PlanarInvariant inv, const StandardFrontId& id) {
    if (id.omega < 0 || id.k < 0) {
        throw FrontwaveError("standard front labels must be nonnegative");
    }
    const long long w = id.omega;
    const long long k = id.k;
    switch (inv) {
        case PlanarInvariant::Stp: return w == 0 ? k : 2 * (w - 1) + k;
        case PlanarInvariant::Jplus: return w == 0 ? -2 * k : -4 * (w - 1) - 2 * k;
        case PlanarInvariant::Jminus: return w == 0 ? -2 : -6 * (w - 1);
    }
    throw FrontwaveError("unknown planar invariant");
}

long long planar_invariant(PlanarInvariant inv, const StandardFrontId& id,
                           const std::vector<CrossingEvent>& path) {
    long long total = planar_base_value(inv, id);
    for (const CrossingEvent& e : path) {
        long long unit = 0;
        switch (inv) {
            case PlanarInvariant::Stp:
                unit = (e.stratum == Stratum::T || e.stratum == Stratum::Pi) ? 1 : 0;
                break;
            case PlanarInvariant::Jplus:
                unit = e.stratum == Stratum::Kplus ? 2 : 0;
                break;
            case PlanarInvariant::Jminus:
                unit = e.stratum == Stratum::Kminus ? 2 : 0;
                break;
        }
        total += static_cast<long long>(e.sign) * e.weight * unit;
    }
    return total;
}

void add_term(ModuleVector& vec, const ClassKey& key, long long doubled) {
    if (key.family != ClassFamily::Kplus) {
        throw KeySpaceMismatch("module vectors are keyed on dangerous tangency classes");
    }
    if (!vec.terms.empty() && !(vec.terms.begin()->first.surface == key.surface)) {
        throw KeySpaceMismatch("module vector terms must share one surface");
    }
    if (doubled == 0) return;
    auto it = vec.terms.find(key);
    if (it == vec.terms.end()) {
        vec.terms.emplace(key, doubled);
        return;
    }
    it->second += doubled;
    if (it->second == 0) vec.terms.erase(it);
}

ModuleVector add(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector out = a;
    for (const auto& [key, coeff] : b.terms) add_term(out, key, coeff);
    return out;
}

ModuleVector scale(const ModuleVector& vec, long long factor) {
    ModuleVector out;
    if (factor == 0) return out;
    for (const auto& [key, coeff] : vec.terms) out.terms.emplace(key, coeff * factor);
    return out;
}

long long coefficient_sum(const ModuleVector& vec) {
    long long total = 0;
    for (const auto& [key, coeff] : vec.terms) total += coeff;
    return total;
}

std::string module_vector_to_string(const ModuleVector& vec) {
    if (vec.terms.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : vec.terms) {
        if (!out.empty()) out += "\n";
        out += doubled_to_string(coeff) + " * " + key_to_string(key);
    }
    return out;
}

ModuleVector iplus(const FrontCode& code) {
    if (!is_orientable(code.surface)) {
        throw UnsupportedSurface("the tangency class vector needs an orientable surface");
    }
    if (!validate(code).ok()) {
        throw BadFrontCode("the tangency class vector needs a valid code");
    }
    const GroupElem f = generator(Ambient::STF, code.surface, "f");
    const GroupElem fi = inverse(f);
    ModuleVector out;
    for (int d : double_point_ids(code)) {
        auto [a, b] = loop_pair_at(code, d);
        auto [p1, p2] = visit_positions(code, d);
        (void)p2;
        XType t = std::get<DoublePointEvent>(code.events[p1]).xtype;
        GroupElem r1 = a;
        GroupElem r2 = b;
        GroupElem l1 = a;
        GroupElem l2 = b;
        switch (t) {
            case XType::R1:
                l1 = compose(a, f);
                l2 = compose(b, fi);
                break;
            case XType::R2:
                r1 = compose(a, fi);
                r2 = compose(b, f);
                break;
            case XType::C1:
                l1 = compose(a, fi);
                l2 = compose(b, f);
                break;
            case XType::C2:
                r1 = compose(a, f);
                r2 = compose(b, fi);
                break;
        }
        add_term(out, kplus_key(r1, r2), 2);
        add_term(out, kplus_key(l1, l2), -2);
    }
    long long pos = 0;
    long long neg = 0;
    for (const Event& e : code.events) {
        if (const CuspEvent* c = std::get_if<CuspEvent>(&e)) {
            (c->rotation_sign > 0 ? pos : neg) += c->maslov_sign;
        }
    }
    if (pos != 0 || neg != 0) {
        const GroupElem l = global_class(code);
        add_term(out, kplus_key(l, identity(Ambient::STF, code.surface)), -(neg + pos));
        add_term(out, kplus_key(compose(l, f), fi), neg);
        add_term(out, kplus_key(compose(l, fi), f), pos);
    }
    return out;
}

ModuleVector iplus_delta(const GroupElem& s1, const GroupElem& s2) {
    if (s1.ambient != Ambient::STF || s2.ambient != Ambient::STF ||
        !(s1.surface == s2.surface)) {
        throw AmbientMismatch("tangency witnesses must share one circle bundle group");
    }
    if (!is_orientable(s1.surface)) {
        throw UnsupportedSurface("the crossing law lives over orientable surfaces");
    }
    const GroupElem f = generator(Ambient::STF, s1.surface, "f");
    const GroupElem fi = inverse(f);
    ModuleVector out;
    add_term(out, kplus_key(s1, s2), 4);
    add_term(out, kplus_key(compose(s1, f), compose(s2, fi)), -2);
    add_term(out, kplus_key(compose(s1, fi), compose(s2, f)), -2);
    return out;
}

}  // namespace frontwave
