#include "frontwave/conjugacy.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

namespace frontwave {

namespace {

long long pos_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

bool is_abelian_kind(SurfaceKind k) {
    return k == SurfaceKind::Plane || k == SurfaceKind::Sphere || k == SurfaceKind::Torus ||
           k == SurfaceKind::ProjectivePlane;
}

std::vector<GroupElem> conjugating_letters(Ambient ambient, const SurfaceSpec& surface) {
    std::vector<GroupElem> out;
    for (const std::string& name : base_letter_names(surface)) {
        GroupElem g = generator(ambient, surface, name);
        out.push_back(g);
        out.push_back(inverse(g));
    }
    return out;
}

struct ClosureResult {
    std::map<GroupElem, GroupElem> states;  // conjugate -> witness with witness*e*witness^-1 == conjugate
    bool complete = true;
};

// Breadth first closure of e under conjugation by single letters, keeping only
// conjugates whose base word does not grow. On surfaces where normal forms are
// canonical this visits every minimal cyclic representative of the class.
ClosureResult cyclic_closure(const GroupElem& e, size_t cap) {
    ClosureResult out;
    std::vector<GroupElem> letters = conjugating_letters(e.ambient, e.surface);
    std::deque<GroupElem> queue;
    out.states.emplace(e, identity(e.ambient, e.surface));
    queue.push_back(e);
    while (!queue.empty()) {
        GroupElem u = queue.front();
        queue.pop_front();
        GroupElem tu = out.states.at(u);
        for (const GroupElem& g : letters) {
            GroupElem child = compose(compose(inverse(g), u), g);
            if (child.word.size() > u.word.size()) continue;
            GroupElem tw = compose(inverse(g), tu);
            if (out.states.emplace(child, tw).second) {
                if (out.states.size() > cap) {
                    out.complete = false;
                    return out;
                }
                queue.push_back(child);
            }
        }
    }
    return out;
}

size_t closure_cap() {
    return static_cast<size_t>(2000) * static_cast<size_t>(search_radius(12));
}

CyclicNormal klein_cyclic_normal(const GroupElem& e) {
    KleinForm f = klein_form(e);
    CyclicNormal out;
    if (pos_mod(f.j, 2) == 0) {
        GroupElem d = generator(e.ambient, e.surface, "d");
        GroupElem flipped = compose(compose(d, e), inverse(d));
        if (flipped < e) {
            out.canon = flipped;
            out.witness = d;
        } else {
            out.canon = e;
            out.witness = identity(e.ambient, e.surface);
        }
        return out;
    }
    long long ti = pos_mod(f.i, 2);
    long long tk = pos_mod(f.k, 2);
    GroupElem w = klein_elem(e.ambient, (ti - f.i) / 2, 0, (f.k - tk) / 2);
    out.witness = w;
    out.canon = compose(compose(w, e), inverse(w));
    return out;
}

}  // namespace

int search_radius(int fallback) {
    const char* env = std::getenv("FRONTWAVE_SEARCH_RADIUS");
    if (!env) return fallback;
    try {
        int v = std::stoi(env);
        return v >= 1 ? v : fallback;
    } catch (const std::exception&) {
        return fallback;
    }
}

CyclicNormal cyclic_normal_form(const GroupElem& e) {
    CyclicNormal out;
    if (is_abelian_kind(e.surface.kind)) {
        out.canon = e;
        out.witness = identity(e.ambient, e.surface);
        return out;
    }
    if (e.surface.kind == SurfaceKind::KleinBottle) return klein_cyclic_normal(e);
    ClosureResult closure = cyclic_closure(e, closure_cap());
    const GroupElem* best = nullptr;
    for (const auto& [state, witness] : closure.states) {
        if (!best || state < *best) best = &state;
    }
    out.canon = *best;
    out.witness = closure.states.at(*best);
    out.certified = closure.complete;
    return out;
}

ConjugacyResult is_conjugate(const GroupElem& a, const GroupElem& b) {
    if (a.ambient != b.ambient || !(a.surface == b.surface)) {
        throw AmbientMismatch("is_conjugate requires matching ambient space and surface");
    }
    ConjugacyResult out;
    if (a == b) {
        out.verdict = ConjVerdict::Yes;
        out.witness = identity(a.ambient, a.surface);
        return out;
    }
    if (is_abelian_kind(a.surface.kind)) {
        out.verdict = ConjVerdict::No;
        return out;
    }
    CyclicNormal na = cyclic_normal_form(a);
    CyclicNormal nb = cyclic_normal_form(b);
    if (na.canon == nb.canon) {
        out.verdict = ConjVerdict::Yes;
        out.witness = compose(inverse(nb.witness), na.witness);
        return out;
    }
    if (na.certified && nb.certified) {
        out.verdict = ConjVerdict::No;
        return out;
    }
    out.verdict = ConjVerdict::Inconclusive;
    out.radius = static_cast<long long>(closure_cap());
    return out;
}

std::optional<long long> fiber_shift_index(const GroupElem& a, const GroupElem& b) {
    if (a.ambient != Ambient::STF || b.ambient != Ambient::STF || !(a.surface == b.surface)) {
        throw AmbientMismatch("fiber_shift_index expects two STF elements over one surface");
    }
    if (!is_orientable(a.surface) || a.surface.kind == SurfaceKind::Sphere) {
        throw UnsupportedSurface("fiber_shift_index needs an orientable surface with infinite fiber class");
    }
    ConjugacyResult base = is_conjugate(base_project(a), base_project(b));
    if (base.verdict == ConjVerdict::No) return std::nullopt;
    if (base.verdict == ConjVerdict::Inconclusive) {
        throw FrontwaveError("fiber_shift_index base conjugacy search was inconclusive");
    }
    GroupElem t = *base.witness;
    GroupElem lift = identity(Ambient::STF, a.surface);
    lift.word = t.word;
    lift = reduce(lift);
    GroupElem aligned = compose(compose(lift, a), inverse(lift));
    if (!(base_project(aligned) == base_project(b))) {
        throw FrontwaveError("fiber_shift_index alignment failed");
    }
    return fiber_exp(b) - fiber_exp(aligned);
}

RootResult primitive_root(const GroupElem& a) {
    if (a.ambient != Ambient::BaseF) throw AmbientMismatch("primitive_root expects a base group element");
    switch (a.surface.kind) {
        case SurfaceKind::Sphere:
        case SurfaceKind::ProjectivePlane:
        case SurfaceKind::KleinBottle:
            throw UnsupportedSurface("primitive_root is not available on this surface");
        default:
            break;
    }
    if (is_identity(a)) throw TrivialElement("primitive_root of the identity is undefined");
    RootResult out;
    if (a.surface.kind == SurfaceKind::Torus) {
        long long na = 0, nb = 0;
        for (Gen g : a.word) {
            if (g == 1) ++na;
            if (g == -1) --na;
            if (g == 2) ++nb;
            if (g == -2) --nb;
        }
        long long d = std::gcd(std::llabs(na), std::llabs(nb));
        GroupElem root = identity(Ambient::BaseF, a.surface);
        for (long long i = 0; i < std::llabs(na / d); ++i) root.word.push_back(na > 0 ? 1 : -1);
        for (long long i = 0; i < std::llabs(nb / d); ++i) root.word.push_back(nb > 0 ? 2 : -2);
        out.root = reduce(root);
        out.exponent = d;
        return out;
    }
    if (a.surface.kind == SurfaceKind::OrientableFree) {
        std::vector<Gen> w = a.word;
        GroupElem s = identity(Ambient::BaseF, a.surface);
        while (w.size() >= 2 && w.front() == static_cast<Gen>(-w.back())) {
            GroupElem x = identity(Ambient::BaseF, a.surface);
            x.word.push_back(w.front());
            s = compose(s, x);
            w.erase(w.begin());
            w.pop_back();
        }
        size_t n = w.size();
        size_t period = n;
        for (size_t p = 1; p < n; ++p) {
            if (n % p != 0) continue;
            bool ok = true;
            for (size_t i = p; i < n && ok; ++i) ok = w[i] == w[i % p];
            if (ok) {
                period = p;
                break;
            }
        }
        GroupElem core = identity(Ambient::BaseF, a.surface);
        core.word.assign(w.begin(), w.begin() + static_cast<long>(period));
        out.root = compose(compose(s, core), inverse(s));
        out.exponent = static_cast<long long>(n / period);
        return out;
    }
    // closed genus >= 2: inspect periodic spellings across the cyclic closure
    ClosureResult closure = cyclic_closure(a, closure_cap());
    out.root = a;
    out.exponent = 1;
    for (const auto& [state, witness] : closure.states) {
        const std::vector<Gen>& w = state.word;
        size_t n = w.size();
        for (size_t p = 1; p < n; ++p) {
            if (n % p != 0) continue;
            long long m = static_cast<long long>(n / p);
            if (m <= out.exponent) continue;
            bool periodic = true;
            for (size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i % p];
            if (!periodic) continue;
            GroupElem core = identity(Ambient::BaseF, a.surface);
            core.word.assign(w.begin(), w.begin() + static_cast<long>(p));
            core = reduce(core);
            GroupElem candidate = compose(compose(inverse(witness), core), witness);
            if (power(candidate, m) == a) {
                out.root = candidate;
                out.exponent = m;
            }
        }
    }
    return out;
}

GroupElem centralizer_root(const GroupElem& e) {
    if (base_trivial(e)) return identity(e.ambient, e.surface);
    if (!is_orientable(e.surface)) throw UnsupportedSurface("centralizer_root needs an orientable surface");
    RootResult base = primitive_root(base_project(e));
    GroupElem lift = identity(e.ambient, e.surface);
    lift.word = base.root.word;
    lift = reduce(lift);
    if (!(compose(compose(lift, e), inverse(lift)) == e)) {
        throw FrontwaveError("centralizer_root lift failed to centralize");
    }
    return lift;
}

std::string stf_group_descriptor(const SurfaceSpec& surface) {
    switch (surface.kind) {
        case SurfaceKind::Plane: return "Z";
        case SurfaceKind::Sphere: return "Z_2";
        case SurfaceKind::Torus: return "Z^3";
        case SurfaceKind::OrientableClosed:
            return "pi1(STF[genus=" + std::to_string(surface.genus) + "])";
        case SurfaceKind::OrientableFree:
            return "F_" + std::to_string(surface.rank) + " x Z";
        case SurfaceKind::ProjectivePlane: return "Z_4";
        case SurfaceKind::KleinBottle: return "pi1(STK)";
    }
    throw UnsupportedSurface("unknown surface kind");
}

CentralizerInfo centralizer_descriptor(const GroupElem& l) {
    if (l.ambient != Ambient::STF) throw AmbientMismatch("centralizer_descriptor expects an STF element");
    CentralizerInfo out;
    const SurfaceSpec& s = l.surface;
    if (is_abelian_kind(s.kind)) {
        out.whole_group = true;
        out.shape = stf_group_descriptor(s);
        return out;
    }
    if (s.kind == SurfaceKind::KleinBottle) {
        KleinForm f = klein_form(l);
        if (pos_mod(f.j, 2) == 1) {
            out.shape = "Z";
            out.generators.push_back(klein_elem(Ambient::STF, f.i, 1, f.k));
            return out;
        }
        if (f.i == 0 && f.k == 0) {
            out.whole_group = true;
            out.shape = stf_group_descriptor(s);
            return out;
        }
        out.shape = "Z^3";
        out.generators.push_back(generator(Ambient::STF, s, "c"));
        out.generators.push_back(power(generator(Ambient::STF, s, "d"), 2));
        out.generators.push_back(generator(Ambient::STF, s, "f"));
        return out;
    }
    if (base_trivial(l)) {
        out.whole_group = true;
        out.shape = stf_group_descriptor(s);
        return out;
    }
    out.shape = "Z^2";
    out.generators.push_back(centralizer_root(l));
    out.generators.push_back(generator(Ambient::STF, s, "f"));
    return out;
}

}  // namespace frontwave
