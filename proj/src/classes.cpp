#include "frontwave/classes.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace frontwave {

namespace {

long long pos_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    long long r = a % b;
    return r < 0 ? q - 1 : q;
}

GroupElem conj_by(const GroupElem& e, const GroupElem& g) {
    return compose(compose(g, e), inverse(g));
}

std::vector<GroupElem> conj_tuple(const std::vector<GroupElem>& es, const GroupElem& g) {
    std::vector<GroupElem> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(conj_by(e, g));
    return out;
}

int count_base_nontrivial(const std::vector<GroupElem>& es) {
    int n = 0;
    for (const auto& e : es) {
        if (!base_trivial(e)) ++n;
    }
    return n;
}

bool tuple_less(const std::vector<GroupElem>& a, int ora, const std::vector<GroupElem>& b, int orb) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return elem_less(a[i], b[i]);
    }
    return ora < orb;
}

std::vector<std::vector<size_t>> family_perms(ClassFamily fam, const std::vector<GroupElem>& payload) {
    switch (fam) {
        case ClassFamily::Kplus:
        case ClassFamily::Kminus:
            return {{0, 1}, {1, 0}};
        case ClassFamily::T:
            return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        case ClassFamily::Pi: {
            std::vector<std::vector<size_t>> out = {{0, 1}};
            if (base_trivial(payload[0]) || base_trivial(payload[1])) out.push_back({1, 0});
            return out;
        }
    }
    return {};
}

bool family_has_twists(ClassFamily fam) {
    return fam == ClassFamily::T || fam == ClassFamily::Pi;
}

void twist_normalize(ClassFamily fam, std::vector<GroupElem>& es) {
    if (!family_has_twists(fam)) return;
    GroupElem f = generator(es[0].ambient, es[0].surface, "f");
    if (fam == ClassFamily::T) {
        long long k1 = fiber_exp(es[0]);
        long long k2 = fiber_exp(es[1]);
        es[0] = compose(es[0], power(f, -k1));
        es[1] = compose(es[1], power(f, -k2));
        es[2] = compose(es[2], power(f, k1 + k2));
    } else {
        long long k1 = fiber_exp(es[0]);
        es[0] = compose(es[0], power(f, -k1));
        es[1] = compose(es[1], power(f, k1));
    }
}

size_t max_word_len(const std::vector<GroupElem>& es) {
    size_t m = 0;
    for (const auto& e : es) m = std::max(m, e.word.size());
    return m;
}

struct CanonOut {
    std::vector<GroupElem> entries;
    int or_tag = -1;
    bool certified = true;
};

CanonOut canonicalize_orientable(ClassFamily fam, const std::vector<GroupElem>& payload, int or_in) {
    const SurfaceSpec s = payload[0].surface;
    bool conj_trivial = s.kind == SurfaceKind::Plane || s.kind == SurfaceKind::Sphere ||
                        s.kind == SurfaceKind::Torus;
    int nontriv = count_base_nontrivial(payload);
    CanonOut out;
    bool have_best = false;
    std::vector<GroupElem> best;
    int best_or = -1;
    for (const auto& perm : family_perms(fam, payload)) {
        std::vector<GroupElem> tuple;
        tuple.reserve(payload.size());
        for (size_t idx : perm) tuple.push_back(payload[idx]);
        std::vector<std::vector<GroupElem>> reps;
        if (conj_trivial || nontriv == 0) {
            reps.push_back(tuple);
        } else {
            size_t anchor = 0;
            while (base_trivial(tuple[anchor])) ++anchor;
            CyclicNormal cn = cyclic_normal_form(tuple[anchor]);
            if (!cn.certified) out.certified = false;
            std::vector<GroupElem> based = conj_tuple(tuple, cn.witness);
            if (nontriv == 1) {
                reps.push_back(based);
            } else {
                GroupElem rho = centralizer_root(based[anchor]);
                long long window = s.kind == SurfaceKind::OrientableFree
                                       ? static_cast<long long>(max_word_len(based)) + 2
                                       : search_radius(16);
                for (long long n = -window; n <= window; ++n) {
                    reps.push_back(conj_tuple(based, power(rho, n)));
                }
            }
        }
        for (auto& rep : reps) {
            twist_normalize(fam, rep);
            if (!have_best || tuple_less(rep, or_in, best, best_or)) {
                best = rep;
                best_or = or_in;
                have_best = true;
            }
        }
    }
    if (s.kind == SurfaceKind::OrientableClosed && nontriv >= 2) out.certified = false;
    out.entries = best;
    out.or_tag = best_or;
    return out;
}

// Reduces x in place modulo the integer column span of cols.
void lattice_reduce(std::vector<long long>& x, std::vector<std::vector<long long>> cols) {
    size_t dim = x.size();
    std::vector<std::vector<long long>> pivots;
    for (size_t row = 0; row < dim; ++row) {
        while (true) {
            int i1 = -1, i2 = -1;
            for (size_t c = 0; c < cols.size(); ++c) {
                if (cols[c][row] != 0) {
                    if (i1 < 0) {
                        i1 = static_cast<int>(c);
                    } else {
                        i2 = static_cast<int>(c);
                        break;
                    }
                }
            }
            if (i2 < 0) break;
            if (std::llabs(cols[i1][row]) > std::llabs(cols[i2][row])) std::swap(i1, i2);
            long long q = cols[i2][row] / cols[i1][row];
            for (size_t r = 0; r < dim; ++r) cols[i2][r] -= q * cols[i1][r];
        }
        for (size_t c = 0; c < cols.size(); ++c) {
            if (cols[c][row] != 0) {
                std::vector<long long> p = cols[c];
                if (p[row] < 0) {
                    for (auto& v : p) v = -v;
                }
                pivots.push_back(std::move(p));
                cols.erase(cols.begin() + static_cast<long>(c));
                break;
            }
        }
    }
    for (const auto& p : pivots) {
        size_t row = 0;
        while (p[row] == 0) ++row;
        long long q = floor_div(x[row], p[row]);
        if (q == 0) continue;
        for (size_t r = row; r < dim; ++r) x[r] -= q * p[r];
    }
}

CanonOut canonicalize_klein(ClassFamily fam, const std::vector<GroupElem>& payload, int or_in) {
    size_t n = payload.size();
    Ambient amb = payload[0].ambient;
    std::vector<KleinForm> forms;
    for (const auto& e : payload) forms.push_back(klein_form(e));
    CanonOut out;
    bool have_best = false;
    for (const auto& perm : family_perms(fam, payload)) {
        for (int b = 0; b <= 1; ++b) {
            std::vector<KleinForm> fs;
            for (size_t idx : perm) fs.push_back(forms[idx]);
            int orv = or_in;
            if (fam == ClassFamily::Pi && b == 1 && orv >= 0) orv ^= 1;
            std::vector<long long> x(2 * n, 0);
            bool any_odd = false;
            for (size_t m = 0; m < n; ++m) {
                long long i = fs[m].i, k = fs[m].k;
                if (b) {
                    i = -i;
                    k = -k;
                }
                x[m] = i;
                x[n + m] = k;
                if (pos_mod(fs[m].j, 2) == 1) any_odd = true;
            }
            std::vector<std::vector<long long>> cols;
            if (any_odd) {
                std::vector<long long> ua(2 * n, 0), ug(2 * n, 0);
                for (size_t m = 0; m < n; ++m) {
                    if (pos_mod(fs[m].j, 2) == 1) {
                        ua[m] = 2;
                        ug[n + m] = 2;
                    }
                }
                cols.push_back(ua);
                cols.push_back(ug);
            }
            if (family_has_twists(fam)) {
                for (size_t m = 0; m < n; ++m) {
                    std::vector<long long> tw(2 * n, 0);
                    tw[n + m] += pos_mod(fs[m].j, 2) == 1 ? -1 : 1;
                    tw[n + (m + n - 1) % n] -= 1;
                    cols.push_back(tw);
                }
            }
            lattice_reduce(x, cols);
            std::vector<GroupElem> rep;
            for (size_t m = 0; m < n; ++m) rep.push_back(klein_elem(amb, x[m], fs[m].j, x[n + m]));
            if (!have_best || tuple_less(rep, orv, out.entries, out.or_tag)) {
                out.entries = rep;
                out.or_tag = orv;
                have_best = true;
            }
        }
    }
    return out;
}

CanonOut canonicalize_rp2(ClassFamily fam, const std::vector<GroupElem>& payload, int or_in) {
    size_t n = payload.size();
    Ambient amb = payload[0].ambient;
    SurfaceSpec s = payload[0].surface;
    GroupElem c = generator(amb, s, "c");
    std::vector<long long> vals;
    for (const auto& e : payload) {
        long long v = (e.word.empty() ? 0 : 1) + 2 * fiber_exp(e);
        vals.push_back(pos_mod(v, 4));
    }
    std::vector<int> orflips = fam == ClassFamily::Pi ? std::vector<int>{0, 1} : std::vector<int>{0};
    size_t twist_combos = family_has_twists(fam) ? (static_cast<size_t>(1) << n) : 1;
    CanonOut out;
    bool have_best = false;
    for (const auto& perm : family_perms(fam, payload)) {
        for (int of : orflips) {
            int orv = or_in;
            if (of == 1 && orv >= 0) orv ^= 1;
            for (size_t mask = 0; mask < twist_combos; ++mask) {
                std::vector<GroupElem> rep;
                for (size_t m = 0; m < n; ++m) {
                    long long sm = (mask >> m) & 1;
                    long long sn = (mask >> ((m + 1) % n)) & 1;
                    long long v = pos_mod(vals[perm[m]] + 2 * (sm - sn), 4);
                    rep.push_back(power(c, v));
                }
                if (!have_best || tuple_less(rep, orv, out.entries, out.or_tag)) {
                    out.entries = rep;
                    out.or_tag = orv;
                    have_best = true;
                }
            }
        }
    }
    return out;
}

CanonOut canonicalize(ClassFamily fam, const std::vector<GroupElem>& payload, int or_in) {
    switch (payload[0].surface.kind) {
        case SurfaceKind::KleinBottle: return canonicalize_klein(fam, payload, or_in);
        case SurfaceKind::ProjectivePlane: return canonicalize_rp2(fam, payload, or_in);
        default: return canonicalize_orientable(fam, payload, or_in);
    }
}

void check_entries(const std::vector<GroupElem>& es, Ambient expected, const char* what) {
    for (const auto& e : es) {
        if (e.ambient != expected) throw AmbientMismatch(std::string(what) + ": wrong ambient space");
        if (!(e.surface == es[0].surface)) throw AmbientMismatch(std::string(what) + ": mixed surfaces");
    }
}

void check_refined_parity(const std::vector<GroupElem>& es, const std::optional<long long>& maslov) {
    if (!maslov) return;
    GroupElem prod = es[0];
    for (size_t i = 1; i < es.size(); ++i) prod = compose(prod, es[i]);
    long long bit = orientation_parity(prod) == -1 ? 1 : 0;
    if (pos_mod(*maslov, 2) != bit) {
        throw ParityViolation("Maslov index parity disagrees with the loop reversal parity");
    }
}

ClassKey make_key(ClassFamily fam, std::vector<GroupElem> payload, std::optional<int> or_tag,
                  std::optional<long long> maslov) {
    check_refined_parity(payload, maslov);
    CanonOut canon = canonicalize(fam, payload, or_tag ? *or_tag : -1);
    ClassKey k;
    k.family = fam;
    k.surface = payload[0].surface;
    k.payload = canon.entries;
    k.maslov = maslov;
    if (or_tag) k.or_tag = canon.or_tag;
    k.certified = canon.certified;
    return k;
}

GroupElem lift_to(const GroupElem& base, Ambient amb) {
    GroupElem l = identity(amb, base.surface);
    l.word = base.word;
    return reduce(l);
}

// Conjugation-only canonical representative of an ordered pair.
std::pair<GroupElem, GroupElem> ordered_canon_pair(const GroupElem& a, const GroupElem& b) {
    SurfaceKind kind = a.surface.kind;
    if (kind == SurfaceKind::Plane || kind == SurfaceKind::Sphere || kind == SurfaceKind::Torus ||
        kind == SurfaceKind::ProjectivePlane) {
        return {a, b};
    }
    if (base_trivial(a) && base_trivial(b)) return {a, b};
    size_t anchor = base_trivial(a) ? 1 : 0;
    CyclicNormal cn = cyclic_normal_form(anchor == 0 ? a : b);
    GroupElem v0 = conj_by(a, cn.witness);
    GroupElem v1 = conj_by(b, cn.witness);
    const GroupElem& other = anchor == 0 ? v1 : v0;
    if (base_trivial(other)) return {v0, v1};
    GroupElem rho = centralizer_root(anchor == 0 ? v0 : v1);
    long long window = search_radius(16);
    std::pair<GroupElem, GroupElem> best = {v0, v1};
    for (long long n = -window; n <= window; ++n) {
        GroupElem g = power(rho, n);
        std::pair<GroupElem, GroupElem> cand = {conj_by(v0, g), conj_by(v1, g)};
        if (elem_less(cand.first, best.first) ||
            (cand.first == best.first && elem_less(cand.second, best.second))) {
            best = cand;
        }
    }
    return best;
}

struct FrameAlign {
    bool ok = false;
    long long p = 0;
    long long q = 0;
};

// Conjugates the STF pair (u0, u1) so that its base parts equal the BaseF frame
// (B0, B1) exactly, and reads off the residual fiber exponents.
FrameAlign align_to_frame(const GroupElem& u0, const GroupElem& u1, const GroupElem& B0,
                          const GroupElem& B1) {
    FrameAlign out;
    if (is_identity(B0) && is_identity(B1)) {
        if (!base_trivial(u0) || !base_trivial(u1)) return out;
        out.ok = true;
        out.p = fiber_exp(u0);
        out.q = fiber_exp(u1);
        return out;
    }
    size_t anchor = is_identity(B0) ? 1 : 0;
    const GroupElem& ua = anchor == 0 ? u0 : u1;
    const GroupElem& Ba = anchor == 0 ? B0 : B1;
    ConjugacyResult r = is_conjugate(base_project(ua), Ba);
    if (r.verdict != ConjVerdict::Yes) return out;
    GroupElem t = lift_to(*r.witness, u0.ambient);
    GroupElem v0 = conj_by(u0, t);
    GroupElem v1 = conj_by(u1, t);
    const GroupElem& Bo = anchor == 0 ? B1 : B0;
    const GroupElem& vo = anchor == 0 ? v1 : v0;
    if (is_identity(Bo)) {
        if (!base_trivial(vo)) return out;
        out.ok = true;
        out.p = fiber_exp(v0);
        out.q = fiber_exp(v1);
        return out;
    }
    GroupElem rho = centralizer_root(lift_to(Ba, u0.ambient));
    long long window = search_radius(16);
    for (long long n = -window; n <= window; ++n) {
        GroupElem g = power(rho, n);
        GroupElem w0 = conj_by(v0, g);
        GroupElem w1 = conj_by(v1, g);
        if (base_project(w0) == B0 && base_project(w1) == B1) {
            out.ok = true;
            out.p = fiber_exp(w0);
            out.q = fiber_exp(w1);
            return out;
        }
    }
    return out;
}

}  // namespace

bool key_less(const ClassKey& a, const ClassKey& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.surface.kind != b.surface.kind) return a.surface.kind < b.surface.kind;
    if (a.surface.genus != b.surface.genus) return a.surface.genus < b.surface.genus;
    if (a.surface.rank != b.surface.rank) return a.surface.rank < b.surface.rank;
    if (a.payload.size() != b.payload.size()) return a.payload.size() < b.payload.size();
    for (size_t i = 0; i < a.payload.size(); ++i) {
        if (!(a.payload[i] == b.payload[i])) return elem_less(a.payload[i], b.payload[i]);
    }
    long long oa = a.or_tag ? *a.or_tag : -1;
    long long ob = b.or_tag ? *b.or_tag : -1;
    if (oa != ob) return oa < ob;
    long long ma = a.maslov ? *a.maslov : std::numeric_limits<long long>::min();
    long long mb = b.maslov ? *b.maslov : std::numeric_limits<long long>::min();
    if (ma != mb) return ma < mb;
    return a.certified < b.certified;
}

ClassKey kplus_key(const GroupElem& d1, const GroupElem& d2, std::optional<long long> maslov) {
    std::vector<GroupElem> es = {d1, d2};
    check_entries(es, Ambient::STF, "kplus_key");
    return make_key(ClassFamily::Kplus, std::move(es), std::nullopt, maslov);
}

ClassKey kminus_key(const GroupElem& p1, const GroupElem& p2, std::optional<long long> maslov) {
    std::vector<GroupElem> es = {p1, p2};
    check_entries(es, Ambient::PTF, "kminus_key");
    if (!ptf_minus(p1) || !ptf_minus(p2)) {
        throw WrongParity("kminus_key entries must lie in the odd half fiber part");
    }
    return make_key(ClassFamily::Kminus, std::move(es), std::nullopt, maslov);
}

ClassKey t_key(const GroupElem& d1, const GroupElem& d2, const GroupElem& d3,
               std::optional<long long> maslov) {
    std::vector<GroupElem> es = {d1, d2, d3};
    check_entries(es, Ambient::STF, "t_key");
    return make_key(ClassFamily::T, std::move(es), std::nullopt, maslov);
}

ClassKey pi_key(const GroupElem& d1, const GroupElem& d2, int or_tag, std::optional<long long> maslov) {
    if (or_tag != 0 && or_tag != 1) throw FrontwaveError("pi_key or tag must be 0 or 1");
    std::vector<GroupElem> es = {d1, d2};
    check_entries(es, Ambient::STF, "pi_key");
    return make_key(ClassFamily::Pi, std::move(es), or_tag, maslov);
}

ClassKey g_map(const ClassKey& pi) {
    if (pi.family != ClassFamily::Pi) throw KeySpaceMismatch("g_map expects a cusp crossing class");
    return t_key(pi.payload[0], pi.payload[1], identity(pi.payload[0].ambient, pi.surface), pi.maslov);
}

std::optional<long long> order_index(const ClassKey& k1, const ClassKey& k2) {
    if (k1.family != ClassFamily::Kplus || k2.family != ClassFamily::Kplus) {
        throw KeySpaceMismatch("order_index expects two dangerous tangency classes");
    }
    if (!(k1.surface == k2.surface)) {
        throw KeySpaceMismatch("order_index expects classes over one surface");
    }
    const SurfaceSpec s = k1.surface;
    if (!is_orientable(s) || s.kind == SurfaceKind::Sphere) {
        throw UnsupportedSurface("order_index needs an orientable surface with infinite fiber class");
    }

    std::vector<GroupElem> bx = {base_project(k1.payload[0]), base_project(k1.payload[1])};
    std::vector<GroupElem> by = {base_project(k2.payload[0]), base_project(k2.payload[1])};
    CanonOut cbx = canonicalize(ClassFamily::Kplus, bx, -1);
    CanonOut cby = canonicalize(ClassFamily::Kplus, by, -1);
    if (!(cbx.entries[0] == cby.entries[0]) || !(cbx.entries[1] == cby.entries[1])) return std::nullopt;

    auto frame_pair = ordered_canon_pair(bx[0], bx[1]);
    auto frame_swapped = ordered_canon_pair(bx[1], bx[0]);
    const GroupElem& B0 = frame_pair.first;
    const GroupElem& B1 = frame_pair.second;
    bool symmetric = frame_pair.first == frame_swapped.first && frame_pair.second == frame_swapped.second;

    auto align_key = [&](const ClassKey& k) -> FrameAlign {
        FrameAlign direct = align_to_frame(k.payload[0], k.payload[1], B0, B1);
        if (direct.ok) return direct;
        return align_to_frame(k.payload[1], k.payload[0], B0, B1);
    };
    FrameAlign a1 = align_key(k1);
    FrameAlign a2 = align_key(k2);
    if (!a1.ok || !a2.ok) return std::nullopt;

    if (symmetric) {
        long long d1 = 0;
        if (!is_identity(B0) || !is_identity(B1)) {
            GroupElem b0l = lift_to(B0, Ambient::STF);
            GroupElem b1l = lift_to(B1, Ambient::STF);
            ConjugacyResult r = is_conjugate(B0, B1);
            if (r.verdict != ConjVerdict::Yes) return std::nullopt;
            GroupElem h = lift_to(*r.witness, Ambient::STF);
            GroupElem rho = centralizer_root(b1l);
            long long window = search_radius(16);
            bool found = false;
            GroupElem g0 = h;
            for (long long n = -window; n <= window && !found; ++n) {
                GroupElem g = compose(power(rho, n), h);
                if (base_project(conj_by(b1l, g)) == B0) {
                    g0 = g;
                    found = true;
                }
            }
            if (!found) return std::nullopt;
            d1 = fiber_exp(conj_by(b0l, g0));
        }
        long long raw1 = std::llabs(a1.p - a1.q + d1);
        long long raw2 = std::llabs(a2.p - a2.q + d1);
        return raw2 / 2 - raw1 / 2;
    }
    return a2.p - a1.p;
}

namespace {

std::string family_token(ClassFamily fam) {
    switch (fam) {
        case ClassFamily::Kplus: return "K+";
        case ClassFamily::Kminus: return "K-";
        case ClassFamily::T: return "T";
        case ClassFamily::Pi: return "Pi";
    }
    return "?";
}

std::string trim_copy(const std::string& in) {
    size_t a = in.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = in.find_last_not_of(" \t");
    return in.substr(a, b - a + 1);
}

}  // namespace

std::string key_to_string(const ClassKey& k) {
    std::string out = family_token(k.family);
    if (!k.certified) out += "*";
    out += "[";
    for (size_t i = 0; i < k.payload.size(); ++i) {
        if (i) out += " | ";
        out += to_word(k.payload[i]);
    }
    if (k.or_tag) out += " | or=" + std::to_string(*k.or_tag);
    if (k.maslov) out += " | mu=" + std::to_string(*k.maslov);
    out += "]";
    return out;
}

ClassKey key_from_string(const SurfaceSpec& surface, const std::string& text) {
    std::string t = trim_copy(text);
    size_t open = t.find('[');
    if (open == std::string::npos || t.empty() || t.back() != ']') {
        throw BadWord("malformed class key literal: " + text);
    }
    std::string head = trim_copy(t.substr(0, open));
    if (!head.empty() && head.back() == '*') head.pop_back();
    ClassFamily fam;
    if (head == "K+") fam = ClassFamily::Kplus;
    else if (head == "K-") fam = ClassFamily::Kminus;
    else if (head == "T") fam = ClassFamily::T;
    else if (head == "Pi") fam = ClassFamily::Pi;
    else throw BadWord("unknown class family in key literal: " + text);

    std::string body = t.substr(open + 1, t.size() - open - 2);
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t bar = body.find('|', pos);
        if (bar == std::string::npos) {
            parts.push_back(trim_copy(body.substr(pos)));
            break;
        }
        parts.push_back(trim_copy(body.substr(pos, bar - pos)));
        pos = bar + 1;
    }
    std::vector<std::string> words;
    std::optional<int> or_tag;
    std::optional<long long> maslov;
    for (const auto& part : parts) {
        if (part.rfind("or=", 0) == 0) {
            try {
                or_tag = std::stoi(part.substr(3));
            } catch (const std::exception&) {
                throw BadWord("malformed or tag in key literal: " + text);
            }
        } else if (part.rfind("mu=", 0) == 0) {
            try {
                maslov = std::stoll(part.substr(3));
            } catch (const std::exception&) {
                throw BadWord("malformed mu tag in key literal: " + text);
            }
        } else {
            words.push_back(part);
        }
    }
    size_t expected = fam == ClassFamily::T ? 3 : 2;
    if (words.size() != expected) throw BadWord("wrong entry count in key literal: " + text);
    Ambient amb = fam == ClassFamily::Kminus ? Ambient::PTF : Ambient::STF;
    std::vector<GroupElem> es;
    for (const auto& w : words) es.push_back(from_word(amb, surface, w));
    switch (fam) {
        case ClassFamily::Kplus: return kplus_key(es[0], es[1], maslov);
        case ClassFamily::Kminus: return kminus_key(es[0], es[1], maslov);
        case ClassFamily::T: return t_key(es[0], es[1], es[2], maslov);
        case ClassFamily::Pi:
            if (!or_tag) throw BadWord("cusp crossing key literal needs an or= entry: " + text);
            return pi_key(es[0], es[1], *or_tag, maslov);
    }
    throw BadWord("unreachable key literal state");
}

}  // namespace frontwave
