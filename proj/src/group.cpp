#include "frontwave/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace frontwave {

namespace {

int letter_rank(Gen g) {
    int idx = g > 0 ? g : -g;
    return 2 * (idx - 1) + (g < 0 ? 1 : 0);
}

bool shortlex_less(const std::vector<Gen>& a, const std::vector<Gen>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
    }
    return false;
}

void free_reduce(std::vector<Gen>& w) {
    std::vector<Gen> out;
    out.reserve(w.size());
    for (Gen g : w) {
        if (!out.empty() && out.back() == static_cast<Gen>(-g)) {
            out.pop_back();
        } else {
            out.push_back(g);
        }
    }
    w = std::move(out);
}

std::vector<Gen> inverse_word(const std::vector<Gen>& w) {
    std::vector<Gen> out(w.rbegin(), w.rend());
    for (Gen& g : out) g = static_cast<Gen>(-g);
    return out;
}

struct RelatorTable {
    int g = 0;
    std::vector<std::vector<Gen>> seqs;  // rotations of the surface relator and its inverse
    std::vector<int> signs;
};

const RelatorTable& relator_table(int g) {
    static std::map<int, RelatorTable> cache;
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    RelatorTable t;
    t.g = g;
    std::vector<Gen> rel;
    for (int i = 1; i <= g; ++i) {
        Gen a = static_cast<Gen>(2 * i - 1);
        Gen b = static_cast<Gen>(2 * i);
        rel.push_back(a);
        rel.push_back(b);
        rel.push_back(static_cast<Gen>(-a));
        rel.push_back(static_cast<Gen>(-b));
    }
    std::vector<Gen> inv = inverse_word(rel);
    size_t n = rel.size();
    for (size_t r = 0; r < n; ++r) {
        std::vector<Gen> rot(rel.begin() + r, rel.end());
        rot.insert(rot.end(), rel.begin(), rel.begin() + r);
        t.seqs.push_back(std::move(rot));
        t.signs.push_back(+1);
        std::vector<Gen> irot(inv.begin() + r, inv.end());
        irot.insert(irot.end(), inv.begin(), inv.begin() + r);
        t.seqs.push_back(std::move(irot));
        t.signs.push_back(-1);
    }
    return cache.emplace(g, std::move(t)).first->second;
}

// Dehn reduction for the standard one-relator presentation of a closed genus-g
// surface group, instrumented so that removing a relator copy credits the
// central fiber with sign * unit.
void dehn_reduce(std::vector<Gen>& w, long long& fiber, long long unit, int g) {
    const RelatorTable& t = relator_table(g);
    size_t full = static_cast<size_t>(4 * g);
    size_t half = static_cast<size_t>(2 * g);
    free_reduce(w);
    bool changed = true;
    while (changed) {
        changed = false;
        size_t best_len = 0, best_pos = 0, best_rot = 0;
        for (size_t pos = 0; pos < w.size(); ++pos) {
            for (size_t r = 0; r < t.seqs.size(); ++r) {
                const std::vector<Gen>& seq = t.seqs[r];
                size_t l = 0;
                while (l < full && pos + l < w.size() && w[pos + l] == seq[l]) ++l;
                if (l > half && l > best_len) {
                    best_len = l;
                    best_pos = pos;
                    best_rot = r;
                }
            }
        }
        if (best_len > half) {
            const std::vector<Gen>& seq = t.seqs[best_rot];
            std::vector<Gen> tail(seq.begin() + static_cast<long>(best_len), seq.end());
            std::vector<Gen> repl = inverse_word(tail);
            std::vector<Gen> next(w.begin(), w.begin() + static_cast<long>(best_pos));
            next.insert(next.end(), repl.begin(), repl.end());
            next.insert(next.end(), w.begin() + static_cast<long>(best_pos + best_len), w.end());
            fiber += t.signs[best_rot] * unit;
            w = std::move(next);
            free_reduce(w);
            changed = true;
        }
    }
}

// Canonical representative of a genus-g word: shortlex minimum over the closure
// of half-relator swaps among reduced words of the same element.
void canonical_closed(std::vector<Gen>& w, long long& fiber, long long unit, int g) {
    const RelatorTable& t = relator_table(g);
    size_t half = static_cast<size_t>(2 * g);
    dehn_reduce(w, fiber, unit, g);
    bool restarted = true;
    std::map<std::vector<Gen>, long long> seen;
    while (restarted) {
        restarted = false;
        seen.clear();
        std::deque<std::vector<Gen>> queue;
        seen.emplace(w, fiber);
        queue.push_back(w);
        while (!queue.empty()) {
            std::vector<Gen> u = queue.front();
            queue.pop_front();
            long long ku = seen.at(u);
            for (size_t pos = 0; pos + half <= u.size(); ++pos) {
                for (size_t r = 0; r < t.seqs.size(); ++r) {
                    const std::vector<Gen>& seq = t.seqs[r];
                    bool match = true;
                    for (size_t l = 0; l < half; ++l) {
                        if (u[pos + l] != seq[l]) { match = false; break; }
                    }
                    if (!match) continue;
                    std::vector<Gen> tail(seq.begin() + static_cast<long>(half), seq.end());
                    std::vector<Gen> repl = inverse_word(tail);
                    std::vector<Gen> next(u.begin(), u.begin() + static_cast<long>(pos));
                    next.insert(next.end(), repl.begin(), repl.end());
                    next.insert(next.end(), u.begin() + static_cast<long>(pos + half), u.end());
                    long long kn = ku + t.signs[r] * unit;
                    dehn_reduce(next, kn, unit, g);
                    if (next.size() < u.size()) {
                        w = std::move(next);
                        fiber = kn;
                        restarted = true;
                        break;
                    }
                    if (seen.emplace(next, kn).second) queue.push_back(next);
                }
                if (restarted) break;
            }
            if (restarted) break;
            if (seen.size() > 200000) throw FrontwaveError("canonical form search exceeded state budget");
        }
    }
    const std::vector<Gen>* best = nullptr;
    for (const auto& [word, k] : seen) {
        if (!best || shortlex_less(word, *best)) best = &word;
    }
    if (best) {
        fiber = seen.at(*best);
        w = *best;
    }
}

long long pos_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

int pm(long long j) { return (pos_mod(j, 2) == 1) ? -1 : +1; }

KleinForm klein_mul(const KleinForm& a, const KleinForm& b) {
    KleinForm r;
    r.i = a.i + pm(a.j) * b.i;
    r.j = a.j + b.j;
    r.k = pm(b.j) * a.k + b.k;
    return r;
}

KleinForm klein_inverse(const KleinForm& a) {
    KleinForm r;
    r.i = -pm(a.j) * a.i;
    r.j = -a.j;
    r.k = -pm(a.j) * a.k;
    return r;
}

void words_from_run(std::vector<Gen>& out, Gen letter, long long count) {
    Gen signedLetter = count >= 0 ? letter : static_cast<Gen>(-letter);
    for (long long n = 0; n < std::llabs(count); ++n) out.push_back(signedLetter);
}

long long signed_letter_sum(const std::vector<Gen>& w, Gen letter) {
    long long s = 0;
    for (Gen g : w) {
        if (g == letter) ++s;
        else if (g == -letter) --s;
    }
    return s;
}

long long base_parity_bit(const SurfaceSpec& surface, const std::vector<Gen>& w) {
    if (surface.kind == SurfaceKind::KleinBottle) {
        long long d = 0;
        for (Gen g : w) {
            if (g == 2 || g == -2) ++d;
        }
        return pos_mod(d, 2);
    }
    if (surface.kind == SurfaceKind::ProjectivePlane) return pos_mod(static_cast<long long>(w.size()), 2);
    return 0;
}

void check_ambient_supported(Ambient ambient, const SurfaceSpec& surface) {
    if (ambient == Ambient::PTF && !is_orientable(surface)) {
        throw UnsupportedSurface("PTF requires an orientable surface");
    }
}

long long closed_fiber_unit(Ambient ambient, int genus) {
    long long euler = 2LL * genus - 2;
    switch (ambient) {
        case Ambient::BaseF: return 0;
        case Ambient::PTF: return 2 * euler;
        default: return euler;
    }
}

void validate_letters(const GroupElem& e) {
    int n = base_generator_count(e.surface);
    for (Gen g : e.word) {
        int idx = g > 0 ? g : -g;
        if (idx < 1 || idx > n) throw BadWord("letter index out of range for surface");
    }
}

void normalize(GroupElem& e) {
    check_ambient_supported(e.ambient, e.surface);
    validate_letters(e);
    switch (e.surface.kind) {
        case SurfaceKind::Plane: {
            if (e.ambient == Ambient::BaseF) e.fiber = 0;
            break;
        }
        case SurfaceKind::Sphere: {
            if (e.ambient == Ambient::BaseF) e.fiber = 0;
            else if (e.ambient == Ambient::PTF) e.fiber = pos_mod(e.fiber, 4);
            else e.fiber = pos_mod(e.fiber, 2);
            break;
        }
        case SurfaceKind::Torus: {
            long long na = signed_letter_sum(e.word, 1);
            long long nb = signed_letter_sum(e.word, 2);
            e.word.clear();
            words_from_run(e.word, 1, na);
            words_from_run(e.word, 2, nb);
            if (e.ambient == Ambient::BaseF) e.fiber = 0;
            break;
        }
        case SurfaceKind::OrientableFree: {
            free_reduce(e.word);
            if (e.ambient == Ambient::BaseF) e.fiber = 0;
            break;
        }
        case SurfaceKind::OrientableClosed: {
            long long unit = closed_fiber_unit(e.ambient, e.surface.genus);
            canonical_closed(e.word, e.fiber, unit, e.surface.genus);
            if (e.ambient == Ambient::BaseF) e.fiber = 0;
            break;
        }
        case SurfaceKind::ProjectivePlane: {
            long long v = signed_letter_sum(e.word, 1) + 2 * e.fiber;
            long long mod = e.ambient == Ambient::BaseF ? 2 : 4;
            v = pos_mod(v, mod);
            e.word.clear();
            if (v % 2 == 1) e.word.push_back(1);
            e.fiber = e.ambient == Ambient::BaseF ? 0 : v / 2;
            break;
        }
        case SurfaceKind::KleinBottle: {
            KleinForm acc;
            for (Gen g : e.word) {
                KleinForm letter;
                if (g == 1) letter = {1, 0, 0};
                else if (g == -1) letter = {-1, 0, 0};
                else if (g == 2) letter = {0, 1, 0};
                else letter = {0, -1, 0};
                acc = klein_mul(acc, letter);
            }
            acc = klein_mul(acc, {0, 0, e.fiber});
            e.word.clear();
            words_from_run(e.word, 1, acc.i);
            words_from_run(e.word, 2, acc.j);
            e.fiber = e.ambient == Ambient::BaseF ? 0 : acc.k;
            break;
        }
    }
    if (e.ambient == Ambient::CSTFModel) {
        if (pos_mod(e.cover, 2) != base_parity_bit(e.surface, e.word)) {
            throw ParityViolation("cover index parity disagrees with the base reversal parity");
        }
    } else {
        e.cover = 0;
    }
}

Gen letter_from_name(const SurfaceSpec& surface, const std::string& name) {
    auto parse_index = [&](size_t from) -> int {
        if (from >= name.size()) return 0;
        for (size_t i = from; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
        }
        int v = 0;
        try {
            v = std::stoi(name.substr(from));
        } catch (const std::exception&) {
            return 0;
        }
        return v;
    };
    switch (surface.kind) {
        case SurfaceKind::Torus:
        case SurfaceKind::OrientableClosed: {
            int g = surface.kind == SurfaceKind::Torus ? 1 : surface.genus;
            if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'b')) {
                int i = parse_index(1);
                if (i >= 1 && i <= g) return static_cast<Gen>(name[0] == 'a' ? 2 * i - 1 : 2 * i);
            }
            return 0;
        }
        case SurfaceKind::OrientableFree: {
            if (name.size() >= 2 && name[0] == 'x') {
                int i = parse_index(1);
                if (i >= 1 && i <= surface.rank) return static_cast<Gen>(i);
            }
            return 0;
        }
        case SurfaceKind::ProjectivePlane:
            return name == "c" ? 1 : 0;
        case SurfaceKind::KleinBottle:
            if (name == "c") return 1;
            if (name == "d") return 2;
            return 0;
        default:
            return 0;
    }
}

}  // namespace

std::string letter_name(const SurfaceSpec& surface, Gen g) {
    int idx = g > 0 ? g : -g;
    switch (surface.kind) {
        case SurfaceKind::Torus:
        case SurfaceKind::OrientableClosed: {
            int pair = (idx + 1) / 2;
            return (idx % 2 == 1 ? "a" : "b") + std::to_string(pair);
        }
        case SurfaceKind::OrientableFree:
            return "x" + std::to_string(idx);
        case SurfaceKind::ProjectivePlane:
            return "c";
        case SurfaceKind::KleinBottle:
            return idx == 1 ? "c" : "d";
        default:
            throw BadWord("surface has no base letters");
    }
}

std::vector<std::string> base_letter_names(const SurfaceSpec& surface) {
    std::vector<std::string> out;
    for (int i = 1; i <= base_generator_count(surface); ++i) {
        out.push_back(letter_name(surface, static_cast<Gen>(i)));
    }
    return out;
}

bool elem_less(const GroupElem& a, const GroupElem& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    if (a.surface.kind != b.surface.kind) return a.surface.kind < b.surface.kind;
    if (a.surface.genus != b.surface.genus) return a.surface.genus < b.surface.genus;
    if (a.surface.rank != b.surface.rank) return a.surface.rank < b.surface.rank;
    if (a.word != b.word) return shortlex_less(a.word, b.word);
    if (a.fiber != b.fiber) return a.fiber < b.fiber;
    return a.cover < b.cover;
}

GroupElem identity(Ambient ambient, const SurfaceSpec& surface) {
    check_ambient_supported(ambient, surface);
    GroupElem e;
    e.ambient = ambient;
    e.surface = surface;
    return e;
}

GroupElem generator(Ambient ambient, const SurfaceSpec& surface, const std::string& name) {
    check_ambient_supported(ambient, surface);
    GroupElem e = identity(ambient, surface);
    if (name == "1") return e;
    if (name == "f") {
        if (ambient == Ambient::BaseF) throw BadWord("fiber letter f is not available in the base group");
        e.fiber = ambient == Ambient::PTF ? 2 : 1;
        normalize(e);
        return e;
    }
    if (name == "h") {
        if (ambient != Ambient::PTF) throw BadWord("half fiber letter h is only available in PTF");
        e.fiber = 1;
        normalize(e);
        return e;
    }
    if (name == "f1") {
        if (ambient != Ambient::CSTFModel) throw BadWord("cover letter f1 is only available in the CSTF model");
        e.cover = 2;
        normalize(e);
        return e;
    }
    Gen g = letter_from_name(surface, name);
    if (g == 0) throw BadWord("unknown letter: " + name);
    e.word.push_back(g);
    if (ambient == Ambient::CSTFModel) e.cover = base_parity_bit(surface, e.word);
    normalize(e);
    return e;
}

GroupElem from_word(Ambient ambient, const SurfaceSpec& surface, const std::string& text) {
    GroupElem acc = identity(ambient, surface);
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::string name = token;
        long long exp = 1;
        auto caret = token.find('^');
        if (caret != std::string::npos) {
            name = token.substr(0, caret);
            std::string tail = token.substr(caret + 1);
            if (name.empty() || tail.empty()) throw BadWord("malformed token: " + token);
            try {
                size_t used = 0;
                exp = std::stoll(tail, &used);
                if (used != tail.size()) throw BadWord("malformed exponent in token: " + token);
            } catch (const BadWord&) {
                throw;
            } catch (const std::exception&) {
                throw BadWord("malformed exponent in token: " + token);
            }
        }
        acc = compose(acc, power(generator(ambient, surface, name), exp));
    }
    return acc;
}

std::string to_word(const GroupElem& e) {
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < e.word.size()) {
        Gen g = e.word[i];
        size_t j = i;
        while (j < e.word.size() && e.word[j] == g) ++j;
        long long exp = static_cast<long long>(j - i) * (g > 0 ? 1 : -1);
        std::string name = letter_name(e.surface, g);
        tokens.push_back(exp == 1 ? name : name + "^" + std::to_string(exp));
        i = j;
    }
    if (e.ambient != Ambient::BaseF && e.fiber != 0) {
        std::string name = e.ambient == Ambient::PTF ? "h" : "f";
        tokens.push_back(e.fiber == 1 ? name : name + "^" + std::to_string(e.fiber));
    }
    if (e.ambient == Ambient::CSTFModel) {
        long long rev = 0;
        if (e.surface.kind == SurfaceKind::KleinBottle) rev = signed_letter_sum(e.word, 2);
        else if (e.surface.kind == SurfaceKind::ProjectivePlane) rev = signed_letter_sum(e.word, 1);
        long long m = (e.cover - rev) / 2;
        if (m != 0) tokens.push_back(m == 1 ? "f1" : "f1^" + std::to_string(m));
    }
    if (tokens.empty()) return "1";
    std::string out;
    for (size_t t = 0; t < tokens.size(); ++t) {
        if (t) out += ' ';
        out += tokens[t];
    }
    return out;
}

GroupElem compose(const GroupElem& a, const GroupElem& b) {
    if (a.ambient != b.ambient || !(a.surface == b.surface)) {
        throw AmbientMismatch("compose requires matching ambient space and surface");
    }
    GroupElem r = a;
    switch (a.surface.kind) {
        case SurfaceKind::KleinBottle: {
            if (a.ambient == Ambient::BaseF || a.ambient == Ambient::STF || a.ambient == Ambient::CSTFModel) {
                KleinForm fa = klein_form(a);
                KleinForm fb = klein_form(b);
                KleinForm fr = klein_mul(fa, fb);
                r.word.clear();
                words_from_run(r.word, 1, fr.i);
                words_from_run(r.word, 2, fr.j);
                r.fiber = fr.k;
                r.cover = a.cover + b.cover;
                normalize(r);
                return r;
            }
            break;
        }
        default:
            break;
    }
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    r.fiber = a.fiber + b.fiber;
    r.cover = a.cover + b.cover;
    normalize(r);
    return r;
}

GroupElem inverse(const GroupElem& a) {
    GroupElem r = a;
    if (a.surface.kind == SurfaceKind::KleinBottle && a.ambient != Ambient::PTF) {
        KleinForm f = klein_inverse(klein_form(a));
        r.word.clear();
        words_from_run(r.word, 1, f.i);
        words_from_run(r.word, 2, f.j);
        r.fiber = f.k;
        r.cover = -a.cover;
        normalize(r);
        return r;
    }
    r.word = inverse_word(a.word);
    r.fiber = -a.fiber;
    r.cover = -a.cover;
    normalize(r);
    return r;
}

GroupElem power(const GroupElem& a, long long n) {
    GroupElem result = identity(a.ambient, a.surface);
    if (n == 0) return result;
    GroupElem base = n < 0 ? inverse(a) : a;
    unsigned long long m = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
    while (m) {
        if (m & 1ULL) result = compose(result, base);
        m >>= 1ULL;
        if (m) base = compose(base, base);
    }
    return result;
}

GroupElem reduce(const GroupElem& e) {
    GroupElem r = e;
    normalize(r);
    return r;
}

bool is_identity(const GroupElem& e) {
    return e.word.empty() && e.fiber == 0 && e.cover == 0;
}

bool base_trivial(const GroupElem& e) {
    return e.word.empty();
}

int orientation_parity(const GroupElem& e) {
    return base_parity_bit(e.surface, e.word) == 1 ? -1 : +1;
}

long long fiber_exp(const GroupElem& e) {
    return e.fiber;
}

long long cover_index(const GroupElem& e) {
    if (e.ambient != Ambient::CSTFModel) throw AmbientMismatch("cover_index requires a CSTF model element");
    return e.cover;
}

GroupElem iota_stf_to_ptf(const GroupElem& e) {
    if (e.ambient != Ambient::STF) throw AmbientMismatch("iota_stf_to_ptf expects an STF element");
    if (!is_orientable(e.surface)) throw UnsupportedSurface("PTF requires an orientable surface");
    GroupElem r = e;
    r.ambient = Ambient::PTF;
    r.fiber = 2 * e.fiber;
    normalize(r);
    return r;
}

bool ptf_minus(const GroupElem& e) {
    if (e.ambient != Ambient::PTF) throw AmbientMismatch("ptf_minus expects a PTF element");
    return pos_mod(e.fiber, 2) == 1;
}

GroupElem base_project(const GroupElem& e) {
    GroupElem r = e;
    r.ambient = Ambient::BaseF;
    r.fiber = 0;
    r.cover = 0;
    normalize(r);
    return r;
}

GroupElem make_cstf(long long cover, const GroupElem& stf_part) {
    if (stf_part.ambient != Ambient::STF) throw AmbientMismatch("make_cstf expects an STF element");
    GroupElem r = stf_part;
    r.ambient = Ambient::CSTFModel;
    r.cover = cover;
    normalize(r);
    return r;
}

KleinForm klein_form(const GroupElem& e) {
    if (e.surface.kind != SurfaceKind::KleinBottle) {
        throw UnsupportedSurface("klein_form expects a Klein bottle element");
    }
    KleinForm f;
    f.i = signed_letter_sum(e.word, 1);
    f.j = signed_letter_sum(e.word, 2);
    f.k = e.fiber;
    return f;
}

GroupElem klein_elem(Ambient ambient, long long i, long long j, long long k) {
    GroupElem e = identity(ambient, klein_bottle());
    words_from_run(e.word, 1, i);
    words_from_run(e.word, 2, j);
    e.fiber = k;
    if (ambient == Ambient::CSTFModel) e.cover = pos_mod(j, 2);
    normalize(e);
    return e;
}

}  // namespace frontwave
