#include "frontwave/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <variant>

#include "frontwave/errors.hpp"

namespace frontwave {

namespace {

int cyc(int p, int m) { return ((p % m) + m) % m; }

GroupElem fiber_power(const SurfaceSpec& surface, long long n) {
    return power(generator(Ambient::STF, surface, "f"), n);
}

const DoublePointEvent* as_visit(const Event& e) { return std::get_if<DoublePointEvent>(&e); }
const CuspEvent* as_cusp(const Event& e) { return std::get_if<CuspEvent>(&e); }

XType flipped(XType t) {
    switch (t) {
        case XType::R1: return XType::R2;
        case XType::R2: return XType::R1;
        case XType::C1: return XType::C2;
        case XType::C2: return XType::C1;
    }
    return t;
}

// Inserts two events with their trailing arcs right after arc slot p, so the
// arc formerly leaving events[p] now enters e1.
void insert_group(FrontCode& code, int p, const Event& e1, const GroupElem& a1, const Event& e2,
                  const GroupElem& a2) {
    if (code.events.empty()) {
        GroupElem tail = code.arcs.at(0);
        code.events = {e1, e2};
        code.arcs = {a1, compose(a2, tail)};
        return;
    }
    code.events.insert(code.events.begin() + p + 1, {e1, e2});
    code.arcs.insert(code.arcs.begin() + p + 1, {a1, a2});
}

// Removes events[p], composing its trailing arc into the incoming one.
void remove_event(FrontCode& code, int p) {
    const int m = static_cast<int>(code.events.size());
    if (m == 1) {
        code.events.clear();
        return;
    }
    const int prev = cyc(p - 1, m);
    code.arcs[prev] = compose(code.arcs[prev], code.arcs[p]);
    code.events.erase(code.events.begin() + p);
    code.arcs.erase(code.arcs.begin() + p);
}

void remove_events(FrontCode& code, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end(), std::greater<int>());
    for (int p : positions) remove_event(code, p);
}

std::optional<ClassKey> kminus_event_key(const SurfaceSpec& surface, const GroupElem& p,
                                         const GroupElem& q) {
    if (!is_orientable(surface)) return std::nullopt;
    GroupElem h = generator(Ambient::PTF, surface, "h");
    return kminus_key(compose(iota_stf_to_ptf(p), h), compose(iota_stf_to_ptf(q), inverse(h)));
}

int site_at(const MoveSpec& m, size_t n, const char* what) {
    if (m.site.size() != n) throw InvalidMove(std::string("site for ") + what + " needs " +
                                              std::to_string(n) + " entries");
    return m.site[0];
}

void check_arc_slot(const FrontCode& code, int p) {
    if (p < 0 || p >= static_cast<int>(code.arcs.size()))
        throw InvalidMove("arc slot out of range");
}

void check_event_slot(const FrontCode& code, int p) {
    if (p < 0 || p >= static_cast<int>(code.events.size()))
        throw InvalidMove("event index out of range");
}

int move_sign(const MoveSpec& m) {
    if (m.triangle.empty()) return m.direction;
    TriangleData t = triangle_from_string(m.triangle);
    if (m.stratum == Stratum::Pi) return m.direction * pi_crossing_sign({t});
    return m.direction * triangle_sign(t);
}

MoveResult apply_lambda(const FrontCode& code, const MoveSpec& m) {
    if (m.rotation_sign != 1 && m.rotation_sign != -1)
        throw InvalidMove("rotation_sign must be +1 or -1");
    FrontCode out = code;
    if (m.direction > 0) {
        int p = site_at(m, 1, "a cusp birth");
        check_arc_slot(code, p);
        GroupElem one = identity(Ambient::STF, code.surface);
        insert_group(out, p, CuspEvent{1, m.rotation_sign}, one, CuspEvent{-1, m.rotation_sign},
                     one);
    } else {
        int p = site_at(m, 1, "a cusp death");
        check_event_slot(code, p);
        const int n = static_cast<int>(code.events.size());
        int p2 = cyc(p + 1, n);
        const CuspEvent* c1 = as_cusp(code.events[p]);
        const CuspEvent* c2 = as_cusp(code.events[p2]);
        if (!c1 || !c2) throw InconsistentSite("cusp death needs two adjacent cusps");
        if (c1->maslov_sign + c2->maslov_sign != 0)
            throw InconsistentSite("cusp death needs opposite coorientation signs");
        if (c1->rotation_sign != c2->rotation_sign)
            throw InconsistentSite("cusp death needs equal rotation signs");
        if (!is_identity(code.arcs[p]))
            throw InconsistentSite("cusp death needs a trivial arc between the cusps");
        remove_events(out, {p, p2});
    }
    return {out, CrossingEvent{Stratum::Lambda, move_sign(m), std::nullopt, 2}};
}

MoveResult apply_tangency(const FrontCode& code, const MoveSpec& m) {
    const bool plus = m.stratum == Stratum::Kplus;
    const bool insert = (m.direction > 0) != m.inverse_tangency;
    const SurfaceSpec& surf = code.surface;
    const GroupElem one = identity(Ambient::STF, surf);
    const GroupElem f = fiber_power(surf, 1);
    const bool mirrored = m.inverse_tangency;
    const XType tx = plus ? (mirrored ? XType::R2 : XType::R1)
                          : (mirrored ? XType::C2 : XType::C1);
    const XType ty = plus ? (mirrored ? XType::R1 : XType::R2)
                          : (mirrored ? XType::C1 : XType::C2);
    const GroupElem ax = plus ? (mirrored ? inverse(f) : f) : one;
    const GroupElem ay = plus ? (mirrored ? f : inverse(f)) : one;

    FrontCode out = code;
    std::optional<ClassKey> key;

    if (insert) {
        if (m.site.size() != 2) throw InvalidMove("site for a tangency birth needs 2 arc slots");
        int i = m.site[0];
        int j = m.site[1];
        check_arc_slot(code, i);
        check_arc_slot(code, j);
        int nx = m.new_id1;
        int ny = m.new_id2;
        std::vector<int> ids = double_point_ids(code);
        if (nx == 0 && ny == 0) {
            int top = ids.empty() ? 0 : ids.back();
            nx = top + 1;
            ny = top + 2;
        }
        if (nx <= 0 || ny <= 0 || nx == ny) throw InvalidMove("tangency birth needs two fresh ids");
        if (std::binary_search(ids.begin(), ids.end(), nx) ||
            std::binary_search(ids.begin(), ids.end(), ny))
            throw InvalidMove("tangency birth id already in use");

        Event x1 = DoublePointEvent{nx, Slot::first, tx};
        Event y1 = DoublePointEvent{ny, Slot::second, ty};
        Event y2 = DoublePointEvent{ny, Slot::first, ty};
        Event x2 = DoublePointEvent{nx, Slot::second, tx};

        if (code.events.empty()) {
            insert_group(out, 0, y2, one, x2, one);
            insert_group(out, 1, x1, ax, y1, ay);
        } else if (i == j) {
            insert_group(out, i, y2, one, x2, one);
            insert_group(out, i, x1, ax, y1, ay);
        } else if (i < j) {
            insert_group(out, j, y2, one, x2, one);
            insert_group(out, i, x1, ax, y1, ay);
        } else {
            insert_group(out, i, x1, ax, y1, ay);
            insert_group(out, j, y2, one, x2, one);
        }

        auto [p, q] = loop_pair_at(out, nx);
        key = plus ? std::optional<ClassKey>(kplus_key(p, q)) : kminus_event_key(surf, p, q);
    } else {
        if (m.site.size() != 2) throw InvalidMove("site for a tangency death needs 2 ids");
        int nx = m.site[0];
        int ny = m.site[1];
        if (nx == ny) throw InconsistentSite("tangency death needs two distinct double points");
        auto [xf, xs] = visit_positions(code, nx);
        auto [yf, ys] = visit_positions(code, ny);
        const int n = static_cast<int>(code.events.size());
        if (ys != cyc(xf + 1, n) || xs != cyc(yf + 1, n))
            throw InconsistentSite("tangency death needs the interleaved adjacent pattern");
        const DoublePointEvent* vx = as_visit(code.events[xf]);
        const DoublePointEvent* vy = as_visit(code.events[yf]);
        if (vx->xtype != tx || vy->xtype != ty)
            throw InconsistentSite("tangency death found the wrong crossing tags");
        if (!(code.arcs[xf] == ax) || !(code.arcs[ys] == ay) || !is_identity(code.arcs[yf]) ||
            !is_identity(code.arcs[xs]))
            throw InconsistentSite("tangency death needs the exact birth arc signature");

        auto [p, q] = loop_pair_at(code, nx);
        key = plus ? std::optional<ClassKey>(kplus_key(p, q)) : kminus_event_key(surf, p, q);
        remove_events(out, {xf, xs, yf, ys});
    }

    if (!m.witness.empty()) {
        if (m.witness.size() != 2) throw InconsistentSite("tangency witness needs 2 loops");
        std::optional<ClassKey> wk =
            plus ? std::optional<ClassKey>(kplus_key(m.witness[0], m.witness[1]))
                 : kminus_event_key(surf, m.witness[0], m.witness[1]);
        if (key && wk && !(*wk == *key))
            throw InconsistentSite("tangency witness names a different class");
    }

    return {out, CrossingEvent{m.stratum, move_sign(m), key, 2}};
}

MoveResult apply_triple(const FrontCode& code, const MoveSpec& m) {
    if (m.site.size() != 3) throw InvalidMove("site for a triple point move needs 3 ids");
    std::set<int> ids(m.site.begin(), m.site.end());
    if (ids.size() != 3) throw InvalidMove("triple point move needs distinct ids");

    const int n = static_cast<int>(code.events.size());
    std::map<int, int> id_at;
    for (int d : ids) {
        auto [a, b] = visit_positions(code, d);
        id_at[a] = d;
        id_at[b] = d;
    }

    std::vector<std::pair<int, int>> cand;
    for (const auto& [x, dx] : id_at) {
        int y = cyc(x + 1, n);
        auto it = id_at.find(y);
        if (it == id_at.end() || it->second == dx) continue;
        if (!is_identity(code.arcs[x])) continue;
        cand.push_back({x, y});
    }

    std::vector<std::pair<int, int>> pairs;
    const size_t nc = cand.size();
    bool found = false;
    for (size_t a = 0; a < nc && !found; ++a) {
        for (size_t b = a + 1; b < nc && !found; ++b) {
            for (size_t c = b + 1; c < nc && !found; ++c) {
                std::set<int> cover = {cand[a].first,  cand[a].second, cand[b].first,
                                       cand[b].second, cand[c].first,  cand[c].second};
                if (cover.size() != 6) continue;
                pairs = {cand[a], cand[b], cand[c]};
                found = true;
            }
        }
    }
    if (!found) throw InconsistentSite("no vanishing triangle at these double points");

    std::sort(pairs.begin(), pairs.end());
    int p = pairs[0].first;
    int q = pairs[1].first;
    int r = pairs[2].first;
    GroupElem d1 = arc_product(code, cyc(p + 1, n), q);
    GroupElem d2 = arc_product(code, cyc(q + 1, n), r);
    GroupElem d3 = arc_product(code, cyc(r + 1, n), p);
    ClassKey key = t_key(d1, d2, d3);

    if (!m.witness.empty()) {
        if (m.witness.size() != 3) throw InconsistentSite("triple point witness needs 3 loops");
        if (!(t_key(m.witness[0], m.witness[1], m.witness[2]) == key))
            throw InconsistentSite("triple point witness names a different class");
    }

    FrontCode out = code;
    for (const auto& [x, y] : pairs) std::swap(out.events[x], out.events[y]);

    return {out, CrossingEvent{Stratum::T, move_sign(m), key, 2}};
}

MoveResult apply_cusp_crossing(const FrontCode& code, const MoveSpec& m) {
    int s = site_at(m, 1, "a cusp crossing");
    check_event_slot(code, s);
    const int n = static_cast<int>(code.events.size());
    const DoublePointEvent* d = as_visit(code.events[s]);
    if (!d) throw InconsistentSite("cusp crossing site must be a double point visit");

    const int nxt = cyc(s + 1, n);
    const int prv = cyc(s - 1, n);
    bool right = as_cusp(code.events[nxt]) != nullptr && base_trivial(code.arcs[s]);
    bool left = !right && as_cusp(code.events[prv]) != nullptr && base_trivial(code.arcs[prv]);
    if (!right && !left)
        throw InconsistentSite("cusp crossing needs an adjacent cusp over a fiber arc");

    const CuspEvent* c = as_cusp(code.events[right ? nxt : prv]);
    auto [a, b] = loop_pair_at(code, d->id);
    int j = c->rotation_sign > 0 ? 0 : 1;
    ClassKey key = pi_key(a, b, j);

    if (!m.witness.empty()) {
        if (m.witness.size() != 2) throw InconsistentSite("cusp crossing witness needs 2 loops");
        if (!(pi_key(m.witness[0], m.witness[1], j) == key))
            throw InconsistentSite("cusp crossing witness names a different class");
    }

    const int eps = (d->xtype == XType::R1 || d->xtype == XType::C2) ? 1 : -1;
    const long long din = d->slot == Slot::first ? -eps : eps;
    const long long dout = -din;

    FrontCode out = code;
    if (right) {
        const long long fib = fiber_exp(code.arcs[s]);
        std::swap(out.events[s], out.events[nxt]);
        out.arcs[prv] = compose(out.arcs[prv], fiber_power(code.surface, din));
        out.arcs[s] = identity(Ambient::STF, code.surface);
        out.arcs[nxt] = compose(fiber_power(code.surface, fib + dout), out.arcs[nxt]);
    } else {
        const int bef = cyc(prv - 1, n);
        const long long fib = fiber_exp(code.arcs[prv]);
        std::swap(out.events[prv], out.events[s]);
        out.arcs[bef] = compose(out.arcs[bef], fiber_power(code.surface, fib + din));
        out.arcs[prv] = identity(Ambient::STF, code.surface);
        out.arcs[s] = compose(fiber_power(code.surface, dout), out.arcs[s]);
    }
    for (Event& e : out.events) {
        if (auto* v = std::get_if<DoublePointEvent>(&e); v && v->id == d->id)
            v->xtype = flipped(v->xtype);
    }

    return {out, CrossingEvent{Stratum::Pi, move_sign(m), key, 1}};
}

}  // namespace

TriangleData triangle_from_string(const std::string& text) {
    if (text.size() != 3) throw InvalidMove("triangle data needs exactly 3 signs");
    TriangleData t;
    for (int i = 0; i < 3; ++i) {
        if (text[i] == '+')
            t.side_matches[i] = true;
        else if (text[i] == '-')
            t.side_matches[i] = false;
        else
            throw InvalidMove("triangle data must be written over + and -");
    }
    return t;
}

int triangle_sign(const TriangleData& t) {
    int q = 0;
    for (bool b : t.side_matches) q += b ? 1 : 0;
    return q % 2 == 0 ? 1 : -1;
}

int pi_crossing_sign(const PiLocalData& p) { return triangle_sign(p.substituted); }

MoveResult apply_move(const FrontCode& code, const MoveSpec& m) {
    if (!validate(code).ok()) throw BadFrontCode("moves apply to valid codes only");
    if (m.direction != 1 && m.direction != -1) throw InvalidMove("direction must be +1 or -1");

    MoveResult res = [&] {
        switch (m.stratum) {
            case Stratum::Lambda: return apply_lambda(code, m);
            case Stratum::Kplus:
            case Stratum::Kminus: return apply_tangency(code, m);
            case Stratum::T: return apply_triple(code, m);
            case Stratum::Pi: return apply_cusp_crossing(code, m);
        }
        throw InvalidMove("unknown stratum");
    }();

    if (!validate(res.code).ok()) throw InvalidMove("move produced an inconsistent code");
    return res;
}

namespace {

void push_pair(std::vector<CrossingEvent>& out, Stratum s, std::optional<ClassKey> key, int w) {
    out.push_back({s, 1, key, w});
    out.push_back({s, -1, key, w});
}

std::vector<CrossingEvent> gamma1_events(const FrontCode& code) {
    std::vector<CrossingEvent> out;
    const SurfaceSpec& surf = code.surface;
    const GroupElem f = fiber_power(surf, 1);
    for (int d : double_point_ids(code)) {
        auto [a, b] = loop_pair_at(code, d);
        GroupElem ab = compose(a, b);
        GroupElem fp = fiber_power(surf, orientation_parity(a));
        out.push_back({Stratum::Kplus, 1, kplus_key(f, compose(ab, inverse(f))), 2});
        out.push_back({Stratum::Kplus, -1, kplus_key(fp, compose(ab, inverse(fp))), 2});
        if (is_orientable(surf)) {
            GroupElem h = generator(Ambient::PTF, surf, "h");
            ClassKey km = kminus_key(h, compose(iota_stf_to_ptf(ab), inverse(h)));
            push_pair(out, Stratum::Kminus, km, 2);
        }
        out.push_back({Stratum::T, 1, t_key(f, compose(a, inverse(f)), b), 2});
        out.push_back({Stratum::T, -1, t_key(fp, compose(a, inverse(fp)), b), 2});
    }
    if (cusp_count(code) > 0) {
        GroupElem l = global_class(code);
        ClassKey pk = pi_key(f, compose(l, inverse(f)), 0);
        for (int c = 0; c < cusp_count(code); ++c) push_pair(out, Stratum::Pi, pk, 1);
    }
    return out;
}

std::vector<GroupElem> witness_pool(const FrontCode& code, const CannedContext& ctx) {
    std::vector<GroupElem> pool;
    for (const GroupElem& w : ctx.witnesses) {
        if (w.ambient != Ambient::STF || !(w.surface == code.surface))
            throw InvalidMove("loop witnesses must live in the circle bundle group of the code");
        pool.push_back(w);
    }
    for (int d : double_point_ids(code)) {
        if (pool.size() >= 4) break;
        auto [a, b] = loop_pair_at(code, d);
        pool.push_back(a);
        pool.push_back(b);
    }
    if (pool.size() < 4) pool.push_back(global_class(code));
    while (pool.size() < 4) pool.push_back(identity(Ambient::STF, code.surface));
    return pool;
}

}  // namespace

std::vector<CrossingEvent> canned_loop(LoopKind kind, const FrontCode& code,
                                       const CannedContext& ctx) {
    if (!validate(code).ok()) throw BadFrontCode("canned loops need a valid code");
    const SurfaceSpec& surf = code.surface;

    if (kind == LoopKind::Gamma1) return gamma1_events(code);
    if (kind == LoopKind::Gamma2) {
        if (surf.kind != SurfaceKind::KleinBottle)
            throw UnsupportedLoop("the cover slide loop lives on the Klein bottle only");
        if (orientation_parity(global_class(code)) != 1)
            throw UnsupportedLoop("the cover slide loop needs an orientation preserving class");
        if (!ctx.gamma2_events)
            throw UnsupportedLoop("the cover slide loop needs explicit crossing events");
        return *ctx.gamma2_events;
    }
    if (kind == LoopKind::Gamma3) {
        std::vector<CrossingEvent> out;
        for (int d : double_point_ids(code)) {
            auto [a, b] = loop_pair_at(code, d);
            push_pair(out, Stratum::Pi, pi_key(a, b, 0), 1);
        }
        return out;
    }

    std::vector<GroupElem> w = witness_pool(code, ctx);
    const GroupElem f = fiber_power(surf, 1);
    std::vector<CrossingEvent> out;
    switch (kind) {
        case LoopKind::TT:
            push_pair(out, Stratum::T, t_key(w[0], w[1], compose(w[2], w[3])), 2);
            push_pair(out, Stratum::T, t_key(w[1], w[2], compose(w[3], w[0])), 2);
            push_pair(out, Stratum::T, t_key(w[2], w[3], compose(w[0], w[1])), 2);
            push_pair(out, Stratum::T, t_key(w[3], w[0], compose(w[1], w[2])), 2);
            break;
        case LoopKind::KPi:
            push_pair(out, Stratum::Kplus, kplus_key(w[0], w[1]), 2);
            push_pair(out, Stratum::Pi, pi_key(w[0], w[1], 0), 1);
            break;
        case LoopKind::KT:
            push_pair(out, Stratum::T, t_key(w[0], w[1], w[2]), 2);
            push_pair(out, Stratum::Kplus, kplus_key(w[0], w[1]), 2);
            break;
        case LoopKind::KK:
            push_pair(out, Stratum::Kplus, kplus_key(w[0], w[1]), 2);
            push_pair(out, Stratum::Kplus,
                      kplus_key(compose(w[1], f), compose(w[0], inverse(f))), 2);
            break;
        case LoopKind::TPi:
            push_pair(out, Stratum::T, t_key(w[0], w[1], w[2]), 2);
            push_pair(out, Stratum::Pi, pi_key(w[0], w[1], 0), 1);
            push_pair(out, Stratum::Pi, pi_key(w[1], w[2], 1), 1);
            break;
        case LoopKind::PiLambda: {
            ClassKey p = pi_key(w[0], w[1], 0);
            out.push_back({Stratum::Pi, 1, p, 1});
            out.push_back({Stratum::Pi, 1, p, 1});
            out.push_back({Stratum::T, -1, g_map(p), 2});
            break;
        }
        case LoopKind::PiPi:
            push_pair(out, Stratum::Pi, pi_key(w[0], w[1], 0), 1);
            push_pair(out, Stratum::Pi, pi_key(w[1], w[0], 1), 1);
            break;
        case LoopKind::LambdaLambda: {
            ClassKey p = pi_key(w[0], w[1], 0);
            out.push_back({Stratum::Lambda, 1, std::nullopt, 2});
            out.push_back({Stratum::Pi, 1, p, 1});
            out.push_back({Stratum::Pi, -1, p, 1});
            out.push_back({Stratum::Lambda, -1, std::nullopt, 2});
            break;
        }
        default: throw UnsupportedLoop("unknown loop kind");
    }
    return out;
}

std::string stratum_to_string(Stratum s) {
    switch (s) {
        case Stratum::Lambda: return "lambda";
        case Stratum::Kplus: return "k+";
        case Stratum::Kminus: return "k-";
        case Stratum::T: return "t";
        case Stratum::Pi: return "pi";
    }
    return "lambda";
}

Stratum stratum_from_string(const std::string& text) {
    if (text == "lambda") return Stratum::Lambda;
    if (text == "k+") return Stratum::Kplus;
    if (text == "k-") return Stratum::Kminus;
    if (text == "t") return Stratum::T;
    if (text == "pi") return Stratum::Pi;
    throw InvalidMove("unknown stratum name: " + text);
}

std::string loop_kind_to_string(LoopKind k) {
    switch (k) {
        case LoopKind::Gamma1: return "gamma1";
        case LoopKind::Gamma2: return "gamma2";
        case LoopKind::Gamma3: return "gamma3";
        case LoopKind::TT: return "tt";
        case LoopKind::KPi: return "kpi";
        case LoopKind::KT: return "kt";
        case LoopKind::KK: return "kk";
        case LoopKind::TPi: return "tpi";
        case LoopKind::PiLambda: return "pilambda";
        case LoopKind::PiPi: return "pipi";
        case LoopKind::LambdaLambda: return "lambdalambda";
    }
    return "gamma1";
}

LoopKind loop_kind_from_string(const std::string& text) {
    if (text == "gamma1") return LoopKind::Gamma1;
    if (text == "gamma2") return LoopKind::Gamma2;
    if (text == "gamma3") return LoopKind::Gamma3;
    if (text == "tt") return LoopKind::TT;
    if (text == "kpi") return LoopKind::KPi;
    if (text == "kt") return LoopKind::KT;
    if (text == "kk") return LoopKind::KK;
    if (text == "tpi") return LoopKind::TPi;
    if (text == "pilambda") return LoopKind::PiLambda;
    if (text == "pipi") return LoopKind::PiPi;
    if (text == "lambdalambda") return LoopKind::LambdaLambda;
    throw UnsupportedLoop("unknown loop kind: " + text);
}

}  // namespace frontwave
