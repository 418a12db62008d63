#include "frontwave/front.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "frontwave/errors.hpp"

namespace frontwave {

namespace {

struct VisitInfo {
    int count = 0;
    int first_pos = -1;
    int second_pos = -1;
    bool slot_conflict = false;
    bool xtype_conflict = false;
    XType xtype = XType::R1;
};

std::map<int, VisitInfo> collect_visits(const FrontCode& code) {
    std::map<int, VisitInfo> visits;
    for (size_t p = 0; p < code.events.size(); ++p) {
        const auto* dp = std::get_if<DoublePointEvent>(&code.events[p]);
        if (!dp) continue;
        VisitInfo& v = visits[dp->id];
        if (v.count == 0) {
            v.xtype = dp->xtype;
        } else if (v.xtype != dp->xtype) {
            v.xtype_conflict = true;
        }
        if (dp->slot == Slot::first) {
            if (v.first_pos >= 0) v.slot_conflict = true;
            v.first_pos = static_cast<int>(p);
        } else {
            if (v.second_pos >= 0) v.slot_conflict = true;
            v.second_pos = static_cast<int>(p);
        }
        ++v.count;
    }
    return visits;
}

}  // namespace

GroupElem arc_product(const FrontCode& code, int from, int to) {
    GroupElem acc = identity(Ambient::STF, code.surface);
    const int m = static_cast<int>(code.arcs.size());
    for (int p = from; p != to; p = (p + 1) % m) {
        acc = compose(acc, code.arcs[p]);
    }
    return acc;
}

ValidationReport validate(const FrontCode& code) {
    ValidationReport report;
    auto flag = [&report](const std::string& code_name, int index, const std::string& message) {
        report.problems.push_back({code_name, index, message});
    };

    const size_t expected_arcs = code.events.empty() ? 1 : code.events.size();
    if (code.arcs.size() != expected_arcs) {
        flag("ArcCount", -1,
             "expected " + std::to_string(expected_arcs) + " arcs, got " +
                 std::to_string(code.arcs.size()));
    }

    bool arcs_usable = code.arcs.size() == expected_arcs;
    for (size_t i = 0; i < code.arcs.size(); ++i) {
        const GroupElem& a = code.arcs[i];
        if (a.ambient == Ambient::STF && a.surface == code.surface) continue;
        if (code.surface.kind == SurfaceKind::Plane && a.ambient == Ambient::STF && !base_trivial(a)) {
            flag("NonPlanarArc", static_cast<int>(i), "planar arc label must be a fiber power");
        } else {
            flag("ArcAmbient", static_cast<int>(i), "arc label outside the front's circle bundle group");
        }
        arcs_usable = false;
    }

    auto visits = collect_visits(code);
    bool pairing_ok = true;
    for (const auto& [id, v] : visits) {
        if (v.count != 2) {
            flag("UnpairedDoublePoint", id,
                 "double point visited " + std::to_string(v.count) + " times");
            pairing_ok = false;
            continue;
        }
        if (v.slot_conflict || v.first_pos < 0 || v.second_pos < 0) {
            flag("SlotConflict", id, "double point needs one first and one second visit");
            pairing_ok = false;
        }
        if (v.xtype_conflict) {
            flag("XTypeMismatch", id, "the two visits carry different configuration tags");
        }
    }

    if (arcs_usable) {
        GroupElem l = global_class(code);
        const bool even_cusps = cusp_count(code) % 2 == 0;
        if ((orientation_parity(l) == 1) != even_cusps) {
            flag("ParityMismatch", -1,
                 "orientation parity of the global class disagrees with the cusp count parity");
        }
        if (pairing_ok && !code.events.empty()) {
            for (const auto& [id, v] : visits) {
                if (v.count != 2 || v.first_pos < 0 || v.second_pos < 0) continue;
                GroupElem s1 = arc_product(code, v.first_pos, v.second_pos);
                GroupElem s2 = arc_product(code, v.second_pos, v.first_pos);
                GroupElem prefix = arc_product(code, 0, v.first_pos);
                GroupElem rotated = compose(compose(inverse(prefix), l), prefix);
                if (!(compose(s1, s2) == rotated)) {
                    flag("LoopPairInconsistent", id,
                         "loop pair product disagrees with the rotated global class");
                }
            }
        }
    }

    return report;
}

std::pair<int, int> visit_positions(const FrontCode& code, int id) {
    int first_pos = -1;
    int second_pos = -1;
    for (size_t p = 0; p < code.events.size(); ++p) {
        const auto* dp = std::get_if<DoublePointEvent>(&code.events[p]);
        if (!dp || dp->id != id) continue;
        if (dp->slot == Slot::first) {
            first_pos = static_cast<int>(p);
        } else {
            second_pos = static_cast<int>(p);
        }
    }
    if (first_pos < 0 || second_pos < 0) {
        throw UnknownDoublePoint("no paired double point with id " + std::to_string(id));
    }
    return {first_pos, second_pos};
}

std::pair<GroupElem, GroupElem> loop_pair_at(const FrontCode& code, int id) {
    auto [p1, p2] = visit_positions(code, id);
    if (code.arcs.size() != code.events.size()) {
        throw BadFrontCode("arc count does not match event count");
    }
    GroupElem s1 = arc_product(code, p1, p2);
    GroupElem s2 = arc_product(code, p2, p1);
    return {s1, s2};
}

FrontIndices indices(const FrontCode& code) {
    FrontIndices out;
    for (const Event& e : code.events) {
        if (const auto* c = std::get_if<CuspEvent>(&e)) out.maslov += c->maslov_sign;
    }
    if (code.surface.kind == SurfaceKind::Plane) {
        out.whitney = fiber_exp(global_class(code));
    }
    return out;
}

GroupElem global_class(const FrontCode& code) {
    GroupElem acc = identity(Ambient::STF, code.surface);
    for (const GroupElem& a : code.arcs) acc = compose(acc, a);
    return acc;
}

std::vector<int> double_point_ids(const FrontCode& code) {
    std::set<int> ids;
    for (const Event& e : code.events) {
        if (const auto* dp = std::get_if<DoublePointEvent>(&e)) ids.insert(dp->id);
    }
    return {ids.begin(), ids.end()};
}

int cusp_count(const FrontCode& code) {
    int n = 0;
    for (const Event& e : code.events) {
        if (std::holds_alternative<CuspEvent>(e)) ++n;
    }
    return n;
}

FrontCode standard_code(const StandardFrontId& id) {
    if (id.omega < 0 || id.k < 0) throw BadFrontCode("standard front labels must be nonnegative");
    FrontCode code;
    code.surface = plane();
    const GroupElem one = identity(Ambient::STF, code.surface);
    const GroupElem f = generator(Ambient::STF, code.surface, "f");
    for (int i = 1; i <= id.omega; ++i) {
        code.events.push_back(DoublePointEvent{i, Slot::first, XType::R1});
        code.arcs.push_back(f);
        code.events.push_back(DoublePointEvent{i, Slot::second, XType::R1});
        code.arcs.push_back(one);
    }
    for (int j = 0; j < id.k; ++j) {
        code.events.push_back(CuspEvent{+1, +1});
        code.arcs.push_back(one);
        code.events.push_back(CuspEvent{-1, +1});
        code.arcs.push_back(one);
    }
    if (code.events.empty()) code.arcs.push_back(one);
    return code;
}

}  // namespace frontwave
