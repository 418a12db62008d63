#include "frontwave/integrate.hpp"

#include <algorithm>

#include "frontwave/errors.hpp"

namespace frontwave {

namespace {

std::vector<long long> zeros(int dim) { return std::vector<long long>(dim, 0); }

ClassKey without_maslov(const ClassKey& key) {
    ClassKey k = key;
    k.maslov.reset();
    return k;
}

}  // namespace

std::vector<long long> WeightFn::operator()(const ClassKey& key) const {
    if (!table.empty() && !(table.begin()->first.surface == key.surface)) {
        throw KeySpaceMismatch("weight table and queried class live over different surfaces");
    }
    auto hit = table.find(key);
    if (hit != table.end()) return hit->second;
    if (key.maslov) {
        hit = table.find(without_maslov(key));
        if (hit != table.end()) return hit->second;
    }
    if (key.family == ClassFamily::Pi) {
        ClassKey absorbed = g_map(key);
        hit = table.find(absorbed);
        if (hit != table.end()) return hit->second;
        if (absorbed.maslov) {
            hit = table.find(without_maslov(absorbed));
            if (hit != table.end()) return hit->second;
        }
    }
    return zeros(dim);
}

void set_weight(WeightFn& psi, const ClassKey& key, std::vector<long long> value) {
    if (static_cast<int>(value.size()) != psi.dim) {
        throw KeySpaceMismatch("weight value dimension disagrees with the table dimension");
    }
    if (!psi.table.empty() && !(psi.table.begin()->first.surface == key.surface)) {
        throw KeySpaceMismatch("weight table entries must live over one surface");
    }
    psi.table[key] = std::move(value);
}

bool DeltaValue::is_zero() const {
    return std::all_of(doubled.begin(), doubled.end(), [](long long v) { return v == 0; });
}

DeltaValue delta_along(const std::vector<CrossingEvent>& events, const WeightFn& psi) {
    DeltaValue acc{zeros(psi.dim)};
    for (const CrossingEvent& e : events) {
        if (!e.key) continue;
        std::vector<long long> v = psi(*e.key);
        for (int i = 0; i < psi.dim; ++i) {
            acc.doubled[i] += static_cast<long long>(e.sign) * e.weight * v[i];
        }
    }
    return acc;
}

LocalCheck check_local_integrability(const WeightFn& psi, const SurfaceSpec& surface,
                                     const std::vector<GroupElem>& witnesses) {
    FrontCode probe;
    probe.surface = surface;
    probe.arcs = {identity(Ambient::STF, surface)};
    CannedContext ctx;
    ctx.witnesses = witnesses;

    LocalCheck report;
    report.pass = true;
    for (LoopKind kind : {LoopKind::TT, LoopKind::KPi, LoopKind::KT, LoopKind::KK, LoopKind::TPi,
                          LoopKind::PiLambda, LoopKind::PiPi, LoopKind::LambdaLambda}) {
        DeltaValue d = delta_along(canned_loop(kind, probe, ctx), psi);
        bool ok = d.is_zero();
        report.items.push_back({kind, std::move(d), ok});
        report.pass = report.pass && ok;
    }
    return report;
}

VerdictReport integrability_verdict(const WeightFn& psi, const FrontCode& sample,
                                    const ComponentInfo& component,
                                    const std::optional<std::vector<CrossingEvent>>& gamma2_events) {
    if (!validate(sample).ok()) throw BadFrontCode("verdicts need a valid sample code");
    const bool reversing = orientation_parity(global_class(sample)) == -1;
    if (reversing != component.reversing) {
        throw BadFrontCode("declared component parity disagrees with the sample code");
    }

    VerdictReport rep;
    if (component.reversing) {
        rep.verdict = Verdict::Integrable;
        return rep;
    }

    DeltaValue g1 = delta_along(canned_loop(LoopKind::Gamma1, sample), psi);
    bool g1_ok = g1.is_zero();
    rep.deltas.push_back({loop_kind_to_string(LoopKind::Gamma1), std::move(g1)});
    if (!g1_ok) {
        rep.verdict = Verdict::NotIntegrable;
        rep.obstruction = loop_kind_to_string(LoopKind::Gamma1);
        return rep;
    }

    if (sample.surface.kind != SurfaceKind::KleinBottle) {
        rep.verdict = Verdict::Integrable;
        return rep;
    }
    if (!gamma2_events) {
        rep.verdict = Verdict::Conditional;
        rep.obstruction = loop_kind_to_string(LoopKind::Gamma2);
        return rep;
    }
    DeltaValue g2 = delta_along(*gamma2_events, psi);
    bool g2_ok = g2.is_zero();
    rep.deltas.push_back({loop_kind_to_string(LoopKind::Gamma2), std::move(g2)});
    if (!g2_ok) {
        rep.verdict = Verdict::NotIntegrable;
        rep.obstruction = loop_kind_to_string(LoopKind::Gamma2);
        return rep;
    }
    rep.verdict = Verdict::Integrable;
    return rep;
}

std::vector<long long> integrate_along(const std::vector<long long>& base_doubled,
                                       const std::vector<CrossingEvent>& events,
                                       const WeightFn& psi) {
    if (static_cast<int>(base_doubled.size()) != psi.dim) {
        throw KeySpaceMismatch("base value dimension disagrees with the weight dimension");
    }
    DeltaValue d = delta_along(events, psi);
    std::vector<long long> out = base_doubled;
    for (int i = 0; i < psi.dim; ++i) out[i] += d.doubled[i];
    return out;
}

std::string verdict_to_string(Verdict v) {
    switch (v) {
        case Verdict::Integrable: return "integrable";
        case Verdict::NotIntegrable: return "not-integrable";
        case Verdict::Conditional: return "conditional";
    }
    return "conditional";
}

}  // namespace frontwave
