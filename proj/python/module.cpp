#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "frontwave/classes.hpp"
#include "frontwave/errors.hpp"
#include "frontwave/front.hpp"
#include "frontwave/group.hpp"
#include "frontwave/homotopy.hpp"
#include "frontwave/integrate.hpp"
#include "frontwave/invariants.hpp"
#include "frontwave/moves.hpp"
#include "frontwave/surface.hpp"
#include "frontwave/textio.hpp"

namespace py = pybind11;
using namespace frontwave;

namespace {

GroupElem word_on(const std::string& surface, const std::string& word) {
    return from_word(Ambient::STF, surface_from_string(surface), word);
}

py::dict delta_dict(const DeltaValue& dv) {
    py::dict d;
    py::list doubled;
    for (long long v : dv.doubled) doubled.append(v);
    d["doubled"] = doubled;
    d["zero"] = dv.is_zero();
    return d;
}

}  // namespace

PYBIND11_MODULE(_frontwave, m) {
    m.doc() = "crossing invariants of cooriented wave fronts on surfaces";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const FrontwaveError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "canonical_front",
        [](const std::string& text) { return serialize_front(parse_front_text(text)); },
        py::arg("text"), "Parse a front code file and return its canonical serialization.");

    m.def(
        "validate_front",
        [](const std::string& text) {
            const auto rep = validate(parse_front_text(text));
            py::list out;
            for (const auto& prob : rep.problems) {
                py::dict d;
                d["code"] = prob.code;
                d["index"] = prob.index;
                d["message"] = prob.message;
                out.append(d);
            }
            return out;
        },
        py::arg("text"), "List consistency problems of a front code file, empty when valid.");

    m.def(
        "front_info",
        [](const std::string& text) {
            const FrontCode code = parse_front_text(text);
            const auto idx = indices(code);
            const GroupElem global = global_class(code);
            py::dict out;
            out["surface"] = surface_to_string(code.surface);
            out["global"] = to_word(global);
            out["maslov"] = idx.maslov;
            if (idx.whitney)
                out["whitney"] = *idx.whitney;
            else
                out["whitney"] = py::none();
            out["parity"] =
                orientation_parity(global) == -1 ? std::string("reversing") : std::string("preserving");
            py::list dps;
            for (int id : double_point_ids(code)) {
                const auto [s1, s2] = loop_pair_at(code, id);
                py::dict d;
                d["id"] = id;
                d["key"] = key_to_string(kplus_key(s1, s2));
                dps.append(d);
            }
            out["double_points"] = dps;
            return out;
        },
        py::arg("text"), "Global class, indices and double point classes of a front code file.");

    m.def(
        "planar_value",
        [](const std::string& invariant, int omega, int k) {
            return doubled_to_string(
                planar_base_value(planar_invariant_from_string(invariant), {omega, k}));
        },
        py::arg("invariant"), py::arg("omega"), py::arg("k"),
        "Base value of Stp, Jplus or Jminus on the standard planar front, as text.");

    m.def(
        "planar_value_doubled",
        [](const std::string& invariant, int omega, int k) {
            return planar_base_value(planar_invariant_from_string(invariant), {omega, k});
        },
        py::arg("invariant"), py::arg("omega"), py::arg("k"),
        "Base value as a doubled integer.");

    m.def(
        "iplus_front",
        [](const std::string& text) {
            return module_vector_to_string(iplus(parse_front_text(text)));
        },
        py::arg("text"), "Tangency class vector of a front code file, one term per line.");

    m.def(
        "iplus_change",
        [](const std::string& surface, const std::string& w1, const std::string& w2) {
            return module_vector_to_string(iplus_delta(word_on(surface, w1), word_on(surface, w2)));
        },
        py::arg("surface"), py::arg("w1"), py::arg("w2"),
        "Change of the tangency class vector under a positive dangerous tangency crossing.");

    m.def(
        "canonical_key",
        [](const std::string& surface, const std::string& literal) {
            return key_to_string(key_from_string(surface_from_string(surface), literal));
        },
        py::arg("surface"), py::arg("literal"),
        "Canonical form of a crossing class key literal.");

    m.def(
        "class_order",
        [](const std::string& surface, const std::string& k1,
           const std::string& k2) -> py::object {
            const SurfaceSpec surf = surface_from_string(surface);
            const auto o =
                order_index(key_from_string(surf, k1), key_from_string(surf, k2));
            if (o) return py::int_(*o);
            return py::none();
        },
        py::arg("surface"), py::arg("k1"), py::arg("k2"),
        "Relative position inside a fiber shift family, None when unrelated.");

    m.def(
        "apply_moves",
        [](const std::string& front_text, const std::string& moves_text,
           const std::string& weights_text) {
            FrontCode code = parse_front_text(front_text);
            const auto moves = parse_moves_text(code.surface, moves_text);
            const WeightsFile wf = parse_weights_text(weights_text);
            if (!(wf.surface == code.surface))
                throw KeySpaceMismatch("weight table surface differs from the front surface");
            std::vector<CrossingEvent> events;
            for (const auto& mv : moves) {
                auto res = apply_move(code, mv);
                code = res.code;
                events.push_back(res.event);
            }
            py::dict out;
            out["crossings"] = events.size();
            out["delta"] = delta_dict(delta_along(events, wf.psi));
            out["final_front"] = serialize_front(code);
            out["events"] = serialize_events({code.surface, events});
            return out;
        },
        py::arg("front_text"), py::arg("moves_text"), py::arg("weights_text"),
        "Run a move script against a weight table, returning the delta and the final code.");

    m.def(
        "check_local",
        [](const std::string& weights_text, const std::vector<std::string>& witness_words) {
            const WeightsFile wf = parse_weights_text(weights_text);
            std::vector<GroupElem> witnesses;
            for (const auto& w : witness_words)
                witnesses.push_back(from_word(Ambient::STF, wf.surface, w));
            const LocalCheck lc = check_local_integrability(wf.psi, wf.surface, witnesses);
            py::dict out;
            out["pass"] = lc.pass;
            py::list items;
            for (const auto& item : lc.items) {
                py::dict d;
                d["wall"] = loop_kind_to_string(item.kind);
                d["pass"] = item.pass;
                d["delta"] = delta_dict(item.delta);
                items.append(d);
            }
            out["items"] = items;
            return out;
        },
        py::arg("weights_text"), py::arg("witness_words") = std::vector<std::string>{},
        "Run a weight table along the codimension two wall templates.");

    m.def(
        "global_verdict",
        [](const std::string& weights_text, const std::string& front_text,
           const std::string& component, const std::optional<std::string>& gamma2_events_text) {
            const WeightsFile wf = parse_weights_text(weights_text);
            const FrontCode code = parse_front_text(front_text);
            if (!(code.surface == wf.surface))
                throw KeySpaceMismatch("front surface differs from the weight table surface");
            bool reversing = false;
            if (component == "auto")
                reversing = orientation_parity(global_class(code)) == -1;
            else if (component == "reversing")
                reversing = true;
            else if (component == "preserving")
                reversing = false;
            else
                throw FrontwaveError("component wants auto, preserving, or reversing");
            std::optional<std::vector<CrossingEvent>> g2;
            if (gamma2_events_text) {
                const EventsFile ev = parse_events_text(*gamma2_events_text);
                if (!(ev.surface == wf.surface))
                    throw KeySpaceMismatch("cover slide events surface differs from the table");
                g2 = ev.events;
            }
            const VerdictReport rep = integrability_verdict(wf.psi, code, {reversing}, g2);
            py::dict out;
            out["component"] = reversing ? std::string("reversing") : std::string("preserving");
            out["verdict"] = verdict_to_string(rep.verdict);
            out["obstruction"] = rep.obstruction;
            py::list deltas;
            for (const auto& [name, dv] : rep.deltas) {
                py::dict d;
                d["name"] = name;
                d["delta"] = delta_dict(dv);
                deltas.append(d);
            }
            out["deltas"] = deltas;
            return out;
        },
        py::arg("weights_text"), py::arg("front_text"), py::arg("component") = "auto",
        py::arg("gamma2_events_text") = std::nullopt,
        "Decide whether a locally integrable weight table gives an invariant on a component.");

    m.def(
        "pi1_descriptor",
        [](const std::string& surface, const std::optional<std::string>& lift) {
            const SurfaceSpec surf = surface_from_string(surface);
            FrontClassData data;
            if (lift) data.lift = from_word(Ambient::STF, surf, *lift);
            return descriptor_to_string(pi1_front_space(surf, data));
        },
        py::arg("surface"), py::arg("lift") = std::nullopt,
        "Fundamental group of the component of fronts realizing the lifted class.");

    m.def(
        "pin_descriptor",
        [](const std::string& surface, int degree) {
            return descriptor_to_string(pi_n_front_space(surface_from_string(surface), degree));
        },
        py::arg("surface"), py::arg("degree"),
        "Higher homotopy group of a front component space.");

    m.def(
        "cstf_descriptor",
        [](const std::string& surface) {
            return descriptor_to_string(pi1_cstf_descriptor(surface_from_string(surface)));
        },
        py::arg("surface"), "Fundamental group of the cooriented contact element space.");

    m.def("cstf_pairing", [] { return cstf_parity_rule(); },
          "How cover parity pairs with orientation behavior in the contact element space.");
}
