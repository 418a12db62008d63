#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

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

using nlohmann::json;

namespace {

int g_exit = 0;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw frontwave::FrontwaveError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw frontwave::FrontwaveError("cannot write file: " + path);
    out << text;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

// Word arguments accept commas in place of spaces so they survive shells
// without quoting.
std::string decode_word(std::string w) {
    for (char& ch : w) {
        if (ch == ',') ch = ' ';
    }
    return w;
}

std::vector<frontwave::GroupElem> parse_word_list(const frontwave::SurfaceSpec& surface,
                                                  const std::string& text) {
    std::vector<frontwave::GroupElem> out;
    for (const auto& part : split_on(text, '|')) {
        out.push_back(frontwave::from_word(frontwave::Ambient::STF, surface, decode_word(part)));
    }
    return out;
}

std::vector<long long> parse_int_csv(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    for (const auto& part : split_on(text, ',')) {
        try {
            size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            out.push_back(v);
        } catch (const std::exception&) {
            throw frontwave::FrontwaveError("malformed integer in " + what + ": " + part);
        }
    }
    return out;
}

std::string doubled_list(const std::vector<long long>& doubled) {
    std::string out;
    for (size_t i = 0; i < doubled.size(); ++i) {
        if (i) out += " ";
        out += frontwave::doubled_to_string(doubled[i]);
    }
    return out;
}

std::optional<bool> parse_tristate(const std::string& value, const std::string& name) {
    if (value.empty()) return std::nullopt;
    if (value == "true") return true;
    if (value == "false") return false;
    throw frontwave::FrontwaveError(name + " must be true or false");
}

struct ValidateOpts {
    std::vector<std::string> files;
    int jobs = 1;
    bool as_json = false;
};

struct FileOutcome {
    // 0 valid, 1 invalid, 2 parse error, 3 read error
    int status = 0;
    std::string message;
    int line = 0;
    int col = 0;
    frontwave::ValidationReport report;
};

FileOutcome check_one_file(const std::string& path) {
    FileOutcome out;
    try {
        const std::string text = read_file(path);
        const frontwave::FrontCode code = frontwave::parse_front_text(text);
        out.report = frontwave::validate(code);
        out.status = out.report.ok() ? 0 : 1;
    } catch (const frontwave::ParseError& e) {
        out.status = 2;
        out.message = e.what();
        out.line = e.line;
        out.col = e.col;
    } catch (const frontwave::FrontwaveError& e) {
        out.status = 3;
        out.message = e.what();
    }
    return out;
}

void run_validate(const ValidateOpts& opt) {
    std::vector<FileOutcome> results(opt.files.size());
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || opt.files.size() <= 1) {
        for (size_t i = 0; i < opt.files.size(); ++i) results[i] = check_one_file(opt.files[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        const size_t workers = std::min<size_t>(jobs, opt.files.size());
        for (size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= opt.files.size()) return;
                    results[i] = check_one_file(opt.files[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    bool any_parse = false;
    bool any_bad = false;
    json arr = json::array();
    for (size_t i = 0; i < opt.files.size(); ++i) {
        const auto& file = opt.files[i];
        const auto& res = results[i];
        if (res.status == 2) any_parse = true;
        if (res.status == 1 || res.status == 3) any_bad = true;
        if (opt.as_json) {
            json item;
            item["file"] = file;
            switch (res.status) {
                case 0: item["status"] = "ok"; break;
                case 1: item["status"] = "invalid"; break;
                case 2:
                    item["status"] = "parse-error";
                    item["error"] = res.message;
                    item["line"] = res.line;
                    item["col"] = res.col;
                    break;
                default: item["status"] = "error"; item["error"] = res.message; break;
            }
            if (res.status == 1) {
                json problems = json::array();
                for (const auto& p : res.report.problems) {
                    json q;
                    q["code"] = p.code;
                    q["index"] = p.index;
                    q["message"] = p.message;
                    problems.push_back(q);
                }
                item["problems"] = problems;
            }
            arr.push_back(item);
            continue;
        }
        switch (res.status) {
            case 0:
                std::cout << file << ": ok\n";
                break;
            case 1:
                std::cout << file << ": invalid\n";
                for (const auto& p : res.report.problems) {
                    std::cout << "  " << p.code;
                    if (p.index >= 0) std::cout << " at " << p.index;
                    std::cout << ": " << p.message << "\n";
                }
                break;
            case 2:
                std::cout << file << ": parse error: " << res.message << "\n";
                break;
            default:
                std::cout << file << ": error: " << res.message << "\n";
                break;
        }
    }
    if (opt.as_json) std::cout << arr.dump(2) << "\n";
    if (any_parse)
        g_exit = 2;
    else if (any_bad)
        g_exit = 1;
}

struct InvariantsOpts {
    std::string inv;
    std::string base;
    std::string events_file;
    bool as_json = false;
};

void run_invariants(const InvariantsOpts& opt) {
    const frontwave::PlanarInvariant inv = frontwave::planar_invariant_from_string(opt.inv);
    const auto labels = parse_int_csv(opt.base, "--base");
    if (labels.size() != 2 || labels[0] < 0 || labels[1] < 0)
        throw frontwave::FrontwaveError("--base wants two non negative integers omega,k");
    const frontwave::StandardFrontId id{static_cast<int>(labels[0]), static_cast<int>(labels[1])};

    long long doubled = 0;
    if (opt.events_file.empty()) {
        doubled = frontwave::planar_base_value(inv, id);
    } else {
        const frontwave::EventsFile ev = frontwave::parse_events_text(read_file(opt.events_file));
        if (ev.surface.kind != frontwave::SurfaceKind::Plane)
            throw frontwave::FrontwaveError("planar invariants want a plane event list, got surface " +
                                            frontwave::surface_to_string(ev.surface));
        doubled = frontwave::planar_invariant(inv, id, ev.events);
    }

    if (opt.as_json) {
        json out;
        out["invariant"] = opt.inv;
        out["omega"] = id.omega;
        out["k"] = id.k;
        out["doubled"] = doubled;
        out["value"] = frontwave::doubled_to_string(doubled);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << frontwave::doubled_to_string(doubled) << "\n";
    }
}

struct IplusOpts {
    std::string front_file;
    std::string delta;
    std::string surface;
    bool as_json = false;
};

void run_iplus(const IplusOpts& opt) {
    frontwave::ModuleVector vec;
    if (!opt.front_file.empty()) {
        vec = frontwave::iplus(frontwave::parse_front_text(read_file(opt.front_file)));
    } else {
        const frontwave::SurfaceSpec surface = frontwave::surface_from_string(opt.surface);
        const auto words = split_on(opt.delta, '|');
        if (words.size() != 2)
            throw frontwave::FrontwaveError("--delta wants two loop words separated by |");
        const auto s1 = frontwave::from_word(frontwave::Ambient::STF, surface, decode_word(words[0]));
        const auto s2 = frontwave::from_word(frontwave::Ambient::STF, surface, decode_word(words[1]));
        vec = frontwave::iplus_delta(s1, s2);
    }

    if (opt.as_json) {
        json terms = json::array();
        for (const auto& [key, coeff] : vec.terms) {
            json t;
            t["doubled"] = coeff;
            t["coefficient"] = frontwave::doubled_to_string(coeff);
            t["key"] = frontwave::key_to_string(key);
            terms.push_back(t);
        }
        json out;
        out["zero"] = vec.is_zero();
        out["terms"] = terms;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << frontwave::module_vector_to_string(vec) << "\n";
    }
}

struct ClassesOpts {
    std::string surface;
    std::string key;
    std::string other;
    std::string front_file;
    bool as_json = false;
};

void run_classes(const ClassesOpts& opt) {
    if (!opt.front_file.empty()) {
        const frontwave::FrontCode code = frontwave::parse_front_text(read_file(opt.front_file));
        const auto report = frontwave::validate(code);
        if (!report.ok())
            throw frontwave::BadFrontCode("front code fails validation: " +
                                          report.problems.front().message);
        const auto ids = frontwave::double_point_ids(code);
        const auto idx = frontwave::indices(code);
        const auto global = frontwave::global_class(code);
        const bool reversing = frontwave::orientation_parity(global) == -1;

        if (opt.as_json) {
            json dps = json::array();
            for (int id : ids) {
                const auto [s1, s2] = frontwave::loop_pair_at(code, id);
                json d;
                d["id"] = id;
                d["key"] = frontwave::key_to_string(frontwave::kplus_key(s1, s2));
                dps.push_back(d);
            }
            json out;
            out["double_points"] = dps;
            out["global"] = frontwave::to_word(global);
            out["maslov"] = idx.maslov;
            if (idx.whitney)
                out["whitney"] = *idx.whitney;
            else
                out["whitney"] = nullptr;
            out["parity"] = reversing ? "reversing" : "preserving";
            std::cout << out.dump(2) << "\n";
        } else {
            for (int id : ids) {
                const auto [s1, s2] = frontwave::loop_pair_at(code, id);
                std::cout << "dp " << id << ": "
                          << frontwave::key_to_string(frontwave::kplus_key(s1, s2)) << "\n";
            }
            std::cout << "global: " << frontwave::to_word(global) << "\n";
            std::cout << "maslov: " << idx.maslov << "\n";
            std::cout << "whitney: "
                      << (idx.whitney ? std::to_string(*idx.whitney) : std::string("none")) << "\n";
            std::cout << "parity: " << (reversing ? "reversing" : "preserving") << "\n";
        }
        return;
    }

    const frontwave::SurfaceSpec surface = frontwave::surface_from_string(opt.surface);
    const frontwave::ClassKey k1 = frontwave::key_from_string(surface, opt.key);
    std::optional<frontwave::ClassKey> k2;
    std::optional<long long> order;
    if (!opt.other.empty()) {
        k2 = frontwave::key_from_string(surface, opt.other);
        order = frontwave::order_index(k1, *k2);
    }

    if (opt.as_json) {
        json out;
        out["key"] = frontwave::key_to_string(k1);
        if (k2) {
            out["other"] = frontwave::key_to_string(*k2);
            if (order)
                out["order"] = *order;
            else
                out["order"] = nullptr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << frontwave::key_to_string(k1) << "\n";
        if (k2) {
            std::cout << frontwave::key_to_string(*k2) << "\n";
            std::cout << "order = " << (order ? std::to_string(*order) : std::string("none"))
                      << "\n";
        }
    }
}

struct IntegrateOpts {
    std::string front_file;
    std::string moves_file;
    std::string psi_file;
    std::string base;
    std::string out_file;
    std::string events_out;
    bool as_json = false;
};

void run_integrate(const IntegrateOpts& opt) {
    frontwave::FrontCode code = frontwave::parse_front_text(read_file(opt.front_file));
    const frontwave::SurfaceSpec surface = code.surface;
    const auto moves = frontwave::parse_moves_text(surface, read_file(opt.moves_file));
    const frontwave::WeightsFile wf = frontwave::parse_weights_text(read_file(opt.psi_file));
    if (!(wf.surface == surface))
        throw frontwave::KeySpaceMismatch("weight table surface " +
                                          frontwave::surface_to_string(wf.surface) +
                                          " differs from the front surface " +
                                          frontwave::surface_to_string(surface));

    std::vector<frontwave::CrossingEvent> events;
    for (const auto& m : moves) {
        auto res = frontwave::apply_move(code, m);
        code = res.code;
        events.push_back(res.event);
    }
    const frontwave::DeltaValue delta = frontwave::delta_along(events, wf.psi);

    std::optional<std::vector<long long>> value;
    if (!opt.base.empty()) {
        const auto base = parse_int_csv(opt.base, "--base");
        if (static_cast<int>(base.size()) != wf.psi.dim)
            throw frontwave::FrontwaveError("--base length must match the weight dimension");
        value = frontwave::integrate_along(base, events, wf.psi);
    }

    if (!opt.out_file.empty()) write_file(opt.out_file, frontwave::serialize_front(code));
    if (!opt.events_out.empty())
        write_file(opt.events_out, frontwave::serialize_events({surface, events}));

    if (opt.as_json) {
        json out;
        out["crossings"] = events.size();
        out["delta_doubled"] = delta.doubled;
        out["delta"] = doubled_list(delta.doubled);
        if (value) {
            out["value_doubled"] = *value;
            out["value"] = doubled_list(*value);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "crossings: " << events.size() << "\n";
        std::cout << "delta = " << doubled_list(delta.doubled) << "\n";
        if (value) std::cout << "value = " << doubled_list(*value) << "\n";
    }
}

struct CheckOpts {
    std::string psi_file;
    std::string witness;
    std::string front_file;
    std::string component = "auto";
    std::string gamma2_file;
    bool as_json = false;
};

void run_check(const CheckOpts& opt) {
    const frontwave::WeightsFile wf = frontwave::parse_weights_text(read_file(opt.psi_file));
    std::vector<frontwave::GroupElem> witnesses;
    if (!opt.witness.empty()) witnesses = parse_word_list(wf.surface, opt.witness);
    const frontwave::LocalCheck local =
        frontwave::check_local_integrability(wf.psi, wf.surface, witnesses);

    json out;
    if (opt.as_json) {
        json items = json::array();
        for (const auto& item : local.items) {
            json j;
            j["wall"] = frontwave::loop_kind_to_string(item.kind);
            j["pass"] = item.pass;
            j["delta_doubled"] = item.delta.doubled;
            items.push_back(j);
        }
        out["local"] = {{"items", items}, {"pass", local.pass}};
    } else {
        for (const auto& item : local.items) {
            std::cout << frontwave::loop_kind_to_string(item.kind) << ": "
                      << (item.pass ? "pass" : "fail");
            if (!item.pass) std::cout << " delta = " << doubled_list(item.delta.doubled);
            std::cout << "\n";
        }
        std::cout << "local: " << (local.pass ? "pass" : "fail") << "\n";
    }

    if (!opt.front_file.empty()) {
        const frontwave::FrontCode code = frontwave::parse_front_text(read_file(opt.front_file));
        if (!(code.surface == wf.surface))
            throw frontwave::KeySpaceMismatch("front surface " +
                                              frontwave::surface_to_string(code.surface) +
                                              " differs from the weight table surface " +
                                              frontwave::surface_to_string(wf.surface));
        bool reversing = false;
        if (opt.component == "auto") {
            reversing = frontwave::orientation_parity(frontwave::global_class(code)) == -1;
        } else if (opt.component == "reversing") {
            reversing = true;
        } else if (opt.component == "preserving") {
            reversing = false;
        } else {
            throw frontwave::FrontwaveError("--component wants auto, preserving, or reversing");
        }
        std::optional<std::vector<frontwave::CrossingEvent>> g2;
        if (!opt.gamma2_file.empty()) {
            const frontwave::EventsFile ev = frontwave::parse_events_text(read_file(opt.gamma2_file));
            if (!(ev.surface == wf.surface))
                throw frontwave::KeySpaceMismatch("cover slide events surface " +
                                                  frontwave::surface_to_string(ev.surface) +
                                                  " differs from the weight table surface " +
                                                  frontwave::surface_to_string(wf.surface));
            g2 = ev.events;
        }
        const frontwave::VerdictReport rep =
            frontwave::integrability_verdict(wf.psi, code, {reversing}, g2);

        if (opt.as_json) {
            out["component"] = reversing ? "reversing" : "preserving";
            out["verdict"] = frontwave::verdict_to_string(rep.verdict);
            if (!rep.obstruction.empty()) out["obstruction"] = rep.obstruction;
            json deltas = json::array();
            for (const auto& [name, dv] : rep.deltas) {
                json d;
                d["name"] = name;
                d["delta_doubled"] = dv.doubled;
                deltas.push_back(d);
            }
            out["deltas"] = deltas;
        } else {
            std::cout << "component: " << (reversing ? "reversing" : "preserving") << "\n";
            std::cout << "verdict: " << frontwave::verdict_to_string(rep.verdict) << "\n";
            if (!rep.obstruction.empty()) std::cout << "obstruction: " << rep.obstruction << "\n";
            for (const auto& [name, dv] : rep.deltas)
                std::cout << name << " delta = " << doubled_list(dv.doubled) << "\n";
        }
    }

    if (opt.as_json) std::cout << out.dump(2) << "\n";
}

struct HomotopyOpts {
    std::string query;
    std::string surface;
    std::string front_file;
    std::string lift;
    std::string base_trivial;
    std::string reversing;
    std::string even_reversing_power;
    int degree = 0;
    std::string case_name;
    bool as_json = false;
};

frontwave::NonorientableClassCase case_from_name(const std::string& name) {
    if (name == "reversing-base") return frontwave::NonorientableClassCase::ReversingBase;
    if (name == "even-reversing-power")
        return frontwave::NonorientableClassCase::EvenReversingPower;
    if (name == "preserving-other") return frontwave::NonorientableClassCase::PreservingOther;
    if (name == "trivial-base-nontrivial-lift")
        return frontwave::NonorientableClassCase::TrivialBaseNontrivialLift;
    if (name == "trivial-base-trivial-lift")
        return frontwave::NonorientableClassCase::TrivialBaseTrivialLift;
    throw frontwave::FrontwaveError("unknown case name: " + name);
}

void run_homotopy(const HomotopyOpts& opt) {
    frontwave::GroupDescriptor desc;
    std::optional<std::string> pairing;

    if (opt.query == "lookup") {
        desc = frontwave::pi1_front_space_lookup(case_from_name(opt.case_name));
    } else {
        if (opt.surface.empty() && opt.front_file.empty())
            throw frontwave::FrontwaveError("--surface is required here");
        std::optional<frontwave::SurfaceSpec> surface;
        if (!opt.surface.empty()) surface = frontwave::surface_from_string(opt.surface);

        if (opt.query == "pin") {
            if (opt.degree < 2)
                throw frontwave::FrontwaveError("--degree wants an integer at least 2");
            desc = frontwave::pi_n_front_space(*surface, opt.degree);
        } else if (opt.query == "cstf") {
            desc = frontwave::pi1_cstf_descriptor(*surface);
            pairing = frontwave::cstf_parity_rule();
        } else {
            frontwave::FrontClassData data;
            if (!opt.front_file.empty()) {
                const frontwave::FrontCode code =
                    frontwave::parse_front_text(read_file(opt.front_file));
                if (surface && !(*surface == code.surface))
                    throw frontwave::FrontwaveError("--surface disagrees with the front file");
                surface = code.surface;
                data.lift = frontwave::global_class(code);
            } else if (!opt.lift.empty()) {
                data.lift =
                    frontwave::from_word(frontwave::Ambient::STF, *surface, decode_word(opt.lift));
            } else {
                data.base_trivial = parse_tristate(opt.base_trivial, "--base-trivial");
                data.reversing = parse_tristate(opt.reversing, "--reversing");
                data.even_reversing_power =
                    parse_tristate(opt.even_reversing_power, "--even-reversing-power");
            }
            desc = frontwave::pi1_front_space(*surface, data);
        }
    }

    if (opt.as_json) {
        json out;
        out["descriptor"] = frontwave::descriptor_to_string(desc);
        if (pairing) out["pairing"] = *pairing;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << frontwave::descriptor_to_string(desc) << "\n";
        if (pairing) std::cout << "pairing: " << *pairing << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wave front crossing invariants toolkit"};
    app.require_subcommand(1);

    auto vopt = std::make_shared<ValidateOpts>();
    auto* validate = app.add_subcommand("validate", "Check front code files for consistency");
    validate->add_option("files", vopt->files, "front code files")->required();
    validate->add_option("--jobs", vopt->jobs, "worker threads for batches")
        ->check(CLI::PositiveNumber);
    validate->add_flag("--json", vopt->as_json, "machine readable output");
    validate->callback([vopt] { run_validate(*vopt); });

    auto iopt = std::make_shared<InvariantsOpts>();
    auto* invariants = app.add_subcommand("invariants", "Evaluate planar front invariants");
    invariants->add_option("--inv", iopt->inv, "one of Stp, Jplus, Jminus")->required();
    invariants->add_option("--base", iopt->base, "standard front label omega,k")->required();
    invariants->add_option("--events", iopt->events_file, "crossing event list to follow");
    invariants->add_flag("--json", iopt->as_json, "machine readable output");
    invariants->callback([iopt] { run_invariants(*iopt); });

    auto popt = std::make_shared<IplusOpts>();
    auto* iplus_cmd = app.add_subcommand("iplus", "Tangency class vector of a front");
    auto* popt_front = iplus_cmd->add_option("--front", popt->front_file, "front code file");
    auto* popt_delta = iplus_cmd->add_option(
        "--delta", popt->delta, "loop pair w1|w2 for the crossing change formula");
    auto* popt_surface =
        iplus_cmd->add_option("--surface", popt->surface, "surface spec for --delta");
    popt_front->excludes(popt_delta)->excludes(popt_surface);
    popt_delta->needs(popt_surface);
    iplus_cmd->add_flag("--json", popt->as_json, "machine readable output");
    iplus_cmd->callback([popt] {
        if (popt->front_file.empty() && popt->delta.empty())
            throw frontwave::FrontwaveError("pass one of --front or --delta");
        run_iplus(*popt);
    });

    auto copt = std::make_shared<ClassesOpts>();
    auto* classes = app.add_subcommand("classes", "Canonical crossing class keys");
    auto* copt_surface = classes->add_option("--surface", copt->surface, "surface spec");
    auto* copt_key = classes->add_option("--key", copt->key, "class key literal");
    auto* copt_other =
        classes->add_option("--other", copt->other, "second key for the order index");
    auto* copt_front =
        classes->add_option("--front", copt->front_file, "front code file to classify");
    copt_key->needs(copt_surface);
    copt_other->needs(copt_key);
    copt_front->excludes(copt_key)->excludes(copt_other)->excludes(copt_surface);
    classes->add_flag("--json", copt->as_json, "machine readable output");
    classes->callback([copt] {
        if (copt->front_file.empty() && copt->key.empty())
            throw frontwave::FrontwaveError("pass one of --front or --key");
        run_classes(*copt);
    });

    auto topt = std::make_shared<IntegrateOpts>();
    auto* integrate = app.add_subcommand("integrate", "Run a move script against a weight table");
    integrate->add_option("--front", topt->front_file, "starting front code file")->required();
    integrate->add_option("--moves", topt->moves_file, "move script file")->required();
    integrate->add_option("--psi", topt->psi_file, "weight table file")->required();
    integrate->add_option("--base", topt->base, "doubled start value, comma separated");
    integrate->add_option("--out", topt->out_file, "write the final front code here");
    integrate->add_option("--events-out", topt->events_out, "write the crossing events here");
    integrate->add_flag("--json", topt->as_json, "machine readable output");
    integrate->callback([topt] { run_integrate(*topt); });

    auto kopt = std::make_shared<CheckOpts>();
    auto* check = app.add_subcommand("check-integrability", "Test a weight table for invariance");
    check->add_option("--psi", kopt->psi_file, "weight table file")->required();
    check->add_option("--witness", kopt->witness, "witness loops w1|w2|...");
    auto* kopt_front =
        check->add_option("--front", kopt->front_file, "sample front for the global verdict");
    check->add_option("--component", kopt->component, "auto, preserving, or reversing")
        ->needs(kopt_front);
    check->add_option("--gamma2-events", kopt->gamma2_file, "cover slide event list")
        ->needs(kopt_front);
    check->add_flag("--json", kopt->as_json, "machine readable output");
    check->callback([kopt] { run_check(*kopt); });

    auto hopt = std::make_shared<HomotopyOpts>();
    auto* homotopy = app.add_subcommand("homotopy", "Homotopy groups of front component spaces");
    homotopy->add_option("query", hopt->query, "one of pi1, pin, cstf, lookup")
        ->required()
        ->check(CLI::IsMember({"pi1", "pin", "cstf", "lookup"}));
    homotopy->add_option("--surface", hopt->surface, "surface spec");
    auto* hopt_front = homotopy->add_option("--front", hopt->front_file, "front code file");
    auto* hopt_lift = homotopy->add_option("--lift", hopt->lift, "bundle class word");
    auto* hopt_bt =
        homotopy->add_option("--base-trivial", hopt->base_trivial, "true or false");
    auto* hopt_rev = homotopy->add_option("--reversing", hopt->reversing, "true or false");
    auto* hopt_erp = homotopy->add_option("--even-reversing-power", hopt->even_reversing_power,
                                          "true or false");
    hopt_front->excludes(hopt_lift)->excludes(hopt_bt)->excludes(hopt_rev)->excludes(hopt_erp);
    hopt_lift->excludes(hopt_bt)->excludes(hopt_rev)->excludes(hopt_erp);
    homotopy->add_option("--degree", hopt->degree, "homotopy degree for pin");
    homotopy->add_option("--case", hopt->case_name, "nonorientable case name for lookup");
    homotopy->add_flag("--json", hopt->as_json, "machine readable output");
    homotopy->callback([hopt] { run_homotopy(*hopt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const frontwave::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const frontwave::FrontwaveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
