#include "frontwave/textio.hpp"

#include <algorithm>
#include <sstream>

#include "frontwave/errors.hpp"

namespace frontwave {

namespace {

struct Line {
    std::string text;
    int number = 0;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#') out.push_back({line, number});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

struct Tok {
    std::string s;
    int col = 1;
};

std::vector<Tok> tokens_of(const std::string& line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::string rest_from(const std::string& line, int col) {
    std::size_t start = static_cast<std::size_t>(col - 1);
    if (start >= line.size()) return "";
    std::size_t last = line.find_last_not_of(" \t");
    return line.substr(start, last - start + 1);
}

long long parse_int(const std::string& s, int line, int col) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'", line, col);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line, col);
    }
}

int parse_sign(const std::string& s, int line, int col) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw ParseError("expected + or -, got '" + s + "'", line, col);
}

std::vector<long long> parse_int_list(const std::string& s, int line, int col) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty()) throw ParseError("empty entry in integer list", line, col);
        out.push_back(parse_int(part, line, col));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void expect_header(const std::vector<Line>& lines, const std::string& header) {
    if (lines.empty() || lines[0].text != header)
        throw ParseError("expected header '" + header + "'", lines.empty() ? 1 : lines[0].number, 1);
}

SurfaceSpec parse_surface_line(const Line& ln) {
    std::vector<Tok> toks = tokens_of(ln.text);
    if (toks.empty() || toks[0].s != "surface")
        throw ParseError("expected a surface line", ln.number, toks.empty() ? 1 : toks[0].col);
    if (toks.size() < 2) throw ParseError("surface line needs a kind", ln.number, 1);
    try {
        return surface_from_string(rest_from(ln.text, toks[1].col));
    } catch (const FrontwaveError& e) {
        throw ParseError(e.what(), ln.number, toks[1].col);
    }
}

int parse_numbered_prefix(const Tok& tok, int expected, const char* what, int line) {
    if (tok.s.empty() || tok.s.back() != ':')
        throw ParseError(std::string(what) + " number must end with ':'", line, tok.col);
    long long n = parse_int(tok.s.substr(0, tok.s.size() - 1), line, tok.col);
    if (n != expected)
        throw ParseError(std::string(what) + " lines must be numbered consecutively from 0", line,
                         tok.col);
    return static_cast<int>(n);
}

std::string slot_to_string(Slot s) { return s == Slot::first ? "first" : "second"; }

Slot slot_from_string(const std::string& s, int line, int col) {
    if (s == "first") return Slot::first;
    if (s == "second") return Slot::second;
    throw ParseError("expected first or second, got '" + s + "'", line, col);
}

std::string xtype_to_string(XType x) {
    switch (x) {
        case XType::R1: return "R1";
        case XType::R2: return "R2";
        case XType::C1: return "C1";
        case XType::C2: return "C2";
    }
    return "R1";
}

XType xtype_from_string(const std::string& s, int line, int col) {
    if (s == "R1") return XType::R1;
    if (s == "R2") return XType::R2;
    if (s == "C1") return XType::C1;
    if (s == "C2") return XType::C2;
    throw ParseError("expected a crossing tag R1, R2, C1 or C2, got '" + s + "'", line, col);
}

GroupElem parse_word_at(const SurfaceSpec& surface, const std::string& word, int line, int col) {
    try {
        return from_word(Ambient::STF, surface, word);
    } catch (const FrontwaveError& e) {
        throw ParseError(e.what(), line, col);
    }
}

std::string encode_witness(const GroupElem& e) {
    std::string w = to_word(e);
    std::replace(w.begin(), w.end(), ' ', ',');
    return w;
}

GroupElem decode_witness(const SurfaceSpec& surface, std::string w, int line, int col) {
    std::replace(w.begin(), w.end(), ',', ' ');
    return parse_word_at(surface, w, line, col);
}

ClassKey parse_key_at(const SurfaceSpec& surface, const std::string& literal, int line, int col) {
    try {
        return key_from_string(surface, literal);
    } catch (const FrontwaveError& e) {
        throw ParseError(e.what(), line, col);
    }
}

}  // namespace

FrontCode parse_front_text(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    expect_header(lines, "frontcode v1");
    if (lines.size() < 2) throw ParseError("missing surface line", lines[0].number + 1, 1);

    FrontCode code;
    code.surface = parse_surface_line(lines[1]);

    std::size_t idx = 2;
    int event_count = 0;
    for (; idx < lines.size(); ++idx) {
        const Line& ln = lines[idx];
        std::vector<Tok> toks = tokens_of(ln.text);
        if (toks[0].s != "event") break;
        parse_numbered_prefix(toks.size() > 1 ? toks[1] : Tok{"", 1}, event_count, "event",
                              ln.number);
        if (toks.size() < 3) throw ParseError("event line needs a kind D or C", ln.number, 1);
        if (toks[2].s == "D") {
            if (toks.size() != 6)
                throw ParseError("double point event takes id, slot and crossing tag", ln.number,
                                 toks[2].col);
            DoublePointEvent ev;
            ev.id = static_cast<int>(parse_int(toks[3].s, ln.number, toks[3].col));
            ev.slot = slot_from_string(toks[4].s, ln.number, toks[4].col);
            ev.xtype = xtype_from_string(toks[5].s, ln.number, toks[5].col);
            code.events.push_back(ev);
        } else if (toks[2].s == "C") {
            if (toks.size() != 5)
                throw ParseError("cusp event takes two signs", ln.number, toks[2].col);
            CuspEvent ev;
            ev.maslov_sign = parse_sign(toks[3].s, ln.number, toks[3].col);
            ev.rotation_sign = parse_sign(toks[4].s, ln.number, toks[4].col);
            code.events.push_back(ev);
        } else {
            throw ParseError("expected event kind D or C, got '" + toks[2].s + "'", ln.number,
                             toks[2].col);
        }
        ++event_count;
    }

    int arc_count = 0;
    for (; idx < lines.size(); ++idx) {
        const Line& ln = lines[idx];
        std::vector<Tok> toks = tokens_of(ln.text);
        if (toks[0].s != "arc")
            throw ParseError("expected an arc line, got '" + toks[0].s + "'", ln.number,
                             toks[0].col);
        parse_numbered_prefix(toks.size() > 1 ? toks[1] : Tok{"", 1}, arc_count, "arc", ln.number);
        if (toks.size() < 3) throw ParseError("arc line needs a word", ln.number, 1);
        code.arcs.push_back(
            parse_word_at(code.surface, rest_from(ln.text, toks[2].col), ln.number, toks[2].col));
        ++arc_count;
    }
    if (arc_count == 0)
        throw ParseError("front files need at least one arc line",
                         lines.back().number + 1, 1);
    return code;
}

std::string serialize_front(const FrontCode& code) {
    std::ostringstream out;
    out << "frontcode v1\n";
    out << "surface " << surface_to_string(code.surface) << "\n";
    for (std::size_t i = 0; i < code.events.size(); ++i) {
        out << "event " << i << ": ";
        if (const auto* d = std::get_if<DoublePointEvent>(&code.events[i])) {
            out << "D " << d->id << " " << slot_to_string(d->slot) << " "
                << xtype_to_string(d->xtype);
        } else {
            const auto& c = std::get<CuspEvent>(code.events[i]);
            out << "C " << (c.maslov_sign > 0 ? "+" : "-") << " "
                << (c.rotation_sign > 0 ? "+" : "-");
        }
        out << "\n";
    }
    for (std::size_t i = 0; i < code.arcs.size(); ++i) {
        out << "arc " << i << ": " << to_word(code.arcs[i]) << "\n";
    }
    return out.str();
}

std::vector<MoveSpec> parse_moves_text(const SurfaceSpec& surface, const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    expect_header(lines, "moves v1");

    std::vector<MoveSpec> out;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const Line& ln = lines[idx];
        std::vector<Tok> toks = tokens_of(ln.text);
        MoveSpec m;
        try {
            m.stratum = stratum_from_string(toks[0].s);
        } catch (const FrontwaveError& e) {
            throw ParseError(e.what(), ln.number, toks[0].col);
        }
        if (toks.size() < 3)
            throw ParseError("move lines need a direction and a site", ln.number, 1);
        m.direction = parse_sign(toks[1].s, ln.number, toks[1].col);

        bool have_site = false;
        for (std::size_t t = 2; t < toks.size(); ++t) {
            const Tok& tok = toks[t];
            std::size_t eq = tok.s.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected field=value, got '" + tok.s + "'", ln.number, tok.col);
            std::string field = tok.s.substr(0, eq);
            std::string value = tok.s.substr(eq + 1);
            int vcol = tok.col + static_cast<int>(eq) + 1;
            if (value.empty())
                throw ParseError("field '" + field + "' needs a value", ln.number, vcol);
            if (field == "site") {
                if (have_site) throw ParseError("duplicate site field", ln.number, tok.col);
                for (long long v : parse_int_list(value, ln.number, vcol))
                    m.site.push_back(static_cast<int>(v));
                have_site = true;
            } else if (field == "witness") {
                if (!m.witness.empty())
                    throw ParseError("duplicate witness field", ln.number, tok.col);
                std::size_t pos = 0;
                while (true) {
                    std::size_t bar = value.find('|', pos);
                    std::string part = value.substr(
                        pos, bar == std::string::npos ? std::string::npos : bar - pos);
                    m.witness.push_back(decode_witness(surface, part, ln.number, vcol));
                    if (bar == std::string::npos) break;
                    pos = bar + 1;
                }
            } else if (field == "triangle") {
                if (!m.triangle.empty())
                    throw ParseError("duplicate triangle field", ln.number, tok.col);
                if (value.size() != 3 || value.find_first_not_of("+-") != std::string::npos)
                    throw ParseError("triangle takes three signs", ln.number, vcol);
                m.triangle = value;
            } else if (field == "rot") {
                m.rotation_sign = parse_sign(value, ln.number, vcol);
            } else if (field == "tang") {
                if (value == "inverse") m.inverse_tangency = true;
                else if (value == "direct") m.inverse_tangency = false;
                else throw ParseError("tang takes direct or inverse", ln.number, vcol);
            } else if (field == "ids") {
                std::vector<long long> ids = parse_int_list(value, ln.number, vcol);
                if (ids.size() != 2)
                    throw ParseError("ids takes two integers", ln.number, vcol);
                m.new_id1 = static_cast<int>(ids[0]);
                m.new_id2 = static_cast<int>(ids[1]);
            } else {
                throw ParseError("unknown move field '" + field + "'", ln.number, tok.col);
            }
        }
        if (!have_site) throw ParseError("move lines need a site field", ln.number, 1);
        out.push_back(std::move(m));
    }
    return out;
}

std::string serialize_moves(const std::vector<MoveSpec>& moves) {
    std::ostringstream out;
    out << "moves v1\n";
    for (const MoveSpec& m : moves) {
        out << stratum_to_string(m.stratum) << " " << (m.direction > 0 ? "+" : "-") << " site=";
        for (std::size_t i = 0; i < m.site.size(); ++i) {
            if (i) out << ",";
            out << m.site[i];
        }
        if (!m.witness.empty()) {
            out << " witness=";
            for (std::size_t i = 0; i < m.witness.size(); ++i) {
                if (i) out << "|";
                out << encode_witness(m.witness[i]);
            }
        }
        if (!m.triangle.empty()) out << " triangle=" << m.triangle;
        if (m.rotation_sign < 0) out << " rot=-";
        if (m.inverse_tangency) out << " tang=inverse";
        if (m.new_id1 != 0 || m.new_id2 != 0) out << " ids=" << m.new_id1 << "," << m.new_id2;
        out << "\n";
    }
    return out.str();
}

WeightsFile parse_weights_text(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    expect_header(lines, "weights v1");
    if (lines.size() < 2) throw ParseError("missing surface line", lines[0].number + 1, 1);
    WeightsFile out;
    out.surface = parse_surface_line(lines[1]);

    if (lines.size() < 3) throw ParseError("missing dim line", lines[1].number + 1, 1);
    std::vector<Tok> dim_toks = tokens_of(lines[2].text);
    if (dim_toks[0].s != "dim" || dim_toks.size() != 2)
        throw ParseError("expected a dim line", lines[2].number, dim_toks[0].col);
    long long dim = parse_int(dim_toks[1].s, lines[2].number, dim_toks[1].col);
    if (dim < 1) throw ParseError("dim must be at least 1", lines[2].number, dim_toks[1].col);
    out.psi.dim = static_cast<int>(dim);

    for (std::size_t idx = 3; idx < lines.size(); ++idx) {
        const Line& ln = lines[idx];
        std::size_t close = ln.text.rfind(']');
        if (close == std::string::npos)
            throw ParseError("weight entries start with a class key literal", ln.number, 1);
        std::size_t first = ln.text.find_first_not_of(" \t");
        ClassKey key = parse_key_at(out.surface, ln.text.substr(first, close - first + 1),
                                    ln.number, static_cast<int>(first) + 1);
        if (out.psi.table.count(key))
            throw ParseError("duplicate weight entry " + key_to_string(key), ln.number,
                             static_cast<int>(first) + 1);
        std::vector<Tok> toks = tokens_of(ln.text.substr(close + 1));
        if (static_cast<long long>(toks.size()) != dim)
            throw ParseError("weight entries take exactly " + std::to_string(dim) + " integers",
                             ln.number, static_cast<int>(close) + 2);
        std::vector<long long> value;
        for (const Tok& tok : toks)
            value.push_back(parse_int(tok.s, ln.number, tok.col + static_cast<int>(close) + 1));
        try {
            set_weight(out.psi, key, std::move(value));
        } catch (const FrontwaveError& e) {
            throw ParseError(e.what(), ln.number, static_cast<int>(first) + 1);
        }
    }
    return out;
}

std::string serialize_weights(const WeightsFile& w) {
    std::ostringstream out;
    out << "weights v1\n";
    out << "surface " << surface_to_string(w.surface) << "\n";
    out << "dim " << w.psi.dim << "\n";
    for (const auto& [key, value] : w.psi.table) {
        out << key_to_string(key);
        for (long long v : value) out << " " << v;
        out << "\n";
    }
    return out.str();
}

EventsFile parse_events_text(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    expect_header(lines, "events v1");
    if (lines.size() < 2) throw ParseError("missing surface line", lines[0].number + 1, 1);
    EventsFile out;
    out.surface = parse_surface_line(lines[1]);

    for (std::size_t idx = 2; idx < lines.size(); ++idx) {
        const Line& ln = lines[idx];
        std::vector<Tok> toks = tokens_of(ln.text);
        if (toks.size() < 4)
            throw ParseError("event entries take stratum, sign, weight and key", ln.number, 1);
        CrossingEvent ev;
        try {
            ev.stratum = stratum_from_string(toks[0].s);
        } catch (const FrontwaveError& e) {
            throw ParseError(e.what(), ln.number, toks[0].col);
        }
        ev.sign = parse_sign(toks[1].s, ln.number, toks[1].col);
        long long weight = parse_int(toks[2].s, ln.number, toks[2].col);
        if (weight < 1) throw ParseError("event weight must be positive", ln.number, toks[2].col);
        ev.weight = static_cast<int>(weight);
        std::string literal = rest_from(ln.text, toks[3].col);
        if (literal == "-") {
            ev.key = std::nullopt;
        } else {
            ev.key = parse_key_at(out.surface, literal, ln.number, toks[3].col);
        }
        out.events.push_back(std::move(ev));
    }
    return out;
}

std::string serialize_events(const EventsFile& e) {
    std::ostringstream out;
    out << "events v1\n";
    out << "surface " << surface_to_string(e.surface) << "\n";
    for (const CrossingEvent& ev : e.events) {
        out << stratum_to_string(ev.stratum) << " " << (ev.sign > 0 ? "+" : "-") << " "
            << ev.weight << " " << (ev.key ? key_to_string(*ev.key) : "-") << "\n";
    }
    return out.str();
}

}  // namespace frontwave
