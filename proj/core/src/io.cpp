#include "shockscope/io.hpp"

#include "shockscope/error.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace shockscope {

namespace {

using json = nlohmann::ordered_json;

json parse(std::string_view text, const char* what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream msg;
        msg << what << " JSON parse error at line " << line << ", column " << col << ": " << e.what();
        throw InputError(msg.str());
    }
}

template <class T>
T field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + " is missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + " field '" + key + "' has the wrong type: " + e.what());
    }
}

template <class T>
T field_or(const json& j, const char* key, T fallback, const char* what) {
    if (!j.contains(key)) return fallback;
    return field<T>(j, key, what);
}

json manifest_json(const RunManifest& m) {
    json j;
    j["command"] = m.command;
    j["arguments"] = m.arguments;
    json inputs = json::object();
    for (const auto& [k, v] : m.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["threads"] = m.threads;
    j["version"] = m.version;
    return j;
}

json limit_json(const LimitCandidate& c) {
    json j;
    j["kind"] = to_string(c.kind);
    if (c.kind == FrameKind::ShockWithShift)
        j["value_or_pair"] = json::array({c.value + c.half_jump, c.value - c.half_jump});
    else
        j["value_or_pair"] = c.value;
    return j;
}

} // namespace

std::string measure_to_json(const Measure& mu) {
    json j;
    j["atoms"] = json::array();
    for (const auto& a : mu.atoms()) j["atoms"].push_back(json{{"z", a.z}, {"w", a.weight}});
    j["pieces"] = json::array();
    for (const auto& p : mu.pieces())
        j["pieces"].push_back(
            json{{"a", p.a}, {"b", p.b}, {"coeffs", p.coeffs}, {"exp_rate", p.exp_rate}, {"exp_quad", p.exp_quad}});
    return j.dump(2) + "\n";
}

Measure measure_from_json(std::string_view text) {
    const json j = parse(text, "measure");
    if (!j.is_object()) throw InputError("measure JSON must be an object");
    std::vector<Atom> atoms;
    std::vector<DensityPiece> pieces;
    for (const auto& a : field_or<json>(j, "atoms", json::array(), "measure")) {
        atoms.push_back({field<double>(a, "z", "atom"), field<double>(a, "w", "atom")});
    }
    for (const auto& p : field_or<json>(j, "pieces", json::array(), "measure")) {
        DensityPiece d;
        d.a = field<double>(p, "a", "piece");
        d.b = field<double>(p, "b", "piece");
        d.coeffs = field<std::vector<double>>(p, "coeffs", "piece");
        d.exp_rate = field_or<double>(p, "exp_rate", 0.0, "piece");
        d.exp_quad = field_or<double>(p, "exp_quad", 0.0, "piece");
        pieces.push_back(std::move(d));
    }
    Measure mu(std::move(atoms), std::move(pieces));
    if (mu.empty()) throw InputError("measure has neither atoms nor pieces");
    return mu;
}

std::string flux_to_json(const Flux& flux) {
    json j;
    if (flux.kind() == Flux::Kind::Burgers) {
        j["kind"] = "burgers";
    } else {
        j["kind"] = "poly";
        j["coeffs"] = flux.coeffs();
    }
    return j.dump() + "\n";
}

Flux flux_from_json(std::string_view text) {
    const json j = parse(text, "flux");
    const auto kind = field<std::string>(j, "kind", "flux");
    if (kind == "burgers") return Flux::burgers();
    if (kind == "poly") return Flux::polynomial(field<std::vector<double>>(j, "coeffs", "flux"));
    throw InputError("unknown flux kind '" + kind + "' (expected 'poly' or 'burgers')");
}

std::string schedule_to_json(const MergerSchedule& s) {
    json j;
    j["N"] = s.N();
    j["times"] = s.times();
    return j.dump() + "\n";
}

MergerSchedule schedule_from_json(std::string_view text) {
    const json j = parse(text, "schedule");
    return MergerSchedule(field<double>(j, "N", "schedule"), field<std::vector<double>>(j, "times", "schedule"));
}

std::string manifest_to_json(const RunManifest& manifest) { return manifest_json(manifest).dump(2) + "\n"; }

std::string ancient_report_to_json(const AncientReport& r, const RunManifest* manifest) {
    json j;
    j["c"] = r.speed;
    const json lim = limit_json(r.limit.limit);
    j["kind"] = lim["kind"];
    j["value_or_pair"] = lim["value_or_pair"];
    j["near_degenerate"] = r.limit.near_degenerate;
    j["alternatives"] = json::array();
    for (const auto& a : r.limit.alternatives) j["alternatives"].push_back(limit_json(a));
    j["errors_by_t"] = json::array();
    for (const auto& e : r.errors_by_t) j["errors_by_t"].push_back(json{{"t", e.t}, {"sup_err", e.sup_err}});
    j["s_eps_trace"] = json::array();
    for (const auto& s : r.s_eps_trace) j["s_eps_trace"].push_back(json{{"t", s.t}, {"s", s.s}});
    j["warnings"] = r.warnings;
    if (manifest) j["manifest"] = manifest_json(*manifest);
    return j.dump(2) + "\n";
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_tx_csv(std::ostream& os, std::span<const TxSample> samples) {
    os << "t,x,u\n";
    for (const auto& s : samples) os << format_number(s.t) << ',' << format_number(s.x) << ',' << format_number(s.u) << '\n';
}

void write_grids_csv(std::ostream& os, std::span<const Grid> grids) {
    os << "t,x,u\n";
    for (const auto& g : grids)
        for (std::size_t i = 0; i < g.size(); ++i)
            os << format_number(g.time) << ',' << format_number(g.x(i)) << ',' << format_number(g.values[i]) << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("failed writing " + path.string());
}

} // namespace shockscope
