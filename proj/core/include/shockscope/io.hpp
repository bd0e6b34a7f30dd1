#pragma once

#include "shockscope/ancient_limits.hpp"
#include "shockscope/conservation_law.hpp"
#include "shockscope/entire_solution.hpp"
#include "shockscope/measure.hpp"
#include "shockscope/merger_lab.hpp"
#include "shockscope/pde_solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shockscope {

// Measure: {"atoms":[{"z","w"}], "pieces":[{"a","b","coeffs","exp_rate","exp_quad"}]}
std::string measure_to_json(const Measure& mu);
Measure measure_from_json(std::string_view text);

// Flux: {"kind":"poly","coeffs":[...]} or {"kind":"burgers"}
std::string flux_to_json(const Flux& flux);
Flux flux_from_json(std::string_view text);

// Schedule: {"N":..., "times":[...]}
std::string schedule_to_json(const MergerSchedule& schedule);
MergerSchedule schedule_from_json(std::string_view text);

// Provenance of a run, carried inline in JSON reports.
struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    std::map<std::string, std::string> inputs;  // name -> canonical JSON or value
    int threads = 1;
    std::string version;
};
std::string manifest_to_json(const RunManifest& manifest);

// {"c", "kind", "value_or_pair", "errors_by_t":[{"t","sup_err"}], "s_eps_trace":[{"t","s"}], ...}
std::string ancient_report_to_json(const AncientReport& report, const RunManifest* manifest = nullptr);

// CSV with header "t,x,u", 17 significant digits, LF line endings.
void write_tx_csv(std::ostream& os, std::span<const TxSample> samples);
void write_grids_csv(std::ostream& os, std::span<const Grid> grids);
std::string format_number(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace shockscope
