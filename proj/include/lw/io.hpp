#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lw/carl.hpp"
#include "lw/entropy.hpp"
#include "lw/network.hpp"
#include "lw/norms.hpp"
#include "lw/widths.hpp"

namespace lw::io {

using nlohmann::json;

// Decimal with 17 significant digits; round-trips doubles exactly.
std::string format_number(double x);

// JSON text with float values rendered by format_number, objects with sorted
// keys, two-space indentation.  Keeps emitted artifacts byte-stable.
std::string dump_json(const json& j);

json parse_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

// Norm <-> {"kind":"lp","p":2|"inf","dim":d} or {"kind":"sup_grid","grid":[...]}
json norm_to_json(const Norm& norm);
Norm norm_from_json(const json& j);

// PointCloudSet <-> {"norm":{...},"points":[[...],...],"label":"..."}
json cloud_to_json(const PointCloudSet& cloud);
PointCloudSet cloud_from_json(const json& j);

// FeedForwardNet <-> {"d":..,"W":..,"n":..,"activation":..,
//                     "layers":[{"matrix":[[...]],"bias":[...]},...],
//                     "param_bound":w}
// "activation" is a string ("relu"/"identity"), an object
// {"kind":"sigmoidal","L":..}, or a per-layer array of per-channel entries.
json net_to_json(const FeedForwardNet& net);
FeedForwardNet net_from_json(const json& j);

// CSV with one unit/scale comment line (prefixed "# ") followed by the
// header row.  Cells never contain commas, so no quoting is performed.
struct Csv {
  std::string comment;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  int column(const std::string& name) const;  // -1 when absent
  std::string to_string() const;
  static Csv parse(const std::string& text);
};

Csv entropy_profile_csv(const EntropyProfile& profile);
EntropyProfile entropy_profile_from_csv(const Csv& csv);

Csv width_table_csv(const std::vector<WidthEstimate>& rows);
std::vector<WidthDatum> width_data_from_csv(const Csv& csv);

}  // namespace lw::io
