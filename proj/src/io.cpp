#include "lw/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lw/errors.hpp"

namespace lw::io {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump_rec(const json& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // short arrays of scalars stay on one line
      bool flat = true;
      for (const auto& v : j)
        if (v.is_structured()) flat = false;
      if (flat) {
        out += "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out += ", ";
          first = false;
          dump_rec(v, out, depth);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_rec(v, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const json& j) {
  std::string out;
  dump_rec(j, out, 0);
  out += "\n";
  return out;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON input");
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out) throw InputError("short write to file: " + path);
}

json load_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

void save_json_file(const std::string& path, const json& j) {
  write_text_file(path, dump_json(j));
}

json norm_to_json(const Norm& norm) {
  json j;
  if (norm.kind() == Norm::Kind::sup_grid) {
    j["kind"] = "sup_grid";
    j["grid"] = norm.grid();
    return j;
  }
  j["kind"] = "lp";
  if (std::isinf(norm.p()))
    j["p"] = "inf";
  else
    j["p"] = norm.p();
  j["dim"] = norm.dimension();
  return j;
}

Norm norm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw InputError("norm JSON needs a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "sup_grid") {
    if (!j.contains("grid")) throw InputError("sup_grid norm JSON needs \"grid\"");
    return Norm::sup_grid(j.at("grid").get<std::vector<double>>());
  }
  if (kind != "lp") throw InputError("unknown norm kind: " + kind);
  if (!j.contains("p") || !j.contains("dim"))
    throw InputError("lp norm JSON needs \"p\" and \"dim\"");
  int dim = j.at("dim").get<int>();
  const json& p = j.at("p");
  if (p.is_string()) {
    if (p.get<std::string>() != "inf") throw InputError("lp norm \"p\" must be a number or \"inf\"");
    return Norm::linf(dim);
  }
  return Norm::lp(p.get<double>(), dim);
}

json cloud_to_json(const PointCloudSet& cloud) {
  json j;
  j["norm"] = norm_to_json(cloud.norm());
  j["points"] = cloud.points();
  j["label"] = cloud.label();
  return j;
}

PointCloudSet cloud_from_json(const json& j) {
  if (!j.is_object() || !j.contains("norm") || !j.contains("points"))
    throw InputError("point cloud JSON needs \"norm\" and \"points\"");
  Norm norm = norm_from_json(j.at("norm"));
  auto points = j.at("points").get<std::vector<std::vector<double>>>();
  std::string label = j.value("label", std::string());
  return PointCloudSet(std::move(points), std::move(norm), std::move(label));
}

namespace {

json act_to_json(const Activation& act) {
  switch (act.kind()) {
    case ActKind::relu:
      return "relu";
    case ActKind::identity:
      return "identity";
    case ActKind::sigmoidal: {
      json j;
      j["kind"] = "sigmoidal";
      j["L"] = act.lipschitz();
      return j;
    }
  }
  return "relu";  // unreachable
}

Activation act_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "relu") return Activation::relu();
    if (s == "identity") return Activation::identity();
    if (s == "sigmoidal") return Activation::sigmoidal();
    throw InputError("unknown activation: " + s);
  }
  if (j.is_object() && j.value("kind", std::string()) == "sigmoidal")
    return Activation::sigmoidal(j.value("L", 1.0));
  throw InputError("activation JSON must be a name or {\"kind\":\"sigmoidal\",...}");
}

bool uniform_act(const FeedForwardNet& net) {
  const auto& acts = net.channel_activations();
  for (const auto& layer : acts)
    for (const auto& a : layer)
      if (a.kind() != acts[0][0].kind() || a.lipschitz() != acts[0][0].lipschitz())
        return false;
  return true;
}

}  // namespace

json net_to_json(const FeedForwardNet& net) {
  json j;
  j["d"] = net.input_dim();
  j["W"] = net.width();
  j["n"] = net.depth();
  j["param_bound"] = net.param_bound();
  if (uniform_act(net)) {
    j["activation"] = act_to_json(net.channel_activations()[0][0]);
  } else {
    json layers = json::array();
    for (const auto& layer : net.channel_activations()) {
      json row = json::array();
      for (const auto& a : layer) row.push_back(act_to_json(a));
      layers.push_back(row);
    }
    j["activation"] = layers;
  }
  json layers = json::array();
  for (const auto& layer : net.layers()) {
    json jl;
    json matrix = json::array();
    for (int r = 0; r < layer.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < layer.cols; ++c)
        row.push_back(layer.weights[static_cast<std::size_t>(r) * layer.cols + c]);
      matrix.push_back(row);
    }
    jl["matrix"] = matrix;
    jl["bias"] = layer.bias;
    layers.push_back(jl);
  }
  j["layers"] = layers;
  return j;
}

FeedForwardNet net_from_json(const json& j) {
  for (const char* key : {"d", "W", "n", "activation", "layers", "param_bound"})
    if (!j.contains(key))
      throw InputError(std::string("network JSON needs \"") + key + "\"");
  NetLayout layout;
  layout.d = j.at("d").get<int>();
  layout.W = j.at("W").get<int>();
  layout.depth = j.at("n").get<int>();
  if (layout.d < 1 || layout.W < 1 || layout.depth < 1)
    throw InputError("network JSON needs d, W, n >= 1");

  std::vector<AffineLayer> layers;
  for (const json& jl : j.at("layers")) {
    if (!jl.contains("matrix") || !jl.contains("bias"))
      throw InputError("layer JSON needs \"matrix\" and \"bias\"");
    auto matrix = jl.at("matrix").get<std::vector<std::vector<double>>>();
    auto bias = jl.at("bias").get<std::vector<double>>();
    if (matrix.empty()) throw InputError("layer matrix must be nonempty");
    AffineLayer layer(static_cast<int>(matrix.size()),
                      static_cast<int>(matrix[0].size()));
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (matrix[r].size() != matrix[0].size())
        throw InputError("layer matrix rows must have equal length");
      for (std::size_t c = 0; c < matrix[r].size(); ++c)
        layer.weights[r * matrix[0].size() + c] = matrix[r][c];
    }
    if (bias.size() != matrix.size())
      throw InputError("layer bias length must match the matrix rows");
    layer.bias = std::move(bias);
    layers.push_back(std::move(layer));
  }

  const json& act = j.at("activation");
  std::vector<std::vector<Activation>> channel_acts;
  if (act.is_array()) {
    for (const json& row : act) {
      std::vector<Activation> layer_acts;
      for (const json& a : row) layer_acts.push_back(act_from_json(a));
      channel_acts.push_back(std::move(layer_acts));
    }
  } else {
    channel_acts = uniform_activations(layout, act_from_json(act));
  }
  return FeedForwardNet(layout, std::move(layers), std::move(channel_acts),
                        j.at("param_bound").get<double>());
}

void Csv::add_row(std::vector<std::string> cells) {
  if (cells.size() != header.size())
    throw InputError("CSV row width does not match the header");
  rows.push_back(std::move(cells));
}

int Csv::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

std::string Csv::to_string() const {
  std::string out = "# " + comment + "\n";
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ",";
    out += header[i];
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Csv Csv::parse(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (csv.comment.empty()) csv.comment = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      continue;
    }
    if (!have_header) {
      csv.header = split_csv_line(line);
      have_header = true;
      continue;
    }
    auto cells = split_csv_line(line);
    if (cells.size() != csv.header.size())
      throw InputError("CSV row width does not match the header");
    csv.rows.push_back(std::move(cells));
  }
  if (!have_header) throw InputError("CSV input has no header row");
  return csv;
}

namespace {

double cell_number(const std::string& cell) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(cell, &pos);
  } catch (const std::exception&) {
    throw InputError("CSV cell is not a number: " + cell);
  }
  if (pos != cell.size()) throw InputError("CSV cell is not a number: " + cell);
  return value;
}

}  // namespace

Csv entropy_profile_csv(const EntropyProfile& profile) {
  Csv csv;
  csv.comment = "entropy number brackets; lower/upper in ambient-norm units (ball radii)";
  csv.header = {"n", "lower", "upper", "method"};
  for (const auto& row : profile.rows) {
    csv.add_row({std::to_string(row.n), format_number(row.lower),
                 format_number(row.upper), row.method});
  }
  return csv;
}

EntropyProfile entropy_profile_from_csv(const Csv& csv) {
  int cn = csv.column("n"), cl = csv.column("lower"), cu = csv.column("upper");
  int cm = csv.column("method");
  if (cn < 0 || cl < 0 || cu < 0)
    throw InputError("entropy CSV needs columns n, lower, upper");
  EntropyProfile profile;
  for (const auto& row : csv.rows) {
    EntropyProfile::Row r;
    r.n = static_cast<int>(cell_number(row[static_cast<std::size_t>(cn)]));
    r.lower = cell_number(row[static_cast<std::size_t>(cl)]);
    r.upper = cell_number(row[static_cast<std::size_t>(cu)]);
    if (cm >= 0) r.method = row[static_cast<std::size_t>(cm)];
    profile.rows.push_back(std::move(r));
  }
  profile.validate();
  return profile;
}

Csv width_table_csv(const std::vector<WidthEstimate>& rows) {
  Csv csv;
  csv.comment =
      "width upper bounds; gamma is the Lipschitz budget, upper in ambient-norm "
      "units, delta the parameter-grid spacing";
  csv.header = {"n", "gamma", "upper", "delta"};
  for (const auto& row : rows) {
    csv.add_row({std::to_string(row.n), format_number(row.gamma),
                 format_number(row.upper), format_number(row.delta)});
  }
  return csv;
}

std::vector<WidthDatum> width_data_from_csv(const Csv& csv) {
  int cn = csv.column("n"), cg = csv.column("gamma"), cu = csv.column("upper");
  if (cn < 0 || cg < 0 || cu < 0)
    throw InputError("width CSV needs columns n, gamma, upper");
  std::vector<WidthDatum> data;
  for (const auto& row : csv.rows) {
    WidthDatum d;
    d.m = cell_number(row[static_cast<std::size_t>(cn)]);
    d.gamma = cell_number(row[static_cast<std::size_t>(cg)]);
    d.upper = cell_number(row[static_cast<std::size_t>(cu)]);
    data.push_back(d);
  }
  return data;
}

}  // namespace lw::io
