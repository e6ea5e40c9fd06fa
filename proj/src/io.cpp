#include "divl1/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace divl1 {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

int read_ground_set_size(const json& j, int max_n) {
  if (!j.contains("n") || !j["n"].is_number_integer()) throw IoError("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > max_n)
    throw IoError("n = " + std::to_string(n) + " outside [1, " + std::to_string(max_n) + "]");
  return n;
}

Subset read_set(const json& entry, int n) {
  if (!entry.is_array()) throw IoError("\"set\" must be an array of indices");
  std::vector<int> elements;
  elements.reserve(entry.size());
  for (const auto& e : entry) {
    if (!e.is_number_integer()) throw IoError("set elements must be integers");
    elements.push_back(e.get<int>());
  }
  try {
    return subset_from_elements(elements, n);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

double read_finite(const json& v, const char* what) {
  if (!v.is_number()) throw IoError(std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw IoError(std::string(what) + " must be finite");
  return d;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf);
}

std::string diversity_to_json(int n, const std::vector<double>& table) {
  if (table.size() != (std::size_t{1} << n)) throw IoError("table must have 2^n entries");
  json values = json::array();
  const Subset limit = Subset{1} << n;
  for (Subset a = 0; a < limit; ++a) {
    if (subset_size(a) < 2) continue;
    values.push_back({{"set", subset_elements(a)}, {"value", table[a]}});
  }
  const json j = {{"n", n}, {"values", values}};
  return j.dump(2) + "\n";
}

RawDiversity diversity_from_json(const std::string& text) {
  const json j = parse(text);
  RawDiversity d;
  d.n = read_ground_set_size(j, kMaxJsonDiversityN);
  d.table.assign(std::size_t{1} << d.n, 0.0);
  if (!j.contains("values") || !j["values"].is_array()) throw IoError("missing array field \"values\"");

  std::vector<bool> seen(d.table.size(), false);
  for (const auto& entry : j["values"]) {
    if (!entry.contains("set") || !entry.contains("value"))
      throw IoError("each value entry needs \"set\" and \"value\"");
    const Subset a = read_set(entry["set"], d.n);
    if (subset_size(a) < 2) throw IoError("subset " + subset_to_string(a) + " has size < 2");
    if (seen[a]) throw IoError("subset " + subset_to_string(a) + " listed twice");
    seen[a] = true;
    d.table[a] = read_finite(entry["value"], "value");
  }
  const Subset limit = Subset{1} << d.n;
  for (Subset a = 0; a < limit; ++a)
    if (subset_size(a) >= 2 && !seen[a])
      throw IoError("subset " + subset_to_string(a) + " missing; the value list must be total");
  return d;
}

std::string profile_to_json(const SymmetricProfile& p) {
  json f = json::array();
  for (int k = 0; k < p.n(); ++k) f.push_back(p(k));
  const json j = {{"n", p.n()}, {"f", f}};
  return j.dump(2) + "\n";
}

SymmetricProfile profile_from_json(const std::string& text) {
  const json j = parse(text);
  const int n = read_ground_set_size(j, kMaxGroundSetSize);
  if (!j.contains("f") || !j["f"].is_array()) throw IoError("missing array field \"f\"");
  if (static_cast<int>(j["f"].size()) != n)
    throw IoError("profile length " + std::to_string(j["f"].size()) + " != n = " + std::to_string(n));
  Eigen::VectorXd f(n);
  int k = 0;
  for (const auto& v : j["f"]) f(k++) = read_finite(v, "profile entry");
  return SymmetricProfile{f};
}

std::string weighting_to_json(const SplitWeighting& w) {
  json splits = json::array();
  for (const auto& [b, weight] : w.weights())
    splits.push_back({{"set", subset_elements(b)}, {"weight", weight}});
  const json j = {{"n", w.n()}, {"splits", splits}};
  return j.dump(2) + "\n";
}

SplitWeighting weighting_from_json(const std::string& text) {
  const json j = parse(text);
  const int n = read_ground_set_size(j, kMaxGroundSetSize);
  if (!j.contains("splits") || !j["splits"].is_array()) throw IoError("missing array field \"splits\"");
  std::map<Subset, double> weights;
  for (const auto& entry : j["splits"]) {
    if (!entry.contains("set") || !entry.contains("weight"))
      throw IoError("each split entry needs \"set\" and \"weight\"");
    const Subset b = read_set(entry["set"], n);
    if (b == 0 || b == full_set(n) || contains(b, 0))
      throw IoError("split " + subset_to_string(b) + " is not a canonical representative");
    if (weights.count(b)) throw IoError("split " + subset_to_string(b) + " listed twice");
    const double weight = read_finite(entry["weight"], "weight");
    if (weight < 0.0) throw IoError("split weights must be non-negative");
    weights[b] = weight;
  }
  return SplitWeighting(n, std::move(weights));
}

std::string points_to_json(const PointConfiguration& p) {
  json points = json::array();
  for (int i = 0; i < p.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < p.dim(); ++j) row.push_back(p.coords(i, j));
    points.push_back(row);
  }
  const json j = {{"dim", p.dim()}, {"points", points}};
  return j.dump(2) + "\n";
}

PointConfiguration points_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw IoError("missing integer field \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim < 0) throw IoError("dim must be >= 0");
  if (!j.contains("points") || !j["points"].is_array()) throw IoError("missing array field \"points\"");
  const int n = static_cast<int>(j["points"].size());
  Eigen::MatrixXd coords(n, dim);
  int i = 0;
  for (const auto& row : j["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw IoError("each point must list exactly dim coordinates");
    int c = 0;
    for (const auto& v : row) coords(i, c++) = read_finite(v, "coordinate");
    ++i;
  }
  return PointConfiguration{std::move(coords)};
}

std::string coordinates_to_csv(const PointConfiguration& p) {
  std::ostringstream out;
  out << "point";
  for (int j = 0; j < p.dim(); ++j) out << ",coord_" << j;
  out << "\n";
  for (int i = 0; i < p.n(); ++i) {
    out << i;
    for (int j = 0; j < p.dim(); ++j) out << "," << format_double(p.coords(i, j));
    out << "\n";
  }
  return out.str();
}

std::string phi_table_to_csv(const PhiTable& t) {
  std::ostringstream out;
  out << "n,l,k,phi,psi,psi_cap\n";
  for (int ell = 1; ell <= t.n - 1; ++ell) {
    const double x = t(ell, t.n - 1);
    for (int k = 0; k <= t.n - 1; ++k) {
      out << t.n << "," << ell << "," << k << "," << format_double(t(ell, k)) << ","
          << format_double(static_cast<double>(std::min(ell, k))) << ","
          << format_double(std::min(x, static_cast<double>(k))) << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoError("error while reading " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << contents;
  if (!out.good()) throw IoError("error while writing " + path);
}

}  // namespace divl1
