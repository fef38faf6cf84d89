#include "cli/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pdspec/error.hpp"

namespace pdspec::cli {
namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw DomainError("empty entry in list '" + text + "'");
    out.push_back(item.substr(first, last - first + 1));
  }
  if (out.empty()) throw DomainError("empty list");
  return out;
}

template <class T>
T parse_number(const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) throw DomainError("not a number: '" + text + "'");
  return value;
}

std::string sign_from_json(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.get<int>() >= 0 ? "+" : "-";
  throw DomainError("sign values must be \"+\", \"-\", 1 or -1");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split(text)) out.push_back(parse_number<int>(item));
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text)) out.push_back(parse_number<double>(item));
  return out;
}

int parse_sign(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1") return +1;
  if (text == "-" || text == "-1") return -1;
  throw DomainError("sign must be + or - (got '" + text + "')");
}

std::string sign_text(int sign) { return sign > 0 ? "+" : "-"; }

OutputFormat parse_output(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw DomainError("output must be json or csv (got '" + text + "')");
}

void apply_config_json(const std::string& json_text, RunConfig& cfg) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("config: top level must be an object");
  try {
    for (const auto& [raw_key, v] : doc.items()) {
      std::string key = raw_key;
      for (char& c : key)
        if (c == '_') c = '-';
      if (key == "M") cfg.model.M = v.get<double>();
      else if (key == "mu") cfg.model.mu = v.get<double>();
      else if (key == "A") cfg.model.A = v.get<double>();
      else if (key == "B") cfg.model.B = v.get<double>();
      else if (key == "L") cfg.model.L = v.get<int>();
      else if (key == "branch") cfg.model.branch = parse_sign(sign_from_json(v));
      else if (key == "particle") cfg.model.particle = parse_sign(sign_from_json(v));
      else if (key == "n") cfg.n_list = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
      else if (key == "mode") cfg.mode = parse_mode(v.get<std::string>());
      else if (key == "basis") cfg.basis = cfg.oracle.basis_size = v.get<int>();
      else if (key == "grid") cfg.oracle.grid_points = v.get<int>();
      else if (key == "rmax") cfg.oracle.r_max = v.get<double>();
      else if (key == "method") cfg.oracle.method = oracle::parse_method(v.get<std::string>());
      else if (key == "eta") cfg.etas = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
      else if (key == "n-max") cfg.n_max = v.get<int>();
      else if (key == "L-max") cfg.L_max = v.get<int>();
      else if (key == "output") cfg.output = parse_output(v.get<std::string>());
      else if (key == "out") cfg.out_path = v.get<std::string>();
      else throw DomainError("config: unknown key '" + raw_key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config: wrong value type: ") + e.what());
  }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_json(buf.str(), cfg);
}

}  // namespace pdspec::cli
