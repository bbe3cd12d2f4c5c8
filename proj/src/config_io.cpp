#include "screening/config_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace screening {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  // nlohmann reports the 1-based index of the byte that failed.
  const std::size_t stop = byte == 0 ? 0 : std::min(byte - 1, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double number_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw InvalidModelError(std::string("config is missing field \"") + key + "\"");
  }
  if (!it->is_number()) {
    throw InvalidModelError(std::string("config field \"") + key + "\" must be a number");
  }
  return it->get<double>();
}

std::array<double, 2> pair_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw InvalidModelError(std::string("config is missing field \"") + key + "\"");
  }
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
    throw InvalidModelError(std::string("config field \"") + key +
                            "\" must be a two-element array [theta, gamma]");
  }
  return {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

}  // namespace

ConfigDocument parse_config_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::ostringstream os;
    os << "malformed config JSON at line " << line << ", column " << column << ": " << e.what();
    throw ConfigParseError(os.str(), line, column);
  }
  if (!doc.is_object()) {
    throw InvalidModelError("config must be a JSON object");
  }
  ConfigDocument out;
  out.payoffs.pi = number_field(doc, "pi");
  out.payoffs.x_q = number_field(doc, "x_q");
  out.payoffs.x_u = number_field(doc, "x_u");
  out.payoffs.c = number_field(doc, "c");
  out.signal.mu_q = pair_field(doc, "mu_q");
  out.signal.mu_u = pair_field(doc, "mu_u");
  out.signal.sigma_theta = number_field(doc, "sigma_theta");
  out.signal.sigma_gamma = number_field(doc, "sigma_gamma");
  out.signal.rho = number_field(doc, "rho");
  return out;
}

ModelConfig parse_config(std::string_view text) {
  const ConfigDocument doc = parse_config_document(text);
  return ModelConfig::create(doc.payoffs, doc.signal);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidModelError("cannot read config file " + path.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ModelConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_text_file(path));
}

std::string serialize_config(const PayoffParams& p, const GaussianSignalModel& s) {
  nlohmann::ordered_json doc;
  doc["pi"] = p.pi;
  doc["x_q"] = p.x_q;
  doc["x_u"] = p.x_u;
  doc["c"] = p.c;
  doc["mu_q"] = {s.mu_q[0], s.mu_q[1]};
  doc["mu_u"] = {s.mu_u[0], s.mu_u[1]};
  doc["sigma_theta"] = s.sigma_theta;
  doc["sigma_gamma"] = s.sigma_gamma;
  doc["rho"] = s.rho;
  return doc.dump();
}

std::string serialize_config(const ModelConfig& config) {
  return serialize_config(config.payoffs(), config.signal().model());
}

}  // namespace screening
