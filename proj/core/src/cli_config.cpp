#include "illusion/cli_config.hpp"

#include <cstdlib>
#include <fstream>

#include "illusion/common.hpp"

namespace illusion {

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& token : split(text, ',')) {
    const std::string t(trim(token));
    if (t.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw DataError("bad number in list: \"" + t + "\"");
    }
  }
  if (out.empty()) throw DataError("empty number list");
  return out;
}

CliConfig parse_cli_config(std::istream& in) {
  CliConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = trim(view.substr(0, hash));
    }
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw DataError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string value(trim(view.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      throw DataError("config line " + std::to_string(line_no) + ": empty key or value");
    }

    try {
      if (key == "lexicon") {
        config.lexicon = value;
      } else if (key == "rules") {
        config.rules = value;
      } else if (key == "model") {
        config.model = value;
      } else if (key == "freq") {
        config.freq = value;
      } else if (key == "window") {
        config.window = static_cast<std::size_t>(std::stoull(value));
      } else if (key == "hop") {
        config.hop = static_cast<std::size_t>(std::stoull(value));
      } else if (key == "cutoff") {
        config.cutoff = std::stod(value);
      } else if (key == "atten") {
        config.atten = std::stod(value);
      } else if (key == "factors") {
        config.factors = parse_double_list(value);
      } else if (key == "seed") {
        config.seed = std::stoull(value);
      } else if (key == "threads") {
        config.threads = static_cast<unsigned>(std::stoul(value));
      } else {
        throw DataError("config line " + std::to_string(line_no) + ": unknown key \"" + key +
                        "\"");
      }
    } catch (const DataError&) {
      throw;
    } catch (const std::exception&) {
      throw DataError("config line " + std::to_string(line_no) + ": bad value for \"" + key +
                      "\"");
    }
  }
  return config;
}

CliConfig load_cli_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read config file: " + path.string());
  return parse_cli_config(in);
}

CliConfig cli_config_from_env() {
  const char* path = std::getenv("ILLUSION_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  return load_cli_config(path);
}

}  // namespace illusion
