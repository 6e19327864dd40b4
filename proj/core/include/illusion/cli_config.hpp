#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace illusion {

// Defaults shared by the CLI subcommands. Resolution order: command line
// flag, then config file, then built-in default. The config file is flat
// `key = value` text with '#' comments; keys mirror the long flag names.
struct CliConfig {
  std::optional<std::string> lexicon;
  std::optional<std::string> rules;
  std::optional<std::string> model;
  std::optional<std::string> freq;
  std::optional<std::size_t> window;
  std::optional<std::size_t> hop;
  std::optional<double> cutoff;
  std::optional<double> atten;
  std::optional<std::vector<double>> factors;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
};

CliConfig parse_cli_config(std::istream& in);
CliConfig load_cli_config(const std::filesystem::path& path);

// Loads the file named by ILLUSION_CONFIG, or an empty config when unset.
CliConfig cli_config_from_env();

// Comma-separated doubles ("1.3,1.5,1.9").
std::vector<double> parse_double_list(const std::string& text);

}  // namespace illusion
