#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace illusion {

// Base class for toolkit errors. Subclasses separate bad input data from
// misuse of an operation so callers (and the CLI exit codes) can tell them
// apart.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or unusable input data: files, CSV rows, WAV headers, ...
class DataError : public Error {
public:
  using Error::Error;
};

// Word absent from a pronunciation or frequency lexicon.
class OovError : public DataError {
public:
  explicit OovError(std::string word);
  const std::string& word() const noexcept { return word_; }

private:
  std::string word_;
};

// Operation called outside its stated domain (bad index, empty input, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Non-fatal diagnostics (skipped lexicon lines, clipped samples, ...).
// Goes to stderr; tests may silence it.
void log_warning(const std::string& message);
void set_warnings_enabled(bool enabled);

// Small string helpers shared by the parsers.
std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::vector<std::string> split_whitespace(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Quotes a CSV field when it contains separators, quotes or spaces.
std::string csv_escape(std::string_view field);

// Shortest decimal representation that round-trips a double ("%.17g" pruned).
std::string format_double(double value);

}  // namespace illusion
