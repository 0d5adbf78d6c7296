#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace priorepair {

// Position-tagged message produced by parsers and emitters. line/col are
// 1-based; 0 means "not tied to a position".
struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  int line = 0;
  int col = 0;
  std::string message;

  std::string render(const std::string& source_name = "") const {
    std::string out;
    if (!source_name.empty()) out += source_name + ":";
    if (line > 0) {
      out += std::to_string(line) + ":" + std::to_string(col) + ": ";
    } else if (!out.empty()) {
      out += " ";
    }
    out += severity == Severity::Error ? "error: " : "warning: ";
    out += message;
    return out;
  }
};

// Thrown by parse_* and emitters on invalid input. Carries the first error;
// callers that want all diagnostics use the overloads with a sink.
struct ParseError : std::runtime_error {
  Diagnostic diag;
  explicit ParseError(Diagnostic d) : std::runtime_error(d.render()), diag(std::move(d)) {}
};

}  // namespace priorepair
