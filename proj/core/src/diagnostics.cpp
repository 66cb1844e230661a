#include "doxepi/diagnostics.hpp"

namespace doxepi {

std::string Diagnostic::to_string() const {
  std::string out = code + ": " + message;
  if (!witness.empty()) {
    out += " [witness:";
    for (const auto& w : witness) out += " " + w;
    out += "]";
  }
  return out;
}

std::string join(const std::vector<Diagnostic>& diagnostics, const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    if (i != 0) out += separator;
    out += diagnostics[i].to_string();
  }
  return out;
}

}  // namespace doxepi
