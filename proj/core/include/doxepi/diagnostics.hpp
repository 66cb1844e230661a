#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace doxepi {

/// One violated constraint. `code` is a stable machine-readable tag,
/// `witness` lists the state names that exhibit the violation.
struct Diagnostic {
  std::string code;
  std::string message;
  std::vector<std::string> witness;

  std::string to_string() const;
};

std::string join(const std::vector<Diagnostic>& diagnostics, const std::string& separator = "\n");

/// Either a value or a non-empty list of diagnostics.
template <typename T>
class Outcome {
 public:
  Outcome(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Outcome(std::vector<Diagnostic> diagnostics) : state_(std::move(diagnostics)) {  // NOLINT
    if (std::get<1>(state_).empty()) throw std::logic_error("failed outcome without diagnostics");
  }
  Outcome(Diagnostic diagnostic) : Outcome(std::vector<Diagnostic>{std::move(diagnostic)}) {}  // NOLINT

  bool ok() const noexcept { return state_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Outcome::value on failure: " + join(diagnostics(), "; "));
    return std::get<0>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Outcome::value on failure: " + join(diagnostics(), "; "));
    return std::get<0>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const std::vector<Diagnostic>& diagnostics() const {
    static const std::vector<Diagnostic> kNone;
    return ok() ? kNone : std::get<1>(state_);
  }

  bool has(const std::string& code) const {
    for (const auto& d : diagnostics()) {
      if (d.code == code) return true;
    }
    return false;
  }

 private:
  std::variant<T, std::vector<Diagnostic>> state_;
};

}  // namespace doxepi
