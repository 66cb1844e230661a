#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace doxepi {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Abstract syntax of the doxastic-epistemic language with group modalities.
struct Formula {
  enum class Kind {
    kAtom,
    kBottom,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
    kBelief,
    kKnowledge,
    kDistBelief,
    kCommonBelief,
    kDistKnowledge,
    kCommonKnowledge,
  };

  Kind kind;
  std::string atom;                 // kAtom only
  std::vector<std::string> labels;  // one for B/K, at least one for group modalities
  std::vector<FormulaPtr> children;

  bool is_modal() const noexcept { return kind >= Kind::kBelief; }
  bool is_group() const noexcept { return kind >= Kind::kDistBelief; }
};

namespace fml {
FormulaPtr atom(std::string name);
FormulaPtr bottom();
FormulaPtr neg(FormulaPtr phi);
FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr belief(std::string label, FormulaPtr phi);
FormulaPtr knowledge(std::string label, FormulaPtr phi);
/// kind must be one of the four group kinds; labels must be non-empty.
FormulaPtr group(Formula::Kind kind, std::vector<std::string> labels, FormulaPtr phi);
}  // namespace fml

/// Structural equality.
bool equal(const Formula& a, const Formula& b);

/// Nesting depth of connectives and modalities; atoms and ⊥ have depth 0.
std::size_t depth(const Formula& phi);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        reason_(message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t position_;
};

/// Surface grammar, loosest to tightest:
///   <->   ->(right-assoc)   |   &   then prefix ~, B[a], K[a], DB{..}, CB{..}, DK{..}, CK{..}
/// Atoms are identifiers, `false` is ⊥. Throws ParseError.
FormulaPtr parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(render(phi)) is structurally equal to phi.
std::string render(const Formula& phi);

/// One formula per line; blank lines and lines starting with '#' are skipped.
/// ParseError positions are offset to the whole text.
std::vector<FormulaPtr> parse_formula_lines(std::string_view text);

}  // namespace doxepi
