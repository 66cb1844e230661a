#include "doxepi/formula.hpp"

#include <algorithm>
#include <cctype>

namespace doxepi {

namespace fml {
namespace {
FormulaPtr make(Formula::Kind kind, std::vector<FormulaPtr> children, std::vector<std::string> labels = {},
                std::string atom = {}) {
  for (const auto& c : children) {
    if (!c) throw std::invalid_argument("null subformula");
  }
  return std::make_shared<const Formula>(
      Formula{kind, std::move(atom), std::move(labels), std::move(children)});
}
}  // namespace

FormulaPtr atom(std::string name) { return make(Formula::Kind::kAtom, {}, {}, std::move(name)); }
FormulaPtr bottom() { return make(Formula::Kind::kBottom, {}); }
FormulaPtr neg(FormulaPtr phi) { return make(Formula::Kind::kNot, {std::move(phi)}); }
FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Formula::Kind::kAnd, {std::move(lhs), std::move(rhs)});
}
FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Formula::Kind::kOr, {std::move(lhs), std::move(rhs)});
}
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Formula::Kind::kImplies, {std::move(lhs), std::move(rhs)});
}
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Formula::Kind::kIff, {std::move(lhs), std::move(rhs)});
}
FormulaPtr belief(std::string label, FormulaPtr phi) {
  return make(Formula::Kind::kBelief, {std::move(phi)}, {std::move(label)});
}
FormulaPtr knowledge(std::string label, FormulaPtr phi) {
  return make(Formula::Kind::kKnowledge, {std::move(phi)}, {std::move(label)});
}
FormulaPtr group(Formula::Kind kind, std::vector<std::string> labels, FormulaPtr phi) {
  if (kind < Formula::Kind::kDistBelief) throw std::invalid_argument("not a group modality");
  if (labels.empty()) throw std::invalid_argument("group modality needs at least one label");
  return make(kind, {std::move(phi)}, std::move(labels));
}
}  // namespace fml

bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.atom != b.atom || a.labels != b.labels ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

std::size_t depth(const Formula& phi) {
  std::size_t d = 0;
  for (const auto& c : phi.children) d = std::max(d, depth(*c) + 1);
  return d;
}

// ---------------------------------------------------------------------------

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr parse_all() {
    FormulaPtr phi = parse_iff();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return phi;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_implies();
    while (accept("<->")) lhs = fml::iff(lhs, parse_implies());
    return lhs;
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (accept("->")) return fml::implies(lhs, parse_implies());
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (accept("|")) lhs = fml::disj(lhs, parse_and());
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (accept("&")) lhs = fml::conj(lhs, parse_unary());
    return lhs;
  }

  std::string read_label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected agent label");
    return std::string(text_.substr(start, pos_ - start));
  }

  FormulaPtr parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    if (accept("~")) return fml::neg(parse_unary());
    if (accept("(")) {
      FormulaPtr inner = parse_iff();
      expect(")");
      return inner;
    }
    if (!ident_start(text_[pos_])) fail("unexpected '" + std::string(1, text_[pos_]) + "'");

    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    const std::string word(text_.substr(start, pos_ - start));

    if ((word == "B" || word == "K") && peek("[")) {
      expect("[");
      std::string label = read_label();
      expect("]");
      FormulaPtr body = parse_unary();
      return word == "B" ? fml::belief(std::move(label), body) : fml::knowledge(std::move(label), body);
    }
    if ((word == "DB" || word == "CB" || word == "DK" || word == "CK") && peek("{")) {
      expect("{");
      if (peek("}")) fail("empty group braces");
      std::vector<std::string> labels{read_label()};
      while (accept(",")) labels.push_back(read_label());
      expect("}");
      FormulaPtr body = parse_unary();
      const Formula::Kind kind = word == "DB"   ? Formula::Kind::kDistBelief
                                 : word == "CB" ? Formula::Kind::kCommonBelief
                                 : word == "DK" ? Formula::Kind::kDistKnowledge
                                                : Formula::Kind::kCommonKnowledge;
      return fml::group(kind, std::move(labels), body);
    }
    if (word == "false") return fml::bottom();
    return fml::atom(word);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

enum Precedence { kIffPrec = 1, kImpliesPrec = 2, kOrPrec = 3, kAndPrec = 4, kUnaryPrec = 5, kAtomPrec = 6 };

int precedence(const Formula& phi) {
  switch (phi.kind) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kBottom: return kAtomPrec;
    case Formula::Kind::kIff: return kIffPrec;
    case Formula::Kind::kImplies: return kImpliesPrec;
    case Formula::Kind::kOr: return kOrPrec;
    case Formula::Kind::kAnd: return kAndPrec;
    default: return kUnaryPrec;
  }
}

std::string wrap(const Formula& phi, bool parens) {
  std::string inner = render(phi);
  return parens ? "(" + inner + ")" : inner;
}

std::string modal_prefix(const Formula& phi) {
  switch (phi.kind) {
    case Formula::Kind::kBelief: return "B[" + phi.labels.front() + "]";
    case Formula::Kind::kKnowledge: return "K[" + phi.labels.front() + "]";
    default: break;
  }
  std::string out = phi.kind == Formula::Kind::kDistBelief     ? "DB{"
                    : phi.kind == Formula::Kind::kCommonBelief ? "CB{"
                    : phi.kind == Formula::Kind::kDistKnowledge ? "DK{"
                                                                : "CK{";
  for (std::size_t i = 0; i < phi.labels.size(); ++i) {
    if (i != 0) out += ",";
    out += phi.labels[i];
  }
  return out + "}";
}

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& phi) {
  switch (phi.kind) {
    case Formula::Kind::kAtom: return phi.atom;
    case Formula::Kind::kBottom: return "false";
    case Formula::Kind::kNot: {
      const Formula& c = *phi.children[0];
      return "~" + wrap(c, precedence(c) < kUnaryPrec);
    }
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
    case Formula::Kind::kIff: {
      const int p = precedence(phi);
      const bool right_assoc = phi.kind == Formula::Kind::kImplies;
      const Formula& l = *phi.children[0];
      const Formula& r = *phi.children[1];
      const bool lp = precedence(l) < p || (precedence(l) == p && right_assoc);
      const bool rp = precedence(r) < p || (precedence(r) == p && !right_assoc);
      const char* op = phi.kind == Formula::Kind::kAnd       ? " & "
                       : phi.kind == Formula::Kind::kOr      ? " | "
                       : phi.kind == Formula::Kind::kImplies ? " -> "
                                                             : " <-> ";
      return wrap(l, lp) + op + wrap(r, rp);
    }
    default: {
      const Formula& c = *phi.children[0];
      return modal_prefix(phi) + " " + wrap(c, precedence(c) < kUnaryPrec);
    }
  }
}

std::vector<FormulaPtr> parse_formula_lines(std::string_view text) {
  std::vector<FormulaPtr> out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      try {
        out.push_back(parse(line));
      } catch (const ParseError& e) {
        throw ParseError(e.reason() + " in '" + std::string(line) + "'", offset + e.position());
      }
    }
    offset = end + 1;
  }
  return out;
}

}  // namespace doxepi
