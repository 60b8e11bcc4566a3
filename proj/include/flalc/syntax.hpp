#ifndef FLALC_SYNTAX_HPP
#define FLALC_SYNTAX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flalc/concept.hpp"
#include "flalc/degree.hpp"
#include "flalc/error.hpp"
#include "flalc/knowledge_base.hpp"

// Concrete syntax.
//
//   concept ::= top | bot | NAME | (and C C+) | (or C C+) | (not C)
//             | (some R C) | (all R C) | (scale N C)
//             | (impl C C) | (iff C C) | (min C C+) | (max C C+)
//
//   kb      ::= [tbox: gci*] [abox: (instance|related)*]
//   gci      = (gci C C [DEGREE])
//   instance = (instance IND C [DEGREE])
//   related  = (related IND IND R [DEGREE])
//
// `#` starts a comment that runs to the end of the line.

namespace flalc {

namespace sexpr {

struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  Node read() {
    skip_blank();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    Node n;
    n.line = line_;
    n.column = column_;
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] == '(') {
      advance();
      n.is_list = true;
      for (;;) {
        skip_blank();
        if (pos_ >= text_.size()) throw SyntaxError("unclosed '('", n.line, n.column);
        if (text_[pos_] == ')') {
          advance();
          return n;
        }
        n.items.push_back(read());
      }
    }
    while (pos_ < text_.size() && !delimiter(text_[pos_])) {
      n.atom += text_[pos_];
      advance();
    }
    return n;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, column_); }

 private:
  static bool delimiter(char c) {
    return c == '(' || c == ')' || c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] inline void fail(const Node& n, const std::string& msg) { throw SyntaxError(msg, n.line, n.column); }

}  // namespace sexpr

namespace detail {

inline std::string expect_name(const sexpr::Node& n, const char* what) {
  if (n.is_list || !is_valid_name(n.atom)) sexpr::fail(n, std::string("expected ") + what + " name");
  return n.atom;
}

inline Degree read_degree(const sexpr::Node& n) {
  if (n.is_list) sexpr::fail(n, "expected degree");
  try {
    return Degree::parse(n.atom);
  } catch (const ValidationError& e) {
    sexpr::fail(n, e.what());
  }
}

inline Degree read_grade(const sexpr::Node& n) {
  Degree d = read_degree(n);
  if (d.is_zero()) sexpr::fail(n, "grade must lie in (0,1]");
  return d;
}

inline Concept to_concept(const sexpr::Node& n) {
  if (!n.is_list) {
    if (n.atom == "top") return Concept::top();
    if (n.atom == "bot") return Concept::bottom();
    return Concept::atomic(expect_name(n, "concept"));
  }
  if (n.items.empty()) sexpr::fail(n, "empty concept expression");
  const auto& head = n.items.front();
  if (head.is_list) sexpr::fail(head, "expected operator");
  const std::string& op = head.atom;
  const std::size_t argc = n.items.size() - 1;
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    if (argc < lo || argc > hi) {
      sexpr::fail(n, "'" + op + "' expects " + (lo == hi ? std::to_string(lo) : "at least " + std::to_string(lo)) +
                         " operand(s), got " + std::to_string(argc));
    }
  };
  const auto operands = [&](std::size_t from) {
    std::vector<Concept> cs;
    for (std::size_t k = from; k < n.items.size(); ++k) cs.push_back(to_concept(n.items[k]));
    return cs;
  };
  constexpr std::size_t many = static_cast<std::size_t>(-1);

  if (op == "and" || op == "or") {
    arity(2, many);
    auto cs = operands(1);
    Concept acc = cs.front();
    for (std::size_t k = 1; k < cs.size(); ++k) {
      acc = op == "and" ? Concept::conj(acc, cs[k]) : Concept::disj(acc, cs[k]);
    }
    return acc;
  }
  if (op == "not") {
    arity(1, 1);
    return Concept::neg(to_concept(n.items[1]));
  }
  if (op == "some" || op == "all") {
    arity(2, 2);
    std::string role = expect_name(n.items[1], "role");
    Concept c = to_concept(n.items[2]);
    return op == "some" ? Concept::some(std::move(role), std::move(c)) : Concept::all(std::move(role), std::move(c));
  }
  if (op == "scale") {
    arity(2, 2);
    const auto& count = n.items[1];
    if (count.is_list || count.atom.empty() ||
        count.atom.find_first_not_of("0123456789") != std::string::npos) {
      sexpr::fail(count, "expected positive integer scale count");
    }
    mpz_class k(count.atom, 10);
    if (sgn(k) <= 0) sexpr::fail(count, "scale count must be >= 1");
    return Concept::scaled(std::move(k), to_concept(n.items[2]));
  }
  if (op == "impl" || op == "iff") {
    arity(2, 2);
    auto cs = operands(1);
    return op == "impl" ? implies(cs[0], cs[1]) : iff(cs[0], cs[1]);
  }
  if (op == "min" || op == "max") {
    arity(2, many);
    auto cs = operands(1);
    return op == "min" ? min_of(cs) : max_of(cs);
  }
  sexpr::fail(head, "unknown operator '" + op + "'");
}

}  // namespace detail

/// Parses exactly one concept; trailing input is an error.
inline Concept parse_concept(std::string_view text) {
  sexpr::Reader reader(text);
  const auto node = reader.read();
  Concept c = detail::to_concept(node);
  if (!reader.at_end()) reader.fail("trailing input after concept");
  return c;
}

inline std::string print_concept(const Concept& c) { return to_string(c); }

inline KnowledgeBase parse_kb(std::string_view text) {
  sexpr::Reader reader(text);
  KnowledgeBase kb;
  enum class Section { None, TBox, ABox } section = Section::None;
  bool seen_tbox = false, seen_abox = false;

  while (!reader.at_end()) {
    const auto n = reader.read();
    if (!n.is_list) {
      if (n.atom == "tbox:" || n.atom == "abox:") {
        bool& seen = n.atom == "tbox:" ? seen_tbox : seen_abox;
        if (seen) sexpr::fail(n, "duplicate section '" + n.atom + "'");
        seen = true;
        section = n.atom == "tbox:" ? Section::TBox : Section::ABox;
        continue;
      }
      sexpr::fail(n, "expected section header or axiom, got '" + n.atom + "'");
    }
    if (n.items.empty() || n.items.front().is_list) sexpr::fail(n, "expected axiom");
    const std::string& head = n.items.front().atom;
    const std::size_t argc = n.items.size() - 1;
    const auto grade = [&](std::size_t required) {
      if (argc < required || argc > required + 1) {
        sexpr::fail(n, "'" + head + "' expects " + std::to_string(required) + " operands and an optional degree");
      }
      return argc == required + 1 ? detail::read_grade(n.items.back()) : Degree::one();
    };

    if (head == "gci") {
      if (section != Section::TBox) sexpr::fail(n, "'gci' outside tbox section");
      kb.add(Gci(detail::to_concept(n.items[1]), detail::to_concept(n.items[2]), grade(2)));
    } else if (head == "instance") {
      if (section != Section::ABox) sexpr::fail(n, "'instance' outside abox section");
      Degree g = grade(2);
      kb.add(ConceptAssertion(detail::expect_name(n.items[1], "individual"), detail::to_concept(n.items[2]), g));
    } else if (head == "related") {
      if (section != Section::ABox) sexpr::fail(n, "'related' outside abox section");
      Degree g = grade(3);
      kb.add(RoleAssertion(detail::expect_name(n.items[1], "individual"), detail::expect_name(n.items[2], "individual"),
                           detail::expect_name(n.items[3], "role"), g));
    } else {
      sexpr::fail(n.items.front(), "unknown axiom kind '" + head + "'");
    }
  }
  return kb;
}

inline std::string print_kb(const KnowledgeBase& kb) {
  std::string out = "tbox:\n";
  for (const auto& g : kb.tbox()) out += "  " + to_string(g) + "\n";
  out += "abox:\n";
  for (const auto& a : kb.abox()) out += "  " + to_string(a) + "\n";
  return out;
}

}  // namespace flalc

#endif  // FLALC_SYNTAX_HPP
