#ifndef FLALC_INTERPRETATION_HPP
#define FLALC_INTERPRETATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flalc/concept.hpp"
#include "flalc/degree.hpp"
#include "flalc/error.hpp"

namespace flalc {

using ElementId = std::size_t;

/// A finite fuzzy interpretation.
///
/// Concept and role values default to 0. Roles are stored sparsely: only
/// pairs with a nonzero degree are kept, which is all the quantifier
/// semantics ever needs (a zero-degree pair contributes 1 to an infimum and
/// 0 to a supremum).
class FuzzyInterpretation {
 public:
  using Successors = std::map<ElementId, Degree>;

  static bool is_valid_element_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == '(' || c == ')') return false;
    }
    return true;
  }

  ElementId add_element(std::string name) {
    if (!is_valid_element_name(name)) throw ValidationError("invalid element name '" + name + "'");
    if (index_.count(name)) throw ValidationError("duplicate element '" + name + "'");
    const ElementId id = domain_.size();
    index_.emplace(name, id);
    domain_.push_back(std::move(name));
    for (auto& [_, column] : concepts_) column.emplace_back();
    for (auto& [_, rows] : roles_) rows.emplace_back();
    return id;
  }

  std::size_t size() const { return domain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::string& element_name(ElementId x) const { return domain_.at(x); }

  std::optional<ElementId> find_element(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  ElementId element(std::string_view name) const {
    if (auto x = find_element(name)) return *x;
    throw EvaluationError("unknown element '" + std::string(name) + "'");
  }

  void set_concept(const std::string& name, ElementId x, Degree d) {
    check_element(x);
    if (!is_valid_name(name)) throw ValidationError("invalid concept name '" + name + "'");
    auto it = concepts_.find(name);
    if (it == concepts_.end()) it = concepts_.emplace(name, std::vector<Degree>(domain_.size())).first;
    it->second[x] = std::move(d);
  }

  const Degree& concept_value(const std::string& name, ElementId x) const {
    static const Degree zero;
    check_element(x);
    auto it = concepts_.find(name);
    return it == concepts_.end() ? zero : it->second[x];
  }

  void set_role(const std::string& role, ElementId x, ElementId y, Degree d) {
    check_element(x);
    check_element(y);
    if (!is_valid_name(role)) throw ValidationError("invalid role name '" + role + "'");
    auto it = roles_.find(role);
    if (it == roles_.end()) it = roles_.emplace(role, std::vector<Successors>(domain_.size())).first;
    if (d.is_zero()) {
      it->second[x].erase(y);
    } else {
      it->second[x][y] = std::move(d);
    }
  }

  const Degree& role_value(const std::string& role, ElementId x, ElementId y) const {
    static const Degree zero;
    const auto& succ = successors(role, x);
    auto it = succ.find(y);
    return it == succ.end() ? zero : it->second;
  }

  /// Elements y with role(x, y) > 0, in domain order.
  const Successors& successors(const std::string& role, ElementId x) const {
    static const Successors none;
    check_element(x);
    auto it = roles_.find(role);
    return it == roles_.end() ? none : it->second[x];
  }

  /// Individuals must denote pairwise distinct elements.
  void map_individual(const std::string& name, ElementId x) {
    check_element(x);
    if (!is_valid_name(name)) throw ValidationError("invalid individual name '" + name + "'");
    for (const auto& [other, y] : individuals_) {
      if (y == x && other != name) {
        throw ValidationError("individuals '" + other + "' and '" + name + "' both denote '" + domain_[x] +
                              "' (unique name assumption)");
      }
    }
    individuals_[name] = x;
  }

  std::optional<ElementId> individual(const std::string& name) const {
    auto it = individuals_.find(name);
    if (it == individuals_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::string, ElementId>& individuals() const { return individuals_; }
  const std::map<std::string, std::vector<Degree>>& concept_table() const { return concepts_; }
  const std::map<std::string, std::vector<Successors>>& role_table() const { return roles_; }

 private:
  void check_element(ElementId x) const {
    if (x >= domain_.size()) throw EvaluationError("element index " + std::to_string(x) + " out of range");
  }

  std::vector<std::string> domain_;
  std::unordered_map<std::string, ElementId> index_;
  std::map<std::string, std::vector<Degree>> concepts_;
  std::map<std::string, std::vector<Successors>> roles_;
  std::map<std::string, ElementId> individuals_;
};

// Model files (.fim), one entry per line, `#` comments:
//
//   domain: e0 e1 e2
//   individual: a -> e0
//   concept: A e0 1/100
//   role: R1 e0 e1 1
//
// The domain line comes first. Unlisted values are 0.

inline FuzzyInterpretation parse_model(std::string_view text) {
  FuzzyInterpretation m;
  bool have_domain = false;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const auto fail = [&](const std::string& msg) -> void {
      const auto col = line.find_first_not_of(" \t");
      throw SyntaxError(msg, line_no, col == std::string::npos ? 1 : col + 1);
    };
    const auto elem = [&](const std::string& name) {
      auto x = m.find_element(name);
      if (!x) fail("unknown element '" + name + "'");
      return *x;
    };
    const auto degree = [&](const std::string& s) {
      try {
        return Degree::parse(s);
      } catch (const ValidationError& e) {
        fail(e.what());
      }
      return Degree();
    };
    const auto once = [&](std::string key) {
      if (!seen.insert(key).second) fail("duplicate entry");
    };

    const std::string& kind = tok[0];
    if (kind == "domain:") {
      if (have_domain) fail("duplicate domain line");
      if (tok.size() < 2) fail("domain must be nonempty");
      have_domain = true;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        try {
          m.add_element(tok[k]);
        } catch (const ValidationError& e) {
          fail(e.what());
        }
      }
      continue;
    }
    if (!have_domain) fail("expected 'domain:' line first");
    try {
      if (kind == "individual:") {
        if (tok.size() != 4 || tok[2] != "->") fail("expected 'individual: NAME -> ELEMENT'");
        if (m.individual(tok[1])) fail("individual '" + tok[1] + "' mapped twice");
        m.map_individual(tok[1], elem(tok[3]));
      } else if (kind == "concept:") {
        if (tok.size() != 4) fail("expected 'concept: NAME ELEMENT DEGREE'");
        once("c " + tok[1] + " " + tok[2]);
        m.set_concept(tok[1], elem(tok[2]), degree(tok[3]));
      } else if (kind == "role:") {
        if (tok.size() != 5) fail("expected 'role: NAME ELEMENT ELEMENT DEGREE'");
        once("r " + tok[1] + " " + tok[2] + " " + tok[3]);
        m.set_role(tok[1], elem(tok[2]), elem(tok[3]), degree(tok[4]));
      } else {
        fail("unknown entry '" + kind + "'");
      }
    } catch (const ValidationError& e) {
      fail(e.what());
    }
  }
  if (!have_domain) throw SyntaxError("missing 'domain:' line", 1, 1);
  return m;
}

/// Deterministic rendering; zero entries are omitted.
inline std::string print_model(const FuzzyInterpretation& m) {
  std::string out = "domain:";
  for (const auto& e : m.domain()) out += " " + e;
  out += "\n";
  for (const auto& [name, x] : m.individuals()) out += "individual: " + name + " -> " + m.element_name(x) + "\n";
  for (const auto& [name, column] : m.concept_table()) {
    for (ElementId x = 0; x < column.size(); ++x) {
      if (!column[x].is_zero()) out += "concept: " + name + " " + m.element_name(x) + " " + column[x].str() + "\n";
    }
  }
  for (const auto& [role, rows] : m.role_table()) {
    for (ElementId x = 0; x < rows.size(); ++x) {
      for (const auto& [y, d] : rows[x]) {
        out += "role: " + role + " " + m.element_name(x) + " " + m.element_name(y) + " " + d.str() + "\n";
      }
    }
  }
  return out;
}

}  // namespace flalc

#endif  // FLALC_INTERPRETATION_HPP
