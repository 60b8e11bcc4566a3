#ifndef FLALC_KNOWLEDGE_BASE_HPP
#define FLALC_KNOWLEDGE_BASE_HPP

#include <set>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "flalc/concept.hpp"
#include "flalc/degree.hpp"

namespace flalc {

namespace detail {
inline Degree require_grade(Degree grade) {
  if (grade.is_zero()) throw ValidationError("axiom grade must lie in (0,1], got 0");
  return grade;
}
inline std::string require_individual(std::string name) {
  if (!is_valid_name(name)) throw ValidationError("invalid individual name '" + name + "'");
  return name;
}
}  // namespace detail

/// ⟨lhs ⊑ rhs⟩ ≥ grade
struct Gci {
  Gci(Concept lhs, Concept rhs, Degree grade = Degree::one())
      : lhs(std::move(lhs)), rhs(std::move(rhs)), grade(detail::require_grade(std::move(grade))) {}

  Concept lhs;
  Concept rhs;
  Degree grade;

  friend bool operator==(const Gci&, const Gci&) = default;
};

/// ⟨individual : expr⟩ ≥ grade
struct ConceptAssertion {
  ConceptAssertion(std::string individual, Concept expr, Degree grade = Degree::one())
      : individual(detail::require_individual(std::move(individual))),
        expr(std::move(expr)),
        grade(detail::require_grade(std::move(grade))) {}

  std::string individual;
  Concept expr;
  Degree grade;

  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

/// ⟨(subject, object) : role⟩ ≥ grade
struct RoleAssertion {
  RoleAssertion(std::string subject, std::string object, std::string role, Degree grade = Degree::one())
      : subject(detail::require_individual(std::move(subject))),
        object(detail::require_individual(std::move(object))),
        role(std::move(role)),
        grade(detail::require_grade(std::move(grade))) {
    if (!is_valid_name(this->role)) throw ValidationError("invalid role name '" + this->role + "'");
  }

  std::string subject;
  std::string object;
  std::string role;
  Degree grade;

  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;
using Axiom = std::variant<Gci, ConceptAssertion, RoleAssertion>;

inline std::string to_string(const Gci& a) {
  return "(gci " + to_string(a.lhs) + " " + to_string(a.rhs) + " " + a.grade.str() + ")";
}
inline std::string to_string(const ConceptAssertion& a) {
  return "(instance " + a.individual + " " + to_string(a.expr) + " " + a.grade.str() + ")";
}
inline std::string to_string(const RoleAssertion& a) {
  return "(related " + a.subject + " " + a.object + " " + a.role + " " + a.grade.str() + ")";
}
inline std::string to_string(const Assertion& a) {
  return std::visit([](const auto& x) { return to_string(x); }, a);
}
inline std::string to_string(const Axiom& a) {
  return std::visit([](const auto& x) { return to_string(x); }, a);
}

inline const Degree& grade_of(const Axiom& a) {
  return std::visit([](const auto& x) -> const Degree& { return x.grade; }, a);
}

/// A TBox of graded GCIs and an ABox of graded assertions, each kept in
/// insertion order. Adding an axiom that is already present is a no-op.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  /// Returns false if the axiom was a duplicate.
  bool add(const Axiom& axiom) {
    if (!seen_.insert(to_string(axiom)).second) return false;
    if (const auto* gci = std::get_if<Gci>(&axiom)) {
      tbox_.push_back(*gci);
    } else if (const auto* ca = std::get_if<ConceptAssertion>(&axiom)) {
      abox_.emplace_back(*ca);
    } else {
      abox_.emplace_back(std::get<RoleAssertion>(axiom));
    }
    return true;
  }

  const std::vector<Gci>& tbox() const { return tbox_; }
  const std::vector<Assertion>& abox() const { return abox_; }

  std::size_t size() const { return tbox_.size() + abox_.size(); }
  bool empty() const { return size() == 0; }

  bool contains(const Axiom& axiom) const { return seen_.count(to_string(axiom)) != 0; }

  /// TBox axioms first, then ABox, each in insertion order.
  std::vector<Axiom> axioms() const {
    std::vector<Axiom> out(tbox_.begin(), tbox_.end());
    for (const auto& a : abox_) std::visit([&](const auto& x) { out.emplace_back(x); }, a);
    return out;
  }

  int quantifier_depth() const {
    int depth = 0;
    for (const auto& g : tbox_) depth = std::max({depth, g.lhs.quantifier_depth(), g.rhs.quantifier_depth()});
    for (const auto& a : abox_) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a)) depth = std::max(depth, ca->expr.quantifier_depth());
    }
    return depth;
  }

  /// Concept, role, and individual names occurring anywhere in the KB.
  struct Signature {
    std::set<std::string> concepts;
    std::set<std::string> roles;
    std::set<std::string> individuals;
  };

  Signature signature() const {
    Signature sig;
    for (const auto& g : tbox_) {
      g.lhs.collect_names(sig.concepts, sig.roles);
      g.rhs.collect_names(sig.concepts, sig.roles);
    }
    for (const auto& a : abox_) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
        ca->expr.collect_names(sig.concepts, sig.roles);
        sig.individuals.insert(ca->individual);
      } else {
        const auto& ra = std::get<RoleAssertion>(a);
        sig.roles.insert(ra.role);
        sig.individuals.insert(ra.subject);
        sig.individuals.insert(ra.object);
      }
    }
    return sig;
  }

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.tbox_ == b.tbox_ && a.abox_ == b.abox_;
  }

 private:
  std::vector<Gci> tbox_;
  std::vector<Assertion> abox_;
  std::unordered_set<std::string> seen_;
};

}  // namespace flalc

#endif  // FLALC_KNOWLEDGE_BASE_HPP
