#ifndef FLALC_CONCEPT_HPP
#define FLALC_CONCEPT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flalc/error.hpp"

namespace flalc {

/// True for names usable as concept, role, or individual names: an identifier
/// `[A-Za-z_][A-Za-z0-9_]*` other than the constants `top` and `bot`.
inline bool is_valid_name(std::string_view name) {
  if (name.empty() || name == "top" || name == "bot") return false;
  const auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

/// Immutable Ł-ALC concept. Copies share structure.
class Concept {
 public:
  enum class Kind { Top, Bottom, Atomic, And, Or, Not, Exists, Forall, Scale };

  static Concept top() { return Concept(Kind::Top); }
  static Concept bottom() { return Concept(Kind::Bottom); }
  static Concept atomic(std::string name);
  static Concept conj(Concept lhs, Concept rhs) { return binary(Kind::And, std::move(lhs), std::move(rhs)); }
  static Concept disj(Concept lhs, Concept rhs) { return binary(Kind::Or, std::move(lhs), std::move(rhs)); }
  static Concept neg(Concept arg);
  static Concept some(std::string role, Concept arg) { return quantified(Kind::Exists, std::move(role), std::move(arg)); }
  static Concept all(std::string role, Concept arg) { return quantified(Kind::Forall, std::move(role), std::move(arg)); }

  /// n·C. A count of 1 yields C itself.
  static Concept scaled(mpz_class n, Concept arg);

  Kind kind() const;

  /// Concept name for Atomic, role name for Exists/Forall.
  const std::string& name() const;
  /// First operand; the sole operand of Not, Exists, Forall and Scale.
  const Concept& lhs() const;
  const Concept& rhs() const;
  const Concept& arg() const { return lhs(); }
  const mpz_class& count() const;

  /// Identity of the underlying node; stable for the lifetime of any copy.
  const void* id() const { return node_.get(); }

  int quantifier_depth() const {
    switch (kind()) {
      case Kind::Top:
      case Kind::Bottom:
      case Kind::Atomic: return 0;
      case Kind::And:
      case Kind::Or: return std::max(lhs().quantifier_depth(), rhs().quantifier_depth());
      case Kind::Not:
      case Kind::Scale: return arg().quantifier_depth();
      case Kind::Exists:
      case Kind::Forall: return 1 + arg().quantifier_depth();
    }
    return 0;
  }

  void collect_names(std::set<std::string>& concepts, std::set<std::string>& roles) const {
    switch (kind()) {
      case Kind::Top:
      case Kind::Bottom: return;
      case Kind::Atomic: concepts.insert(name()); return;
      case Kind::And:
      case Kind::Or:
        lhs().collect_names(concepts, roles);
        rhs().collect_names(concepts, roles);
        return;
      case Kind::Exists:
      case Kind::Forall: roles.insert(name()); [[fallthrough]];
      case Kind::Not:
      case Kind::Scale: arg().collect_names(concepts, roles); return;
    }
  }

  friend bool operator==(const Concept& a, const Concept& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Top:
      case Kind::Bottom: return true;
      case Kind::Atomic: return a.name() == b.name();
      case Kind::And:
      case Kind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
      case Kind::Not: return a.arg() == b.arg();
      case Kind::Exists:
      case Kind::Forall: return a.name() == b.name() && a.arg() == b.arg();
      case Kind::Scale: return a.count() == b.count() && a.arg() == b.arg();
    }
    return false;
  }

 private:
  struct Node;

  Concept() = default;
  explicit Concept(Kind kind);

  Node& mut();

  static void require_name(const std::string& name, const char* what) {
    if (!is_valid_name(name)) throw ValidationError(std::string("invalid ") + what + " name '" + name + "'");
  }
  static Concept binary(Kind kind, Concept lhs, Concept rhs);
  static Concept quantified(Kind kind, std::string role, Concept arg);

  std::shared_ptr<const Node> node_;
};

struct Concept::Node {
  Kind kind = Kind::Top;
  std::string name;
  mpz_class count{1};
  Concept lhs;
  Concept rhs;
};

inline Concept::Concept(Kind kind) : node_(std::make_shared<Node>()) { mut().kind = kind; }

inline Concept::Node& Concept::mut() { return const_cast<Node&>(*node_); }
inline Concept::Kind Concept::kind() const { return node_->kind; }
inline const std::string& Concept::name() const { return node_->name; }
inline const Concept& Concept::lhs() const { return node_->lhs; }
inline const Concept& Concept::rhs() const { return node_->rhs; }
inline const mpz_class& Concept::count() const { return node_->count; }

inline Concept Concept::atomic(std::string name) {
  require_name(name, "concept");
  Concept c(Kind::Atomic);
  c.mut().name = std::move(name);
  return c;
}

inline Concept Concept::neg(Concept arg) {
  Concept c(Kind::Not);
  c.mut().lhs = std::move(arg);
  return c;
}

inline Concept Concept::scaled(mpz_class n, Concept arg) {
  if (sgn(n) <= 0) throw ValidationError("scale count must be >= 1, got " + n.get_str());
  if (n == 1) return arg;
  Concept c(Kind::Scale);
  c.mut().count = std::move(n);
  c.mut().lhs = std::move(arg);
  return c;
}

inline Concept Concept::binary(Kind kind, Concept lhs, Concept rhs) {
  Concept c(kind);
  c.mut().lhs = std::move(lhs);
  c.mut().rhs = std::move(rhs);
  return c;
}

inline Concept Concept::quantified(Kind kind, std::string role, Concept arg) {
  require_name(role, "role");
  Concept c(kind);
  c.mut().name = std::move(role);
  c.mut().lhs = std::move(arg);
  return c;
}

// Derived connectives. These are pure abbreviations: they build ordinary
// And/Or/Not trees.

/// C → D  :=  ¬C ⊔ D
inline Concept implies(Concept c, Concept d) { return Concept::disj(Concept::neg(std::move(c)), std::move(d)); }

/// C ↔ D  :=  (C → D) ⊓ (D → C)
inline Concept iff(const Concept& c, const Concept& d) { return Concept::conj(implies(c, d), implies(d, c)); }

/// min{C, D}  :=  C ⊓ (C → D)
inline Concept min_of(const Concept& c, Concept d) { return Concept::conj(c, implies(c, std::move(d))); }

/// max{C, D}  :=  (C → D) → D
inline Concept max_of(Concept c, const Concept& d) { return implies(implies(std::move(c), d), d); }

inline Concept min_of(const std::vector<Concept>& cs) {
  if (cs.empty()) throw ValidationError("min needs at least one operand");
  Concept acc = cs.front();
  for (std::size_t k = 1; k < cs.size(); ++k) acc = min_of(acc, cs[k]);
  return acc;
}

inline Concept max_of(const std::vector<Concept>& cs) {
  if (cs.empty()) throw ValidationError("max needs at least one operand");
  Concept acc = cs.front();
  for (std::size_t k = 1; k < cs.size(); ++k) acc = max_of(acc, cs[k]);
  return acc;
}

namespace detail {

// Recognizers for the abbreviations whose expansion duplicates operands.
// The printer folds these back so output stays readable; the parsed result
// is structurally identical either way.

inline bool match_implies(const Concept& c, const Concept** from, const Concept** to) {
  if (c.kind() != Concept::Kind::Or || c.lhs().kind() != Concept::Kind::Not) return false;
  *from = &c.lhs().arg();
  *to = &c.rhs();
  return true;
}

inline bool match_iff(const Concept& c, const Concept** a, const Concept** b) {
  if (c.kind() != Concept::Kind::And) return false;
  const Concept *a1, *b1, *a2, *b2;
  if (!match_implies(c.lhs(), &a1, &b1) || !match_implies(c.rhs(), &a2, &b2)) return false;
  if (!(*a1 == *b2) || !(*b1 == *a2)) return false;
  *a = a1;
  *b = b1;
  return true;
}

inline bool match_min(const Concept& c, const Concept** a, const Concept** b) {
  if (c.kind() != Concept::Kind::And) return false;
  const Concept *from, *to;
  if (!match_implies(c.rhs(), &from, &to) || !(*from == c.lhs())) return false;
  *a = &c.lhs();
  *b = to;
  return true;
}

inline bool match_max(const Concept& c, const Concept** a, const Concept** b) {
  const Concept *inner, *d;
  if (!match_implies(c, &inner, &d)) return false;
  const Concept *c1, *d1;
  if (!match_implies(*inner, &c1, &d1) || !(*d1 == *d)) return false;
  *a = c1;
  *b = d;
  return true;
}

inline void print(const Concept& c, std::string& out) {
  const Concept *a, *b;
  const auto op = [&](const char* name, const Concept& x, const Concept& y) {
    out += '(';
    out += name;
    out += ' ';
    print(x, out);
    out += ' ';
    print(y, out);
    out += ')';
  };
  switch (c.kind()) {
    case Concept::Kind::Top: out += "top"; return;
    case Concept::Kind::Bottom: out += "bot"; return;
    case Concept::Kind::Atomic: out += c.name(); return;
    case Concept::Kind::And:
      if (match_iff(c, &a, &b)) return op("iff", *a, *b);
      if (match_min(c, &a, &b)) return op("min", *a, *b);
      return op("and", c.lhs(), c.rhs());
    case Concept::Kind::Or:
      if (match_max(c, &a, &b)) return op("max", *a, *b);
      return op("or", c.lhs(), c.rhs());
    case Concept::Kind::Not:
      out += "(not ";
      print(c.arg(), out);
      out += ')';
      return;
    case Concept::Kind::Exists:
    case Concept::Kind::Forall:
      out += c.kind() == Concept::Kind::Exists ? "(some " : "(all ";
      out += c.name();
      out += ' ';
      print(c.arg(), out);
      out += ')';
      return;
    case Concept::Kind::Scale:
      out += "(scale ";
      out += c.count().get_str();
      out += ' ';
      print(c.arg(), out);
      out += ')';
      return;
  }
}

}  // namespace detail

/// Canonical s-expression text. `iff`, `min` and `max` are printed folded
/// when the tree has exactly their expanded shape; `impl` never is.
inline std::string to_string(const Concept& c) {
  std::string out;
  detail::print(c, out);
  return out;
}

}  // namespace flalc

#endif  // FLALC_CONCEPT_HPP
