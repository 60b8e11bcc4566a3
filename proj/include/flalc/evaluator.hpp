#ifndef FLALC_EVALUATOR_HPP
#define FLALC_EVALUATOR_HPP

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "flalc/concept.hpp"
#include "flalc/degree.hpp"
#include "flalc/interpretation.hpp"
#include "flalc/knowledge_base.hpp"

namespace flalc {

/// Evaluates concepts over a fixed interpretation.
///
/// Each concept node is evaluated once over the whole domain and cached by
/// node identity, so shared subtrees (as produced by `min`/`iff`) are free.
/// Quantifiers only visit the nonzero role successors. Total cost is
/// O(|concept| * (|domain| + |role edges|)).
class Evaluator {
 public:
  explicit Evaluator(const FuzzyInterpretation& model) : model_(model) {}

  const FuzzyInterpretation& model() const { return model_; }

  /// Values of `c` at every element, in domain order.
  const std::vector<Degree>& column(const Concept& c) {
    if (auto it = cache_.find(c.id()); it != cache_.end()) return it->second.second;
    std::vector<Degree> values = compute(c);
    return cache_.emplace(c.id(), std::make_pair(c, std::move(values))).first->second.second;
  }

  const Degree& eval(const Concept& c, ElementId x) {
    if (x >= model_.size()) throw EvaluationError("element index " + std::to_string(x) + " out of range");
    return column(c)[x];
  }

 private:
  std::vector<Degree> compute(const Concept& c) {
    const std::size_t n = model_.size();
    std::vector<Degree> out;
    out.reserve(n);
    switch (c.kind()) {
      case Concept::Kind::Top: out.assign(n, Degree::one()); break;
      case Concept::Kind::Bottom: out.assign(n, Degree::zero()); break;
      case Concept::Kind::Atomic:
        for (ElementId x = 0; x < n; ++x) out.push_back(model_.concept_value(c.name(), x));
        break;
      case Concept::Kind::And:
      case Concept::Kind::Or: {
        const auto& l = column(c.lhs());
        const auto& r = column(c.rhs());
        const bool conj = c.kind() == Concept::Kind::And;
        for (ElementId x = 0; x < n; ++x) out.push_back(conj ? tnorm(l[x], r[x]) : tconorm(l[x], r[x]));
        break;
      }
      case Concept::Kind::Not: {
        const auto& a = column(c.arg());
        for (ElementId x = 0; x < n; ++x) out.push_back(negation(a[x]));
        break;
      }
      case Concept::Kind::Scale: {
        const auto& a = column(c.arg());
        for (ElementId x = 0; x < n; ++x) out.push_back(scale(c.count(), a[x]));
        break;
      }
      case Concept::Kind::Exists: {
        const auto& a = column(c.arg());
        for (ElementId x = 0; x < n; ++x) {
          Degree best = Degree::zero();
          for (const auto& [y, r] : model_.successors(c.name(), x)) best = max(best, tnorm(r, a[y]));
          out.push_back(std::move(best));
        }
        break;
      }
      case Concept::Kind::Forall: {
        const auto& a = column(c.arg());
        for (ElementId x = 0; x < n; ++x) {
          Degree worst = Degree::one();
          for (const auto& [y, r] : model_.successors(c.name(), x)) worst = min(worst, implication(r, a[y]));
          out.push_back(std::move(worst));
        }
        break;
      }
    }
    return out;
  }

  const FuzzyInterpretation& model_;
  // The Concept copy keeps the keyed node alive.
  std::unordered_map<const void*, std::pair<Concept, std::vector<Degree>>> cache_;
};

inline Degree eval_concept(const FuzzyInterpretation& model, const Concept& c, ElementId x) {
  return Evaluator(model).eval(c, x);
}

inline Degree eval_concept(const FuzzyInterpretation& model, const Concept& c, std::string_view element) {
  return eval_concept(model, c, model.element(element));
}

/// Value of a GCI together with the first element attaining the infimum.
struct GciValue {
  Degree value;
  std::optional<ElementId> argmin;
};

/// inf over `range` of lhs(x) ⇒ rhs(x); the whole domain when `range` is empty.
inline GciValue eval_gci(Evaluator& ev, const Concept& lhs, const Concept& rhs,
                         std::optional<std::span<const ElementId>> range = std::nullopt) {
  const auto& l = ev.column(lhs);
  const auto& r = ev.column(rhs);
  GciValue out{Degree::one(), std::nullopt};
  const auto visit = [&](ElementId x) {
    Degree v = implication(l[x], r[x]);
    if (!out.argmin || v < out.value) {
      out.value = std::move(v);
      out.argmin = x;
    }
  };
  if (range) {
    for (ElementId x : *range) visit(x);
  } else {
    for (ElementId x = 0; x < ev.model().size(); ++x) visit(x);
  }
  return out;
}

inline Degree eval_gci(const FuzzyInterpretation& model, const Concept& lhs, const Concept& rhs) {
  Evaluator ev(model);
  return eval_gci(ev, lhs, rhs).value;
}

struct AxiomCheck {
  Axiom axiom;
  bool satisfied;
  Degree value;
  /// Where the value was attained: the minimizing element for a GCI, the
  /// individual's element for a concept assertion, the subject for a role assertion.
  std::optional<ElementId> at;
};

struct CheckOptions {
  /// Elements GCI infima range over; all of the domain when unset.
  std::optional<std::vector<ElementId>> gci_range;
};

namespace detail {
inline ElementId individual_element(const FuzzyInterpretation& m, const std::string& name) {
  if (auto x = m.individual(name)) return *x;
  throw EvaluationError("individual '" + name + "' is not mapped by the interpretation");
}
}  // namespace detail

inline AxiomCheck check_axiom(Evaluator& ev, const Axiom& axiom, const CheckOptions& opts = {}) {
  const auto& m = ev.model();
  return std::visit(
      [&](const auto& ax) -> AxiomCheck {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, Gci>) {
          std::optional<std::span<const ElementId>> range;
          if (opts.gci_range) range = std::span<const ElementId>(*opts.gci_range);
          auto v = eval_gci(ev, ax.lhs, ax.rhs, range);
          const bool ok = v.value >= ax.grade;
          return AxiomCheck{axiom, ok, std::move(v.value), v.argmin};
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          const ElementId x = detail::individual_element(m, ax.individual);
          Degree v = ev.eval(ax.expr, x);
          const bool ok = v >= ax.grade;
          return AxiomCheck{axiom, ok, std::move(v), x};
        } else {
          const ElementId x = detail::individual_element(m, ax.subject);
          const ElementId y = detail::individual_element(m, ax.object);
          Degree v = m.role_value(ax.role, x, y);
          const bool ok = v >= ax.grade;
          return AxiomCheck{axiom, ok, std::move(v), x};
        }
      },
      axiom);
}

inline AxiomCheck check_axiom(const FuzzyInterpretation& model, const Axiom& axiom, const CheckOptions& opts = {}) {
  Evaluator ev(model);
  return check_axiom(ev, axiom, opts);
}

struct KbReport {
  std::vector<AxiomCheck> entries;

  bool satisfied() const {
    for (const auto& e : entries) {
      if (!e.satisfied) return false;
    }
    return true;
  }
  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.satisfied ? 0 : 1;
    return n;
  }
};

/// Checks every axiom, TBox first. The KB holds iff every entry is satisfied.
inline KbReport check_kb(const FuzzyInterpretation& model, const KnowledgeBase& kb, const CheckOptions& opts = {}) {
  Evaluator ev(model);
  KbReport report;
  for (const auto& ax : kb.axioms()) report.entries.push_back(check_axiom(ev, ax, opts));
  return report;
}

/// An element y realizing the value of a top-level ∃R.C (sup of R(x,y)⊗C(y))
/// or ∀R.C (inf of R(x,y)⇒C(y)) at x. Ties go to the first element in domain
/// order; a finite domain always has one.
inline ElementId find_witness(Evaluator& ev, const Concept& c, ElementId x) {
  const bool exists = c.kind() == Concept::Kind::Exists;
  if (!exists && c.kind() != Concept::Kind::Forall) {
    throw EvaluationError("find_witness needs a concept of the form (some R C) or (all R C)");
  }
  const auto& m = ev.model();
  const Degree target = ev.eval(c, x);
  const auto& arg = ev.column(c.arg());
  for (ElementId y = 0; y < m.size(); ++y) {
    const Degree& r = m.role_value(c.name(), x, y);
    if ((exists ? tnorm(r, arg[y]) : implication(r, arg[y])) == target) return y;
  }
  throw EvaluationError("no witness found");  // unreachable on a nonempty domain
}

inline ElementId find_witness(const FuzzyInterpretation& model, const Concept& c, ElementId x) {
  Evaluator ev(model);
  return find_witness(ev, c, x);
}

}  // namespace flalc

#endif  // FLALC_EVALUATOR_HPP
