#ifndef FLALC_CANONICAL_HPP
#define FLALC_CANONICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "flalc/degree.hpp"
#include "flalc/error.hpp"
#include "flalc/evaluator.hpp"
#include "flalc/interpretation.hpp"
#include "flalc/knowledge_base.hpp"
#include "flalc/pcp.hpp"
#include "flalc/reduction.hpp"

namespace flalc {

/// "eps" for the root, dotted indices otherwise ("2.1.1.3").
inline std::string node_name(const IndexSequence& mu) { return mu.empty() ? "eps" : sequence_to_string(mu); }

inline std::optional<IndexSequence> parse_node_name(std::string_view name) {
  if (name == "eps") return IndexSequence{};
  IndexSequence mu;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t dot = name.find('.', start);
    if (dot == std::string_view::npos) dot = name.size();
    const auto part = name.substr(start, dot - start);
    if (part.empty() || part.size() > 9 || part.find_first_not_of("0123456789") != std::string_view::npos) {
      return std::nullopt;
    }
    const auto i = std::stoul(std::string(part));
    if (i == 0) return std::nullopt;
    mu.push_back(i);
    start = dot + 1;
  }
  return mu;
}

struct CanonicalOptions {
  std::uint64_t max_nodes = 2'000'000;
};

/// The canonical prefix-tree interpretation over {1..p}^* cut at depth d.
///
/// Domain order is breadth-first, lexicographic within a level. Values at a
/// node μ = i1...ik depend only on μ: V = 0.v_μ with v_μ = v_ik...v_i1,
/// V1 = 0.v_μ̄·(s+1)^(-|v_ik|), V2 = 0.v_ik (W likewise), and
/// A = ε·(s+1)^(-Σ_j max{|v_ij|,|w_ij|}) with one term per occurrence.
/// R_i(μ, μi) = 1 on tree edges and 0 elsewhere.
class CanonicalModel {
 public:
  CanonicalModel(PcpInstance inst, std::size_t depth, const ReductionConfig& cfg = {},
                 const CanonicalOptions& opts = {})
      : inst_(std::move(inst)), depth_(depth), epsilon_(cfg.epsilon) {
    if (depth_ < 1) throw ValidationError("canonical model depth must be >= 1");
    cfg.validate();
    enumerate_nodes(opts);
    fill();
  }

  const PcpInstance& instance() const { return inst_; }
  std::size_t depth() const { return depth_; }
  const Degree& epsilon() const { return epsilon_; }
  const FuzzyInterpretation& interpretation() const { return model_; }

  /// All index sequences, in domain order.
  const std::vector<IndexSequence>& nodes() const { return nodes_; }
  ElementId element(const IndexSequence& mu) const { return model_.element(node_name(mu)); }

  /// Nodes strictly above the frontier (|μ| <= d-1).
  std::vector<ElementId> interior() const {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < nodes_.size(); ++x) {
      if (nodes_[x].size() < depth_) out.push_back(x);
    }
    return out;
  }

  /// The intended value of a reduction concept name at μ, computed from the
  /// defining formulas.
  Degree expected(const std::string& name, const IndexSequence& mu) const {
    const auto s = inst_.alphabet_size();
    if (name == vocab::A) {
      std::size_t exponent = 0;
      for (auto i : mu) exponent += std::max(inst_.top(i).size(), inst_.bottom(i).size());
      return Degree(mpq_class(epsilon_.value() / mpq_class(base_power(s, exponent))));
    }
    if (mu.empty()) return Degree::zero();
    const std::size_t last = mu.back();
    const IndexSequence parent(mu.begin(), mu.end() - 1);
    if (name == vocab::V || name == vocab::W) {
      const auto [v, w] = concatenate(inst_, mu, Concatenation::RightToLeft);
      return encode_word(name == vocab::V ? v : w, s);
    }
    if (name == vocab::V1 || name == vocab::W1) {
      const auto [v, w] = concatenate(inst_, parent, Concatenation::RightToLeft);
      const bool top = name == vocab::V1;
      const Degree tail = encode_word(top ? v : w, s);
      const auto len = (top ? inst_.top(last) : inst_.bottom(last)).size();
      return Degree(mpq_class(tail.value() / mpq_class(base_power(s, len))));
    }
    if (name == vocab::V2) return encode_word(inst_.top(last), s);
    if (name == vocab::W2) return encode_word(inst_.bottom(last), s);
    throw ValidationError("'" + name + "' is not a reduction concept name");
  }

 private:
  void enumerate_nodes(const CanonicalOptions& opts) {
    const std::size_t p = inst_.size();
    std::uint64_t total = 0, level = 1;
    for (std::size_t k = 0; k <= depth_; ++k) {
      total += level;
      if (total > opts.max_nodes) {
        throw ResourceLimitError("canonical model of depth " + std::to_string(depth_) + " exceeds " +
                                 std::to_string(opts.max_nodes) + " nodes");
      }
      level *= p;
    }
    nodes_.reserve(total);
    nodes_.emplace_back();
    for (std::size_t begin = 0; nodes_.size() < total;) {
      const std::size_t end = nodes_.size();
      for (std::size_t x = begin; x < end; ++x) {
        for (std::size_t i = 1; i <= p; ++i) {
          IndexSequence child = nodes_[x];
          child.push_back(i);
          nodes_.push_back(std::move(child));
        }
      }
      begin = end;
    }
  }

  void fill() {
    for (const auto& mu : nodes_) model_.add_element(node_name(mu));
    model_.map_individual(vocab::root_individual, 0);
    for (ElementId x = 0; x < nodes_.size(); ++x) {
      for (const auto& name : vocab::concept_names()) model_.set_concept(name, x, expected(name, nodes_[x]));
      if (nodes_[x].size() < depth_) {
        for (std::size_t i = 1; i <= inst_.size(); ++i) {
          IndexSequence child = nodes_[x];
          child.push_back(i);
          model_.set_role(vocab::role(i), x, element(child), Degree::one());
        }
      }
    }
  }

  PcpInstance inst_;
  std::size_t depth_;
  Degree epsilon_;
  std::vector<IndexSequence> nodes_;
  FuzzyInterpretation model_;
};

inline CanonicalModel build_canonical(const PcpInstance& inst, std::size_t depth, const ReductionConfig& cfg = {},
                                      const CanonicalOptions& opts = {}) {
  return CanonicalModel(inst, depth, cfg, opts);
}

namespace detail {

inline void require_reduction_vocabulary(const KnowledgeBase& kb, std::size_t pairs) {
  const auto sig = kb.signature();
  const auto& names = vocab::concept_names();
  for (const auto& c : sig.concepts) {
    if (std::find(names.begin(), names.end(), c) == names.end()) {
      throw ValidationError("concept name '" + c + "' is outside the reduction vocabulary");
    }
  }
  for (const auto& r : sig.roles) {
    bool known = false;
    for (std::size_t i = 1; i <= pairs; ++i) known = known || r == vocab::role(i);
    if (!known) throw ValidationError("role name '" + r + "' is outside the reduction vocabulary");
  }
  for (const auto& a : sig.individuals) {
    if (a != vocab::root_individual) {
      throw ValidationError("individual '" + a + "' is outside the reduction vocabulary");
    }
  }
}

}  // namespace detail

/// Checks a KB over the reduction vocabulary against a truncated canonical
/// model, with GCI infima restricted to interior nodes. Values there are
/// exact because every concept of the KB has quantifier depth <= 1; deeper
/// KBs are refused.
inline KbReport check_canonical(Evaluator& ev, const CanonicalModel& m, const KnowledgeBase& kb) {
  detail::require_reduction_vocabulary(kb, m.instance().size());
  if (kb.quantifier_depth() > 1) {
    throw ValidationError("interior-only checking needs quantifier depth <= 1, KB has " +
                          std::to_string(kb.quantifier_depth()));
  }
  CheckOptions opts;
  opts.gci_range = m.interior();
  KbReport report;
  for (const auto& ax : kb.axioms()) report.entries.push_back(check_axiom(ev, ax, opts));
  return report;
}

inline KbReport check_canonical(const CanonicalModel& m, const KnowledgeBase& kb) {
  Evaluator ev(m.interpretation());
  return check_canonical(ev, m, kb);
}

/// g: canonical nodes -> target elements, indexed by canonical ElementId.
struct Homomorphism {
  std::vector<ElementId> image;
};

/// The first place where the target disagrees with the canonical model.
struct CounterexampleReport {
  IndexSequence node;
  std::string name;
  Degree expected;
  Degree actual;
  std::string element;  // g(node) in the target

  std::string describe() const {
    return "at node " + node_name(node) + " (target element " + element + "): " + name + " expected " +
           expected.str() + ", found " + actual.str();
  }
};

using HomomorphismResult = std::variant<Homomorphism, CounterexampleReport>;

/// Builds g inductively: g(ε) = a, and g(μi) is the first element y in the
/// target's domain order with R_i(g(μ), y) = 1. Every node of depth <= d is
/// mapped and checked for the seven concept-name equalities and the edge
/// equality R_i(μ, μi) = R_i(g(μ), g(μi)).
///
/// Throws EvaluationError if `a` is unmapped or some g(μ) with |μ| < d has no
/// degree-1 R_i-successor.
inline HomomorphismResult build_homomorphism(const FuzzyInterpretation& target, const PcpInstance& inst,
                                             const ReductionConfig& cfg, std::size_t depth,
                                             const CanonicalOptions& opts = {}) {
  const CanonicalModel canon(inst, depth, cfg, opts);
  const auto root = target.individual(vocab::root_individual);
  if (!root) throw EvaluationError("target does not map individual '" + vocab::root_individual + "'");

  const auto& nodes = canon.nodes();
  Homomorphism g;
  g.image.assign(nodes.size(), 0);
  g.image[0] = *root;

  const auto compare = [&](ElementId node) -> std::optional<CounterexampleReport> {
    const ElementId y = g.image[node];
    for (const auto& name : vocab::concept_names()) {
      const Degree& want = canon.interpretation().concept_value(name, node);
      const Degree& got = target.concept_value(name, y);
      if (want != got) return CounterexampleReport{nodes[node], name, want, got, target.element_name(y)};
    }
    return std::nullopt;
  };

  if (auto bad = compare(0)) return *bad;
  // Domain order is breadth-first, so parents are mapped before children.
  for (ElementId x = 0; x < nodes.size(); ++x) {
    if (nodes[x].size() >= depth) continue;
    for (std::size_t i = 1; i <= inst.size(); ++i) {
      const std::string role = vocab::role(i);
      std::optional<ElementId> next;
      for (const auto& [y, r] : target.successors(role, g.image[x])) {
        if (r.is_one()) {
          next = y;
          break;
        }
      }
      if (!next) {
        throw EvaluationError("element " + target.element_name(g.image[x]) + " (image of node " +
                              node_name(nodes[x]) + ") has no " + role + "-successor of degree 1");
      }
      IndexSequence child_mu = nodes[x];
      child_mu.push_back(i);
      const ElementId child = canon.element(child_mu);
      g.image[child] = *next;
      const Degree& want = canon.interpretation().role_value(role, x, child);
      const Degree& got = target.role_value(role, g.image[x], *next);
      if (want != got) return CounterexampleReport{nodes[x], role, want, got, target.element_name(g.image[x])};
      if (auto bad = compare(child)) return *bad;
    }
  }
  return g;
}

/// Outcome of the end-to-end check on the truncated canonical model.
struct TheoremVerdict {
  enum class Kind { Solved, ConsistentToDepth };

  Kind kind = Kind::ConsistentToDepth;
  std::size_t depth = 0;
  /// Solved: the RPCP solution read off the violated extra GCI.
  std::optional<IndexSequence> sequence;
  /// Solved: index i_k of the violated extra GCI ⊤ ⊑ ∀R_i.(¬(V↔W) ⊔ ¬A).
  std::size_t violated_axiom = 0;
  /// Solved: that GCI's concept evaluated at the parent node μ̄ (always < 1).
  std::optional<Degree> value;
  /// Full check of the extended ontology on the canonical model.
  KbReport report;
  /// Whether the axioms of the base ontology all hold on the canonical model.
  bool base_satisfied = false;
  /// Independent brute-force RPCP search to the same depth.
  SolveResult solver;

  bool solver_agrees() const { return solver.solution == sequence; }

  /// verdict=solved|consistent-to-depth depth=<d> [sequence=<dotted>] [value=<p/q>]
  std::string summary() const {
    std::string out = std::string("verdict=") + (kind == Kind::Solved ? "solved" : "consistent-to-depth") +
                      " depth=" + std::to_string(depth);
    if (sequence) out += " sequence=" + sequence_to_string(*sequence);
    if (value) out += " value=" + value->str();
    return out;
  }

  std::string describe() const {
    if (kind == Kind::Solved) {
      IndexSequence parent(sequence->begin(), sequence->end() - 1);
      return "RPCP solution " + sequence_to_string(*sequence) + " found. The extra axiom for R" +
             std::to_string(violated_axiom) + " evaluates to " + value->str() + " < 1 at node " + node_name(parent) +
             ", so the extended ontology has no witnessed model.";
    }
    return "No RPCP solution of length <= " + std::to_string(depth) +
           "; the canonical model truncated at depth " + std::to_string(depth) +
           " satisfies the extended ontology on every interior node. This is not a proof that the instance is "
           "unsolvable: longer solutions may exist.";
  }
};

/// Compiles the extended ontology, checks it on the canonical model cut at
/// `depth`, and reads the verdict off the model: an extra GCI evaluating
/// below 1 at interior node μ̄ for role R_i exposes the solution μ̄i. The
/// first such (μ̄, i) in domain order gives the shortest, lexicographically
/// least solution. The brute-force solver result is attached for comparison.
inline TheoremVerdict verify_theorem(const PcpInstance& inst, std::size_t depth, const ReductionConfig& cfg = {},
                                     const CanonicalOptions& opts = {}, const SolveOptions& solve_opts = {}) {
  const CanonicalModel m(inst, depth, cfg, opts);
  const KnowledgeBase base = build_kb(inst, cfg);
  const KnowledgeBase extended = build_kb_prime(inst, cfg);

  Evaluator ev(m.interpretation());
  TheoremVerdict verdict;
  verdict.depth = depth;
  verdict.report = check_canonical(ev, m, extended);
  verdict.base_satisfied = true;
  for (const auto& e : verdict.report.entries) {
    if (base.contains(e.axiom) && !e.satisfied) verdict.base_satisfied = false;
  }

  std::vector<Concept> extra;
  for (std::size_t i = 1; i <= inst.size(); ++i) extra.push_back(build_prime_axiom(i).rhs);
  for (ElementId x : m.interior()) {
    for (std::size_t i = 1; i <= inst.size() && !verdict.sequence; ++i) {
      const Degree& v = ev.eval(extra[i - 1], x);
      if (!v.is_one()) {
        IndexSequence mu = m.nodes()[x];
        mu.push_back(i);
        verdict.kind = TheoremVerdict::Kind::Solved;
        verdict.sequence = std::move(mu);
        verdict.violated_axiom = i;
        verdict.value = v;
      }
    }
    if (verdict.sequence) break;
  }
  verdict.solver = solve_rpcp(inst, depth, solve_opts);
  return verdict;
}

}  // namespace flalc

#endif  // FLALC_CANONICAL_HPP
