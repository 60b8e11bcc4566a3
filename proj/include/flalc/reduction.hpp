#ifndef FLALC_REDUCTION_HPP
#define FLALC_REDUCTION_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "flalc/concept.hpp"
#include "flalc/degree.hpp"
#include "flalc/knowledge_base.hpp"
#include "flalc/pcp.hpp"

namespace flalc {

/// Fixed vocabulary of the compiled ontologies.
namespace vocab {
inline const std::string V = "V";
inline const std::string W = "W";
inline const std::string V1 = "V1";
inline const std::string V2 = "V2";
inline const std::string W1 = "W1";
inline const std::string W2 = "W2";
inline const std::string A = "A";
inline const std::string root_individual = "a";

/// Every concept name the reduction emits, in a fixed order.
inline const std::vector<std::string>& concept_names() {
  static const std::vector<std::string> names{V, W, V1, V2, W1, W2, A};
  return names;
}

/// R1, R2, ...
inline std::string role(std::size_t i) { return "R" + std::to_string(i); }
}  // namespace vocab

struct ReductionConfig {
  /// Lower bound asserted for A at the root individual; ¬A gets 1 minus this.
  Degree epsilon = Degree(1, 100);

  void validate() const {
    if (epsilon.is_zero() || epsilon.is_one()) {
      throw ValidationError("epsilon grade must lie strictly between 0 and 1, got " + epsilon.str());
    }
  }
};

/// The eleven GCIs tying the R_i-successor of an element to pair i.
inline std::vector<Gci> build_tbox_i(const PcpInstance& inst, std::size_t i, const ReductionConfig& cfg = {}) {
  if (i < 1 || i > inst.size()) throw ValidationError("pair index " + std::to_string(i) + " out of range");
  cfg.validate();
  using vocab::A, vocab::V, vocab::V1, vocab::V2, vocab::W, vocab::W1, vocab::W2;
  const auto s = inst.alphabet_size();
  const Word& v = inst.top(i);
  const Word& w = inst.bottom(i);
  const std::string r = vocab::role(i);
  const mpz_class kv = base_power(s, v.size());
  const mpz_class kw = base_power(s, w.size());
  const mpz_class ka = base_power(s, std::max(v.size(), w.size()));
  const Degree ev = encode_word(v, s);
  const Degree ew = encode_word(w, s);
  const auto at = [](const std::string& n) { return Concept::atomic(n); };
  const Concept top = Concept::top();

  return {
      Gci(top, Concept::some(r, top)),
      Gci(at(V), Concept::scaled(kv, Concept::all(r, at(V1)))),
      Gci(Concept::scaled(kv, Concept::some(r, at(V1))), at(V)),
      Gci(at(W), Concept::scaled(kw, Concept::all(r, at(W1)))),
      Gci(Concept::scaled(kw, Concept::some(r, at(W1))), at(W)),
      Gci(top, Concept::all(r, at(V2)), ev),
      Gci(top, Concept::all(r, Concept::neg(at(V2))), negation(ev)),
      Gci(top, Concept::all(r, at(W2)), ew),
      Gci(top, Concept::all(r, Concept::neg(at(W2))), negation(ew)),
      Gci(at(A), Concept::scaled(ka, Concept::all(r, at(A)))),
      Gci(Concept::scaled(ka, Concept::some(r, at(A))), at(A)),
  };
}

/// ⊤ ⊑ ∀R_i.(¬(V↔W) ⊔ ¬A)
inline Gci build_prime_axiom(std::size_t i) {
  const Concept v = Concept::atomic(vocab::V);
  const Concept w = Concept::atomic(vocab::W);
  const Concept body = Concept::disj(Concept::neg(iff(v, w)), Concept::neg(Concept::atomic(vocab::A)));
  return Gci(Concept::top(), Concept::all(vocab::role(i), body));
}

namespace detail {

inline KnowledgeBase build(const PcpInstance& inst, const ReductionConfig& cfg, bool prime) {
  cfg.validate();
  using vocab::A, vocab::V, vocab::V1, vocab::V2, vocab::W, vocab::W1, vocab::W2;
  const auto at = [](const std::string& n) { return Concept::atomic(n); };
  KnowledgeBase kb;
  // V ≡ V1 ⊔ V2 and W ≡ W1 ⊔ W2, each as two inclusions.
  kb.add(Gci(at(V), Concept::disj(at(V1), at(V2))));
  kb.add(Gci(Concept::disj(at(V1), at(V2)), at(V)));
  kb.add(Gci(at(W), Concept::disj(at(W1), at(W2))));
  kb.add(Gci(Concept::disj(at(W1), at(W2)), at(W)));
  for (std::size_t i = 1; i <= inst.size(); ++i) {
    for (auto& g : build_tbox_i(inst, i, cfg)) kb.add(std::move(g));
  }
  if (prime) {
    for (std::size_t i = 1; i <= inst.size(); ++i) kb.add(build_prime_axiom(i));
  }
  const std::string& a = vocab::root_individual;
  kb.add(ConceptAssertion(a, Concept::neg(at(V))));
  kb.add(ConceptAssertion(a, Concept::neg(at(W))));
  kb.add(ConceptAssertion(a, at(A), cfg.epsilon));
  kb.add(ConceptAssertion(a, Concept::neg(at(A)), negation(cfg.epsilon)));
  return kb;
}

}  // namespace detail

/// The ontology whose witnessed models all contain a homomorphic image of
/// the canonical prefix-tree model. 4 + 11p + 4 axioms.
inline KnowledgeBase build_kb(const PcpInstance& inst, const ReductionConfig& cfg = {}) {
  return detail::build(inst, cfg, false);
}

/// build_kb plus one GCI per pair forbidding V = W below the root; witnessed
/// satisfiable iff the instance has no RPCP solution.
inline KnowledgeBase build_kb_prime(const PcpInstance& inst, const ReductionConfig& cfg = {}) {
  return detail::build(inst, cfg, true);
}

}  // namespace flalc

#endif  // FLALC_REDUCTION_HPP
