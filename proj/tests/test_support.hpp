#ifndef FLALC_TESTS_TEST_SUPPORT_HPP
#define FLALC_TESTS_TEST_SUPPORT_HPP

// Random generators and reference oracles shared by the suites. The oracles
// deliberately avoid the library's evaluation and search code paths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flalc/flalc.hpp"

namespace flalc::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// p/q with q <= max_den, uniformly over numerators 0..q.
inline Degree random_degree(Rng& rng, std::uint64_t max_den = 60) {
  const auto q = uniform(rng, 1, max_den);
  const auto p = uniform(rng, 0, q);
  return Degree(static_cast<long>(p), static_cast<long>(q));
}

inline const std::vector<std::string>& concept_pool() {
  static const std::vector<std::string> names{"A", "B", "C"};
  return names;
}
inline const std::vector<std::string>& role_pool() {
  static const std::vector<std::string> names{"R", "S"};
  return names;
}

inline Concept random_concept(Rng& rng, int depth) {
  const auto pick = [&](const std::vector<std::string>& v) { return v[uniform(rng, 0, v.size() - 1)]; };
  if (depth <= 0) {
    switch (uniform(rng, 0, 5)) {
      case 0: return Concept::top();
      case 1: return Concept::bottom();
      default: return Concept::atomic(pick(concept_pool()));
    }
  }
  switch (uniform(rng, 0, 9)) {
    case 0: return Concept::atomic(pick(concept_pool()));
    case 1: return Concept::conj(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    case 2: return Concept::disj(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    case 3: return Concept::neg(random_concept(rng, depth - 1));
    case 4: return Concept::some(pick(role_pool()), random_concept(rng, depth - 1));
    case 5: return Concept::all(pick(role_pool()), random_concept(rng, depth - 1));
    case 6: return Concept::scaled(mpz_class(static_cast<unsigned long>(uniform(rng, 2, 7))), random_concept(rng, depth - 1));
    case 7: return iff(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    case 8: return min_of(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    default: return max_of(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
  }
}

/// Domain {d0..}, every pool name gets values; roles are dense-ish with zeros mixed in.
inline FuzzyInterpretation random_model(Rng& rng, std::size_t max_size = 4, std::uint64_t max_den = 8) {
  FuzzyInterpretation m;
  const auto n = uniform(rng, 1, max_size);
  for (std::size_t x = 0; x < n; ++x) m.add_element("d" + std::to_string(x));
  for (const auto& c : concept_pool()) {
    for (ElementId x = 0; x < n; ++x) m.set_concept(c, x, random_degree(rng, max_den));
  }
  for (const auto& r : role_pool()) {
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (uniform(rng, 0, 2) == 0) m.set_role(r, x, y, random_degree(rng, max_den));
      }
    }
  }
  m.map_individual("a", 0);
  return m;
}

/// Ł-ALC semantics by plain recursion, scanning every y for quantifiers.
inline Degree reference_eval(const FuzzyInterpretation& m, const Concept& c, ElementId x) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top: return Degree::one();
    case K::Bottom: return Degree::zero();
    case K::Atomic: return m.concept_value(c.name(), x);
    case K::And: {
      mpq_class v = reference_eval(m, c.lhs(), x).value() + reference_eval(m, c.rhs(), x).value() - 1;
      return Degree(v < 0 ? mpq_class(0) : v);
    }
    case K::Or: {
      mpq_class v = reference_eval(m, c.lhs(), x).value() + reference_eval(m, c.rhs(), x).value();
      return Degree(v > 1 ? mpq_class(1) : v);
    }
    case K::Not: return Degree(mpq_class(1 - reference_eval(m, c.arg(), x).value()));
    case K::Scale: {
      mpq_class v = c.count() * reference_eval(m, c.arg(), x).value();
      return Degree(v > 1 ? mpq_class(1) : v);
    }
    case K::Exists: {
      mpq_class best = 0;
      for (ElementId y = 0; y < m.size(); ++y) {
        mpq_class t = m.role_value(c.name(), x, y).value() + reference_eval(m, c.arg(), y).value() - 1;
        if (t > best) best = t;
      }
      return Degree(best);
    }
    case K::Forall: {
      mpq_class worst = 1;
      for (ElementId y = 0; y < m.size(); ++y) {
        mpq_class t = 1 - m.role_value(c.name(), x, y).value() + reference_eval(m, c.arg(), y).value();
        if (t < worst) worst = t;
      }
      return Degree(worst);
    }
  }
  return Degree::zero();
}

inline Word random_word(Rng& rng, std::uint32_t s, std::size_t max_len) {
  Word w(uniform(rng, 1, max_len));
  for (auto& c : w) c = static_cast<std::uint32_t>(uniform(rng, 1, s));
  return w;
}

inline PcpInstance random_instance(Rng& rng, std::uint32_t s, std::size_t max_pairs, std::size_t max_word) {
  std::vector<std::pair<Word, Word>> pairs(uniform(rng, 1, max_pairs));
  for (auto& [v, w] : pairs) {
    v = random_word(rng, s, max_word);
    w = random_word(rng, s, max_word);
  }
  return PcpInstance(s, std::move(pairs));
}

/// Words as plain strings, concatenated by hand.
inline std::string spell(const PcpInstance& inst, const IndexSequence& seq, bool top, bool reverse) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const std::size_t i = reverse ? seq[seq.size() - 1 - k] : seq[k];
    const Word& w = top ? inst.top(i) : inst.bottom(i);
    for (auto c : w) out += std::to_string(c) + ",";
  }
  return out;
}

/// Exhaustive search without pruning: every sequence of each length in lexicographic order.
inline std::optional<IndexSequence> brute_force_solve(const PcpInstance& inst, std::size_t max_len, bool reverse) {
  const std::size_t p = inst.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    IndexSequence seq(len, 1);
    for (;;) {
      if (spell(inst, seq, true, reverse) == spell(inst, seq, false, reverse)) return seq;
      bool wrapped = true;
      for (std::size_t pos = len; pos-- > 0;) {
        if (++seq[pos] <= p) {
          wrapped = false;
          break;
        }
        seq[pos] = 1;
      }
      if (wrapped) break;
    }
  }
  return std::nullopt;
}

/// Copy of m where old element x is renamed "n<x>" and stored at position pos[x].
inline FuzzyInterpretation permuted_copy(const FuzzyInterpretation& m, const std::vector<ElementId>& pos) {
  std::vector<ElementId> old_at(m.size());
  for (ElementId x = 0; x < m.size(); ++x) old_at[pos[x]] = x;
  FuzzyInterpretation out;
  for (ElementId k = 0; k < m.size(); ++k) out.add_element("n" + std::to_string(old_at[k]));
  for (const auto& [name, column] : m.concept_table()) {
    for (ElementId x = 0; x < column.size(); ++x) {
      if (!column[x].is_zero()) out.set_concept(name, pos[x], column[x]);
    }
  }
  for (const auto& [role, rows] : m.role_table()) {
    for (ElementId x = 0; x < rows.size(); ++x) {
      for (const auto& [y, d] : rows[x]) out.set_role(role, pos[x], pos[y], d);
    }
  }
  for (const auto& [name, x] : m.individuals()) out.map_individual(name, pos[x]);
  return out;
}

/// A fixed pseudo-random permutation of 0..n-1.
inline std::vector<ElementId> shuffled_positions(std::size_t n, std::uint64_t seed) {
  std::vector<ElementId> pos(n);
  for (ElementId x = 0; x < n; ++x) pos[x] = x;
  Rng rng(seed);
  std::shuffle(pos.begin(), pos.end(), rng);
  return pos;
}

/// Canonical value of a reduction concept name at μ, from the defining
/// formulas with words spelled out and encoded by positional sums.
inline mpq_class canonical_oracle(const PcpInstance& inst, const IndexSequence& mu, const std::string& name,
                                  const mpq_class& epsilon) {
  const std::uint32_t s = inst.alphabet_size();
  const auto positional = [&](const Word& w) {
    mpq_class v = 0, place = 1;
    for (auto c : w) {
      place /= s + 1;
      v += c * place;
    }
    return v;
  };
  // v_μ = v_ik ... v_i1
  const auto spelled = [&](const IndexSequence& seq, bool top) {
    Word out;
    for (std::size_t k = seq.size(); k-- > 0;) {
      const Word& piece = top ? inst.top(seq[k]) : inst.bottom(seq[k]);
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
  };
  if (name == "A") {
    mpq_class a = epsilon;
    for (auto i : mu) {
      for (std::size_t j = 0; j < std::max(inst.top(i).size(), inst.bottom(i).size()); ++j) a /= s + 1;
    }
    return a;
  }
  if (mu.empty()) return 0;
  const bool top = name[0] == 'V';
  const std::size_t last = mu.back();
  const IndexSequence parent(mu.begin(), mu.end() - 1);
  if (name == "V" || name == "W") return positional(spelled(mu, top));
  if (name == "V2" || name == "W2") return positional(top ? inst.top(last) : inst.bottom(last));
  mpq_class v1 = positional(spelled(parent, top));
  for (std::size_t j = 0; j < (top ? inst.top(last) : inst.bottom(last)).size(); ++j) v1 /= s + 1;
  return v1;
}

/// The classic instance with solution 2 1 1 3.
inline PcpInstance classic_instance() {
  return PcpInstance(2, {{{1}, {1, 1, 1}}, {{1, 2, 1, 1, 1}, {1, 2}}, {{1, 2}, {2}}});
}

/// No solution: first letters always differ.
inline PcpInstance unsolvable_instance() { return PcpInstance(2, {{{1}, {2}}}); }

}  // namespace flalc::testing

#endif  // FLALC_TESTS_TEST_SUPPORT_HPP
