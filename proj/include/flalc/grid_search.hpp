#ifndef FLALC_GRID_SEARCH_HPP
#define FLALC_GRID_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "flalc/degree.hpp"
#include "flalc/error.hpp"
#include "flalc/evaluator.hpp"
#include "flalc/interpretation.hpp"
#include "flalc/knowledge_base.hpp"

namespace flalc {

struct GridSearchOptions {
  std::uint64_t max_candidates = 1'000'000;
};

struct GridSearchResult {
  std::optional<FuzzyInterpretation> model;
  std::uint64_t enumerated = 0;
};

/// Bounded model search: domain {e0..e(n-1)}, every degree in {0, 1/k, ..., 1}.
///
/// Only names occurring in the KB receive values. Candidates are enumerated
/// lexicographically: individual placements (injective, sorted by name) are
/// the most significant, then concept values ordered by (name, element), then
/// role values ordered by (role, x, y); within each slot 0 comes before 1/k.
/// The first model found in that order is returned.
///
/// An empty result says nothing about satisfiability: Ł-ALC with GCIs lacks
/// the finite model property.
inline GridSearchResult grid_search(const KnowledgeBase& kb, std::size_t n, std::uint64_t k,
                                    const GridSearchOptions& opts = {}) {
  if (n < 1) throw ValidationError("grid search domain size must be >= 1");
  if (k < 1) throw ValidationError("grid search denominator must be >= 1");

  const auto sig = kb.signature();
  const std::vector<std::string> individuals(sig.individuals.begin(), sig.individuals.end());

  FuzzyInterpretation m;
  for (std::size_t e = 0; e < n; ++e) m.add_element("e" + std::to_string(e));

  std::vector<Degree> grid;
  for (std::uint64_t j = 0; j <= k; ++j) grid.emplace_back(mpz_class(std::to_string(j)), mpz_class(std::to_string(k)));

  // (is_role, name, x, y)
  using Slot = std::tuple<bool, std::string, ElementId, ElementId>;
  std::vector<Slot> slots;
  for (const auto& c : sig.concepts) {
    for (ElementId x = 0; x < n; ++x) slots.emplace_back(false, c, x, 0);
  }
  for (const auto& r : sig.roles) {
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) slots.emplace_back(true, r, x, y);
    }
  }
  const auto assign = [&](std::size_t s, std::size_t v) {
    const auto& [is_role, name, x, y] = slots[s];
    if (is_role) {
      m.set_role(name, x, y, grid[v]);
    } else {
      m.set_concept(name, x, grid[v]);
    }
  };

  const auto axioms = kb.axioms();
  const auto satisfies = [&]() {
    Evaluator ev(m);
    for (const auto& ax : axioms) {
      if (!check_axiom(ev, ax).satisfied) return false;
    }
    return true;
  };

  GridSearchResult result;

  // Odometer over injective placements of the individuals.
  std::vector<ElementId> place(individuals.size(), 0);
  const auto injective = [&]() {
    for (std::size_t a = 0; a < place.size(); ++a) {
      for (std::size_t b = a + 1; b < place.size(); ++b) {
        if (place[a] == place[b]) return false;
      }
    }
    return true;
  };
  const auto next_placement = [&]() {
    for (std::size_t pos = place.size(); pos-- > 0;) {
      if (++place[pos] < n) return true;
      place[pos] = 0;
    }
    return false;
  };

  if (individuals.size() > n) return result;
  bool more_placements = true;
  while (more_placements) {
    if (injective()) {
      FuzzyInterpretation fresh;
      for (std::size_t e = 0; e < n; ++e) fresh.add_element("e" + std::to_string(e));
      m = std::move(fresh);
      for (std::size_t a = 0; a < individuals.size(); ++a) m.map_individual(individuals[a], place[a]);

      std::vector<std::size_t> digit(slots.size(), 0);
      for (std::size_t s = 0; s < slots.size(); ++s) assign(s, 0);
      for (;;) {
        if (++result.enumerated > opts.max_candidates) {
          throw ResourceLimitError("grid search exceeded " + std::to_string(opts.max_candidates) + " candidates");
        }
        if (satisfies()) {
          result.model = std::move(m);
          return result;
        }
        std::size_t pos = slots.size();
        while (pos-- > 0) {
          if (++digit[pos] <= k) {
            assign(pos, digit[pos]);
            break;
          }
          digit[pos] = 0;
          assign(pos, 0);
        }
        if (pos == static_cast<std::size_t>(-1)) break;
      }
    }
    more_placements = next_placement();
  }
  return result;
}

}  // namespace flalc

#endif  // FLALC_GRID_SEARCH_HPP
