#ifndef FLALC_PCP_HPP
#define FLALC_PCP_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flalc/degree.hpp"
#include "flalc/error.hpp"

namespace flalc {

/// Letters are 1..s; 0 never occurs, which keeps the base-(s+1) encoding injective.
using Word = std::vector<std::uint32_t>;

/// 1-based indices into an instance's pair list.
using IndexSequence = std::vector<std::size_t>;

/// A Post correspondence instance over the alphabet {1..s}.
class PcpInstance {
 public:
  PcpInstance(std::uint32_t alphabet_size, std::vector<std::pair<Word, Word>> pairs)
      : alphabet_size_(alphabet_size), pairs_(std::move(pairs)) {
    if (alphabet_size_ < 1) throw ValidationError("alphabet size must be >= 1");
    if (pairs_.empty()) throw ValidationError("instance needs at least one pair");
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      check(pairs_[i].first, i + 1, "top");
      check(pairs_[i].second, i + 1, "bottom");
    }
  }

  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<Word, Word>>& pairs() const { return pairs_; }

  /// v_i, 1-based.
  const Word& top(std::size_t i) const { return pairs_.at(i - 1).first; }
  /// w_i, 1-based.
  const Word& bottom(std::size_t i) const { return pairs_.at(i - 1).second; }

  friend bool operator==(const PcpInstance&, const PcpInstance&) = default;

 private:
  void check(const Word& w, std::size_t i, const char* side) const {
    if (w.empty()) {
      // Empty entries would give grade-0 and grade-1 axioms 0.v_i and 1-0.v_i.
      throw ValidationError("pair " + std::to_string(i) + ": " + side +
                            " word is empty; instance words must be nonempty");
    }
    for (auto c : w) {
      if (c < 1 || c > alphabet_size_) {
        throw ValidationError("pair " + std::to_string(i) + ": letter " + std::to_string(c) + " outside 1.." +
                              std::to_string(alphabet_size_));
      }
    }
  }

  std::uint32_t alphabet_size_;
  std::vector<std::pair<Word, Word>> pairs_;
};

inline Word palindrome(const Word& v) { return Word(v.rbegin(), v.rend()); }

/// Reverses every word. Maps PCP solutions to RPCP solutions and back.
inline PcpInstance to_rpcp(const PcpInstance& inst) {
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& [v, w] : inst.pairs()) pairs.emplace_back(palindrome(v), palindrome(w));
  return PcpInstance(inst.alphabet_size(), std::move(pairs));
}

/// 0.v in base s+1, i.e. sum_j v[j]·(s+1)^(-j). The empty word encodes to 0.
inline Degree encode_word(const Word& v, std::uint32_t s) {
  if (s < 1) throw ValidationError("alphabet size must be >= 1");
  mpz_class num = 0;
  mpz_class den = 1;
  for (auto c : v) {
    if (c < 1 || c > s) {
      throw ValidationError("letter " + std::to_string(c) + " outside 1.." + std::to_string(s));
    }
    num = num * (s + 1) + c;
    den *= s + 1;
  }
  return Degree(num, den);
}

/// (s+1)^e
inline mpz_class base_power(std::uint32_t s, std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), s + 1, e);
  return r;
}

/// encode(prefix) + (s+1)^(-|prefix|)·tail; equals encode(prefix ++ t) when tail = encode(t).
inline Degree prepend_encode(const Word& prefix, const Degree& tail, std::uint32_t s) {
  if (tail.is_one()) throw ValidationError("prepend_encode needs a tail value in [0,1)");
  const Degree head = encode_word(prefix, s);
  return Degree(mpq_class(head.value() + tail.value() / mpq_class(base_power(s, prefix.size()))));
}

enum class Concatenation {
  LeftToRight,  // PCP: v_{i1} v_{i2} ... v_{ik}
  RightToLeft,  // RPCP: v_{ik} ... v_{i1}
};

/// v_σ and w_σ for a sequence σ, concatenated in the given direction.
inline std::pair<Word, Word> concatenate(const PcpInstance& inst, const IndexSequence& seq, Concatenation dir) {
  Word top, bottom;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const std::size_t i = dir == Concatenation::LeftToRight ? seq[k] : seq[seq.size() - 1 - k];
    top.insert(top.end(), inst.top(i).begin(), inst.top(i).end());
    bottom.insert(bottom.end(), inst.bottom(i).begin(), inst.bottom(i).end());
  }
  return {std::move(top), std::move(bottom)};
}

struct SolveOptions {
  std::uint64_t max_nodes = 50'000'000;
};

struct SolveResult {
  /// Shortest, then lexicographically least, solution; empty optional means
  /// none of length <= max_len exists. That is not a proof of unsolvability.
  std::optional<IndexSequence> solution;
  std::size_t max_len = 0;
  std::uint64_t visited = 0;
};

namespace detail {

// Depth-first enumeration of sequences of exactly `target` indices, in
// lexicographic order, pruning partial sequences whose two concatenations
// already disagree. For LeftToRight pieces are appended and the shorter
// concatenation must be a prefix of the longer; for RightToLeft pieces are
// prepended and it must be a suffix.
class Search {
 public:
  Search(const PcpInstance& inst, Concatenation dir, const SolveOptions& opts, std::uint64_t& visited)
      : inst_(inst), dir_(dir), opts_(opts), visited_(visited) {}

  bool run(std::size_t target, IndexSequence& seq, const Word& top, const Word& bottom) {
    if (seq.size() == target) return top == bottom;
    for (std::size_t i = 1; i <= inst_.size(); ++i) {
      if (++visited_ > opts_.max_nodes) {
        throw ResourceLimitError("PCP search exceeded " + std::to_string(opts_.max_nodes) + " nodes");
      }
      Word t = extend(top, inst_.top(i));
      Word b = extend(bottom, inst_.bottom(i));
      if (!compatible(t, b)) continue;
      seq.push_back(i);
      if (run(target, seq, t, b)) return true;
      seq.pop_back();
    }
    return false;
  }

 private:
  Word extend(const Word& base, const Word& piece) const {
    Word out;
    out.reserve(base.size() + piece.size());
    if (dir_ == Concatenation::LeftToRight) {
      out = base;
      out.insert(out.end(), piece.begin(), piece.end());
    } else {
      out = piece;
      out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  bool compatible(const Word& a, const Word& b) const {
    const std::size_t n = std::min(a.size(), b.size());
    if (dir_ == Concatenation::LeftToRight) return std::equal(a.begin(), a.begin() + n, b.begin());
    return std::equal(a.end() - n, a.end(), b.end() - n);
  }

  const PcpInstance& inst_;
  Concatenation dir_;
  const SolveOptions& opts_;
  std::uint64_t& visited_;
};

inline SolveResult solve(const PcpInstance& inst, std::size_t max_len, Concatenation dir, const SolveOptions& opts) {
  if (max_len < 1) throw ValidationError("max_len must be >= 1");
  SolveResult result;
  result.max_len = max_len;
  Search search(inst, dir, opts, result.visited);
  for (std::size_t len = 1; len <= max_len; ++len) {
    IndexSequence seq;
    if (search.run(len, seq, {}, {})) {
      result.solution = std::move(seq);
      return result;
    }
  }
  return result;
}

}  // namespace detail

/// Breadth-first by length: the shortest solution, lexicographically least among equals.
inline SolveResult solve_pcp(const PcpInstance& inst, std::size_t max_len, const SolveOptions& opts = {}) {
  return detail::solve(inst, max_len, Concatenation::LeftToRight, opts);
}

/// Same ordering contract as solve_pcp, with right-to-left concatenation.
inline SolveResult solve_rpcp(const PcpInstance& inst, std::size_t max_len, const SolveOptions& opts = {}) {
  return detail::solve(inst, max_len, Concatenation::RightToLeft, opts);
}

/// Digits joined directly when s <= 9, `.`-separated otherwise.
inline std::string word_to_string(const Word& w, std::uint32_t s) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (s > 9 && k > 0) out += '.';
    out += std::to_string(w[k]);
  }
  return out;
}

/// Inverse of word_to_string. A `.` in the token forces dotted reading.
inline Word word_from_string(std::string_view text, std::uint32_t s) {
  Word w;
  if (text.empty()) throw ValidationError("empty word");
  if (s > 9 || text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      if (dot == std::string_view::npos) dot = text.size();
      const auto part = text.substr(start, dot - start);
      if (part.empty() || part.size() > 9 || part.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ValidationError("malformed word '" + std::string(text) + "'");
      }
      w.push_back(static_cast<std::uint32_t>(std::stoul(std::string(part))));
      start = dot + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw ValidationError("malformed word '" + std::string(text) + "'");
      w.push_back(static_cast<std::uint32_t>(c - '0'));
    }
  }
  return w;
}

inline std::string sequence_to_string(const IndexSequence& seq) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(seq[k]);
  }
  return out;
}

// Instance files (.pcp):
//
//   s p
//   v_1 w_1
//   ...
//   v_p w_p
//
// `#` starts a comment.

inline PcpInstance parse_instance(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t line_no = 0, start = 0;
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
    if (!tok.empty()) lines.emplace_back(line_no, std::move(tok));
  }
  if (lines.empty()) throw SyntaxError("empty instance file", 1, 1);

  const auto number = [](const std::string& t, std::size_t line) {
    if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos) {
      throw SyntaxError("expected a number, got '" + t + "'", line, 1);
    }
    return static_cast<std::uint32_t>(std::stoul(t));
  };
  const auto& [header_line, header] = lines.front();
  if (header.size() != 2) throw SyntaxError("expected header 's p'", header_line, 1);
  const std::uint32_t s = number(header[0], header_line);
  const std::uint32_t p = number(header[1], header_line);
  if (lines.size() - 1 != p) {
    throw SyntaxError("header declares " + std::to_string(p) + " pairs, found " + std::to_string(lines.size() - 1),
                      header_line, 1);
  }
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [ln, tok] = lines[k];
    if (tok.size() != 2) throw SyntaxError("expected 'v w'", ln, 1);
    try {
      pairs.emplace_back(word_from_string(tok[0], s), word_from_string(tok[1], s));
    } catch (const ValidationError& e) {
      throw SyntaxError(e.what(), ln, 1);
    }
  }
  return PcpInstance(s, std::move(pairs));
}

inline std::string print_instance(const PcpInstance& inst) {
  const auto s = inst.alphabet_size();
  std::string out = std::to_string(s) + " " + std::to_string(inst.size()) + "\n";
  for (const auto& [v, w] : inst.pairs()) out += word_to_string(v, s) + " " + word_to_string(w, s) + "\n";
  return out;
}

}  // namespace flalc

#endif  // FLALC_PCP_HPP
