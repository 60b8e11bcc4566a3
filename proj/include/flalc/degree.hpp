#ifndef FLALC_DEGREE_HPP
#define FLALC_DEGREE_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "flalc/error.hpp"

namespace flalc {

/// An exact truth degree in [0,1].
///
/// Backed by an arbitrary-precision rational kept in canonical form, so `==`
/// is exact equality of values. Construction rejects anything outside [0,1];
/// nothing is ever clamped silently.
class Degree {
 public:
  Degree() = default;

  explicit Degree(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) < 0 || cmp(value_, 1) > 0) {
      throw ValidationError("degree " + value_.get_str() + " is outside [0,1]");
    }
  }

  Degree(const mpz_class& num, const mpz_class& den) : Degree(make(num, den)) {}
  Degree(long num, long den) : Degree(mpz_class(num), mpz_class(den)) {}

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(mpq_class(1)); }

  const mpq_class& value() const { return value_; }
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return cmp(value_, 1) == 0; }

  /// `0`, `1`, or reduced `p/q`.
  std::string str() const {
    if (is_zero()) return "0";
    if (is_one()) return "1";
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Accepts `p/q` with q >= 1 (reduced on read) and the shorthands `0` and `1`.
  static Degree parse(std::string_view text) {
    const auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (text == "0") return zero();
      if (text == "1") return one();
      throw ValidationError("malformed degree '" + std::string(text) + "'");
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!digits(num) || !digits(den)) {
      throw ValidationError("malformed degree '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (sgn(q) == 0) throw ValidationError("degree '" + std::string(text) + "' has zero denominator");
    return Degree(p, q);
  }

  friend bool operator==(const Degree& a, const Degree& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static mpq_class make(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw ValidationError("degree with zero denominator");
    return mpq_class(num, den);
  }

  mpq_class value_{0};
};

// Łukasiewicz operations. All are exact and total on [0,1].

/// max{0, a+b-1}
inline Degree tnorm(const Degree& a, const Degree& b) {
  mpq_class r = a.value() + b.value() - 1;
  return sgn(r) <= 0 ? Degree::zero() : Degree(std::move(r));
}

/// min{1, a+b}
inline Degree tconorm(const Degree& a, const Degree& b) {
  mpq_class r = a.value() + b.value();
  return cmp(r, 1) >= 0 ? Degree::one() : Degree(std::move(r));
}

/// 1-a
inline Degree negation(const Degree& a) { return Degree(mpq_class(1 - a.value())); }

/// min{1, 1-a+b}
inline Degree implication(const Degree& a, const Degree& b) {
  if (a <= b) return Degree::one();
  return Degree(mpq_class(1 - a.value() + b.value()));
}

/// min{1, n*a}: the value of the n-fold disjunction a ⊕ ... ⊕ a.
inline Degree scale(const mpz_class& n, const Degree& a) {
  if (sgn(n) <= 0) throw ValidationError("scale count must be positive");
  mpq_class r = n * a.value();
  return cmp(r, 1) >= 0 ? Degree::one() : Degree(std::move(r));
}

/// Ordinary product; closed on [0,1].
inline Degree product(const Degree& a, const Degree& b) { return Degree(mpq_class(a.value() * b.value())); }

inline const Degree& min(const Degree& a, const Degree& b) { return b < a ? b : a; }
inline const Degree& max(const Degree& a, const Degree& b) { return a < b ? b : a; }

}  // namespace flalc

#endif  // FLALC_DEGREE_HPP
