#pragma once

#include "rotlab/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace rotlab {

namespace detail {

using Wide = __int128;

/// Thrown by the checked fixed-width kernels; callers retry with GMP.
struct Overflow {};

inline Wide wadd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Wide wsub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Wide wmul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt wadd(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt wsub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt wmul(const BigInt& a, const BigInt& b) { return a * b; }

Wide wgcd(Wide a, Wide b);
inline BigInt wgcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_zero(Wide a) { return a == 0; }
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(int64_t a) { return a == 0; }

BigInt to_big(Wide a);
inline BigInt to_big(int64_t a) { return BigInt(static_cast<long>(a)); }
inline const BigInt& to_big(const BigInt& a) { return a; }

inline Wide to_wide(int64_t a) { return a; }

/// Numerators sharing one positive denominator.
template <class Z>
struct ZVec {
  std::vector<Z> num;
  Z den;
};

}  // namespace detail

/// Canonical vector of rationals with a shared denominator.
///
/// Canonical means den > 0 and gcd(num..., den) = 1. Values that fit in
/// int64 are stored in the small form; anything larger lives in GMP
/// integers. Demotion is eager, so the representation is unique and
/// structural comparison is value comparison.
class Coeffs {
 public:
  using Small = detail::ZVec<int64_t>;
  using Big = detail::ZVec<BigInt>;

  Coeffs() : rep_(Small{{}, 1}) {}
  explicit Coeffs(std::size_t n) : rep_(Small{std::vector<int64_t>(n, 0), 1}) {}

  static Coeffs from_rationals(const std::vector<Rational>& values);
  static Coeffs make(detail::ZVec<int64_t>&& v);
  static Coeffs make(detail::ZVec<detail::Wide>&& v);
  static Coeffs make(detail::ZVec<BigInt>&& v);

  bool is_big() const { return std::holds_alternative<Big>(rep_); }
  const Small& small() const { return std::get<Small>(rep_); }
  const Big& big() const { return std::get<Big>(rep_); }
  Big to_big() const;
  detail::ZVec<detail::Wide> to_wide() const;

  std::size_t size() const;
  Rational at(std::size_t i) const;
  std::vector<Rational> to_rationals() const;
  bool is_zero() const;
  /// True when the value at i is zero; no allocation.
  bool zero_at(std::size_t i) const;
  /// True when den == 1.
  bool integral() const;

  bool operator==(const Coeffs& o) const;
  bool operator!=(const Coeffs& o) const { return !(*this == o); }
  /// Total order on equal-length vectors: denominator first, then numerators.
  int compare(const Coeffs& o) const;
  std::size_t hash() const;

 private:
  std::variant<Small, Big> rep_;
};

namespace detail {

/// Normalizes in place: den > 0, common gcd removed.
template <class Z>
void normalize(ZVec<Z>& v) {
  if (is_zero(v.den)) throw Overflow{};
  Z g = v.den;
  for (const auto& x : v.num) {
    if (!is_zero(x)) g = wgcd(g, x);
    if (g == 1) break;
  }
  if (g < 0) g = -g;
  bool negate = v.den < 0;
  if (g != 1 || negate) {
    if (negate) g = -g;
    for (auto& x : v.num) x /= g;
    v.den /= g;
  }
}

/// Runs a kernel on the widest fixed-width representation and falls back to GMP on overflow.
/// The kernel receives two ZVec<Acc> values and returns a ZVec<Acc>.
template <class Kernel>
Coeffs run_binary(const Coeffs& a, const Coeffs& b, Kernel&& k) {
  if (!a.is_big() && !b.is_big()) {
    try {
      return Coeffs::make(k(a.to_wide(), b.to_wide()));
    } catch (const Overflow&) {
    }
  }
  return Coeffs::make(k(a.to_big(), b.to_big()));
}

template <class Kernel>
Coeffs run_unary(const Coeffs& a, Kernel&& k) {
  if (!a.is_big()) {
    try {
      return Coeffs::make(k(a.to_wide()));
    } catch (const Overflow&) {
    }
  }
  return Coeffs::make(k(a.to_big()));
}

}  // namespace detail

}  // namespace rotlab
