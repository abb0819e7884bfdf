#pragma once

#include "rotlab/coeffs.hpp"
#include "rotlab/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rotlab {

/// The N-th cyclotomic polynomial and what reduction needs from it.
struct CycloField {
  int N = 0;
  int phi = 0;
  std::vector<int64_t> poly;                      // Phi_N, index = degree, monic
  std::vector<std::pair<int, int64_t>> tail;      // nonzero (degree, coeff) below phi
};

/// Cached per conductor; the cache fill is idempotent and thread safe.
/// Throws UsageError unless N > 0 and 4 | N.
const CycloField& cyclo_field(int N);

long long lcm_ll(long long a, long long b);
long long gcd_ll(long long a, long long b);

namespace detail {

/// Reduces an integer polynomial modulo Phi_N in place. The first phi
/// entries of `r` hold the result afterwards.
template <class Z>
void reduce_poly(std::vector<Z>& r, const CycloField& f) {
  for (int k = static_cast<int>(r.size()) - 1; k >= f.phi; --k) {
    if (is_zero(r[k])) continue;
    Z c = r[k];
    r[k] = Z(0);
    int base = k - f.phi;
    for (const auto& [deg, coeff] : f.tail) r[base + deg] = wsub(r[base + deg], wmul(c, Z(coeff)));
  }
  if (static_cast<int>(r.size()) > f.phi) r.resize(f.phi);
}

}  // namespace detail

/// Element of Q(zeta_N), N divisible by 4, in the power basis modulo Phi_N.
class CycloElem {
 public:
  CycloElem();
  CycloElem(int N, Coeffs c);

  static CycloElem from_rational(const Rational& r, int N = 4);
  /// Canonical representative of sum poly[i] zeta_N^i.
  static CycloElem reduce(const std::vector<Rational>& poly, int N);
  static CycloElem zeta_power(int N, long long e);

  int conductor() const { return N_; }
  const Coeffs& raw() const { return c_; }
  std::vector<Rational> coeffs() const { return c_.to_rationals(); }

  /// Same value in Q(zeta_N2). Throws UsageError unless conductor() | N2 and 4 | N2.
  CycloElem lift(int N2) const;

  bool is_zero() const { return c_.is_zero(); }
  std::optional<Rational> as_rational() const;
  std::complex<long double> evaluate() const;

  /// "poly(N; c0, c1, ...)".
  std::string str() const;
  static CycloElem parse(std::string_view text);

  /// Valid for comparing elements of equal conductor.
  std::size_t hash() const { return c_.hash(); }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  CycloElem operator-() const;
  /// Equality after lifting both sides to the lcm conductor.
  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

 private:
  int N_;
  Coeffs c_;
};

/// cos(2 pi k / n) at conductor lcm(4, n).
CycloElem cos_frac(long long k, long long n);
/// sin(2 pi k / n) at conductor lcm(4, n).
CycloElem sin_frac(long long k, long long n);

enum class ArithOp { add, sub, mul };
CycloElem arith(const CycloElem& a, const CycloElem& b, ArithOp op);

}  // namespace rotlab
