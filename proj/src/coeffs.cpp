#include "rotlab/coeffs.hpp"

#include "rotlab/errors.hpp"

#include <limits>

namespace rotlab {

namespace detail {

Wide wgcd(Wide a, Wide b) {
  using U = unsigned __int128;
  U x = a < 0 ? U(0) - U(a) : U(a);
  U y = b < 0 ? U(0) - U(b) : U(b);
  while (y != 0) {
    U t = x % y;
    x = y;
    y = t;
  }
  if (x > U(std::numeric_limits<Wide>::max())) throw Overflow{};
  return static_cast<Wide>(x);
}

BigInt to_big(Wide a) {
  bool neg = a < 0;
  unsigned __int128 u = neg ? (unsigned __int128)0 - (unsigned __int128)a : (unsigned __int128)a;
  auto hi = static_cast<unsigned long>(static_cast<uint64_t>(u >> 64));
  auto lo = static_cast<unsigned long>(static_cast<uint64_t>(u));
  BigInt r(hi);
  r <<= 64;
  r += BigInt(lo);
  return neg ? BigInt(-r) : r;
}

namespace {

constexpr Wide kI64Min = std::numeric_limits<int64_t>::min();
constexpr Wide kI64Max = std::numeric_limits<int64_t>::max();

bool fits(const BigInt& z) { return z.fits_slong_p(); }

}  // namespace

}  // namespace detail

using detail::Wide;

Coeffs Coeffs::make(detail::ZVec<int64_t>&& v) {
  detail::ZVec<Wide> w;
  w.num.assign(v.num.begin(), v.num.end());
  w.den = v.den;
  return make(std::move(w));
}

Coeffs Coeffs::make(detail::ZVec<Wide>&& v) {
  detail::normalize(v);
  bool ok = v.den <= detail::kI64Max;
  for (const auto& x : v.num) {
    if (x < detail::kI64Min || x > detail::kI64Max) {
      ok = false;
      break;
    }
  }
  Coeffs c;
  if (ok) {
    Small s;
    s.num.reserve(v.num.size());
    for (const auto& x : v.num) s.num.push_back(static_cast<int64_t>(x));
    s.den = static_cast<int64_t>(v.den);
    c.rep_ = std::move(s);
  } else {
    Big b;
    b.num.reserve(v.num.size());
    for (const auto& x : v.num) b.num.push_back(detail::to_big(x));
    b.den = detail::to_big(v.den);
    c.rep_ = std::move(b);
  }
  return c;
}

Coeffs Coeffs::make(detail::ZVec<BigInt>&& v) {
  detail::normalize(v);
  bool ok = detail::fits(v.den);
  for (const auto& x : v.num) {
    if (!detail::fits(x)) {
      ok = false;
      break;
    }
  }
  Coeffs c;
  if (ok) {
    Small s;
    s.num.reserve(v.num.size());
    for (const auto& x : v.num) s.num.push_back(x.get_si());
    s.den = v.den.get_si();
    c.rep_ = std::move(s);
  } else {
    c.rep_ = std::move(v);
  }
  return c;
}

Coeffs Coeffs::from_rationals(const std::vector<Rational>& values) {
  BigInt den = 1;
  for (const auto& r : values) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  Big b;
  b.den = den;
  b.num.reserve(values.size());
  for (const auto& r : values) b.num.push_back(r.get_num() * (den / r.get_den()));
  return make(std::move(b));
}

Coeffs::Big Coeffs::to_big() const {
  if (is_big()) return big();
  Big b;
  const auto& s = small();
  b.num.reserve(s.num.size());
  for (auto x : s.num) b.num.push_back(detail::to_big(x));
  b.den = detail::to_big(s.den);
  return b;
}

detail::ZVec<Wide> Coeffs::to_wide() const {
  if (is_big()) throw InternalError("to_wide on a big coefficient vector");
  const auto& s = small();
  detail::ZVec<Wide> w;
  w.num.assign(s.num.begin(), s.num.end());
  w.den = s.den;
  return w;
}

std::size_t Coeffs::size() const { return is_big() ? big().num.size() : small().num.size(); }

Rational Coeffs::at(std::size_t i) const {
  Rational r;
  if (is_big()) {
    r = Rational(big().num.at(i), big().den);
  } else {
    r = Rational(detail::to_big(small().num.at(i)), detail::to_big(small().den));
  }
  r.canonicalize();
  return r;
}

std::vector<Rational> Coeffs::to_rationals() const {
  std::vector<Rational> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

bool Coeffs::is_zero() const {
  if (is_big()) {
    for (const auto& x : big().num)
      if (sgn(x) != 0) return false;
    return true;
  }
  for (auto x : small().num)
    if (x != 0) return false;
  return true;
}

bool Coeffs::zero_at(std::size_t i) const {
  return is_big() ? sgn(big().num[i]) == 0 : small().num[i] == 0;
}

bool Coeffs::integral() const { return is_big() ? big().den == 1 : small().den == 1; }

bool Coeffs::operator==(const Coeffs& o) const {
  if (is_big() != o.is_big()) return false;
  if (is_big()) return big().den == o.big().den && big().num == o.big().num;
  return small().den == o.small().den && small().num == o.small().num;
}

int Coeffs::compare(const Coeffs& o) const {
  if (!is_big() && !o.is_big()) {
    const auto& a = small();
    const auto& b = o.small();
    if (a.den != b.den) return a.den < b.den ? -1 : 1;
    if (a.num.size() != b.num.size()) return a.num.size() < b.num.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.num.size(); ++i)
      if (a.num[i] != b.num[i]) return a.num[i] < b.num[i] ? -1 : 1;
    return 0;
  }
  Big a = to_big();
  Big b = o.to_big();
  if (int c = cmp(a.den, b.den)) return c < 0 ? -1 : 1;
  if (a.num.size() != b.num.size()) return a.num.size() < b.num.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.num.size(); ++i)
    if (int c = cmp(a.num[i], b.num[i])) return c < 0 ? -1 : 1;
  return 0;
}

std::size_t Coeffs::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  if (is_big()) {
    mix(std::hash<std::string>{}(big().den.get_str(16)));
    for (const auto& x : big().num) mix(std::hash<std::string>{}(x.get_str(16)));
  } else {
    mix(std::hash<int64_t>{}(small().den));
    for (auto x : small().num) mix(std::hash<int64_t>{}(x));
  }
  return h;
}

}  // namespace rotlab
