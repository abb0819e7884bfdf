#include "rotlab/cyclotomic.hpp"

#include "rotlab/errors.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace rotlab {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}; multiply the positive factors, then divide.
std::vector<int64_t> cyclotomic_poly(int N) {
  std::vector<int> up, down;
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    int mu = mobius(N / d);
    if (mu == 1) up.push_back(d);
    if (mu == -1) down.push_back(d);
  }
  std::vector<detail::Wide> p{1};
  for (int d : up) {
    std::vector<detail::Wide> q(p.size() + d, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + d] = detail::wadd(q[i + d], p[i]);
      q[i] = detail::wsub(q[i], p[i]);
    }
    p = std::move(q);
  }
  for (int d : down) {
    // p = q (x^d - 1)  =>  q_k = q_{k-d} - p_k
    std::size_t deg = p.size() - 1 - d;
    std::vector<detail::Wide> q(deg + 1, 0);
    for (std::size_t k = 0; k <= deg; ++k) {
      detail::Wide prev = k >= static_cast<std::size_t>(d) ? q[k - d] : 0;
      q[k] = detail::wsub(prev, p[k]);
    }
    p = std::move(q);
  }
  std::vector<int64_t> out;
  out.reserve(p.size());
  for (auto x : p) {
    if (x > INT64_MAX || x < INT64_MIN) throw InternalError("cyclotomic coefficient overflow");
    out.push_back(static_cast<int64_t>(x));
  }
  return out;
}

std::mutex g_field_mutex;
std::map<int, std::unique_ptr<CycloField>> g_fields;

template <class Z>
detail::ZVec<Z> lift_kernel(const detail::ZVec<Z>& a, int k, const CycloField& to) {
  detail::ZVec<Z> r;
  r.den = a.den;
  std::size_t len = a.num.empty() ? 1 : (a.num.size() - 1) * k + 1;
  r.num.assign(std::max<std::size_t>(len, to.phi), Z(0));
  for (std::size_t j = 0; j < a.num.size(); ++j) r.num[j * k] = a.num[j];
  detail::reduce_poly(r.num, to);
  return r;
}

template <class Z>
detail::ZVec<Z> add_kernel(const detail::ZVec<Z>& a, const detail::ZVec<Z>& b, bool subtract) {
  detail::ZVec<Z> r;
  r.den = detail::wmul(a.den, b.den);
  r.num.resize(a.num.size());
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    Z x = detail::wmul(a.num[i], b.den);
    Z y = detail::wmul(b.num[i], a.den);
    r.num[i] = subtract ? detail::wsub(x, y) : detail::wadd(x, y);
  }
  return r;
}

template <class Z>
detail::ZVec<Z> mul_kernel(const detail::ZVec<Z>& a, const detail::ZVec<Z>& b, const CycloField& f) {
  detail::ZVec<Z> r;
  r.den = detail::wmul(a.den, b.den);
  std::size_t n = a.num.size();
  r.num.assign(std::max<std::size_t>(2 * n - 1, f.phi), Z(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (detail::is_zero(a.num[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (detail::is_zero(b.num[j])) continue;
      r.num[i + j] = detail::wadd(r.num[i + j], detail::wmul(a.num[i], b.num[j]));
    }
  }
  detail::reduce_poly(r.num, f);
  return r;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

const CycloField& cyclo_field(int N) {
  if (N <= 0 || N % 4 != 0) throw UsageError("conductor must be a positive multiple of 4, got " + std::to_string(N));
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto it = g_fields.find(N);
  if (it != g_fields.end()) return *it->second;
  auto f = std::make_unique<CycloField>();
  f->N = N;
  f->poly = cyclotomic_poly(N);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  for (int d = 0; d < f->phi; ++d)
    if (f->poly[d] != 0) f->tail.emplace_back(d, f->poly[d]);
  auto& ref = *f;
  g_fields.emplace(N, std::move(f));
  return ref;
}

CycloElem::CycloElem() : N_(4), c_(cyclo_field(4).phi) {}

CycloElem::CycloElem(int N, Coeffs c) : N_(N), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != cyclo_field(N).phi)
    throw InternalError("coefficient vector length does not match the conductor");
}

CycloElem CycloElem::from_rational(const Rational& r, int N) {
  std::vector<Rational> v(cyclo_field(N).phi, Rational(0));
  v[0] = r;
  return CycloElem(N, Coeffs::from_rationals(v));
}

CycloElem CycloElem::reduce(const std::vector<Rational>& poly, int N) {
  const auto& f = cyclo_field(N);
  std::vector<Rational> padded = poly;
  if (static_cast<int>(padded.size()) < f.phi) padded.resize(f.phi, Rational(0));
  Coeffs raw = Coeffs::from_rationals(padded);
  Coeffs red = detail::run_unary(raw, [&](auto v) {
    detail::reduce_poly(v.num, f);
    return v;
  });
  return CycloElem(N, std::move(red));
}

CycloElem CycloElem::zeta_power(int N, long long e) {
  const auto& f = cyclo_field(N);
  long long r = ((e % N) + N) % N;
  std::vector<Rational> v(std::max<long long>(r + 1, f.phi), Rational(0));
  v[r] = 1;
  return reduce(v, N);
}

CycloElem CycloElem::lift(int N2) const {
  if (N2 == N_) return *this;
  if (N2 <= 0 || N2 % N_ != 0 || N2 % 4 != 0)
    throw UsageError("cannot lift conductor " + std::to_string(N_) + " to " + std::to_string(N2));
  const auto& to = cyclo_field(N2);
  int k = N2 / N_;
  Coeffs c = detail::run_unary(c_, [&](const auto& v) { return lift_kernel(v, k, to); });
  return CycloElem(N2, std::move(c));
}

std::optional<Rational> CycloElem::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_.zero_at(i)) return std::nullopt;
  return c_.at(0);
}

std::complex<long double> CycloElem::evaluate() const {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  std::complex<long double> sum = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_.zero_at(j)) continue;
    Rational r = c_.at(j);
    long double x;
    if (r.get_num().fits_slong_p() && r.get_den().fits_slong_p()) {
      x = static_cast<long double>(r.get_num().get_si()) / static_cast<long double>(r.get_den().get_si());
    } else {
      x = static_cast<long double>(r.get_d());
    }
    long double ang = two_pi * static_cast<long double>(j) / static_cast<long double>(N_);
    sum += x * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return sum;
}

std::string CycloElem::str() const {
  std::string s = "poly(" + std::to_string(N_) + ";";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    s += i == 0 ? " " : ", ";
    s += to_string(c_.at(i));
  }
  s += ")";
  return s;
}

CycloElem CycloElem::parse(std::string_view text) {
  std::string t = trim(text);
  const std::string head = "poly(";
  if (t.rfind(head, 0) != 0) throw ParseError("expected 'poly('", 1);
  if (t.empty() || t.back() != ')') throw ParseError("expected ')'", t.size() + 1);
  auto semi = t.find(';');
  if (semi == std::string::npos) throw ParseError("expected ';'", t.size());
  std::string nstr = trim(std::string_view(t).substr(head.size(), semi - head.size()));
  int N = 0;
  try {
    std::size_t used = 0;
    N = std::stoi(nstr, &used);
    if (used != nstr.size()) throw ParseError("bad conductor", head.size() + 1);
  } catch (const std::logic_error&) {
    throw ParseError("bad conductor", head.size() + 1);
  }
  const auto& f = cyclo_field(N);
  std::vector<Rational> coeffs;
  std::size_t pos = semi + 1;
  std::size_t end = t.size() - 1;
  while (pos < end) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string::npos || comma > end) comma = end;
    std::string item = trim(std::string_view(t).substr(pos, comma - pos));
    try {
      coeffs.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient '" + item + "'", pos + 1);
    }
    pos = comma + 1;
  }
  if (static_cast<int>(coeffs.size()) != f.phi)
    throw ParseError("expected " + std::to_string(f.phi) + " coefficients", t.size());
  return CycloElem(N, Coeffs::from_rationals(coeffs));
}

CycloElem arith(const CycloElem& a, const CycloElem& b, ArithOp op) {
  int N = static_cast<int>(lcm_ll(a.conductor(), b.conductor()));
  CycloElem x = a.lift(N);
  CycloElem y = b.lift(N);
  const auto& f = cyclo_field(N);
  Coeffs c;
  switch (op) {
    case ArithOp::add:
      c = detail::run_binary(x.raw(), y.raw(), [](const auto& u, const auto& v) { return add_kernel(u, v, false); });
      break;
    case ArithOp::sub:
      c = detail::run_binary(x.raw(), y.raw(), [](const auto& u, const auto& v) { return add_kernel(u, v, true); });
      break;
    case ArithOp::mul:
      c = detail::run_binary(x.raw(), y.raw(), [&](const auto& u, const auto& v) { return mul_kernel(u, v, f); });
      break;
  }
  return CycloElem(N, std::move(c));
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) { return arith(a, b, ArithOp::add); }
CycloElem operator-(const CycloElem& a, const CycloElem& b) { return arith(a, b, ArithOp::sub); }
CycloElem operator*(const CycloElem& a, const CycloElem& b) { return arith(a, b, ArithOp::mul); }

CycloElem CycloElem::operator-() const { return CycloElem::from_rational(0, N_) - *this; }

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (a.N_ == b.N_) return a.c_ == b.c_;
  int N = static_cast<int>(lcm_ll(a.N_, b.N_));
  return a.lift(N).c_ == b.lift(N).c_;
}

CycloElem cos_frac(long long k, long long n) {
  if (n < 1) throw UsageError("cos_frac needs n >= 1");
  int N = static_cast<int>(lcm_ll(4, n));
  long long a = ((k % n + n) % n) * (N / n);
  CycloElem s = CycloElem::zeta_power(N, a) + CycloElem::zeta_power(N, -a);
  return s * CycloElem::from_rational(Rational(1, 2), N);
}

CycloElem sin_frac(long long k, long long n) {
  if (n < 1) throw UsageError("sin_frac needs n >= 1");
  int N = static_cast<int>(lcm_ll(4, n));
  long long a = ((k % n + n) % n) * (N / n);
  long long q = 3LL * N / 4;
  CycloElem s = CycloElem::zeta_power(N, a + q) - CycloElem::zeta_power(N, -a + q);
  return s * CycloElem::from_rational(Rational(1, 2), N);
}

}  // namespace rotlab
