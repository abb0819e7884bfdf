#include "rotlab/rotations.hpp"

#include "rotlab/errors.hpp"

#include <cstdio>
#include <mutex>
#include <tuple>

namespace rotlab {

namespace {

template <class Z>
detail::ZVec<Z> matmul_kernel(const detail::ZVec<Z>& a, const detail::ZVec<Z>& b, const CycloField& f) {
  const int phi = f.phi;
  std::array<int, 9> la{}, lb{};
  for (int e = 0; e < 9; ++e) {
    int l = phi;
    while (l > 0 && detail::is_zero(a.num[e * phi + l - 1])) --l;
    la[e] = l;
    l = phi;
    while (l > 0 && detail::is_zero(b.num[e * phi + l - 1])) --l;
    lb[e] = l;
  }
  detail::ZVec<Z> r;
  r.den = detail::wmul(a.den, b.den);
  r.num.assign(9 * phi, Z(0));
  std::vector<Z> acc;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int len = 0;
      for (int k = 0; k < 3; ++k) {
        int x = la[i * 3 + k], y = lb[k * 3 + j];
        if (x && y) len = std::max(len, x + y - 1);
      }
      if (len == 0) continue;
      acc.assign(std::max(len, phi), Z(0));
      for (int k = 0; k < 3; ++k) {
        int x = la[i * 3 + k], y = lb[k * 3 + j];
        if (!x || !y) continue;
        const Z* pa = &a.num[(i * 3 + k) * phi];
        const Z* pb = &b.num[(k * 3 + j) * phi];
        for (int s = 0; s < x; ++s) {
          if (detail::is_zero(pa[s])) continue;
          for (int t = 0; t < y; ++t) {
            if (detail::is_zero(pb[t])) continue;
            acc[s + t] = detail::wadd(acc[s + t], detail::wmul(pa[s], pb[t]));
          }
        }
      }
      detail::reduce_poly(acc, f);
      Z* out = &r.num[(i * 3 + j) * phi];
      for (int s = 0; s < phi; ++s) out[s] = acc[s];
    }
  }
  return r;
}

template <class Z>
detail::ZVec<Z> matlift_kernel(const detail::ZVec<Z>& a, int phi_from, int k, const CycloField& to) {
  detail::ZVec<Z> r;
  r.den = a.den;
  r.num.assign(9 * to.phi, Z(0));
  std::vector<Z> buf;
  for (int e = 0; e < 9; ++e) {
    buf.assign(std::max((phi_from - 1) * k + 1, to.phi), Z(0));
    for (int j = 0; j < phi_from; ++j) buf[j * k] = a.num[e * phi_from + j];
    detail::reduce_poly(buf, to);
    for (int s = 0; s < to.phi; ++s) r.num[e * to.phi + s] = buf[s];
  }
  return r;
}

Coeffs identity_coeffs(int N) {
  int phi = cyclo_field(N).phi;
  Coeffs::Small s;
  s.num.assign(9 * phi, 0);
  s.den = 1;
  for (int d = 0; d < 3; ++d) s.num[(d * 3 + d) * phi] = 1;
  return Coeffs::make(std::move(s));
}

}  // namespace

Axis Axis::ell(long long n, long long m) {
  if (m <= 2) throw UsageError("ell axis needs m > 2, got m = " + std::to_string(m));
  if (gcd_ll(n, m) != 1)
    throw UsageError("ell axis needs gcd(n, m) = 1, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  return {Kind::ell, ((n % m) + m) % m, m};
}

std::string Axis::str() const {
  switch (kind) {
    case Kind::x:
      return "x";
    case Kind::y:
      return "y";
    case Kind::z:
      return "z";
    case Kind::ell:
      return "ell(" + std::to_string(n) + "," + std::to_string(m) + ")";
  }
  return "?";
}

bool Axis::operator<(const Axis& o) const {
  return std::tie(kind, n, m) < std::tie(o.kind, o.n, o.m);
}

ExactMat3::ExactMat3() : N_(4), c_(identity_coeffs(4)) {}

ExactMat3::ExactMat3(int N, Coeffs c) : N_(N), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != 9 * cyclo_field(N).phi)
    throw InternalError("matrix coefficient block has the wrong length");
}

ExactMat3 ExactMat3::identity(int N) { return ExactMat3(N, identity_coeffs(N)); }

ExactMat3 ExactMat3::from_entries(const std::array<CycloElem, 9>& e) {
  int N = 4;
  for (const auto& x : e) N = static_cast<int>(lcm_ll(N, x.conductor()));
  int phi = cyclo_field(N).phi;
  std::vector<Rational> all;
  all.reserve(9 * phi);
  for (const auto& x : e) {
    auto c = x.lift(N).coeffs();
    all.insert(all.end(), c.begin(), c.end());
  }
  return ExactMat3(N, Coeffs::from_rationals(all));
}

CycloElem ExactMat3::entry(int i, int j) const {
  int phi = cyclo_field(N_).phi;
  std::vector<Rational> v;
  v.reserve(phi);
  for (int s = 0; s < phi; ++s) v.push_back(c_.at((i * 3 + j) * phi + s));
  return CycloElem(N_, Coeffs::from_rationals(v));
}

ExactMat3 ExactMat3::lift(int N2) const {
  if (N2 == N_) return *this;
  if (N2 <= 0 || N2 % N_ != 0) throw UsageError("cannot lift matrix conductor " + std::to_string(N_) + " to " + std::to_string(N2));
  const auto& to = cyclo_field(N2);
  int phi_from = cyclo_field(N_).phi;
  int k = N2 / N_;
  Coeffs c = detail::run_unary(c_, [&](const auto& v) { return matlift_kernel(v, phi_from, k, to); });
  return ExactMat3(N2, std::move(c));
}

ExactMat3 ExactMat3::transpose() const {
  int phi = cyclo_field(N_).phi;
  auto permute = [phi](const auto& v) {
    auto r = v;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int s = 0; s < phi; ++s) r.num[(j * 3 + i) * phi + s] = v.num[(i * 3 + j) * phi + s];
    return r;
  };
  if (c_.is_big()) return ExactMat3(N_, Coeffs::make(permute(c_.big())));
  auto s = permute(c_.small());
  return ExactMat3(N_, Coeffs::make(std::move(s)));
}

bool ExactMat3::is_identity() const { return c_ == identity_coeffs(N_); }

CycloElem ExactMat3::determinant() const {
  auto e = [this](int i, int j) { return entry(i, j); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

bool ExactMat3::is_special_orthogonal() const {
  return (transpose() * *this).is_identity() && determinant() == CycloElem::from_rational(1);
}

std::array<std::array<double, 3>, 3> ExactMat3::numeric() const {
  std::array<std::array<double, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = static_cast<double>(entry(i, j).evaluate().real());
  return out;
}

std::array<std::array<std::string, 3>, 3> ExactMat3::grid() const {
  std::array<std::array<std::string, 3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = entry(i, j).str();
  return out;
}

std::string ExactMat3::str() const {
  auto num = numeric();
  std::string s;
  for (int i = 0; i < 3; ++i) {
    s += i == 0 ? "[[" : " [";
    for (int j = 0; j < 3; ++j) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.15g", num[i][j] == 0 ? 0.0 : num[i][j]);
      s += buf;
      if (j < 2) s += ", ";
    }
    s += i == 2 ? "]]" : "]\n";
  }
  return s;
}

int ExactMat3::compare(const ExactMat3& o) const {
  if (N_ == o.N_) return c_.compare(o.c_);
  int N = static_cast<int>(lcm_ll(N_, o.N_));
  return lift(N).c_.compare(o.lift(N).c_);
}

ExactMat3 operator*(const ExactMat3& a, const ExactMat3& b) {
  if (a.N_ != b.N_) {
    int N = static_cast<int>(lcm_ll(a.N_, b.N_));
    return a.lift(N) * b.lift(N);
  }
  const auto& f = cyclo_field(a.N_);
  Coeffs c = detail::run_binary(a.c_, b.c_, [&](const auto& x, const auto& y) { return matmul_kernel(x, y, f); });
  return ExactMat3(a.N_, std::move(c));
}

bool operator==(const ExactMat3& a, const ExactMat3& b) {
  if (a.N_ == b.N_) return a.c_ == b.c_;
  int N = static_cast<int>(lcm_ll(a.N_, b.N_));
  return a.lift(N).c_ == b.lift(N).c_;
}

ExactMat3 mat_mul(const ExactMat3& a, const ExactMat3& b) { return a * b; }
bool mat_eq(const ExactMat3& a, const ExactMat3& b) { return a == b; }
bool is_identity(const ExactMat3& a) { return a.is_identity(); }

ExactMat3 mat_pow(const ExactMat3& a, long long e) {
  ExactMat3 base = e < 0 ? a.inverse() : a;
  unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
  ExactMat3 r = ExactMat3::identity(a.conductor());
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

namespace {

struct RotKey {
  Axis::Kind kind;
  long long n, m, k, d;
  int N;
  bool operator<(const RotKey& o) const { return std::tie(kind, n, m, k, d, N) < std::tie(o.kind, o.n, o.m, o.k, o.d, o.N); }
};

std::mutex g_rot_mutex;
std::map<RotKey, ExactMat3> g_rot_cache;

ExactMat3 build_rot(const Axis& axis, long long k, long long d) {
  int N = static_cast<int>(lcm_ll(4, d));
  CycloElem c = cos_frac(k, d), s = sin_frac(k, d);
  CycloElem one = CycloElem::from_rational(1, N), zero = CycloElem::from_rational(0, N);
  CycloElem ms = -s;
  switch (axis.kind) {
    case Axis::Kind::x:
      return ExactMat3::from_entries({one, zero, zero, zero, c, ms, zero, s, c});
    case Axis::Kind::y:
      return ExactMat3::from_entries({c, zero, s, zero, one, zero, ms, zero, c});
    case Axis::Kind::z:
      return ExactMat3::from_entries({c, ms, zero, s, c, zero, zero, zero, one});
    case Axis::Kind::ell: {
      ExactMat3 u = rot(Axis::z(), axis.n, axis.m);
      return u * rot(Axis::x(), k, d) * u.inverse();
    }
  }
  throw InternalError("unknown axis");
}

void normalize_angle(long long& k, long long& d) {
  if (d <= 0) throw UsageError("rotation order must be positive");
  k %= d;
  if (k < 0) k += d;
  long long g = gcd_ll(k, d);
  if (g == 0) g = d;
  k /= g;
  d /= g;
  if (k == 0) d = 1;
}

}  // namespace

int rot_conductor(const Axis& axis, long long k, long long d) {
  normalize_angle(k, d);
  long long N = lcm_ll(4, d);
  if (axis.kind == Axis::Kind::ell && d > 1) N = lcm_ll(N, axis.m);
  return static_cast<int>(N);
}

ExactMat3 rot(const Axis& axis, long long k, long long d) {
  normalize_angle(k, d);
  if (k == 0) return ExactMat3::identity(4);
  int N = rot_conductor(axis, k, d);
  return rot_at(axis, k, d, N);
}

ExactMat3 rot_at(const Axis& axis, long long k, long long d, int N) {
  normalize_angle(k, d);
  if (k == 0) return ExactMat3::identity(N);
  int base = rot_conductor(axis, k, d);
  if (N % base != 0) throw UsageError("conductor " + std::to_string(N) + " cannot host rotation of order " + std::to_string(d));
  RotKey key{axis.kind, axis.n, axis.m, k, d, N};
  {
    std::lock_guard<std::mutex> lock(g_rot_mutex);
    auto it = g_rot_cache.find(key);
    if (it != g_rot_cache.end()) return it->second;
  }
  ExactMat3 m = N == base ? build_rot(axis, k, d) : rot_at(axis, k, d, base).lift(N);
  if (m.conductor() != N) m = m.lift(N);
  std::lock_guard<std::mutex> lock(g_rot_mutex);
  g_rot_cache.emplace(key, m);
  return m;
}

}  // namespace rotlab
