#pragma once

#include "rotlab/cyclotomic.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace rotlab {

/// Rotation axis: a coordinate axis, or the line in the x-y plane at angle 2 pi n / m.
struct Axis {
  enum class Kind { x, y, z, ell };
  Kind kind = Kind::x;
  long long n = 0;
  long long m = 1;

  static Axis x() { return {Kind::x, 0, 1}; }
  static Axis y() { return {Kind::y, 0, 1}; }
  static Axis z() { return {Kind::z, 0, 1}; }
  /// Throws UsageError unless gcd(n, m) = 1 and m > 2.
  static Axis ell(long long n, long long m);

  std::string str() const;
  bool operator==(const Axis& o) const { return kind == o.kind && n == o.n && m == o.m; }
  bool operator<(const Axis& o) const;
};

/// Exact 3x3 matrix over Q(zeta_N), stored as 9 coefficient blocks with one shared denominator.
class ExactMat3 {
 public:
  ExactMat3();  // identity at conductor 4
  ExactMat3(int N, Coeffs c);
  static ExactMat3 identity(int N = 4);
  static ExactMat3 from_entries(const std::array<CycloElem, 9>& e);

  int conductor() const { return N_; }
  const Coeffs& raw() const { return c_; }
  CycloElem entry(int i, int j) const;
  ExactMat3 lift(int N2) const;

  ExactMat3 transpose() const;
  /// Inverse of a rotation matrix (its transpose).
  ExactMat3 inverse() const { return transpose(); }
  bool is_identity() const;
  CycloElem determinant() const;
  bool is_special_orthogonal() const;
  /// Numeric rendering, advisory only.
  std::array<std::array<double, 3>, 3> numeric() const;
  std::array<std::array<std::string, 3>, 3> grid() const;
  std::string str() const;

  /// Same conductor required; valid for hashing inside a fixed-conductor set.
  std::size_t hash() const { return c_.hash() ^ static_cast<std::size_t>(N_); }
  /// Total order after lifting to the lcm conductor.
  int compare(const ExactMat3& o) const;

  friend ExactMat3 operator*(const ExactMat3& a, const ExactMat3& b);
  friend bool operator==(const ExactMat3& a, const ExactMat3& b);
  friend bool operator!=(const ExactMat3& a, const ExactMat3& b) { return !(a == b); }

 private:
  int N_;
  Coeffs c_;
};

ExactMat3 mat_mul(const ExactMat3& a, const ExactMat3& b);
bool mat_eq(const ExactMat3& a, const ExactMat3& b);
bool is_identity(const ExactMat3& a);
ExactMat3 mat_pow(const ExactMat3& a, long long e);

/// Minimal conductor hosting rot(axis, k, d).
int rot_conductor(const Axis& axis, long long k, long long d);
/// Rotation by 2 pi k / d about the axis (right-hand rule, column vectors).
/// Memoized on (axis, k/d in lowest terms).
ExactMat3 rot(const Axis& axis, long long k, long long d);
/// rot lifted to conductor N (N must be a multiple of rot_conductor); memoized.
ExactMat3 rot_at(const Axis& axis, long long k, long long d, int N);

}  // namespace rotlab
