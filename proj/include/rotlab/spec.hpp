#pragma once

#include "rotlab/rotations.hpp"
#include "rotlab/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace rotlab {

/// Which generating pair a spec refers to.
enum class Family {
  Gnm,   // A = R_x^{2pi/p}, B = R_ell^{2pi/q}, ell at angle 2 pi n/m
  Gpq,   // A = R_x^{2pi/p}, C = R_z^{2pi/q}
  HatG,  // T = R_x^{2pi/m}, S = R_y^{pi/2}
};

std::string family_name(Family f);

struct GroupSpec {
  Family family = Family::Gnm;
  long long p = 1, q = 1, n = 0, m = 1;

  /// Throws UsageError unless p, q >= 1, m > 2 and gcd(n, m) = 1. n is reduced mod m.
  static GroupSpec gnm(long long p, long long q, long long n, long long m);
  static GroupSpec gpq(long long p, long long q);
  static GroupSpec hatg(long long m);

  /// The two generator symbols words are written in: {A,B}, {A,C} or {S,T}.
  std::vector<std::string> alphabet() const;
  OrderMap orders() const;
  std::string str() const;
  bool operator==(const GroupSpec& o) const;
  bool operator<(const GroupSpec& o) const;
};

/// A named rotation 2 pi k / d about an axis.
struct RotationSymbol {
  Axis axis;
  long long k = 1;
  long long d = 1;
  ExactMat3 power(long long e) const { return rot(axis, k * e, d); }
  std::string str() const;
};

/// Named generator matrices. eval_word multiplies syllables left to right.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  void set(const std::string& name, const RotationSymbol& r) { table_[name] = r; }
  bool has(const std::string& name) const { return table_.count(name) != 0; }
  const RotationSymbol& get(const std::string& name) const;
  const std::map<std::string, RotationSymbol>& entries() const { return table_; }
  /// Smallest conductor hosting every symbol.
  int conductor() const;
  OrderMap orders() const;

 private:
  std::map<std::string, RotationSymbol> table_;
};

/// Full symbol table for a spec: A, B, C, S, T, That, U as applicable.
GeneratorTable generator_table(const GroupSpec& spec);

/// Throws UsageError on a generator missing from the table.
ExactMat3 eval_word(const GeneratorTable& table, const Word& w);
/// Product evaluated at a fixed conductor N (must host every syllable).
ExactMat3 eval_word_at(const GeneratorTable& table, const Word& w, int N);

/// Throws UsageError when a syllable uses a generator outside the spec's alphabet.
void check_alphabet(const GroupSpec& spec, const Word& w);

}  // namespace rotlab
