#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rotlab {

struct Syllable {
  std::string gen;
  long long exp = 0;
  bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

/// Sequence of syllables. Adjacent equal generators are merged and zero
/// exponents dropped on construction, so structural equality is free-monoid equality.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);
  Word(std::initializer_list<Syllable> syllables);

  static Word letter(const std::string& gen, long long exp = 1);
  /// Grammar: `word := syllable (SP syllable)* | "1"`, `syllable := NAME "^" INT`.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return s_; }
  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  const Syllable& operator[](std::size_t i) const { return s_[i]; }

  Word inverse() const;
  Word pow(long long k) const;
  /// Sum of |exp|.
  long long letter_length() const;
  std::string str() const;

  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  bool operator==(const Word& o) const { return s_ == o.s_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;

 private:
  void push(const Syllable& s);
  std::vector<Syllable> s_;
};

/// Element orders per generator; generators missing from the map have infinite order.
using OrderMap = std::map<std::string, long long>;

/// Representative of e mod d in (-d/2, d/2].
long long balanced_mod(long long e, long long d);

/// Merges, drops zeros, and reduces each exponent into (-order/2, order/2]. Idempotent.
Word free_reduce(const Word& w, const OrderMap& orders);

}  // namespace rotlab
