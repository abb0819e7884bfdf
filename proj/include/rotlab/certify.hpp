#pragma once

#include "rotlab/spec.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace rotlab {

enum class Variant { lemma, ext1, ext2 };

std::string variant_name(Variant v);
/// Throws UsageError on anything but "lemma", "ext1", "ext2".
Variant parse_variant(const std::string& s);

/// The word S^W (prod_{i=1..n} S^{a_i} T^{b_i}) S^E in Ghat(m,4).
struct FoundationHypotheses {
  long long m = 3;
  long long W = 0;
  std::vector<long long> a, b;
  long long E = 0;
  Variant variant = Variant::lemma;

  /// Splits an {S,T} word into the fields. A leading S exponent is taken as
  /// a_1 with W = 0; a word starting with T gets W = -1, a_1 = 1.
  static FoundationHypotheses from_word(long long m, const Word& w, Variant variant);
  /// The word itself, with adjacent S syllables merged (no further reduction).
  Word word() const;
  std::size_t n() const { return b.size(); }
};

struct HypothesisCheck {
  bool ok = true;
  std::string clause;  // first violated clause, empty when ok
};

/// Purely syntactic. lemma: n > 0, every a_i odd, every 4 b_i != 0 mod m.
/// ext1: n > 0, every a_i odd, no b_i = 0 mod m, no two consecutive b_i with
/// 4 b_i = 0 mod m, and no half-turn b_i when n >= 2. ext2 is checked on the
/// {A,C} word by ext2_check; here it is treated as ext1.
HypothesisCheck check_hypotheses(const FoundationHypotheses& h);

struct NonIdentityWitness {
  Word word;
  ExactMat3 matrix;
  std::vector<std::pair<int, int>> non_rational;
  /// Entries that are not algebraic integers (some power-basis coefficient is not an integer).
  std::vector<std::pair<int, int>> non_integral;
  Variant variant = Variant::lemma;
  double seconds = 0;
};

/// Matrix of a word in Ghat(m,4) with its entry metadata; throws
/// InternalError if the matrix is the identity.
NonIdentityWitness witness_for(long long m, const Word& w, Variant variant);

/// Throws HypothesisError (with the clause) when the hypotheses fail and
/// InternalError when the word evaluates to I anyway.
NonIdentityWitness certify_non_identity(const FoundationHypotheses& h);

/// Contracts every interior S^{a} T^{+-m/4} S^{a'} to T^x S^y T^z and merges
/// the outer T's into the neighbours. Only boundary quarter turns survive.
/// Output matrix equals input matrix (checked). Throws HypothesisError
/// unless the ext1 hypotheses hold.
Word ext1_reduce(const FoundationHypotheses& h);

/// Word over {A,C} in G(p,q): nonempty, freely reduced, no interior half
/// turn, no two consecutive quarter turns. Translated with m = pq,
/// A = T^q, C = S^-1 T^p S; boundary half turns are absorbed, then the ext1
/// machinery applies. Throws HypothesisError on a violated clause.
NonIdentityWitness ext2_check(const Word& w, long long p, long long q);

/// (S T S T, S T^2 S T^2). Throws UsageError for m in {1, 2, 4, 8} or m < 1.
std::pair<Word, Word> free_pair(long long m);

struct FreeCertificate {
  Word input;
  Word substituted;  // freely reduced over {S,T}
  Variant variant = Variant::lemma;
  NonIdentityWitness witness;
};

/// Substitutes A, B by the free pair, reduces, and asserts Foundation form,
/// strictly greater letter length and non-identity (InternalError otherwise).
FreeCertificate certify_free(long long m, const Word& w);

struct BatchSummary {
  std::string name;
  long long words = 0;
  long long certified = 0;
  long long failures = 0;
  /// Lemma words whose matrix has at least four non-integral entries.
  long long four_non_integral = 0;
  std::vector<std::string> failure_examples;
  double seconds = 0;
  bool ok() const { return failures == 0 && certified == words; }
};

using Progress = std::function<void(const std::string&)>;

/// Every lemma-form word with 1 <= n <= max_n, odd |a_i| <= max_exp,
/// 1 <= b_i < m with 4 b_i != 0 mod m, and W, E in 0..3.
BatchSummary foundation_batch(long long m, int max_n, int max_exp, const Progress& progress = {});

/// Every nonempty freely reduced {A,B} word of letter length <= max_length.
BatchSummary free_batch(long long m, int max_length, const Progress& progress = {});

}  // namespace rotlab
