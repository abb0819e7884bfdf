#include "support.hpp"

#include "rotlab/certify.hpp"
#include "rotlab/errors.hpp"

#include <doctest.h>

using namespace rotlab;

namespace {

Word W(const char* s) { return Word::parse(s); }

FoundationHypotheses fh(long long m, const char* w, Variant v = Variant::lemma) {
  return FoundationHypotheses::from_word(m, W(w), v);
}

ExactMat3 eval_hat(long long m, const Word& w) { return eval_word(generator_table(GroupSpec::hatg(m)), w); }

}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("check_hypotheses") {
    CHECK(check_hypotheses(fh(6, "S^1 T^1 S^1 T^1")).ok);
    CHECK_FALSE(check_hypotheses(fh(8, "S^1 T^2 S^1 T^1")).ok);
    CHECK(check_hypotheses(fh(8, "S^1 T^2 S^1 T^1", Variant::ext1)).ok);
    HypothesisCheck even = check_hypotheses(fh(5, "S^2 T^1"));
    CHECK_FALSE(even.ok);
    CHECK_FALSE(even.clause.empty());
    CHECK_FALSE(check_hypotheses(fh(8, "T^4 S^2 T^4 S^2")).ok);
    CHECK_FALSE(check_hypotheses(fh(8, "T^4 S^2 T^4 S^2", Variant::ext1)).ok);
    CHECK(eval_hat(8, W("T^4 S^2 T^4 S^2")).is_identity());
  }

  TEST_CASE("from_word splits the foundation shape") {
    FoundationHypotheses h = fh(7, "S^3 T^2 S^1 T^5 S^2");
    CHECK(h.W == 0);
    CHECK(h.a == std::vector<long long>{3, 1});
    CHECK(h.b == std::vector<long long>{2, 5});
    CHECK(h.E == 2);
    CHECK(h.word() == W("S^3 T^2 S^1 T^5 S^2"));
    FoundationHypotheses t = fh(7, "T^1 S^1 T^1");
    CHECK(t.W == -1);
    CHECK(t.a.front() == 1);
    CHECK(t.word() == W("T^1 S^1 T^1"));
  }

  TEST_CASE("certify_non_identity") {
    NonIdentityWitness a = certify_non_identity(fh(3, "S^1 T^1 S^1 T^1"));
    CHECK_FALSE(a.matrix.is_identity());
    CHECK(a.non_integral.size() >= 4);
    NonIdentityWitness b = certify_non_identity(fh(6, "S^1 T^1"));
    CHECK_FALSE(b.matrix.is_identity());
    CHECK_THROWS_AS(certify_non_identity(fh(5, "S^2 T^1")), HypothesisError);
    CHECK_THROWS_AS(certify_non_identity(fh(8, "T^4 S^2 T^4 S^2")), HypothesisError);
  }

  TEST_CASE("ext1_reduce") {
    CHECK(ext1_reduce(fh(8, "T^1 S^1 T^2 S^1 T^1", Variant::ext1)) == W("T^3 S^1 T^3"));
    Word boundary = ext1_reduce(fh(8, "S^1 T^2 S^1", Variant::ext1));
    CHECK(boundary == W("S^1 T^2 S^1"));
    CHECK_FALSE(eval_hat(8, boundary).is_identity());
    CHECK(ext1_reduce(fh(12, "S^1 T^1 S^-1 T^5", Variant::ext1)) == W("S^1 T^1 S^-1 T^5"));
    // exponents come back balanced
    CHECK(ext1_reduce(fh(12, "S^1 T^1 S^3 T^5", Variant::ext1)) == W("S^1 T^1 S^-1 T^5"));
    // consecutive quarter turns fall outside the hypotheses
    CHECK_THROWS_AS(ext1_reduce(fh(8, "S^1 T^2 S^1 T^2", Variant::ext1)), HypothesisError);
    // a half turn between two syllables would let T S T^4 S T^3 collapse to I
    CHECK(eval_hat(8, W("T^1 S^1 T^4 S^1 T^3")).is_identity());
    CHECK_FALSE(check_hypotheses(fh(8, "T^1 S^1 T^4 S^1 T^3", Variant::ext1)).ok);
  }

  TEST_CASE("ext2_check") {
    for (auto [w, p, q] : {std::tuple{"A^1 C^1", 3LL, 3LL}, std::tuple{"A^1 C^1 A^1", 4LL, 6LL}}) {
      NonIdentityWitness x = ext2_check(W(w), p, q);
      CHECK_FALSE(x.matrix.is_identity());
      CHECK(eval_word(generator_table(GroupSpec::gpq(p, q)), W(w)) != ExactMat3::identity());
    }
    CHECK_THROWS_AS(ext2_check(W("A^1 C^1"), 4, 4), HypothesisError);
    CHECK_THROWS_AS(ext2_check(Word(), 3, 3), HypothesisError);
  }

  TEST_CASE("free_pair") {
    auto [a, b] = free_pair(3);
    CHECK(a == W("S^1 T^1 S^1 T^1"));
    CHECK(b == W("S^1 T^2 S^1 T^2"));
    CHECK(free_pair(6).first == a);
    for (long long bad : {1, 2, 4, 8, 0, -3}) CHECK_THROWS_AS(free_pair(bad), UsageError);
  }

  TEST_CASE("certify_free") {
    FreeCertificate c = certify_free(3, W("A^1 B^-1"));
    CHECK(c.substituted.letter_length() > 2);
    CHECK_FALSE(c.witness.matrix.is_identity());
    FreeCertificate d = certify_free(5, W("A^1"));
    CHECK_FALSE(d.witness.matrix.is_identity());
  }

  TEST_CASE("free_batch size") {
    BatchSummary s = free_batch(6, 5);
    // reduced words over a rank-2 free group: 4 * 3^(k-1) of letter length k
    CHECK(s.words == 4 + 12 + 36 + 108 + 324);
    CHECK(s.ok());
  }

  TEST_CASE("small foundation batch") {
    BatchSummary s = foundation_batch(6, 2, 2);
    CHECK(s.words > 0);
    CHECK(s.ok());
    CHECK(s.four_non_integral == s.words);
  }
}

TEST_SUITE("certify properties") {
  TEST_CASE("random lemma words are non-identity with coherent witnesses") {
    testgen::Rng rng(51);
    for (int t = 0; t < 400; ++t) {
      long long m = testgen::uniform(rng, 3, 20);
      if (m == 4) continue;  // every T power is a quarter turn there
      FoundationHypotheses h;
      h.m = m;
      h.W = testgen::uniform(rng, 0, 3);
      h.E = testgen::uniform(rng, 0, 3);
      int n = static_cast<int>(testgen::uniform(rng, 1, 5));
      for (int i = 0; i < n; ++i) {
        h.a.push_back(2 * testgen::uniform(rng, -3, 2) + 1);
        long long b = 0;
        while ((4 * b) % m == 0) b = testgen::uniform(rng, 1, m - 1);
        h.b.push_back(b);
      }
      REQUIRE(check_hypotheses(h).ok);
      NonIdentityWitness w = certify_non_identity(h);
      CHECK_FALSE(w.matrix.is_identity());
      CHECK(eval_hat(m, w.word) == w.matrix);
      CHECK(w.non_integral.size() >= 4);
    }
  }

  TEST_CASE("ext1_reduce preserves the matrix and never adds syllables") {
    testgen::Rng rng(52);
    int reduced = 0;
    for (int t = 0; t < 400; ++t) {
      long long m = 4 * testgen::uniform(rng, 2, 5);
      FoundationHypotheses h;
      h.m = m;
      h.variant = Variant::ext1;
      h.W = testgen::uniform(rng, 0, 3);
      h.E = testgen::uniform(rng, 0, 3);
      int n = static_cast<int>(testgen::uniform(rng, 1, 6));
      bool prev_quarter = false;
      for (int i = 0; i < n; ++i) {
        h.a.push_back(2 * testgen::uniform(rng, -2, 1) + 1);
        long long b;
        while (true) {
          b = testgen::uniform(rng, 1, m - 1);
          bool quarter = (4 * b) % m == 0;
          if ((2 * b) % m == 0 && n >= 2) continue;
          if (quarter && prev_quarter) continue;
          prev_quarter = quarter;
          break;
        }
        h.b.push_back(b);
      }
      REQUIRE(check_hypotheses(h).ok);
      Word in = h.word(), out = ext1_reduce(h);
      CHECK(eval_hat(m, out) == eval_hat(m, in));
      CHECK(out.size() <= in.size());
      CHECK_FALSE(eval_hat(m, out).is_identity());
      reduced += out != in;
    }
    CHECK(reduced > 0);
  }

  TEST_CASE("certify_free grows words on random longer inputs") {
    testgen::Rng rng(53);
    for (int t = 0; t < 100; ++t) {
      long long m = std::vector<long long>{3, 5, 6, 7, 9, 10, 12}[static_cast<std::size_t>(testgen::uniform(rng, 0, 6))];
      Word w = free_reduce(testgen::word(rng, {"A", "B"}, 6, 3), {});
      if (w.empty()) continue;
      FreeCertificate c = certify_free(m, w);
      CHECK(c.substituted.letter_length() > w.letter_length());
      CHECK(eval_hat(m, c.substituted) == c.witness.matrix);
    }
  }
}
