#include "support.hpp"

#include "rotlab/errors.hpp"
#include "rotlab/groups.hpp"
#include "rotlab/rotations.hpp"
#include "rotlab/spec.hpp"

#include <doctest.h>

using namespace rotlab;

namespace {

CycloElem rat(long long a, long long b = 1) { return CycloElem::from_rational(make_rational(a, b)); }

GeneratorTable table(std::initializer_list<std::pair<std::string, RotationSymbol>> entries) {
  GeneratorTable t;
  for (const auto& [k, v] : entries) t.set(k, v);
  return t;
}

// column vector image of a basis vector under an exact matrix
std::array<CycloElem, 3> column(const ExactMat3& m, int j) { return {m.entry(0, j), m.entry(1, j), m.entry(2, j)}; }

}  // namespace

TEST_SUITE("rotations") {
  TEST_CASE("rot about x by a quarter turn") {
    ExactMat3 r = rot(Axis::x(), 1, 4);
    const int expect[3][3] = {{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(r.entry(i, j) == rat(expect[i][j]));
  }

  TEST_CASE("rot about z by a third") { CHECK(rot(Axis::z(), 1, 3).entry(0, 0) == rat(-1, 2)); }

  TEST_CASE("products and identity") {
    CHECK(mat_mul(rot(Axis::x(), 1, 4), rot(Axis::x(), 3, 4)).is_identity());
    CHECK_FALSE(is_identity(rot(Axis::z(), 1, 5)));
    CHECK(mat_eq(rot(Axis::y(), 1, 2) * rot(Axis::x(), 1, 2), rot(Axis::z(), 1, 2)));
    CHECK(mat_pow(rot(Axis::z(), 1, 7), 7).is_identity());
    CHECK(mat_eq(mat_pow(rot(Axis::z(), 1, 7), -1), rot(Axis::z(), 6, 7)));
  }

  TEST_CASE("eval_word") {
    auto t = table({{"A", {Axis::x(), 1, 2}}, {"B", {Axis::y(), 1, 5}}});
    CHECK(eval_word(t, Word()).is_identity());
    CHECK(eval_word(t, Word::parse("A^1 B^1 A^1 B^1")).is_identity());
    auto st = table({{"S", {Axis::y(), 1, 4}}, {"T", {Axis::x(), 1, 4}}});
    CHECK(eval_word(st, Word::parse("S^1 T^1 S^1 T^1 S^1 T^1")).is_identity());
    CHECK_THROWS_AS(eval_word(st, Word::parse("A^1")), UsageError);
  }

  TEST_CASE("verify_relations") {
    auto names = [](const RelationReport& r) {
      std::map<std::string, std::string> out;
      for (const auto& c : r.checks) out[c.name] = c.status;
      return out;
    };
    RelationReport cube = verify_relations(GroupSpec::gnm(4, 4, 1, 4));
    CHECK(cube.all_pass());
    for (const auto& c : cube.checks) CHECK(c.status == "pass");

    RelationReport r28 = verify_relations(GroupSpec::gnm(2, 2, 1, 8));
    CHECK(r28.all_pass());
    int passed = 0;
    for (const auto& c : r28.checks) passed += c.status == "pass";
    CHECK(passed == 3);
    GeneratorTable t = generator_table(GroupSpec::gnm(2, 2, 1, 8));
    CHECK(eval_word(t, Word::parse("B^1 A^1")) == rot(Axis::z(), 2, 8));

    RelationReport odd = verify_relations(GroupSpec::gnm(3, 5, 1, 7));
    CHECK(odd.all_pass());
    int skipped = 0;
    for (const auto& c : odd.checks) skipped += c.status == "skipped";
    CHECK(skipped == 1);
    CHECK(names(odd).size() == 3);
  }

  TEST_CASE("spec validation") {
    CHECK_THROWS_AS(GroupSpec::gnm(3, 5, 2, 6), UsageError);
    CHECK_THROWS_AS(GroupSpec::gnm(3, 5, 1, 2), UsageError);
    CHECK_THROWS_AS(GroupSpec::gnm(0, 5, 1, 7), UsageError);
    CHECK(GroupSpec::gnm(3, 5, 8, 7).n == 1);
  }
}

TEST_SUITE("rotations properties") {
  TEST_CASE("rot and eval_word produce special orthogonal matrices") {
    testgen::Rng rng(21);
    const Axis axes[] = {Axis::x(), Axis::y(), Axis::z(), Axis::ell(1, 5), Axis::ell(3, 8)};
    for (int t = 0; t < 60; ++t) {
      const Axis& a = axes[testgen::uniform(rng, 0, 4)];
      ExactMat3 r = rot(a, testgen::uniform(rng, -12, 12), testgen::uniform(rng, 1, 12));
      CHECK(r.is_special_orthogonal());
      CHECK(r.determinant() == rat(1));
    }
    for (int t = 0; t < 40; ++t) {
      GroupSpec s = testgen::gnm(rng, 8, 12);
      Word w = testgen::word(rng, s.alphabet(), 6, 3);
      CHECK(eval_word(generator_table(s), w).is_special_orthogonal());
    }
  }

  TEST_CASE("rot depends only on k/d in lowest terms") {
    for (long long d = 1; d <= 12; ++d)
      for (long long k = -d; k <= d; ++k)
        for (long long f : {2, 3}) {
          CHECK(rot(Axis::x(), k, d) == rot(Axis::x(), f * k, f * d));
          CHECK(rot(Axis::ell(1, 5), k, d) == rot(Axis::ell(1, 5), f * k, f * d));
        }
  }

  TEST_CASE("eval_word is a monoid homomorphism") {
    testgen::Rng rng(22);
    for (int t = 0; t < 60; ++t) {
      GroupSpec s = testgen::gnm(rng, 8, 12);
      GeneratorTable tab = generator_table(s);
      Word a = testgen::word(rng, s.alphabet(), 5, 4), b = testgen::word(rng, s.alphabet(), 5, 4);
      CHECK(eval_word(tab, a * b) == eval_word(tab, a) * eval_word(tab, b));
      CHECK(eval_word(tab, a.inverse()) == eval_word(tab, a).inverse());
    }
  }

  TEST_CASE("half turn about x inverts rotations about y") {
    for (long long q = 1; q <= 12; ++q) {
      ExactMat3 h = rot(Axis::x(), 1, 2), r = rot(Axis::y(), 1, q);
      CHECK((h * r * h * r).is_identity());
    }
  }

  TEST_CASE("quarter turns about y and x have order-3 product") {
    CHECK(mat_pow(rot(Axis::y(), 1, 4) * rot(Axis::x(), 1, 4), 3).is_identity());
    // column images: e_x -> e_y -> e_z -> e_x
    ExactMat3 ab = rot(Axis::y(), 1, 4) * rot(Axis::z(), 1, 4);
    auto e = [](int i) {
      std::array<CycloElem, 3> v{rat(0), rat(0), rat(0)};
      v[static_cast<std::size_t>(i)] = rat(1);
      return v;
    };
    CHECK(column(ab, 0) == e(1));
    CHECK(column(ab, 1) == e(2));
    CHECK(column(ab, 2) == e(0));
  }

  TEST_CASE("half-power product is a rotation about z") {
    for (long long m : {4, 8, 12})
      for (long long n = 1; n < m; ++n) {
        if (gcd_ll(n, m) != 1) continue;
        for (long long p = 2; p <= 12; p += 2)
          for (long long q = 2; q <= 12; q += 2) {
            GroupSpec s = GroupSpec::gnm(p, q, n, m);
            Word w{{"B", q / 2}, {"A", p / 2}};
            CHECK(eval_word(generator_table(s), w) == rot(Axis::z(), 2 * n, m));
          }
      }
  }
}
