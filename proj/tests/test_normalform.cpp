#include "support.hpp"

#include "rotlab/amalgam.hpp"
#include "rotlab/certify.hpp"
#include "rotlab/errors.hpp"
#include "rotlab/normalform.hpp"

#include <doctest.h>

#include <map>

using namespace rotlab;

namespace {

Word W(const char* s) { return Word::parse(s); }

ExactMat3 eval(const GroupSpec& s, const Word& w) { return eval_word(generator_table(s), w); }

// Shape promised for nonempty nf_hatG_m4 output: odd interior S, no half-turn
// T (unless it is the only T), quarter-turn T only as the first or last T syllable.
bool foundation_shape(const Word& w, long long m) {
  std::vector<std::size_t> ts;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].gen == "T") ts.push_back(i);
  if (ts.size() <= 1) return true;
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    if (ts[k + 1] != ts[k] + 2) return false;
    if (w[ts[k] + 1].exp % 2 == 0) return false;
  }
  for (std::size_t k = 0; k < ts.size(); ++k) {
    long long b = w[ts[k]].exp;
    if ((2 * b) % m == 0) return false;
    bool boundary = k == 0 || k + 1 == ts.size();
    if ((4 * b) % m == 0 && !boundary) return false;
  }
  return true;
}

Word pieces_word(const AmalgamNormalForm& nf) {
  Word out = nf.h_word;
  for (const auto& p : nf.pieces) out *= p.word;
  return out;
}

}  // namespace

TEST_SUITE("normalform") {
  TEST_CASE("free_reduce") {
    OrderMap ord{{"A", 3}};  // B has infinite order
    CHECK(free_reduce(W("A^2 A^-2"), ord).empty());
    CHECK(free_reduce(W("A^5"), ord) == W("A^-1"));
    CHECK(free_reduce(Word{{"A", 1}, {"B", 0}, {"A", 1}}, ord) == W("A^-1"));
    CHECK(Word({{"A", 1}, {"B", 0}, {"A", 1}}) == W("A^2"));
  }

  TEST_CASE("word syntax") {
    CHECK(Word().str() == "1");
    CHECK(W("1").empty());
    CHECK(W("A^3 B^-2 A^1").str() == "A^3 B^-2 A^1");
    CHECK_THROWS_AS(W("A^3 B"), ParseError);
    CHECK_THROWS_AS(W("A^x"), ParseError);
  }

  TEST_CASE("nf_hatG_m4 examples") {
    CHECK(nf_hatG_m4(W("T^1 S^2 T^1"), 5) == W("S^2"));
    CHECK(nf_hatG_m4(W("S^1 T^1 S^1 T^1 S^1 T^1"), 4).empty());
    CHECK(nf_hatG_m4(W("S^1 T^1 S^1 T^1"), 6) == W("S^1 T^1 S^1 T^1"));
  }

  TEST_CASE("nf_G_pq examples") {
    CHECK(nf_G_pq(W("A^2 C^1 A^2 C^1"), 4, 2).empty());
    CHECK(nf_G_pq(W("A^1 C^1 A^-1 C^-1"), 3, 3) == W("A^1 C^1 A^-1 C^-1"));
    Word in = W("A^3 C^1 A^1");
    Word out = nf_G_pq(in, 6, 2);
    CHECK(out != in);
    for (const auto& s : out.syllables()) CHECK_FALSE((s.gen == "A" && s.exp == 3));
    CHECK(eval(GroupSpec::gpq(6, 2), out) == eval(GroupSpec::gpq(6, 2), in));
    CHECK_THROWS_AS(nf_G_pq(W("A^1 C^1"), 4, 8), DelegateToHatG);
  }

  TEST_CASE("nf_thm5_case1 examples") {
    GroupSpec s = GroupSpec::gnm(2, 2, 1, 12);
    CHECK(nf_thm5_case1(W("A^1 B^1").pow(3), s) == W("gamma^1"));
    CHECK(nf_thm5_case1(W("A^1 B^1").pow(6), s).empty());
    CHECK(nf_thm5_case1(W("A^1 B^1"), s) == W("A^1 B^1"));
    CHECK_THROWS_AS(nf_thm5_case1(W("A^1"), GroupSpec::gnm(3, 5, 1, 7)), UnsupportedCase);
  }

  TEST_CASE("amalgam_nf examples") {
    AmalgamDecomposition d = amalgam_for(GroupSpec::hatg(5));
    AmalgamNormalForm s2 = amalgam_nf(W("S^2"), d);
    CHECK(s2.pieces.empty());
    CHECK(s2.h == rot(Axis::y(), 1, 2));
    CHECK_FALSE(s2.is_identity());

    AmalgamNormalForm e = amalgam_nf(Word(), d);
    CHECK(e.pieces.empty());
    CHECK(e.is_identity());

    GroupSpec r4 = GroupSpec::gnm(4, 4, 1, 8);
    AmalgamDecomposition d2 = amalgam_for(r4);
    AmalgamNormalForm ab = amalgam_nf(W("A^1 B^1"), d2);
    REQUIRE(ab.pieces.size() == 2);
    Word reps = ab.pieces[0].word * ab.pieces[1].word;
    AmalgamNormalForm again = amalgam_nf(reps, d2);
    CHECK(again.h.is_identity());
    REQUIRE(again.pieces.size() == 2);
    CHECK(again.pieces[0].word == ab.pieces[0].word);
    CHECK(again.pieces[1].word == ab.pieces[1].word);
    CHECK_FALSE(eval(r4, reps).is_identity());

    CHECK_THROWS_AS(amalgam_for(GroupSpec::gnm(2, 2, 1, 12)), UnsupportedCase);
  }

  TEST_CASE("is_identity examples") {
    CHECK(is_identity(GroupSpec::hatg(4), W("S^1 T^1 S^1 T^1 S^1 T^1")).identity);
    CHECK_FALSE(is_identity(GroupSpec::gnm(3, 5, 1, 7), W("A^1 B^1 A^-1 B^-1")).identity);
    CHECK(is_identity(GroupSpec::gnm(2, 2, 1, 8), W("B^1 A^1").pow(8)).identity);
    CHECK_FALSE(is_identity(GroupSpec::gnm(3, 5, 1, 7), W("A^1 B^1")).identity);
  }
}

TEST_SUITE("normalform properties") {
  TEST_CASE("nf_hatG_m4 preserves the matrix and lands in the promised shape") {
    testgen::Rng rng(41);
    for (long long m = 1; m <= 16; ++m) {
      GeneratorTable tab = generator_table(GroupSpec::hatg(m));
      for (int t = 0; t < 60; ++t) {
        Word w = testgen::word(rng, {"S", "T"}, 10, m + 2);
        Word out = nf_hatG_m4(w, m);
        ExactMat3 mo = eval_word(tab, out);
        CHECK(mo == eval_word(tab, w));
        if (out.empty()) continue;
        CHECK(foundation_shape(out, m));
        CHECK_FALSE(mo.is_identity());
      }
    }
  }

  TEST_CASE("rewrite trace measure strictly decreases") {
    testgen::Rng rng(42);
    for (long long m : {3, 4, 6, 8, 12}) {
      for (int t = 0; t < 60; ++t) {
        Word w = testgen::word(rng, {"S", "T"}, 12, m);
        RewriteTrace tr;
        nf_hatG_m4(w, m, &tr);
        for (std::size_t i = 1; i < tr.steps.size(); ++i) {
          auto prev = std::make_pair(tr.steps[i - 1].syllables, tr.steps[i - 1].quarter_ts);
          auto cur = std::make_pair(tr.steps[i].syllables, tr.steps[i].quarter_ts);
          CHECK(cur < prev);
        }
      }
    }
  }

  TEST_CASE("nf_G_pq and nf_thm5_case1 preserve the matrix") {
    testgen::Rng rng(43);
    for (long long p = 1; p <= 8; ++p)
      for (long long q = 1; q <= 8; ++q) {
        if (p % 4 == 0 && q % 4 == 0) continue;
        GroupSpec s = GroupSpec::gpq(p, q);
        for (int t = 0; t < 8; ++t) {
          Word w = testgen::word(rng, {"A", "C"}, 8, 4);
          CHECK(eval(s, nf_G_pq(w, p, q)) == eval(s, w));
        }
      }
    for (auto s : {GroupSpec::gnm(2, 2, 1, 12), GroupSpec::gnm(2, 6, 1, 8), GroupSpec::gnm(6, 2, 3, 4),
                   GroupSpec::gnm(2, 2, 1, 16)}) {
      GeneratorTable tab = thm5_table(s);
      for (int t = 0; t < 40; ++t) {
        Word w = testgen::word(rng, {"A", "B"}, 12, 3);
        CHECK(eval_word(tab, nf_thm5_case1(w, s)) == eval_word(tab, w));
      }
    }
  }

  TEST_CASE("amalgam_nf is unchanged by inserting a factor relator") {
    testgen::Rng rng(44);
    for (auto s : {GroupSpec::hatg(5), GroupSpec::hatg(6), GroupSpec::hatg(8), GroupSpec::gpq(3, 3), GroupSpec::gpq(6, 3),
                   GroupSpec::gpq(6, 4), GroupSpec::gnm(3, 5, 1, 7), GroupSpec::gnm(4, 3, 1, 4),
                   GroupSpec::gnm(4, 4, 1, 8), GroupSpec::gnm(8, 4, 1, 8)}) {
      StructureReport r = classify(s);
      AmalgamDecomposition d = amalgam_for(s);
      std::vector<Word> rel;
      if (r.presentation) {
        // presentation letters bound to one of the spec's own generators
        GeneratorTable tab = generator_table(s);
        std::map<std::string, std::string> to_spec;
        for (const auto& [name, sym] : r.presentation->table.entries())
          for (const auto& g : s.alphabet())
            if (sym.power(1) == tab.get(g).power(1)) to_spec[name] = g;
        for (const auto& w : r.presentation->relators) {
          std::vector<Syllable> v;
          bool ok = true;
          for (const auto& x : w.syllables()) {
            auto it = to_spec.find(x.gen);
            if (it == to_spec.end()) {
              ok = false;
              break;
            }
            v.push_back({it->second, x.exp});
          }
          if (ok) rel.emplace_back(std::move(v));
        }
      }
      for (const auto& g : s.alphabet()) rel.push_back(Word::letter(g, s.orders().at(g)));
      for (int t = 0; t < 30; ++t) {
        Word w = testgen::word(rng, s.alphabet(), 8, 3);
        const Word& x = rel[static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long long>(rel.size()) - 1))];
        std::size_t cut = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long long>(w.size())));
        std::vector<Syllable> left(w.syllables().begin(), w.syllables().begin() + static_cast<long>(cut));
        std::vector<Syllable> right(w.syllables().begin() + static_cast<long>(cut), w.syllables().end());
        Word w2 = Word(left) * x * Word(right);
        CHECK(eval(s, x).is_identity());
        AmalgamNormalForm a = amalgam_nf(w, d), b = amalgam_nf(w2, d);
        CHECK(a.same_as(b));
        CHECK(a.is_identity() == eval(s, w).is_identity());
        CHECK(eval_word(d.table, pieces_word(a)) == eval_word(d.table, d.translate(w)));
      }
    }
  }

  TEST_CASE("is_identity agrees with the matrix oracle on random longer words") {
    testgen::Rng rng(45);
    std::vector<GroupSpec> specs;
    for (long long m = 3; m <= 12; ++m) specs.push_back(GroupSpec::hatg(m));
    for (long long p = 1; p <= 6; ++p)
      for (long long q = 1; q <= 6; ++q) specs.push_back(GroupSpec::gpq(p, q));
    for (int t = 0; t < 40; ++t) specs.push_back(testgen::gnm(rng, 4, 12));
    for (const auto& s : specs)
      for (int t = 0; t < 25; ++t) {
        Word w = testgen::word(rng, s.alphabet(), 14, 4);
        if (t % 5 == 0) w = w * w.inverse();  // some identities
        CHECK(is_identity(s, w).identity == eval(s, w).is_identity());
      }
  }
}
