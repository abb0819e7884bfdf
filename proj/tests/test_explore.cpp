#include "support.hpp"

#include "rotlab/errors.hpp"
#include "rotlab/explore.hpp"
#include "rotlab/rewriting.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rotlab;

TEST_SUITE("explore") {
  TEST_CASE("finite closures") {
    BallReport cube = bfs_ball(GroupSpec::hatg(4), 10, 100000);
    CHECK(cube.closed);
    CHECK(cube.order == 24);
    CHECK(cube.counts.size() == 11);
    CHECK(cube.counts.back() == 24);

    BallReport z5 = bfs_ball(GroupSpec::gpq(5, 1), 6, 100000);
    CHECK(z5.order == 5);
    BallReport d5 = bfs_ball(GroupSpec::gpq(5, 2), 8, 100000);
    CHECK(d5.order == 10);
  }

  TEST_CASE("budget truncation keeps complete radii only") {
    BallReport b = bfs_ball(GroupSpec::gpq(3, 3), 10, 50);
    CHECK(b.truncated);
    CHECK_FALSE(b.closed);
    CHECK(b.counts.back() <= 50);
    CHECK(b.counts.size() < 11);
  }

  TEST_CASE("free product oracle counts") {
    CHECK(free_product_counts(3, 3, 5) == std::vector<std::size_t>{1, 5, 13, 29, 61, 125});
    CHECK(free_product_counts(3, 5, 5) == std::vector<std::size_t>{1, 5, 15, 39, 95, 231});
    CHECK(free_product_counts(1, 1, 3) == std::vector<std::size_t>{1, 1, 1, 1});
  }

  TEST_CASE("growth_compare") {
    for (auto s : {GroupSpec::gnm(3, 5, 1, 7), GroupSpec::gpq(3, 3), GroupSpec::gnm(3, 7, 1, 5)}) {
      GrowthComparison g = growth_compare(s, 4, 1000000);
      CHECK(g.all_match());
      CHECK(g.matches.size() == 5);
    }
    GrowthComparison cube = growth_compare(GroupSpec::hatg(4), 8, 1000000);
    CHECK(cube.all_match());
    CHECK(cube.ball.order == 24);
    CHECK(cube.oracle_counts.back() == 24);
    CHECK_THROWS_AS(growth_compare(GroupSpec::gnm(4, 4, 1, 8), 3, 1000), UnsupportedCase);
  }

  TEST_CASE("presented groups against their matrices") {
    for (auto s : {GroupSpec::gpq(6, 3), GroupSpec::gpq(6, 2), GroupSpec::gpq(6, 4), GroupSpec::gnm(4, 3, 1, 4),
                   GroupSpec::hatg(5), GroupSpec::hatg(6), GroupSpec::gnm(2, 2, 1, 12)}) {
      GrowthComparison g = growth_compare(s, 5, 1000000);
      CHECK_MESSAGE(g.all_match(), s.str());
    }
  }
}

TEST_SUITE("rewriting") {
  TEST_CASE("knuth-bendix on small groups") {
    // S3 = <a, b | a^2, b^3, (ab)^2>
    GroupRewriting s3({"a", "b"}, {Word::parse("a^2"), Word::parse("b^3"), Word::parse("a^1 b^1 a^1 b^1")});
    REQUIRE(s3.confluent());
    CHECK(s3.normal_form(Word::parse("a^1 b^1 a^1")) == s3.normal_form(Word::parse("b^-1")));
    CHECK(s3.normal_form(Word::parse("a^1 b^1 a^1 b^1")).empty());
    CHECK(presentation_counts({{"a", "b"}, {Word::parse("a^2"), Word::parse("b^3"), Word::parse("a^1 b^1 a^1 b^1")}, {}},
                              {"a", "b"}, 4, 1000)
              .back() == 6);
    CHECK_THROWS_AS(GroupRewriting({"a", "b"}, {Word::parse("a^2")}), UnsupportedCase);
  }
}

TEST_SUITE("explore properties") {
  TEST_CASE("counts are monotone, closure is stable, order of generators is irrelevant") {
    testgen::Rng rng(61);
    for (int t = 0; t < 25; ++t) {
      GroupSpec s = testgen::gnm(rng, 6, 12);
      BallReport a = bfs_ball(s, 4, 200000);
      for (std::size_t i = 1; i < a.counts.size(); ++i) CHECK(a.counts[i] >= a.counts[i - 1]);
      GeneratorTable tab = generator_table(s);
      auto al = s.alphabet();
      BallReport b = bfs_ball({{al[1], tab.get(al[1]).power(1)}, {al[0], tab.get(al[0]).power(1)}}, 4, 200000);
      CHECK(a.counts == b.counts);
      if (a.closed) {
        BallReport c = bfs_ball(s, *a.closed_at + 3, 200000);
        CHECK(c.counts.back() == *a.order);
      }
    }
  }

  TEST_CASE("odd free products match their oracle at every radius") {
    for (long long p : {3, 5})
      for (long long q : {3, 5, 7})
        for (long long m : {3, 5, 7, 9}) {
          GroupSpec s = GroupSpec::gnm(p, q, 1, m);
          GrowthComparison g = growth_compare(s, 4, 1000000);
          CHECK_MESSAGE(g.all_match(), s.str());
        }
  }
}
