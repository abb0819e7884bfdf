#include "rotlab/certify.hpp"
#include "rotlab/errors.hpp"
#include "rotlab/explore.hpp"
#include "rotlab/groups.hpp"
#include "rotlab/normalform.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace rotlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

std::vector<GroupSpec> gnm_box(long long max_pq, long long min_m, long long max_m) {
  std::vector<GroupSpec> out;
  for (long long p = 1; p <= max_pq; ++p)
    for (long long q = 1; q <= max_pq; ++q)
      for (long long m = min_m; m <= max_m; ++m)
        for (long long n = 1; n < m; ++n)
          if (gcd_ll(n, m) == 1) out.push_back(GroupSpec::gnm(p, q, n, m));
  return out;
}

Outcome finite_orders() {
  Outcome o;
  auto expect = [&](const GroupSpec& s, std::size_t order) {
    BallReport b = bfs_ball(s, 30, 100000);
    if (!b.closed || b.order != order)
      fail(o, s.str() + " closed at " + (b.order ? std::to_string(*b.order) : "none") + ", expected " +
                  std::to_string(order));
  };
  for (long long p = 1; p <= 12; ++p) {
    expect(GroupSpec::gpq(p, 1), static_cast<std::size_t>(p));
    expect(GroupSpec::gpq(p, 2), static_cast<std::size_t>(2 * p));
  }
  expect(GroupSpec::hatg(4), 24);
  o.detail = o.ok ? "G(p,1)=p, G(p,2)=2p for p<=12; Ghat(4,4)=24" : o.detail;
  return o;
}

Outcome relations() {
  Outcome o;
  long long specs = 0, checks = 0;
  for (const auto& s : gnm_box(12, 3, 24)) {
    ++specs;
    for (const auto& c : verify_relations(s).checks) {
      if (c.status == "skipped") {
        if (s.p % 2 == 0 && s.q % 2 == 0) fail(o, s.str() + ": " + c.name + " skipped with p, q even");
        continue;
      }
      ++checks;
      if (c.status != "pass") fail(o, s.str() + ": " + c.name + " " + c.status);
    }
  }
  if (o.ok) o.detail = std::to_string(specs) + " specs, " + std::to_string(checks) + " exact checks";
  return o;
}

Outcome foundation() {
  Outcome o;
  long long words = 0;
  for (long long m : {3, 5, 6, 7, 9, 12}) {
    BatchSummary b = foundation_batch(m, 3, 3);
    words += b.words;
    if (!b.ok()) fail(o, "m=" + std::to_string(m) + ": " + std::to_string(b.failures) + " failures");
  }
  if (o.ok) o.detail = std::to_string(words) + " words certified non-identity";
  return o;
}

Outcome growth() {
  Outcome o;
  std::ostringstream os;
  for (auto s : {GroupSpec::gnm(3, 5, 1, 7), GroupSpec::gpq(3, 3), GroupSpec::gnm(3, 7, 1, 5)}) {
    GrowthComparison g = growth_compare(s, 5, default_budget());
    if (!g.all_match() || g.matches.size() != 6) fail(o, s.str() + " disagrees with the oracle");
    os << s.str() << " " << g.ball.counts.back() << "; ";
  }
  if (o.ok) o.detail = "radius 5 totals " + os.str().substr(0, os.str().size() - 2);
  return o;
}

// All words of letter length <= max_len with exponents in [-2,2]; matrices by prefix.
void enumerate_words(const GroupSpec& s, int max_len,
                     const std::function<void(const Word&, const ExactMat3&)>& visit) {
  GeneratorTable tab = generator_table(s);
  int N = tab.conductor();
  auto al = s.alphabet();
  std::vector<std::vector<ExactMat3>> pw(2);
  for (std::size_t g = 0; g < 2; ++g)
    for (long long e : {-2, -1, 1, 2}) pw[g].push_back(tab.get(al[g]).power(e).lift(N));
  std::vector<Syllable> cur;
  std::function<void(int, int, const ExactMat3&)> rec = [&](int left, int last, const ExactMat3& m) {
    visit(Word(cur), m);
    for (int g = 0; g < 2; ++g) {
      if (g == last) continue;
      int k = 0;
      for (long long e : {-2, -1, 1, 2}) {
        int len = static_cast<int>(e < 0 ? -e : e);
        if (len <= left) {
          cur.push_back({al[static_cast<std::size_t>(g)], e});
          rec(left - len, g, m * pw[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)]);
          cur.pop_back();
        }
        ++k;
      }
    }
  };
  rec(max_len, -1, ExactMat3::identity(N));
}

Outcome normal_forms() {
  Outcome o;
  std::vector<GroupSpec> specs;
  for (long long m = 1; m <= 12; ++m) specs.push_back(GroupSpec::hatg(m));
  for (long long p = 1; p <= 6; ++p)
    for (long long q = 1; q <= 6; ++q) specs.push_back(GroupSpec::gpq(p, q));
  for (const auto& s : gnm_box(4, 3, 12)) specs.push_back(s);
  long long words = 0, identities = 0;
  for (const auto& s : specs) {
    enumerate_words(s, 6, [&](const Word& w, const ExactMat3& m) {
      ++words;
      bool truth = m.is_identity();
      identities += truth;
      try {
        if (is_identity(s, w, m).identity != truth) fail(o, s.str() + " " + w.str() + ": verdict disagrees");
      } catch (const Error& e) {
        fail(o, s.str() + " " + w.str() + ": " + e.what());
      }
    });
  }
  if (o.ok)
    o.detail = std::to_string(specs.size()) + " specs, " + std::to_string(words) + " words, " +
               std::to_string(identities) + " identities, 0 disagreements";
  return o;
}

Outcome coincidences() {
  Outcome o;
  long long specs = 0, words = 0;
  for (const auto& s : gnm_box(8, 3, 16)) {
    StructureReport r = classify(s);
    switch (r.kase) {
      case Case::Thm4_1: case Case::Thm4_2: case Case::Thm4_3:
      case Case::Thm5_2: case Case::Thm5_3: case Case::Thm5_4:
        break;
      default:
        continue;
    }
    ++specs;
    try {
      GeneratorTable tab = generator_table(r.canonical.spec);
      for (const auto& e : express_generators(s)) {
        ++words;
        if (eval_word(tab, e.word) != e.rotation.power(1)) fail(o, s.str() + ": " + e.target + " mismatch");
      }
    } catch (const Error& e) {
      fail(o, s.str() + ": " + e.what());
    }
  }
  if (o.ok) o.detail = std::to_string(specs) + " specs, " + std::to_string(words) + " words exact";
  return o;
}

Outcome free_subgroup() {
  Outcome o;
  long long words = 0;
  for (long long m : {3, 5, 6, 12}) {
    BatchSummary b = free_batch(m, 5);
    words += b.words;
    if (!b.ok()) fail(o, "m=" + std::to_string(m) + ": " + std::to_string(b.failures) + " failures");
  }
  if (o.ok) o.detail = std::to_string(words) + " reduced words certified and lengthened";
  return o;
}

Outcome classification() {
  Outcome o;
  long long specs = 0, relators = 0;
  for (const auto& s : gnm_box(16, 3, 24)) {
    ++specs;
    try {
      StructureReport r = classify(s);
      if (!r.presentation) continue;
      for (const auto& w : r.presentation->relators) {
        ++relators;
        if (!eval_word(r.presentation->table, w).is_identity()) fail(o, s.str() + ": relator " + w.str());
      }
    } catch (const Error& e) {
      fail(o, s.str() + ": " + e.what());
    }
  }
  if (o.ok) o.detail = std::to_string(specs) + " specs classified, " + std::to_string(relators) + " relators = I";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"finite orders", 30, finite_orders},
      {"relation suite", 120, relations},
      {"foundation lemma batch", 600, foundation},
      {"free-product growth", 300, growth},
      {"normal-form soundness", 600, normal_forms},
      {"constructive coincidences", 60, coincidences},
      {"free subgroup certification", 120, free_subgroup},
      {"classification totality", 300, classification},
  };
  int failed = 0, k = 0;
  for (const auto& c : criteria) {
    ++k;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.ok && secs > c.limit) fail(o, "over the " + std::to_string(static_cast<int>(c.limit)) + " s limit");
    failed += !o.ok;
    std::printf("%s %d %s (%.1f s): %s\n", o.ok ? "PASS" : "FAIL", k, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
