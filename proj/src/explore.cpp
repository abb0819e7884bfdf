#include "rotlab/explore.hpp"

#include "rotlab/errors.hpp"
#include "rotlab/rewriting.hpp"

#include <chrono>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace rotlab {

namespace {

using Clock = std::chrono::steady_clock;

bool case_is_free(Case c) { return c == Case::Thm2_1 || c == Case::Thm3_free; }

bool case_has_own_presentation(const StructureReport& r) {
  switch (r.kase) {
    case Case::Finite:
    case Case::Thm1_1:
    case Case::Thm1_2:
    case Case::Thm1_3:
    case Case::Thm2_2:
    case Case::Thm2_3:
    case Case::Thm3_m4:
    case Case::Thm5_1:
      return r.presentation.has_value();
    default:
      return false;
  }
}

}  // namespace

std::size_t default_budget() {
  if (const char* env = std::getenv("ROTLAB_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

BallReport bfs_ball(const std::vector<NamedMatrix>& generators, int radius, std::size_t budget,
                    const std::string& label) {
  if (radius < 0) throw UsageError("radius must be nonnegative");
  auto t0 = Clock::now();
  BallReport rep;
  rep.label = label;
  int N = 4;
  for (const auto& [name, g] : generators) {
    if (!g.is_special_orthogonal()) throw UsageError("generator " + name + " is not a rotation");
    rep.generators.push_back(name);
    N = static_cast<int>(lcm_ll(N, g.conductor()));
  }
  std::vector<ExactMat3> letters;
  for (const auto& [name, g] : generators) {
    letters.push_back(g.lift(N));
    letters.push_back(g.inverse().lift(N));
  }

  std::vector<ExactMat3> elems{ExactMat3::identity(N)};
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  buckets[elems[0].hash()].push_back(0);
  auto insert = [&](ExactMat3&& m) {
    auto& b = buckets[m.hash()];
    for (std::size_t i : b)
      if (elems[i] == m) {
        ++rep.hash.merges_verified;
        return false;
      }
    if (!b.empty()) ++rep.hash.collisions;
    b.push_back(elems.size());
    elems.push_back(std::move(m));
    return true;
  };

  rep.counts.push_back(1);
  std::size_t begin = 0, end = 1;
  for (int r = 1; r <= radius; ++r) {
    bool over = false;
    for (std::size_t i = begin; i < end && !over; ++i)
      for (const auto& x : letters) {
        if (!insert(elems[i] * x)) continue;
        if (elems.size() > budget) {
          over = true;
          break;
        }
      }
    if (over) {
      rep.truncated = true;
      break;
    }
    begin = end;
    end = elems.size();
    rep.counts.push_back(elems.size());
    if (begin == end) {
      rep.closed = true;
      rep.closed_at = r - 1;
      rep.order = elems.size();
      rep.counts.resize(static_cast<std::size_t>(radius) + 1, elems.size());
      break;
    }
  }
  rep.hash.distinct_hashes = buckets.size();
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

BallReport bfs_ball(const GroupSpec& spec, int radius, std::size_t budget) {
  GeneratorTable t = generator_table(spec);
  std::vector<NamedMatrix> gens;
  for (const auto& g : spec.alphabet()) gens.push_back({g, t.get(g).power(1)});
  return bfs_ball(gens, radius, budget, spec.str());
}

std::vector<std::size_t> free_product_counts(long long p, long long q, int radius) {
  if (p < 1 || q < 1) throw UsageError("factor orders must be positive");
  // syllables of geodesic length l in Z_k: 2 below k/2, 1 at exactly k/2
  auto syl = [](long long k, int l) -> std::size_t {
    if (l < 1 || 2 * l > k) return 0;
    return 2 * l == k ? 1 : 2;
  };
  const std::size_t R = static_cast<std::size_t>(radius);
  // end[x][r]: elements of length r whose last syllable is in factor x
  std::vector<std::size_t> end_p(R + 1, 0), end_q(R + 1, 0);
  for (std::size_t r = 1; r <= R; ++r)
    for (std::size_t l = 1; l <= r; ++l) {
      std::size_t before_p = (r == l ? 1 : 0) + end_q[r - l];
      std::size_t before_q = (r == l ? 1 : 0) + end_p[r - l];
      end_p[r] += syl(p, static_cast<int>(l)) * before_p;
      end_q[r] += syl(q, static_cast<int>(l)) * before_q;
    }
  std::vector<std::size_t> out{1};
  for (std::size_t r = 1; r <= R; ++r) out.push_back(out.back() + end_p[r] + end_q[r]);
  return out;
}

std::vector<std::size_t> presentation_counts(const Presentation& pr, const std::vector<std::string>& letters,
                                             int radius, std::size_t budget, bool* truncated) {
  GroupRewriting rw(pr.generators, pr.relators);
  if (!rw.confluent())
    throw UnsupportedCase("no counting oracle: Knuth-Bendix completion did not finish within " +
                          std::to_string(rw.rule_count()) + " rules");
  std::unordered_set<std::string> seen{""};
  std::vector<std::string> frontier{""};
  std::vector<std::size_t> out{1};
  if (truncated) *truncated = false;
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::string> next;
    for (const auto& w : frontier)
      for (const auto& g : letters)
        for (int e : {1, -1}) {
          std::string x = rw.multiply(w, g, e);
          if (seen.insert(x).second) next.push_back(std::move(x));
        }
    if (seen.size() > budget) {
      if (truncated) *truncated = true;
      break;
    }
    out.push_back(seen.size());
    frontier = std::move(next);
  }
  return out;
}

bool GrowthComparison::all_match() const {
  if (matches.empty()) return false;
  for (bool b : matches)
    if (!b) return false;
  return true;
}

GrowthComparison growth_compare(const GroupSpec& spec, int radius, std::size_t budget) {
  StructureReport rep = classify(spec);
  GrowthComparison out;
  out.spec = spec;
  out.case_name = rep.case_name();
  if (case_is_free(rep.kase)) {
    out.oracle = "reduced alternating syllable sequences of Z" + std::to_string(rep.canonical.spec.p) + " * Z" +
                 std::to_string(rep.canonical.spec.q);
    out.oracle_counts = free_product_counts(rep.canonical.spec.p, rep.canonical.spec.q, radius);
  } else if (case_has_own_presentation(rep)) {
    out.oracle = "Knuth-Bendix normal forms of the presentation";
    out.oracle_counts = presentation_counts(*rep.presentation, {"alpha", "beta"}, radius, budget);
  } else {
    throw UnsupportedCase("no counting oracle for " + spec.str() + " (" + rep.case_name() +
                          "): its presentation is not in the group's own generators");
  }
  out.ball = bfs_ball(spec, radius, budget);
  std::size_t k = std::min(out.ball.counts.size(), out.oracle_counts.size());
  for (std::size_t r = 0; r < k; ++r) out.matches.push_back(out.ball.counts[r] == out.oracle_counts[r]);
  return out;
}

}  // namespace rotlab
