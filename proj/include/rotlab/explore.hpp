#pragma once

#include "rotlab/groups.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rotlab {

constexpr std::size_t kDefaultBudget = 1000000;

/// Default element budget: ROTLAB_BUDGET when set to a positive integer, else kDefaultBudget.
std::size_t default_budget();

struct HashStats {
  std::size_t distinct_hashes = 0;
  /// Distinct elements sharing a hash value with an earlier element.
  std::size_t collisions = 0;
  /// Revisits found by hash and confirmed by full matrix equality.
  std::size_t merges_verified = 0;
};

struct BallReport {
  std::string label;
  std::vector<std::string> generators;
  /// counts[r] = number of distinct elements of word length <= r.
  std::vector<std::size_t> counts;
  bool closed = false;
  std::optional<int> closed_at;  // first r with ball(r+1) = ball(r)
  std::optional<std::size_t> order;
  bool truncated = false;
  double seconds = 0;
  HashStats hash;
};

using NamedMatrix = std::pair<std::string, ExactMat3>;

/// Breadth-first ball over the letters {g, g^-1}. Stops early once closed
/// (later radii repeat the final count) or when the element count would
/// exceed the budget (truncated; only complete radii are reported).
BallReport bfs_ball(const std::vector<NamedMatrix>& generators, int radius, std::size_t budget,
                    const std::string& label = "");
/// Ball for the spec's two generators.
BallReport bfs_ball(const GroupSpec& spec, int radius, std::size_t budget);

/// Ball sizes of Z_p * Z_q in the letter metric, from reduced alternating
/// syllable sequences (order 1 means a trivial factor).
std::vector<std::size_t> free_product_counts(long long p, long long q, int radius);

/// Ball sizes of a presented group from Knuth-Bendix normal forms, over the
/// letters of the named generators. Throws UnsupportedCase when completion
/// does not finish; truncates like bfs_ball.
std::vector<std::size_t> presentation_counts(const Presentation& pr, const std::vector<std::string>& letters,
                                             int radius, std::size_t budget, bool* truncated = nullptr);

struct GrowthComparison {
  GroupSpec spec;
  std::string case_name;
  std::string oracle;
  BallReport ball;
  std::vector<std::size_t> oracle_counts;
  /// Radii checked: those complete on both sides.
  std::vector<bool> matches;
  bool all_match() const;
};

/// Throws UnsupportedCase ("no counting oracle") for cases whose
/// presentation is not in the spec's own generators or does not complete.
GrowthComparison growth_compare(const GroupSpec& spec, int radius, std::size_t budget);

}  // namespace rotlab
