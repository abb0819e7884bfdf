#pragma once

#include "rotlab/word.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rotlab {

/// Monoid rewriting system completed by Knuth-Bendix under shortlex order.
/// Letters are small integers stored as chars. Independent of any matrix
/// representation.
class RewritingSystem {
 public:
  struct Limits {
    std::size_t max_rules = 3000;
    std::size_t max_lhs = 48;
  };

  RewritingSystem(std::size_t letters, const std::vector<std::pair<std::string, std::string>>& equations,
                  Limits limits);

  /// True when completion finished; only then are normal forms unique.
  bool confluent() const { return confluent_; }
  std::size_t rule_count() const { return rules_.size(); }
  const std::vector<std::pair<std::string, std::string>>& rules() const { return rules_; }
  std::string reduce(const std::string& s) const;

 private:
  bool add_equation(std::string a, std::string b);
  void interreduce();
  void complete();

  Limits limits_;
  std::vector<std::pair<std::string, std::string>> rules_;
  bool confluent_ = false;
};

/// A group presentation in which every generator has a finite order given
/// by a relator g^k. Each power g^e (0 < e < k) is one letter, so inverses
/// need no extra letters and free-product syllables merge in one step.
class GroupRewriting {
 public:
  /// Throws UnsupportedCase when a generator has no order relator.
  GroupRewriting(std::vector<std::string> generators, const std::vector<Word>& relators,
                 RewritingSystem::Limits limits = {});

  bool confluent() const { return system_.confluent(); }
  std::size_t rule_count() const { return system_.rule_count(); }
  const std::vector<std::string>& generators() const { return gens_; }
  long long order(const std::string& gen) const;

  std::string encode(const Word& w) const;
  Word decode(const std::string& s) const;
  /// Normal form of a word; equal elements give equal strings when confluent().
  std::string normal_form(const Word& w) const { return system_.reduce(encode(w)); }
  /// Normal form of nf * gen^exp.
  std::string multiply(const std::string& nf, const std::string& gen, long long exp) const;

 private:
  std::size_t index(const std::string& gen) const;
  char power_letter(std::size_t g, long long e) const;
  static RewritingSystem build(const std::vector<std::string>& gens, const std::vector<long long>& orders,
                               const std::vector<long long>& offsets, const std::vector<Word>& relators,
                               RewritingSystem::Limits limits);

  std::vector<std::string> gens_;
  std::vector<long long> orders_;
  std::vector<long long> offsets_;
  RewritingSystem system_;
};

}  // namespace rotlab
