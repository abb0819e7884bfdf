#include "rotlab/rewriting.hpp"

#include "rotlab/errors.hpp"

#include <algorithm>

namespace rotlab {

namespace {

bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<long long> orders_of(const std::vector<std::string>& gens, const std::vector<Word>& relators) {
  std::vector<long long> out;
  for (const auto& g : gens) {
    long long k = 0;
    for (const auto& r : relators)
      if (r.size() == 1 && r[0].gen == g) {
        long long e = r[0].exp < 0 ? -r[0].exp : r[0].exp;
        k = k == 0 ? e : std::min(k, e);
      }
    if (k == 0) throw UnsupportedCase("generator " + g + " has no order relator");
    out.push_back(k);
  }
  return out;
}

std::vector<long long> offsets_of(const std::vector<long long>& orders) {
  std::vector<long long> out;
  long long next = 0;
  for (long long k : orders) {
    out.push_back(next);
    next += k - 1;
  }
  if (next > 120) throw UnsupportedCase("too many syllable letters for a rewriting system");
  return out;
}

}  // namespace

RewritingSystem::RewritingSystem(std::size_t letters, const std::vector<std::pair<std::string, std::string>>& equations,
                                 Limits limits)
    : limits_(limits) {
  if (letters > 127) throw UsageError("too many letters for a rewriting system");
  for (const auto& [a, b] : equations) add_equation(a, b);
  complete();
}

std::string RewritingSystem::reduce(const std::string& s) const {
  std::string out;
  std::string in(s.rbegin(), s.rend());  // consumed from the back
  while (!in.empty()) {
    out.push_back(in.back());
    in.pop_back();
    for (const auto& [l, r] : rules_) {
      if (l.size() <= out.size() && out.compare(out.size() - l.size(), l.size(), l) == 0) {
        out.resize(out.size() - l.size());
        in.append(r.rbegin(), r.rend());
        break;
      }
    }
  }
  return out;
}

bool RewritingSystem::add_equation(std::string a, std::string b) {
  a = reduce(a);
  b = reduce(b);
  if (a == b) return false;
  if (shortlex_less(a, b)) std::swap(a, b);
  rules_.push_back({std::move(a), std::move(b)});
  return true;
}

// Rules whose left side contains another left side go back in as equations;
// right sides are kept reduced.
void RewritingSystem::interreduce() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      auto [l, r] = rules_[i];
      bool reducible = false;
      for (std::size_t j = 0; j < rules_.size() && !reducible; ++j)
        if (j != i && rules_[j].first.size() <= l.size() && l.find(rules_[j].first) != std::string::npos)
          reducible = true;
      if (reducible) {
        rules_.erase(rules_.begin() + static_cast<long>(i));
        add_equation(l, r);
        changed = true;
        break;
      }
      std::string rr = reduce(r);
      if (rr != r) rules_[i].second = rr;
    }
  }
}

void RewritingSystem::complete() {
  interreduce();
  bool added = true;
  while (added) {
    added = false;
    const std::size_t n = rules_.size();
    for (std::size_t i = 0; i < n && i < rules_.size(); ++i)
      for (std::size_t j = 0; j < n && j < rules_.size(); ++j) {
        const std::string l1 = rules_[i].first, r1 = rules_[i].second;
        const std::string l2 = rules_[j].first, r2 = rules_[j].second;
        // proper suffix of l1 equal to a proper prefix of l2
        for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
          if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
          if (!add_equation(r1 + l2.substr(k), l1.substr(0, l1.size() - k) + r2)) continue;
          added = true;
          if (rules_.size() > limits_.max_rules || rules_.back().first.size() > limits_.max_lhs) return;
        }
      }
    if (added) interreduce();
  }
  confluent_ = true;
}

GroupRewriting::GroupRewriting(std::vector<std::string> generators, const std::vector<Word>& relators,
                               RewritingSystem::Limits limits)
    : gens_(std::move(generators)),
      orders_(orders_of(gens_, relators)),
      offsets_(offsets_of(orders_)),
      system_(build(gens_, orders_, offsets_, relators, limits)) {}

RewritingSystem GroupRewriting::build(const std::vector<std::string>& gens, const std::vector<long long>& orders,
                                      const std::vector<long long>& offsets, const std::vector<Word>& relators,
                                      RewritingSystem::Limits limits) {
  auto letter = [&](std::size_t g, long long e) { return static_cast<char>(offsets[g] + e - 1); };
  std::vector<std::pair<std::string, std::string>> eq;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (long long i = 1; i < orders[g]; ++i)
      for (long long j = 1; j < orders[g]; ++j) {
        long long s = (i + j) % orders[g];
        eq.push_back({std::string{letter(g, i), letter(g, j)}, s ? std::string(1, letter(g, s)) : std::string()});
      }
  std::size_t letters = static_cast<std::size_t>(offsets.empty() ? 0 : offsets.back() + orders.back() - 1);
  for (const auto& r : relators) {
    std::string code;
    for (const auto& syl : r.syllables()) {
      std::size_t g = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), syl.gen) - gens.begin());
      if (g == gens.size()) throw UsageError("relator uses unknown generator '" + syl.gen + "'");
      long long e = ((syl.exp % orders[g]) + orders[g]) % orders[g];
      if (e) code.push_back(letter(g, e));
    }
    eq.push_back({code, ""});
  }
  return RewritingSystem(letters, eq, limits);
}

long long GroupRewriting::order(const std::string& gen) const { return orders_[index(gen)]; }

std::size_t GroupRewriting::index(const std::string& gen) const {
  auto it = std::find(gens_.begin(), gens_.end(), gen);
  if (it == gens_.end()) throw UsageError("generator '" + gen + "' is not in the presentation");
  return static_cast<std::size_t>(it - gens_.begin());
}

char GroupRewriting::power_letter(std::size_t g, long long e) const {
  return static_cast<char>(offsets_[g] + e - 1);
}

std::string GroupRewriting::encode(const Word& w) const {
  std::string out;
  for (const auto& s : w.syllables()) {
    std::size_t g = index(s.gen);
    long long e = ((s.exp % orders_[g]) + orders_[g]) % orders_[g];
    if (e) out.push_back(power_letter(g, e));
  }
  return out;
}

Word GroupRewriting::decode(const std::string& s) const {
  std::vector<Syllable> v;
  for (char c : s) {
    std::size_t g = 0;
    while (g + 1 < gens_.size() && offsets_[g + 1] <= c) ++g;
    v.push_back({gens_[g], c - offsets_[g] + 1});
  }
  return Word(std::move(v));
}

std::string GroupRewriting::multiply(const std::string& nf, const std::string& gen, long long exp) const {
  return system_.reduce(nf + encode(Word::letter(gen, exp)));
}

}  // namespace rotlab
