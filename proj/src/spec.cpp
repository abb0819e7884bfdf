#include "rotlab/spec.hpp"

#include "rotlab/errors.hpp"

#include <tuple>

namespace rotlab {

std::string family_name(Family f) {
  switch (f) {
    case Family::Gnm:
      return "G_nm";
    case Family::Gpq:
      return "G_pq";
    case Family::HatG:
      return "Ghat";
  }
  return "?";
}

GroupSpec GroupSpec::gnm(long long p, long long q, long long n, long long m) {
  if (p < 1 || q < 1) throw UsageError("p and q must be positive integers");
  if (m <= 2) throw UsageError("n and m must be relatively prime positive integers and m > 2 (got m = " + std::to_string(m) + ")");
  if (gcd_ll(n, m) != 1)
    throw UsageError("n and m must be relatively prime positive integers and m > 2 (gcd(" + std::to_string(n) + ", " +
                     std::to_string(m) + ") != 1)");
  return {Family::Gnm, p, q, ((n % m) + m) % m, m};
}

GroupSpec GroupSpec::gpq(long long p, long long q) {
  if (p < 1 || q < 1) throw UsageError("p and q must be positive integers");
  return {Family::Gpq, p, q, 0, 1};
}

GroupSpec GroupSpec::hatg(long long m) {
  if (m < 1) throw UsageError("m must be a positive integer");
  return {Family::HatG, 1, 4, 0, m};
}

std::vector<std::string> GroupSpec::alphabet() const {
  switch (family) {
    case Family::Gnm:
      return {"A", "B"};
    case Family::Gpq:
      return {"A", "C"};
    case Family::HatG:
      return {"S", "T"};
  }
  return {};
}

OrderMap GroupSpec::orders() const {
  switch (family) {
    case Family::Gnm:
      return {{"A", p}, {"B", q}};
    case Family::Gpq:
      return {{"A", p}, {"C", q}};
    case Family::HatG:
      return {{"S", 4}, {"T", m}};
  }
  return {};
}

std::string GroupSpec::str() const {
  switch (family) {
    case Family::Gnm:
      return "G_{" + std::to_string(n) + "/" + std::to_string(m) + "}(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::Gpq:
      return "G(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::HatG:
      return "Ghat(" + std::to_string(m) + ",4)";
  }
  return "?";
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  return family == o.family && p == o.p && q == o.q && n == o.n && m == o.m;
}

bool GroupSpec::operator<(const GroupSpec& o) const {
  return std::tie(family, p, q, n, m) < std::tie(o.family, o.p, o.q, o.n, o.m);
}

std::string RotationSymbol::str() const {
  return "rot(" + axis.str() + ", " + std::to_string(k) + ", " + std::to_string(d) + ")";
}

const RotationSymbol& GeneratorTable::get(const std::string& name) const {
  auto it = table_.find(name);
  if (it == table_.end()) throw UsageError("unknown generator '" + name + "'");
  return it->second;
}

int GeneratorTable::conductor() const {
  long long N = 4;
  for (const auto& [name, r] : table_) N = lcm_ll(N, rot_conductor(r.axis, r.k, r.d));
  return static_cast<int>(N);
}

OrderMap GeneratorTable::orders() const {
  OrderMap o;
  for (const auto& [name, r] : table_) o[name] = r.d / gcd_ll(r.k, r.d);
  return o;
}

GeneratorTable generator_table(const GroupSpec& spec) {
  GeneratorTable t;
  const long long p = spec.p, q = spec.q;
  switch (spec.family) {
    case Family::Gnm:
      t.set("A", {Axis::x(), 1, p});
      t.set("B", {Axis::ell(spec.n, spec.m), 1, q});
      t.set("C", {Axis::z(), 1, q});
      t.set("S", {Axis::y(), 1, 4});
      t.set("T", {Axis::x(), 1, p * q});
      t.set("That", {Axis::x(), 1, lcm_ll(p, q)});
      t.set("U", {Axis::z(), 1, spec.m});
      break;
    case Family::Gpq:
      t.set("A", {Axis::x(), 1, p});
      t.set("C", {Axis::z(), 1, q});
      t.set("S", {Axis::y(), 1, 4});
      t.set("T", {Axis::x(), 1, p * q});
      t.set("That", {Axis::x(), 1, lcm_ll(p, q)});
      break;
    case Family::HatG:
      t.set("T", {Axis::x(), 1, spec.m});
      t.set("S", {Axis::y(), 1, 4});
      break;
  }
  return t;
}

ExactMat3 eval_word_at(const GeneratorTable& table, const Word& w, int N) {
  ExactMat3 acc = ExactMat3::identity(N);
  bool first = true;
  for (const auto& s : w.syllables()) {
    const auto& r = table.get(s.gen);
    ExactMat3 m = rot_at(r.axis, r.k * s.exp, r.d, N);
    if (first) {
      acc = std::move(m);
      first = false;
    } else {
      acc = acc * m;
    }
  }
  return acc;
}

ExactMat3 eval_word(const GeneratorTable& table, const Word& w) {
  long long N = 4;
  for (const auto& s : w.syllables()) {
    const auto& r = table.get(s.gen);
    N = lcm_ll(N, rot_conductor(r.axis, r.k * s.exp, r.d));
  }
  return eval_word_at(table, w, static_cast<int>(N));
}

void check_alphabet(const GroupSpec& spec, const Word& w) {
  auto alpha = spec.alphabet();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& g = w[i].gen;
    if (g != alpha[0] && g != alpha[1])
      throw UsageError("generator '" + g + "' is not in the alphabet {" + alpha[0] + ", " + alpha[1] + "} of " + spec.str());
  }
}

}  // namespace rotlab
