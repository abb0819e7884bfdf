#include "rotlab/normalform.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <tuple>
#include <utility>

namespace rotlab {

namespace {

// S^{a[0]} T^{b[0]} S^{a[1]} ... T^{b[n-1]} S^{a[n]}
struct Parts {
  std::vector<long long> a, b;
  std::size_t n() const { return b.size(); }
};

long long mod4(long long e) { return ((e % 4) + 4) % 4; }
bool odd(long long e) { return mod4(e) % 2 == 1; }

Word hat_reduce(const Word& w, long long m) { return free_reduce(w, {{"S", 4}, {"T", m}}); }

Parts to_parts(const Word& w) {
  Parts P;
  P.a.push_back(0);
  for (const auto& s : w.syllables()) {
    if (s.gen == "S") {
      P.a.back() += s.exp;
    } else {
      P.b.push_back(s.exp);
      P.a.push_back(0);
    }
  }
  return P;
}

Word from_parts(const Parts& P, long long m) {
  std::vector<Syllable> v;
  for (std::size_t i = 0; i <= P.n(); ++i) {
    v.push_back({"S", P.a[i]});
    if (i < P.n()) v.push_back({"T", P.b[i]});
  }
  return hat_reduce(Word(std::move(v)), m);
}

bool quarter_multiple(long long b, long long m) { return (4 * b) % m == 0; }

std::pair<long long, long long> measure(const Word& w, long long m) {
  long long q = 0;
  for (const auto& s : w.syllables())
    if (s.gen == "T" && quarter_multiple(s.exp, m)) ++q;
  return {static_cast<long long>(w.size()), q};
}

struct CubeEntry {
  ExactMat3 mat;
  long long a, b, c;
};

struct CubeTables {
  std::vector<CubeEntry> full;  // S^a t^b S^c, t = R_x^{pi/2}
  std::vector<CubeEntry> half;  // b in {0, 2}
  std::map<std::tuple<int, int, int>, std::tuple<int, int, int>> braid;
};

CubeTables build_cube() {
  CubeTables t;
  auto fill = [](std::vector<CubeEntry>& out, bool half_only) {
    std::vector<std::pair<long long, long long>> cost;
    for (long long a = 0; a < 4; ++a)
      for (long long b = 0; b < 4; ++b)
        for (long long c = 0; c < 4; ++c) {
          if (half_only && b % 2) continue;
          ExactMat3 M = rot(Axis::y(), a, 4) * rot(Axis::x(), b, 4) * rot(Axis::y(), c, 4);
          Word w{{"S", balanced_mod(a, 4)}, {"T", balanced_mod(b, 4)}, {"S", balanced_mod(c, 4)}};
          w = free_reduce(w, {{"S", 4}, {"T", 4}});
          std::pair<long long, long long> k{static_cast<long long>(w.size()), w.letter_length()};
          bool seen = false;
          for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].mat == M) {
              seen = true;
              if (k < cost[i]) {
                cost[i] = k;
                out[i] = {M, a, b, c};
              }
            }
          }
          if (!seen) {
            out.push_back({M, a, b, c});
            cost.push_back(k);
          }
        }
  };
  fill(t.full, false);
  fill(t.half, true);
  for (int e : {1, -1})
    for (int d : {1, -1})
      for (int z : {1, -1}) {
        ExactMat3 lhs = rot(Axis::y(), e, 4) * rot(Axis::x(), d, 4) * rot(Axis::y(), z, 4);
        bool found = false;
        for (int x2 : {1, -1})
          for (int y2 : {1, -1})
            for (int z2 : {1, -1})
              if (!found && rot(Axis::x(), x2, 4) * rot(Axis::y(), y2, 4) * rot(Axis::x(), z2, 4) == lhs) {
                t.braid[{e, d, z}] = {x2, y2, z2};
                found = true;
              }
        if (!found) throw InternalError("quarter-turn braid table incomplete");
      }
  return t;
}

const CubeTables& cube() {
  static const CubeTables t = build_cube();
  return t;
}

// Interior S^2 (interior S exponent = 2 mod 4) moves to the left end.
bool rule_s2(Parts& P) {
  for (std::size_t i = 1; i < P.n(); ++i) {
    if (mod4(P.a[i]) != 2) continue;
    P.a[0] += 2;
    for (std::size_t j = 0; j < i; ++j) P.b[j] = -P.b[j];
    P.a[i] = 0;
    return true;
  }
  return false;
}

bool rule_half(Parts& P, long long m) {
  if (m % 2) return false;
  const long long h = m / 2;
  if (P.n() == 1) {
    if (P.b[0] != h || mod4(P.a[0]) == 0 || mod4(P.a[1]) == 0) return false;
    P.a[0] -= P.a[1];
    P.a[1] = 0;
    return true;
  }
  for (std::size_t i = 0; i < P.n(); ++i) {
    if (P.b[i] != h) continue;
    if (i > 0) {
      P.b[i - 1] += h;
      P.a[i + 1] -= P.a[i];
      P.b.erase(P.b.begin() + i);
      P.a.erase(P.a.begin() + i);
    } else {
      P.a[0] -= P.a[1];
      P.b[1] += h;
      P.b.erase(P.b.begin());
      P.a.erase(P.a.begin() + 1);
    }
    return true;
  }
  return false;
}

// A maximal run of S and quarter-multiple T syllables with two or more T's
// becomes the shortest S^a t^b S^c with the same matrix.
bool rule_cube(Parts& P, long long m) {
  if (m % 2) return false;
  const bool full = m % 4 == 0;
  std::size_t i = 0;
  while (i < P.n()) {
    if (!quarter_multiple(P.b[i], m)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < P.n() && quarter_multiple(P.b[j + 1], m)) ++j;
    if (j == i) {
      ++i;
      continue;
    }
    ExactMat3 M = rot(Axis::y(), mod4(P.a[i]), 4);
    for (std::size_t k = i; k <= j; ++k) {
      M = M * rot(Axis::x(), ((4 * P.b[k] / m) % 4 + 4) % 4, 4);
      M = M * rot(Axis::y(), mod4(P.a[k + 1]), 4);
    }
    const auto& table = full ? cube().full : cube().half;
    const CubeEntry* best = nullptr;
    for (const auto& e : table)
      if (e.mat == M) best = &e;
    if (!best) throw InternalError("quarter-turn run outside the cube group");
    P.a[i] = best->a;
    P.b[i] = best->b * m / 4;
    P.a[i + 1] = best->c;
    P.b.erase(P.b.begin() + i + 1, P.b.begin() + j + 1);
    P.a.erase(P.a.begin() + i + 2, P.a.begin() + j + 2);
    return true;
  }
  return false;
}

// S^e T^{+-m/4} S^z with e, z odd and a T neighbour: T^{x m/4} S^y T^{z' m/4}.
bool rule_braid(Parts& P, long long m, Word& out) {
  if (m % 4 || P.n() < 2) return false;
  const long long q = m / 4;
  for (std::size_t i = 0; i < P.n(); ++i) {
    if (P.b[i] != q && P.b[i] != -q) continue;
    if (!odd(P.a[i]) || !odd(P.a[i + 1])) continue;
    int e = static_cast<int>(balanced_mod(P.a[i], 4));
    int d = P.b[i] > 0 ? 1 : -1;
    int z = static_cast<int>(balanced_mod(P.a[i + 1], 4));
    auto [x2, y2, z2] = cube().braid.at({e, d, z});
    std::vector<Syllable> v;
    for (std::size_t k = 0; k < i; ++k) {
      v.push_back({"S", P.a[k]});
      v.push_back({"T", P.b[k]});
    }
    v.push_back({"T", x2 * q});
    v.push_back({"S", y2});
    v.push_back({"T", z2 * q});
    for (std::size_t k = i + 1; k < P.n(); ++k) {
      v.push_back({"T", P.b[k]});
      v.push_back({"S", P.a[k + 1]});
    }
    out = hat_reduce(Word(std::move(v)), m);
    return true;
  }
  return false;
}

bool apply_one(Word& w, long long m, std::string& rule) {
  Parts P = to_parts(w);
  if (rule_s2(P)) {
    rule = "S^2 to left end";
    w = from_parts(P, m);
    return true;
  }
  P = to_parts(w);
  if (rule_half(P, m)) {
    rule = "half-turn push";
    w = from_parts(P, m);
    return true;
  }
  P = to_parts(w);
  if (rule_cube(P, m)) {
    rule = "quarter-turn run";
    w = from_parts(P, m);
    return true;
  }
  P = to_parts(w);
  Word out;
  if (rule_braid(P, m, out)) {
    rule = "quarter-turn contraction";
    w = out;
    return true;
  }
  return false;
}

Word hat_nf_core(const Word& w0, long long m, RewriteTrace* trace) {
  Word w = hat_reduce(w0, m);
  auto meas = measure(w, m);
  std::string rule;
  while (apply_one(w, m, rule)) {
    auto next = measure(w, m);
    if (!(next < meas)) throw InternalError("rewrite '" + rule + "' did not decrease the length measure");
    meas = next;
    if (trace) trace->steps.push_back({rule, w, next.first, next.second});
  }
  return w;
}

bool strict_lemma_form(const Parts& P, long long m) {
  if (P.n() == 0) return false;
  for (long long b : P.b)
    if (quarter_multiple(b, m)) return false;
  for (std::size_t i = 1; i < P.n(); ++i)
    if (!odd(P.a[i])) return false;
  return true;
}

void check_matrix(const GeneratorTable& t, const Word& in, const Word& out, const char* what) {
  if (!(eval_word(t, in) == eval_word(t, out)))
    throw InternalError(std::string(what) + " changed the matrix of " + in.str());
}

GeneratorTable hat_table(long long m) { return generator_table(GroupSpec::hatg(m)); }

// Half turns about perpendicular axes invert each other's rotations, so a
// half-turn syllable can hop over its neighbour and merge two places away.
Word push_half_turns(Word w, const std::string& x, long long p, const std::string& y, long long q) {
  OrderMap ord{{x, p}, {y, q}};
  w = free_reduce(w, ord);
  auto is_half = [&](const Syllable& s) {
    long long d = s.gen == x ? p : q;
    return d % 2 == 0 && s.exp == d / 2;
  };
  while (w.size() >= 3) {
    std::vector<Syllable> v = w.syllables();
    std::size_t i = 0;
    while (i < v.size() && !is_half(v[i])) ++i;
    if (i == v.size()) break;
    const long long h = v[i].exp;
    if (i >= 2) {
      v[i - 2].exp += h;
      v[i - 1].exp = -v[i - 1].exp;
      v.erase(v.begin() + i);
    } else if (i + 2 < v.size()) {
      v[i + 1].exp = -v[i + 1].exp;
      v[i + 2].exp += h;
      v.erase(v.begin() + i);
    } else {
      v[2].exp = -v[2].exp;
      std::swap(v[1], v[2]);
    }
    w = free_reduce(Word(std::move(v)), ord);
  }
  return w;
}

Word gpq_nf_core(const Word& w0, long long p, long long q) {
  if (p % 4 == 0 && q % 4 == 0) throw DelegateToHatG(lcm_ll(p, q), gpq_to_hatg(w0, p, q));
  return push_half_turns(w0, "A", p, "C", q);
}

// m = 4: ell is perpendicular to x, gamma = A^{p/2} B^{q/2}, and half-turn
// pushing alone decides the word problem.
Word thm5_core_m4(const Word& w0, const GroupSpec& c) {
  std::vector<Syllable> v;
  for (const auto& s : w0.syllables()) {
    if (s.gen != "gamma") {
      v.push_back(s);
    } else if (s.exp % 2) {
      v.push_back({"A", c.p / 2});
      v.push_back({"B", c.q / 2});
    }
  }
  return push_half_turns(Word(std::move(v)), "A", c.p, "B", c.q);
}

Word thm5_core(const Word& w0, const GroupSpec& c) {
  if (c.m == 4) return thm5_core_m4(w0, c);
  const long long p = c.p, q = c.q, run = c.m / 2;
  OrderMap ord{{"A", p}, {"B", q}};
  bool gamma = false;
  std::vector<Syllable> body;
  auto absorb = [&](const Word& w) {
    for (const auto& s : w.syllables()) {
      if (s.gen == "gamma") {
        if (s.exp % 2) {
          gamma = !gamma;
          for (auto& b : body) b.exp = -b.exp;
        }
      } else {
        body.push_back(s);
      }
    }
  };
  absorb(w0);
  // A run of L > m/4 alternating half turns x_1..x_L equals gamma times
  // x_k..x_{L+1} (k = m/2), the complementary run read backwards.
  auto is_half = [&](const Syllable& s) { return s.exp == (s.gen == "A" ? p : q) / 2; };
  while (true) {
    Word b = free_reduce(Word(body), ord);
    const auto& v = b.syllables();
    std::size_t start = 0, len = 0;
    bool found = false;
    for (std::size_t i = 0; i <= v.size(); ++i) {
      if (i < v.size() && is_half(v[i])) {
        if (len++ == 0) start = i;
        continue;
      }
      if (4 * static_cast<long long>(len) > c.m) {
        found = true;
        break;
      }
      len = 0;
    }
    if (!found) {
      body = v;
      break;
    }
    const std::size_t L = std::min<std::size_t>(len, static_cast<std::size_t>(run));
    const std::string first = v[start].gen, other = first == "A" ? "B" : "A";
    std::vector<Syllable> next(v.begin(), v.begin() + start);
    next.push_back({"gamma", 1});
    for (long long j = run; j > static_cast<long long>(L); --j) {
      const std::string& g = j % 2 ? first : other;
      next.push_back({g, (g == "A" ? p : q) / 2});
    }
    next.insert(next.end(), v.begin() + start + L, v.end());
    body.clear();
    absorb(Word(std::move(next)));
  }
  std::vector<Syllable> out;
  if (gamma) out.push_back({"gamma", 1});
  out.insert(out.end(), body.begin(), body.end());
  return Word(std::move(out));
}

bool is_thm5_case1(const GroupSpec& spec) {
  if (spec.family != Family::Gnm) return false;
  if (!(canonicalize(spec).spec == spec)) return false;
  return classify(spec).kase == Case::Thm5_1;
}

struct Decision {
  bool identity = false;
  std::string method;
  GroupSpec working;
  Word canonical_word;
  Word nf;
};

Decision decide_hatg(const Word& w, long long m, const std::string& prefix) {
  Decision d;
  d.working = GroupSpec::hatg(m);
  d.canonical_word = w;
  d.nf = hat_nf_core(w, m, nullptr);
  d.identity = hatg_word_is_identity(w, m);
  d.method = prefix + "nf_hatG_m4";
  return d;
}

Decision decide_gpq(const Word& w, long long p, long long q, const std::string& prefix) {
  try {
    Decision d;
    d.working = GroupSpec::gpq(p, q);
    d.canonical_word = w;
    d.nf = gpq_nf_core(w, p, q);
    d.identity = d.nf.empty();
    d.method = prefix + "nf_G_pq";
    return d;
  } catch (const DelegateToHatG& del) {
    return decide_hatg(del.translated(), del.s(), prefix + "nf_G_pq -> ");
  }
}

Decision decide(const GroupSpec& spec, const Word& w) {
  check_alphabet(spec, w);
  switch (spec.family) {
    case Family::HatG:
      return decide_hatg(w, spec.m, "");
    case Family::Gpq:
      return decide_gpq(w, spec.p, spec.q, "");
    case Family::Gnm:
      break;
  }
  CanonicalForm cf = canonicalize(spec);
  const GroupSpec& c = cf.spec;
  Word cw = cf.translate(w);
  Case kase = classify(c).kase;
  Decision d;
  if (kase == Case::Thm3_free) {
    d.working = c;
    d.canonical_word = cw;
    d.nf = free_reduce(cw, c.orders());
    d.identity = d.nf.empty();
    d.method = "free_reduce";
  } else if (kase == Case::Thm3_m4) {
    long long sign = c.n == 1 ? 1 : -1;
    std::vector<Syllable> v;
    for (const auto& s : cw.syllables()) v.push_back(s.gen == "A" ? s : Syllable{"C", sign * s.exp});
    d = decide_gpq(Word(std::move(v)), c.p, c.q, "conjugate to G(p,q): ");
  } else if (kase == Case::Thm5_1) {
    d.working = c;
    d.canonical_word = cw;
    d.nf = thm5_core(cw, c);
    d.identity = d.nf.empty();
    d.method = "nf_thm5_case1";
  } else {
    const long long s = lcm_ll(c.p, c.q);
    d = decide_gpq(embed_gnm_in_gpq(c, cw), s, c.m,
                   "embed in G(" + std::to_string(s) + "," + std::to_string(c.m) + "): ");
  }
  return d;
}

void cross_check(const GroupSpec& spec, const Word& w, const Decision& d, const ExactMat3& oracle) {
  bool truth = oracle.is_identity();
  if (truth != d.identity)
    throw InternalError("rewriting (" + d.method + ") says " + (d.identity ? "identity" : "not identity") +
                        " but the exact matrix disagrees for " + w.str() + " in " + spec.str());
}

}  // namespace

Word nf_hatG_m4(const Word& w, long long m, RewriteTrace* trace) {
  if (m < 1) throw UsageError("m must be a positive integer");
  check_alphabet(GroupSpec::hatg(m), w);
  Word out = hat_nf_core(w, m, trace);
  check_matrix(hat_table(m), w, out, "nf_hatG_m4");
  return out;
}

bool hatg_word_is_identity(const Word& w0, long long m) {
  Word w = hat_nf_core(w0, m, nullptr);
  const std::size_t cap = 4 * (w.size() + 4);
  for (std::size_t round = 0;; ++round) {
    if (w.empty()) return true;
    Parts P = to_parts(w);
    if (P.n() <= 1 || strict_lemma_form(P, m)) return false;
    if (round > cap) throw InternalError("cyclic reduction did not terminate for " + w0.str());
    const std::size_t n = P.n();
    Parts head = P;
    head.b.pop_back();
    head.a.pop_back();
    Word rotated = Word{{"T", P.b[n - 1]}, {"S", P.a[n]}} * from_parts(head, m);
    w = hat_nf_core(rotated, m, nullptr);
  }
}

Word embed_gnm_in_gpq(const GroupSpec& c, const Word& w) {
  const long long s = lcm_ll(c.p, c.q);
  std::vector<Syllable> v;
  for (const auto& syl : w.syllables()) {
    if (syl.gen == "A") {
      v.push_back({"A", syl.exp * (s / c.p)});
    } else if (syl.gen == "B") {
      v.push_back({"C", c.n});
      v.push_back({"A", syl.exp * (s / c.q)});
      v.push_back({"C", -c.n});
    } else {
      throw UsageError("generator '" + syl.gen + "' is not in the alphabet {A, B}");
    }
  }
  return free_reduce(Word(std::move(v)), {{"A", s}, {"C", c.m}});
}

Word gpq_to_hatg(const Word& w, long long p, long long q) {
  const long long s = lcm_ll(p, q);
  std::vector<Syllable> v;
  for (const auto& syl : w.syllables()) {
    if (syl.gen == "A") {
      v.push_back({"T", syl.exp * (s / p)});
    } else if (syl.gen == "C") {
      v.push_back({"S", -1});
      v.push_back({"T", syl.exp * (s / q)});
      v.push_back({"S", 1});
    } else {
      throw UsageError("generator '" + syl.gen + "' is not in the alphabet {A, C}");
    }
  }
  return hat_reduce(Word(std::move(v)), s);
}

Word nf_G_pq(const Word& w, long long p, long long q) {
  GroupSpec spec = GroupSpec::gpq(p, q);
  check_alphabet(spec, w);
  Word out = gpq_nf_core(w, p, q);
  check_matrix(generator_table(spec), w, out, "nf_G_pq");
  return out;
}

GeneratorTable thm5_table(const GroupSpec& spec) {
  GeneratorTable t = generator_table(spec);
  t.set("gamma", {Axis::z(), 1, 2});
  return t;
}

Word nf_thm5_case1(const Word& w, const GroupSpec& spec) {
  if (!is_thm5_case1(spec))
    throw UnsupportedCase("nf_thm5_case1 needs a canonical spec with rho(p) = rho(q) = 1 < rho(m); got " + spec.str());
  for (const auto& s : w.syllables())
    if (s.gen != "A" && s.gen != "B" && s.gen != "gamma")
      throw UsageError("generator '" + s.gen + "' is not in the alphabet {A, B, gamma}");
  Word out = thm5_core(w, spec);
  check_matrix(thm5_table(spec), w, out, "nf_thm5_case1");
  return out;
}

IdentityVerdict is_identity(const GroupSpec& spec, const Word& w) {
  check_alphabet(spec, w);
  return is_identity(spec, w, eval_word(generator_table(spec), w));
}

IdentityVerdict is_identity(const GroupSpec& spec, const Word& w, const ExactMat3& oracle) {
  Decision d = decide(spec, w);
  cross_check(spec, w, d, oracle);
  return {d.identity, d.method};
}

NormalFormReport normalize(const GroupSpec& spec, const Word& w) {
  Decision d = decide(spec, w);
  cross_check(spec, w, d, eval_word(generator_table(spec), w));
  NormalFormReport r;
  r.input = spec;
  r.working = d.working;
  r.method = d.method;
  r.canonical_word = d.canonical_word;
  r.normal_form = d.nf;
  r.identity = d.identity;
  return r;
}

}  // namespace rotlab
