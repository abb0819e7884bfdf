#include "rotlab/certify.hpp"

#include "rotlab/errors.hpp"

#include <chrono>
#include <map>
#include <tuple>

namespace rotlab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

long long mod(long long e, long long d) { return ((e % d) + d) % d; }
bool odd(long long e) { return mod(e, 2) == 1; }
bool quarter(long long b, long long m) { return mod(4 * b, m) == 0; }
bool half(long long b, long long m) { return m % 2 == 0 && mod(b, m) == m / 2; }

OrderMap hat_orders(long long m) { return {{"S", 4}, {"T", m}}; }

// Splits w into S^{lead} T^{b_1} S^{a_2} ... T^{b_n} S^{E}.
void split(const Word& w, long long& lead, std::vector<long long>& a_rest, std::vector<long long>& b, long long& E) {
  lead = 0;
  a_rest.clear();
  b.clear();
  long long pending = 0;
  bool seen_t = false;
  for (const auto& s : w.syllables()) {
    if (s.gen == "S") {
      pending += s.exp;
    } else if (s.gen == "T") {
      if (!seen_t) lead = pending;
      else a_rest.push_back(pending);
      pending = 0;
      b.push_back(s.exp);
      seen_t = true;
    } else {
      throw UsageError("generator '" + s.gen + "' is not in the alphabet {S, T}");
    }
  }
  E = seen_t ? pending : 0;
  if (!seen_t) lead = pending;
}

// Like from_word, but an even leading S exponent is split as S^{lead-1} S^1.
FoundationHypotheses from_word_odd_lead(long long m, const Word& w, Variant v) {
  FoundationHypotheses h = FoundationHypotheses::from_word(m, w, v);
  if (!h.a.empty() && !odd(h.a[0])) {
    h.W += h.a[0] - 1;
    h.a[0] = 1;
  }
  return h;
}

// S^e t^d S^z = t^x S^y t^w for quarter turns t = R_x^{pi/2}, S = R_y^{pi/2}, all signs +-1.
using Braid = std::map<std::tuple<int, int, int>, std::tuple<int, int, int>>;

Braid build_braid() {
  Braid t;
  const int s[] = {1, -1};
  for (int e : s)
    for (int d : s)
      for (int z : s) {
        ExactMat3 lhs = rot(Axis::y(), e, 4) * rot(Axis::x(), d, 4) * rot(Axis::y(), z, 4);
        for (int x : s)
          for (int y : s)
            for (int w : s)
              if (!t.count({e, d, z}) && rot(Axis::x(), x, 4) * rot(Axis::y(), y, 4) * rot(Axis::x(), w, 4) == lhs)
                t[{e, d, z}] = {x, y, w};
        if (!t.count({e, d, z})) throw InternalError("quarter-turn braid table incomplete");
      }
  return t;
}

const Braid& braid() {
  static const Braid t = build_braid();
  return t;
}

int sign_mod4(long long e) { return mod(e, 4) == 1 ? 1 : -1; }

void collect_entries(NonIdentityWitness& w) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CycloElem e = w.matrix.entry(i, j);
      if (!e.as_rational()) w.non_rational.push_back({i, j});
      if (!e.raw().integral()) w.non_integral.push_back({i, j});
    }
}

int count_non_integral(const ExactMat3& M) {
  int k = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!M.entry(i, j).raw().integral()) ++k;
  return k;
}

void require(const FoundationHypotheses& h) {
  HypothesisCheck c = check_hypotheses(h);
  if (!c.ok)
    throw HypothesisError(variant_name(h.variant) + " hypotheses fail for " + h.word().str() + " (m=" +
                          std::to_string(h.m) + "): " + c.clause);
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::lemma: return "lemma";
    case Variant::ext1: return "ext1";
    case Variant::ext2: return "ext2";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "lemma") return Variant::lemma;
  if (s == "ext1") return Variant::ext1;
  if (s == "ext2") return Variant::ext2;
  throw UsageError("unknown variant '" + s + "' (expected lemma, ext1 or ext2)");
}

FoundationHypotheses FoundationHypotheses::from_word(long long m, const Word& w, Variant variant) {
  FoundationHypotheses h;
  h.m = m;
  h.variant = variant;
  long long lead = 0;
  std::vector<long long> rest;
  split(w, lead, rest, h.b, h.E);
  if (h.b.empty()) {
    h.W = lead;
    return h;
  }
  if (lead == 0) {
    h.W = -1;
    h.a.push_back(1);
  } else {
    h.a.push_back(lead);
  }
  h.a.insert(h.a.end(), rest.begin(), rest.end());
  return h;
}

Word FoundationHypotheses::word() const {
  std::vector<Syllable> v{{"S", W}};
  for (std::size_t i = 0; i < b.size(); ++i) {
    v.push_back({"S", i < a.size() ? a[i] : 0});
    v.push_back({"T", b[i]});
  }
  v.push_back({"S", E});
  return Word(std::move(v));
}

HypothesisCheck check_hypotheses(const FoundationHypotheses& h) {
  auto fail = [](std::string c) { return HypothesisCheck{false, std::move(c)}; };
  if (h.m < 3) return fail("m >= 3");
  if (h.b.empty()) return fail("n > 0");
  if (h.a.size() != h.b.size()) return fail("one S exponent a_i per T exponent b_i");
  for (std::size_t i = 0; i < h.a.size(); ++i)
    if (!odd(h.a[i])) return fail("a_" + std::to_string(i + 1) + " odd");
  const bool lemma = h.variant == Variant::lemma;
  for (std::size_t i = 0; i < h.b.size(); ++i) {
    const std::string bi = "b_" + std::to_string(i + 1);
    if (mod(h.b[i], h.m) == 0) return fail(bi + " != 0 mod m");
    if (lemma && quarter(h.b[i], h.m)) return fail(bi + " not a multiple of m/4");
    if (!lemma && h.b.size() >= 2 && half(h.b[i], h.m)) return fail(bi + " not a half turn");
    if (!lemma && i > 0 && quarter(h.b[i], h.m) && quarter(h.b[i - 1], h.m))
      return fail("b_" + std::to_string(i) + ", " + bi + " not both multiples of m/4");
  }
  return {};
}

NonIdentityWitness witness_for(long long m, const Word& w, Variant variant) {
  auto t0 = Clock::now();
  NonIdentityWitness out;
  out.word = w;
  out.variant = variant;
  out.matrix = eval_word(generator_table(GroupSpec::hatg(m)), w);
  if (out.matrix.is_identity())
    throw InternalError("certified word " + w.str() + " evaluates to the identity (m=" + std::to_string(m) + ")");
  collect_entries(out);
  out.seconds = since(t0);
  return out;
}

NonIdentityWitness certify_non_identity(const FoundationHypotheses& h) {
  require(h);
  NonIdentityWitness w = witness_for(h.m, h.word(), h.variant);
  if (h.variant == Variant::lemma && w.non_integral.size() < 4)
    throw InternalError("lemma word " + w.word.str() + " has fewer than four non-integral entries");
  return w;
}

Word ext1_reduce(const FoundationHypotheses& h0) {
  FoundationHypotheses h = h0;
  h.variant = Variant::ext1;
  require(h);
  const long long m = h.m;
  if (m % 4 == 0) {
    const long long qt = m / 4;
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t k = 1; k + 1 < h.b.size(); ++k) {
        if (!quarter(h.b[k], m)) continue;
        int e = sign_mod4(h.a[k]), d = sign_mod4(h.b[k] / qt), z = sign_mod4(h.a[k + 1]);
        auto [x, y, w] = braid().at({e, d, z});
        h.b[k - 1] += x * qt;
        h.a[k] = y;
        h.b.erase(h.b.begin() + static_cast<long>(k));
        h.a.erase(h.a.begin() + static_cast<long>(k) + 1);
        h.b[k] += w * qt;
        again = true;
        break;
      }
    }
  }
  Word out = free_reduce(h.word(), hat_orders(m));
  const GeneratorTable t = generator_table(GroupSpec::hatg(m));
  if (!(eval_word(t, out) == eval_word(t, h0.word())))
    throw InternalError("ext1_reduce changed the matrix of " + h0.word().str());
  return out;
}

NonIdentityWitness ext2_check(const Word& w0, long long p, long long q) {
  if (p < 1 || q < 1) throw UsageError("p and q must be positive integers");
  Word w = free_reduce(w0, {{"A", p}, {"C", q}});
  if (w.empty()) throw HypothesisError("ext2 hypotheses fail: word nonempty");
  auto order = [&](const Syllable& s) {
    if (s.gen == "A") return p;
    if (s.gen == "C") return q;
    throw UsageError("generator '" + s.gen + "' is not in the alphabet {A, C}");
  };
  const auto& v = w.syllables();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long long d = order(v[i]);
    if (i > 0 && i + 1 < v.size() && half(v[i].exp, d))
      throw HypothesisError("ext2 hypotheses fail for " + w.str() + ": no interior half turn (syllable " +
                            std::to_string(i + 1) + ")");
    auto qturn = [&](std::size_t j) { return quarter(v[j].exp, order(v[j])) && !half(v[j].exp, order(v[j])); };
    if (i > 0 && qturn(i) && qturn(i - 1))
      throw HypothesisError("ext2 hypotheses fail for " + w.str() + ": no two consecutive quarter turns (syllables " +
                            std::to_string(i) + ", " + std::to_string(i + 1) + ")");
  }

  const long long m = p * q;
  std::vector<Syllable> st;
  for (const auto& s : v) {
    if (s.gen == "A") {
      st.push_back({"T", s.exp * q});
    } else {
      st.push_back({"S", -1});
      st.push_back({"T", s.exp * p});
      st.push_back({"S", 1});
    }
  }
  const Word translated = free_reduce(Word(std::move(st)), hat_orders(m));

  // T^{m/2} S^a = S^-a T^{m/2}: boundary half turns merge into their neighbour.
  FoundationHypotheses h = from_word_odd_lead(m, translated, Variant::ext1);
  while (h.n() >= 2 && half(h.b.front(), m)) {
    h.W += h.a[0] - h.a[1];
    h.a.erase(h.a.begin());
    h.a[0] = 1;
    h.W -= 1;
    h.b.erase(h.b.begin());
    h.b[0] += m / 2;
  }
  while (h.n() >= 2 && half(h.b.back(), m)) {
    h.E -= h.a.back();
    h.a.pop_back();
    h.b.pop_back();
    h.b.back() += m / 2;
  }
  h = from_word_odd_lead(m, free_reduce(h.word(), hat_orders(m)), Variant::ext1);
  HypothesisCheck c = check_hypotheses(h);
  if (!c.ok)
    throw InternalError("ext2 translation of " + w.str() + " left the Foundation form: " + c.clause);
  const GeneratorTable t = generator_table(GroupSpec::hatg(m));
  if (!(eval_word(t, h.word()) == eval_word(t, translated)))
    throw InternalError("half-turn absorption changed the matrix of " + translated.str());
  return witness_for(m, ext1_reduce(h), Variant::ext2);
}

std::pair<Word, Word> free_pair(long long m) {
  if (m < 1 || m == 1 || m == 2 || m == 4 || m == 8)
    throw UsageError("the free pair needs m other than 1, 2, 4 or 8 (got " + std::to_string(m) + ")");
  return {Word{{"S", 1}, {"T", 1}, {"S", 1}, {"T", 1}}, Word{{"S", 1}, {"T", 2}, {"S", 1}, {"T", 2}}};
}

FreeCertificate certify_free(long long m, const Word& w) {
  auto [A, B] = free_pair(m);
  FreeCertificate out;
  out.input = free_reduce(w, {});
  if (out.input.empty()) throw UsageError("certify_free needs a nonempty reduced word");
  Word sub;
  for (const auto& s : out.input.syllables()) {
    if (s.gen == "A") sub *= A.pow(s.exp);
    else if (s.gen == "B") sub *= B.pow(s.exp);
    else throw UsageError("generator '" + s.gen + "' is not in the alphabet {A, B}");
  }
  out.substituted = free_reduce(sub, hat_orders(m));
  FoundationHypotheses h = FoundationHypotheses::from_word(m, out.substituted, Variant::lemma);
  if (!check_hypotheses(h).ok) {
    h.variant = Variant::ext1;
    HypothesisCheck c = check_hypotheses(h);
    if (!c.ok)
      throw InternalError("substituted word " + out.substituted.str() + " is not in Foundation form: " + c.clause);
  }
  out.variant = h.variant;
  if (out.substituted.letter_length() <= out.input.letter_length())
    throw InternalError("substituted word " + out.substituted.str() + " is not longer than " + out.input.str());
  out.witness = witness_for(m, out.substituted, h.variant);
  return out;
}

BatchSummary foundation_batch(long long m, int max_n, int max_exp, const Progress& progress) {
  if (m < 3) throw UsageError("m must be at least 3");
  if (max_n < 1 || max_exp < 1) throw UsageError("max-n and max-exp must be positive");
  auto t0 = Clock::now();
  BatchSummary out;
  out.name = "foundation m=" + std::to_string(m);
  const int N = static_cast<int>(lcm_ll(4, m));

  std::vector<long long> as, bs;
  for (long long a = -max_exp; a <= max_exp; ++a)
    if (odd(a)) as.push_back(a);
  for (long long b = 1; b < m; ++b)
    if (!quarter(b, m)) bs.push_back(b);
  std::vector<ExactMat3> S, T;
  for (long long e = 0; e < 4; ++e) S.push_back(rot_at(Axis::y(), e, 4, N));
  for (long long b : bs) T.push_back(rot_at(Axis::x(), b, m, N));

  FoundationHypotheses h;
  h.m = m;
  std::vector<ExactMat3> prefix{ExactMat3::identity(N)};
  std::vector<std::size_t> ai, bi;

  auto leaf = [&](const ExactMat3& M) {
    // S^W is a signed permutation, so it does not change which entries are integral.
    const bool four = count_non_integral(M) >= 4;
    for (long long W = 0; W < 4; ++W)
      for (long long E = 0; E < 4; ++E) {
        ++out.words;
        h.W = W;
        h.E = E;
        if (!check_hypotheses(h).ok) {
          ++out.failures;
          if (out.failure_examples.size() < 5) out.failure_examples.push_back("generator: " + h.word().str());
          continue;
        }
        if ((S[W] * M * S[E]).is_identity()) {
          ++out.failures;
          if (out.failure_examples.size() < 5) out.failure_examples.push_back(h.word().str());
          continue;
        }
        ++out.certified;
        if (four) ++out.four_non_integral;
      }
  };

  std::function<void(int)> dfs = [&](int depth) {
    if (depth > 0) {
      h.a.assign(depth, 0);
      h.b.assign(depth, 0);
      for (int i = 0; i < depth; ++i) {
        h.a[i] = as[ai[i]];
        h.b[i] = bs[bi[i]];
      }
      leaf(prefix.back());
    }
    if (depth == max_n) return;
    for (std::size_t x = 0; x < as.size(); ++x)
      for (std::size_t y = 0; y < bs.size(); ++y) {
        ai.push_back(x);
        bi.push_back(y);
        prefix.push_back(prefix.back() * S[mod(as[x], 4)] * T[y]);
        dfs(depth + 1);
        prefix.pop_back();
        ai.pop_back();
        bi.pop_back();
      }
    if (depth == 1 && progress) progress(out.name + ": " + std::to_string(out.words) + " words");
  };
  dfs(0);
  out.seconds = since(t0);
  return out;
}

BatchSummary free_batch(long long m, int max_length, const Progress& progress) {
  free_pair(m);
  if (max_length < 1) throw UsageError("max-length must be positive");
  auto t0 = Clock::now();
  BatchSummary out;
  out.name = "free m=" + std::to_string(m);
  const Syllable letters[] = {{"A", 1}, {"A", -1}, {"B", 1}, {"B", -1}};
  std::vector<int> stack;
  std::function<void()> dfs = [&]() {
    if (!stack.empty()) {
      std::vector<Syllable> v;
      for (int i : stack) v.push_back(letters[i]);
      Word w(std::move(v));
      ++out.words;
      try {
        FreeCertificate c = certify_free(m, w);
        ++out.certified;
        if (c.variant == Variant::lemma && c.witness.non_integral.size() >= 4) ++out.four_non_integral;
      } catch (const InternalError& e) {
        ++out.failures;
        if (out.failure_examples.size() < 5) out.failure_examples.push_back(e.what());
      }
    }
    if (static_cast<int>(stack.size()) == max_length) return;
    for (int i = 0; i < 4; ++i) {
      if (!stack.empty() && (stack.back() ^ 1) == i) continue;
      stack.push_back(i);
      dfs();
      stack.pop_back();
    }
  };
  dfs();
  if (progress) progress(out.name + ": " + std::to_string(out.words) + " words");
  out.seconds = since(t0);
  return out;
}

}  // namespace rotlab
