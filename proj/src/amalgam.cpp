#include "rotlab/amalgam.hpp"

#include "rotlab/errors.hpp"
#include "rotlab/normalform.hpp"

#include <deque>

namespace rotlab {

namespace {

constexpr std::size_t kMaxCommon = 20000;

int find_matrix(const std::vector<std::pair<Word, ExactMat3>>& elems, const ExactMat3& m) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].second == m) return static_cast<int>(i);
  return -1;
}

void enumerate_common(AmalgamDecomposition& d) {
  auto& el = d.common_elements;
  el.clear();
  el.push_back({Word(), ExactMat3::identity()});
  std::vector<std::pair<Word, ExactMat3>> gens;
  for (const auto& g : d.common_generators) {
    gens.push_back({g, eval_word(d.table, g)});
    gens.push_back({g.inverse(), eval_word(d.table, g.inverse())});
  }
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& [gw, gm] : gens) {
      ExactMat3 next = el[i].second * gm;
      if (find_matrix(el, next) >= 0) continue;
      if (el.size() >= kMaxCommon) throw InternalError("common subgroup larger than expected");
      el.push_back({free_reduce(el[i].first * gw, d.orders), next});
      queue.push_back(el.size() - 1);
    }
  }
}

// A syllable that lies in both factors must lie in H; checked once per generator.
void validate(const AmalgamDecomposition& d) {
  for (const auto& [gen, rules] : d.membership) {
    for (const auto& a : rules)
      for (const auto& b : rules) {
        if (a.factor != 0 || b.factor != 1) continue;
        long long e = lcm_ll(a.modulus, b.modulus);
        if (find_matrix(d.common_elements, eval_word(d.table, Word::letter(gen, e))) < 0)
          throw InternalError("factor rule for " + gen + " puts a non-common element in both factors");
      }
  }
}

void set_names(AmalgamDecomposition& d, const StructureReport& rep) {
  if (rep.amalgam) {
    d.left = rep.amalgam->left;
    d.right = rep.amalgam->right;
    d.common = rep.amalgam->common;
  }
}

void hatg_rules(AmalgamDecomposition& d, long long m, Case kase) {
  d.membership["T"] = {{0, 1}};
  d.membership["S"] = {{1, 1}, {0, 2}};
  d.common_generators = {Word::letter("S", 2)};
  if (kase == Case::Thm1_2) {
    d.membership["T"].push_back({1, m / 2});
    d.common_generators.push_back(Word::letter("T", m / 2));
  } else if (kase == Case::Thm1_3) {
    d.membership["T"].push_back({1, m / 4});
    d.common_generators.push_back(Word::letter("T", m / 4));
  } else if (kase != Case::Thm1_1) {
    throw UnsupportedCase("no amalgam decomposition for " + GroupSpec::hatg(m).str());
  }
}

// Rules for a two-generator group {X, Y} with X of order p and Y of order q,
// in the free or amalgamated cases.
void pair_rules(AmalgamDecomposition& d, const std::string& X, long long p, const std::string& Y, long long q,
                bool x_half_common, bool y_half_common) {
  d.membership[X] = {{0, 1}};
  d.membership[Y] = {{1, 1}};
  d.common_generators.clear();
  if (x_half_common) {
    d.membership[X].push_back({1, p / 2});
    d.common_generators.push_back(Word::letter(X, p / 2));
  }
  if (y_half_common) {
    d.membership[Y].push_back({0, q / 2});
    d.common_generators.push_back(Word::letter(Y, q / 2));
  }
}

AmalgamDecomposition for_hatg(long long m) {
  AmalgamDecomposition d;
  d.spec = d.working = GroupSpec::hatg(m);
  StructureReport rep = classify(d.spec);
  set_names(d, rep);
  d.translate = [](const Word& w) { return w; };
  hatg_rules(d, m, rep.kase);
  return d;
}

AmalgamDecomposition for_gpq(long long p, long long q) {
  GroupSpec spec = GroupSpec::gpq(p, q);
  StructureReport rep = classify(spec);
  if (rep.kase == Case::Thm2_4) {
    AmalgamDecomposition d = for_hatg(lcm_ll(p, q));
    d.spec = spec;
    d.translate = [p, q](const Word& w) { return gpq_to_hatg(w, p, q); };
    set_names(d, rep);
    return d;
  }
  AmalgamDecomposition d;
  d.spec = d.working = spec;
  set_names(d, rep);
  d.translate = [](const Word& w) { return w; };
  switch (rep.kase) {
    case Case::Thm2_1:
      d.left = "Z" + std::to_string(p);
      d.right = "Z" + std::to_string(q);
      d.common = "1";
      pair_rules(d, "A", p, "C", q, false, false);
      break;
    case Case::Thm2_2:
      pair_rules(d, "A", p, "C", q, p % 2 == 0, q % 2 == 0);
      break;
    case Case::Thm2_3:
      pair_rules(d, "A", p, "C", q, true, true);
      break;
    default:
      throw UnsupportedCase("no amalgam decomposition for " + spec.str() + " (" + rep.case_name() + ")");
  }
  return d;
}

const Expression& find_expr(const std::vector<Expression>& ex, const std::string& target) {
  for (const auto& e : ex)
    if (e.target == target) return e;
  throw InternalError("missing constructed word for " + target);
}

AmalgamDecomposition for_gnm(const GroupSpec& spec) {
  CanonicalForm cf = canonicalize(spec);
  const GroupSpec c = cf.spec;
  StructureReport rep = classify(c);
  auto base = [cf](const Word& w) { return cf.translate(w); };
  switch (rep.kase) {
    case Case::Thm4_1:
    case Case::Thm4_2:
    case Case::Thm4_3: {
      AmalgamDecomposition d = for_gpq(lcm_ll(c.p, c.q), c.m);
      auto inner = d.translate;
      d.translate = [base, inner, c](const Word& w) { return inner(embed_gnm_in_gpq(c, base(w))); };
      d.spec = spec;
      return d;
    }
    default:
      break;
  }
  AmalgamDecomposition d;
  d.spec = spec;
  d.working = c;
  set_names(d, rep);
  d.translate = base;
  const long long p = c.p, q = c.q, m = c.m;
  Word rz_pi = (Word{{"B", q / 2}, {"A", p / 2}}).pow(m / 4);
  switch (rep.kase) {
    case Case::Thm3_free:
      d.left = "Z" + std::to_string(p);
      d.right = "Z" + std::to_string(q);
      d.common = "1";
      pair_rules(d, "A", p, "B", q, false, false);
      break;
    case Case::Thm3_m4:
      pair_rules(d, "A", p, "B", q, true, false);
      break;
    case Case::Thm5_2: {
      pair_rules(d, "A", p, "B", q, true, true);
      long long r = rep.derived.at("r");
      auto ex = express_generators(c);
      d.common_generators = {find_expr(ex, "R_z(2pi/" + std::to_string(r) + ")").word, Word::letter("A", p / 2)};
      break;
    }
    case Case::Thm5_3:
      pair_rules(d, "A", p, "B", q, false, true);
      d.common_generators.push_back(rz_pi);
      break;
    case Case::Thm5_4:
      if (q != 2)
        throw UnsupportedCase("B is not in either factor of " + rep.structure + " when q > 2; no syllable-level decomposition");
      pair_rules(d, "A", p, "B", q, true, false);
      d.common_generators.push_back(rz_pi);
      break;
    default:
      throw UnsupportedCase("no amalgam decomposition for " + spec.str() + " (" + rep.case_name() + ")");
  }
  return d;
}

struct Block {
  int factor;  // -1: lies in H
  Word word;
};

int place(const AmalgamDecomposition& d, const Syllable& s) {
  auto it = d.membership.find(s.gen);
  bool in[2] = {false, false};
  if (it != d.membership.end())
    for (const auto& r : it->second)
      if (s.exp % r.modulus == 0) in[r.factor] = true;
  if (in[0] && in[1]) return -1;
  if (in[0]) return 0;
  if (in[1]) return 1;
  throw UnsupportedCase("syllable " + s.gen + "^" + std::to_string(s.exp) + " is not in either factor of " + d.left +
                        " *_" + d.common + " " + d.right);
}

}  // namespace

AmalgamDecomposition amalgam_for(const GroupSpec& spec) {
  AmalgamDecomposition d;
  switch (spec.family) {
    case Family::HatG:
      d = for_hatg(spec.m);
      break;
    case Family::Gpq:
      d = for_gpq(spec.p, spec.q);
      break;
    case Family::Gnm:
      d = for_gnm(spec);
      break;
  }
  d.table = generator_table(d.working);
  d.orders = d.working.orders();
  enumerate_common(d);
  validate(d);
  return d;
}

bool AmalgamNormalForm::same_as(const AmalgamNormalForm& o) const {
  if (!(h == o.h) || pieces.size() != o.pieces.size()) return false;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].factor != o.pieces[i].factor || !(pieces[i].matrix == o.pieces[i].matrix)) return false;
  return true;
}

AmalgamNormalForm amalgam_nf(const Word& w, const AmalgamDecomposition& d) {
  Word ww = free_reduce(d.translate(w), d.orders);
  auto in_common = [&](const Word& x) { return find_matrix(d.common_elements, eval_word(d.table, x)) >= 0; };

  std::vector<Block> blocks;
  for (const auto& s : ww.syllables()) {
    int f = place(d, s);
    if (!blocks.empty() && (f == -1 || blocks.back().factor == f || blocks.back().factor == -1)) {
      blocks.back().word *= Word::letter(s.gen, s.exp);
      if (f != -1) blocks.back().factor = f;
    } else {
      blocks.push_back({f, Word::letter(s.gen, s.exp)});
    }
  }
  // Blocks whose element lies in H join a neighbour; repeat until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& b : blocks)
      if (b.factor != -1 && in_common(b.word)) b.factor = -1;
    std::vector<Block> next;
    for (auto& b : blocks) {
      if (!next.empty() && (b.factor == -1 || next.back().factor == -1 || next.back().factor == b.factor)) {
        if (next.back().factor == -1 && b.factor != -1) next.back().factor = b.factor;
        next.back().word *= b.word;
        changed = true;
      } else {
        next.push_back(std::move(b));
      }
    }
    blocks = std::move(next);
    if (blocks.size() == 1 && blocks[0].factor == -1) break;
  }

  AmalgamNormalForm out;
  Word carry_word;
  ExactMat3 carry_mat = ExactMat3::identity();
  if (blocks.size() == 1 && blocks[0].factor == -1) {
    carry_word = free_reduce(blocks[0].word, d.orders);
    carry_mat = eval_word(d.table, carry_word);
    blocks.clear();
  }
  std::vector<AmalgamPiece> rev;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    Word xw = free_reduce(it->word * carry_word, d.orders);
    ExactMat3 x = eval_word(d.table, xw);
    // representative: least h*x over h in H
    std::size_t best = 0;
    ExactMat3 best_mat = d.common_elements[0].second * x;
    for (std::size_t i = 1; i < d.common_elements.size(); ++i) {
      ExactMat3 cand = d.common_elements[i].second * x;
      if (cand.compare(best_mat) < 0) {
        best = i;
        best_mat = cand;
      }
    }
    Word rep_word = free_reduce(d.common_elements[best].first * xw, d.orders);
    rev.push_back({it->factor, rep_word, best_mat});
    // x = h0^-1 * rep, so the carry to the left is h0^-1
    carry_word = d.common_elements[best].first.inverse();
    carry_mat = d.common_elements[best].second.inverse();
  }
  out.pieces.assign(rev.rbegin(), rev.rend());
  out.h_word = free_reduce(carry_word, d.orders);
  out.h = carry_mat;
  return out;
}

}  // namespace rotlab
