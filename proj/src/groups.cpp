#include "rotlab/groups.hpp"

#include "rotlab/errors.hpp"

namespace rotlab {

int rho(long long N) {
  if (N == 0) return 0;
  if (N < 0) N = -N;
  int r = 0;
  while (N % 2 == 0) {
    N /= 2;
    ++r;
  }
  return r;
}

CanonicalForm canonicalize(const GroupSpec& spec) {
  CanonicalForm c;
  c.input = spec;
  c.spec = spec;
  if (spec.family != Family::Gnm) return c;
  GroupSpec t = spec;
  if (t.m % 4 == 2) {
    long long mp = t.m / 2;
    long long np = ((t.m / 2 + t.n) / 2) % mp;
    c.changes.push_back("m = 2 mod 4: ell replaced by -ell, (n,m) = (" + std::to_string(t.n) + "," + std::to_string(t.m) +
                        ") -> (" + std::to_string(np) + "," + std::to_string(mp) + "), B -> B'^-1");
    t = GroupSpec::gnm(t.p, t.q, np, mp);
    c.flipped = true;
  }
  if (rho(t.q) > rho(t.p)) {
    c.changes.push_back("rho(q) > rho(p): roles of A and B exchanged, (p,q) = (" + std::to_string(t.p) + "," +
                        std::to_string(t.q) + ") -> (" + std::to_string(t.q) + "," + std::to_string(t.p) +
                        "), conjugation by the half turn about the bisector of x and ell");
    std::swap(t.p, t.q);
    c.swapped = true;
  }
  c.spec = t;
  return c;
}

Word CanonicalForm::translate(const Word& w) const {
  if (!flipped && !swapped) return w;
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (const auto& s : w.syllables()) {
    Syllable t = s;
    if (s.gen == "B" && flipped) t.exp = -t.exp;
    if (swapped) t.gen = s.gen == "A" ? "B" : (s.gen == "B" ? "A" : s.gen);
    out.push_back(t);
  }
  return Word(std::move(out));
}

ExactMat3 CanonicalForm::conjugator() const {
  if (!swapped) return ExactMat3::identity();
  ExactMat3 v = rot(Axis::z(), spec.n, 2 * spec.m);
  return v * rot(Axis::x(), 1, 2) * v.inverse();
}

std::string case_id(Case c) {
  switch (c) {
    case Case::Thm1_1: return "Thm1.1";
    case Case::Thm1_2: return "Thm1.2";
    case Case::Thm1_3: return "Thm1.3";
    case Case::Thm2_1: return "Thm2.1";
    case Case::Thm2_2: return "Thm2.2";
    case Case::Thm2_3: return "Thm2.3";
    case Case::Thm2_4: return "Thm2.4";
    case Case::Thm3_free: return "Thm3.free";
    case Case::Thm3_m4: return "Thm3.m4";
    case Case::Thm4_1: return "Thm4.1";
    case Case::Thm4_2: return "Thm4.2";
    case Case::Thm4_3: return "Thm4.3";
    case Case::Thm5_1: return "Thm5.1";
    case Case::Thm5_2: return "Thm5.2";
    case Case::Thm5_3: return "Thm5.3";
    case Case::Thm5_4: return "Thm5.4";
    case Case::Finite: return "finite";
  }
  return "?";
}

std::string StructureReport::case_name() const {
  if (kase == Case::Finite) return "finite(" + finite_kind + ")";
  return case_id(kase);
}

namespace {

std::string S(long long v) { return std::to_string(v); }

Word a(long long e) { return Word::letter("alpha", e); }
Word b(long long e) { return Word::letter("beta", e); }
Word g(long long e) { return Word::letter("gamma", e); }

Presentation two_gen(const RotationSymbol& alpha, const RotationSymbol& beta, std::vector<Word> relators) {
  Presentation p;
  p.generators = {"alpha", "beta"};
  p.relators = std::move(relators);
  p.table.set("alpha", alpha);
  p.table.set("beta", beta);
  return p;
}

void finite(StructureReport& r, const std::string& kind, long long order, const std::string& structure) {
  r.kase = Case::Finite;
  r.finite_kind = kind;
  r.order = order;
  r.structure = structure;
}

void classify_hatg(StructureReport& r, long long m) {
  RotationSymbol alpha{Axis::x(), 1, m}, beta{Axis::y(), 1, 4};
  r.derived["rho_m"] = rho(m);
  if (m == 1) {
    finite(r, "Z_p", 4, "Z4");
    r.presentation = two_gen(alpha, beta, {a(1), b(4)});
    return;
  }
  if (m == 2) {
    finite(r, "D_p", 8, "D4");
    r.presentation = two_gen(alpha, beta, {a(2), b(4), (a(1) * b(2)).pow(2), (a(1) * b(1)).pow(2)});
    return;
  }
  std::vector<Word> rel{a(m), b(4), (a(1) * b(2)).pow(2)};
  if (m == 4) {
    finite(r, "cube", 24, "rotation group of the cube (order 24)");
    r.presentation = two_gen(alpha, beta, {a(4), b(4), (a(1) * b(2)).pow(2), (a(2) * b(1)).pow(2), (a(1) * b(1)).pow(3)});
    return;
  }
  if (m % 2 == 1) {
    r.kase = Case::Thm1_1;
    r.structure = "D" + S(m) + " *_{Z2} Z4";
    r.amalgam = AmalgamInfo{"D" + S(m), "Z4", "Z2", "alpha, beta^2", "beta", "beta^2"};
  } else if (m % 4 == 2) {
    r.kase = Case::Thm1_2;
    rel.push_back((a(m / 2) * b(1)).pow(2));
    r.structure = "D" + S(m) + " *_{D2} D4";
    r.amalgam = AmalgamInfo{"D" + S(m), "D4", "D2", "alpha, beta^2", "alpha^" + S(m / 2) + ", beta",
                            "alpha^" + S(m / 2) + ", beta^2"};
  } else {
    r.kase = Case::Thm1_3;
    rel.push_back((a(m / 2) * b(1)).pow(2));
    rel.push_back((a(m / 4) * b(1)).pow(3));
    r.structure = "D" + S(m) + " *_{D4} Ghat(4,4)";
    r.amalgam = AmalgamInfo{"D" + S(m), "Ghat(4,4)", "D4", "alpha, beta^2", "alpha^" + S(m / 4) + ", beta",
                            "alpha^" + S(m / 4) + ", beta^2"};
  }
  r.presentation = two_gen(alpha, beta, std::move(rel));
}

void classify_gpq(StructureReport& r, long long p, long long q) {
  RotationSymbol alpha{Axis::x(), 1, p}, beta{Axis::z(), 1, q};
  r.derived["rho_p"] = rho(p);
  r.derived["rho_q"] = rho(q);
  if (q == 1) {
    finite(r, "Z_p", p, "Z" + S(p));
    r.presentation = two_gen(alpha, beta, {a(p), b(1)});
    return;
  }
  if (q == 2) {
    finite(r, "D_p", 2 * p, "D" + S(p));
    r.presentation = two_gen(alpha, beta, {a(p), b(2), (a(1) * b(1)).pow(2)});
    return;
  }
  if (p == 1) {
    finite(r, "Z_p", q, "Z" + S(q));
    r.presentation = two_gen(alpha, beta, {a(1), b(q)});
    return;
  }
  if (p == 2) {
    finite(r, "D_p", 2 * q, "D" + S(q));
    r.presentation = two_gen(alpha, beta, {a(2), b(q), (a(1) * b(1)).pow(2)});
    return;
  }
  if (p == 4 && q == 4) {
    finite(r, "cube", 24, "rotation group of the cube (order 24)");
    r.presentation = two_gen(alpha, beta, {a(4), b(4), (a(1) * b(2)).pow(2), (a(2) * b(1)).pow(2), (a(1) * b(1)).pow(3)});
    return;
  }
  bool pe = p % 2 == 0, qe = q % 2 == 0;
  if (!pe && !qe) {
    r.kase = Case::Thm2_1;
    r.structure = "Z" + S(p) + " * Z" + S(q);
    r.presentation = two_gen(alpha, beta, {a(p), b(q)});
  } else if (pe && !qe) {
    r.kase = Case::Thm2_2;
    r.structure = "Z" + S(p) + " *_{Z2} D" + S(q);
    r.presentation = two_gen(alpha, beta, {a(p), b(q), (a(p / 2) * b(1)).pow(2)});
    r.amalgam = AmalgamInfo{"Z" + S(p), "D" + S(q), "Z2", "alpha", "alpha^" + S(p / 2) + ", beta", "alpha^" + S(p / 2)};
  } else if (!pe && qe) {
    r.kase = Case::Thm2_2;
    r.structure = "D" + S(p) + " *_{Z2} Z" + S(q);
    r.presentation = two_gen(alpha, beta, {a(p), b(q), (a(1) * b(q / 2)).pow(2)});
    r.amalgam = AmalgamInfo{"D" + S(p), "Z" + S(q), "Z2", "alpha, beta^" + S(q / 2), "beta", "beta^" + S(q / 2)};
  } else if (p % 4 != 0 || q % 4 != 0) {
    r.kase = Case::Thm2_3;
    r.structure = "D" + S(p) + " *_{D2} D" + S(q);
    r.presentation = two_gen(alpha, beta, {a(p), b(q), (a(p / 2) * b(1)).pow(2), (a(1) * b(q / 2)).pow(2)});
    r.amalgam = AmalgamInfo{"D" + S(p), "D" + S(q), "D2", "alpha, beta^" + S(q / 2), "alpha^" + S(p / 2) + ", beta",
                            "alpha^" + S(p / 2) + ", beta^" + S(q / 2)};
  } else {
    r.kase = Case::Thm2_4;
    long long s = lcm_ll(p, q);
    GroupSpec w = GroupSpec::hatg(s);
    StructureReport sub = classify(w);
    r.witness = w;
    r.structure = "Ghat(" + S(s) + ",4) = " + sub.structure;
    r.presentation = sub.presentation;
    r.amalgam = sub.amalgam;
    r.derived["lcm_pq"] = s;
  }
}

void adopt_witness(StructureReport& r, const GroupSpec& w) {
  StructureReport sub = classify(w);
  r.witness = w;
  r.structure = w.str() + " = " + sub.structure;
  r.presentation = sub.presentation;
  r.amalgam = sub.amalgam;
  if (sub.order) r.order = sub.order;
}

void classify_gnm(StructureReport& r, const GroupSpec& c) {
  const long long p = c.p, q = c.q, n = c.n, m = c.m;
  RotationSymbol alpha{Axis::x(), 1, p}, beta{Axis::ell(n, m), 1, q};
  int rp = rho(p), rq = rho(q), rm = rho(m);
  r.derived["rho_p"] = rp;
  r.derived["rho_q"] = rq;
  r.derived["rho_m"] = rm;
  if (m % 2 == 0) {
    r.derived["r"] = lcm_ll(lcm_ll(p, q), m / 2);
    r.derived["s"] = lcm_ll(p, m / 2);
    r.derived["t"] = lcm_ll(q, m / 2);
  }
  bool pe = p % 2 == 0, qe = q % 2 == 0;
  if (!qe) {
    if (pe && m == 4) {
      r.kase = Case::Thm3_m4;
      r.structure = "Z" + S(p) + " *_{Z2} D" + S(q);
      r.presentation = two_gen(alpha, beta, {a(p), b(q), (a(p / 2) * b(1)).pow(2)});
      r.amalgam = AmalgamInfo{"Z" + S(p), "D" + S(q), "Z2", "alpha", "alpha^" + S(p / 2) + ", beta", "alpha^" + S(p / 2)};
    } else {
      r.kase = Case::Thm3_free;
      r.structure = "Z" + S(p) + " * Z" + S(q);
      r.presentation = two_gen(alpha, beta, {a(p), b(q)});
    }
    return;
  }
  if (!pe) throw InternalError("classification gap: canonical spec has p odd and q even");
  if (m % 2 == 1) {
    r.kase = Case::Thm4_1;
    adopt_witness(r, GroupSpec::gpq(lcm_ll(p, q), m));
    return;
  }
  if (rm == 2) {
    if (rq >= 2) {
      r.kase = Case::Thm4_2;
      adopt_witness(r, GroupSpec::gpq(lcm_ll(p, q), m));
    } else if (rp > 1) {
      r.kase = Case::Thm5_4;
      long long t = lcm_ll(q, m / 2);
      r.witness = GroupSpec::gnm(p, 2, 1, 2 * t);
      r.structure = "G_{1/" + S(2 * t) + "}(" + S(p) + ",2) = D" + S(p) + " *_{D2} D" + S(t);
      r.amalgam = AmalgamInfo{"D" + S(p), "D" + S(t), "D2", "A, R_z^pi", "R_z^{2pi/" + S(t) + "}, B^" + S(q / 2),
                              "R_z^pi, A^" + S(p / 2)};
    } else {
      r.kase = Case::Thm5_1;
    }
  } else if (rp >= rm) {
    r.kase = Case::Thm4_3;
    adopt_witness(r, GroupSpec::gpq(lcm_ll(p, q), m));
    return;
  } else if (rq == 1) {
    if (rp == 1) {
      r.kase = Case::Thm5_1;
    } else {
      r.kase = Case::Thm5_3;
      long long s = lcm_ll(p, m / 2);
      r.witness = GroupSpec::gnm(4, q, 1, 2 * s);
      r.structure = "G_{1/" + S(2 * s) + "}(4," + S(q) + ") = G(" + S(s) + ",4) *_{D2} D" + S(q);
      r.amalgam = AmalgamInfo{"G(" + S(s) + ",4)", "D" + S(q), "D2", "R_z^{2pi/" + S(s) + "}, R_x^{pi/2}", "B, R_z^pi",
                              "B^" + S(q / 2) + ", R_z^pi"};
    }
  } else {
    r.kase = Case::Thm5_2;
    long long rr = lcm_ll(lcm_ll(p, q), m / 2);
    r.witness = GroupSpec::gnm(4, 4, 1, 2 * rr);
    r.structure = "G_{1/" + S(2 * rr) + "}(4,4) = G(" + S(rr) + ",4) *_{D" + S(rr) + "} G(" + S(rr) + ",4)";
    r.amalgam = AmalgamInfo{"G(" + S(rr) + ",4)", "G(" + S(rr) + ",4)", "D" + S(rr),
                            "R_z^{2pi/" + S(rr) + "}, R_x^{pi/2}",
                            "R_z^{2pi/" + S(rr) + "}, R_x^{pi/2} conjugated by R_z^{pi/" + S(rr) + "}",
                            "R_z^{2pi/" + S(rr) + "}, R_x^pi"};
  }
  if (r.kase == Case::Thm5_1) {
    Presentation pr;
    pr.generators = {"alpha", "beta", "gamma"};
    pr.relators = {a(p), b(q), g(2), (a(1) * g(1)).pow(2), (b(1) * g(1)).pow(2), (a(p / 2) * b(q / 2)).pow(m / 4) * g(1)};
    pr.table.set("alpha", alpha);
    pr.table.set("beta", beta);
    pr.table.set("gamma", {Axis::z(), 1, 2});
    r.presentation = std::move(pr);
    r.structure = "quotient of D" + S(p) + " *_{Z2} D" + S(q) + " by (alpha^" + S(p / 2) + " beta^" + S(q / 2) + ")^" +
                  S(m / 4) + " gamma";
  }
}

}  // namespace

StructureReport classify(const GroupSpec& spec) {
  StructureReport r;
  r.input = spec;
  r.canonical = canonicalize(spec);
  const GroupSpec& c = r.canonical.spec;
  switch (c.family) {
    case Family::HatG:
      classify_hatg(r, c.m);
      break;
    case Family::Gpq:
      classify_gpq(r, c.p, c.q);
      break;
    case Family::Gnm:
      classify_gnm(r, c);
      break;
  }
  if (r.structure.empty()) throw InternalError("classification gap for " + spec.str());
  return r;
}

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

RelationReport verify_relations(const GroupSpec& spec) {
  RelationReport rep;
  rep.spec = spec;
  auto check = [&](const std::string& name, const ExactMat3& lhs, const ExactMat3& rhs, const std::string& detail) {
    RelationCheck c{name, "pass", detail, std::nullopt};
    if (!(lhs == rhs)) {
      c.status = "fail";
      c.offending = lhs;
    }
    rep.checks.push_back(std::move(c));
  };
  long long q = spec.family == Family::HatG ? 4 : spec.q;
  ExactMat3 xpi = rot(Axis::x(), 1, 2);
  ExactMat3 yq = rot(Axis::y(), 1, q);
  check("half-turn inversion", xpi * yq * xpi * yq, ExactMat3::identity(),
        "R_x^pi R_y^theta R_x^pi R_y^theta = I, theta = 2pi/" + std::to_string(q));
  ExactMat3 st = rot(Axis::y(), 1, 4) * rot(Axis::x(), 1, 4);
  check("quarter-turn braid", st * st * st, ExactMat3::identity(), "(R_y^{pi/2} R_x^{pi/2})^3 = I");
  if (spec.family != Family::Gnm) {
    rep.checks.push_back({"ell half-turn product", "skipped", "no ell axis in " + spec.str(), std::nullopt});
  } else if (spec.p % 2 != 0 || spec.q % 2 != 0) {
    rep.checks.push_back({"ell half-turn product", "skipped", "p and q are not both even", std::nullopt});
  } else {
    GeneratorTable t = generator_table(spec);
    Word w{{"B", spec.q / 2}, {"A", spec.p / 2}};
    check("ell half-turn product", eval_word(t, w), rot(Axis::z(), 2 * spec.n, spec.m),
          "B^" + std::to_string(spec.q / 2) + " A^" + std::to_string(spec.p / 2) + " = U^" + std::to_string(2 * spec.n));
  }
  return rep;
}

}  // namespace rotlab
