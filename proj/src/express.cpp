#include "rotlab/errors.hpp"
#include "rotlab/groups.hpp"

namespace rotlab {

namespace {

// Extended gcd: returns g and (u, v) with u*a + v*b = g.
long long egcd(long long a, long long b, long long& u, long long& v) {
  if (b == 0) {
    u = 1;
    v = 0;
    return a;
  }
  long long u1, v1;
  long long g = egcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

long long modinv(long long a, long long m) {
  long long u, v;
  long long g = egcd(((a % m) + m) % m, m, u, v);
  if (g != 1) throw InternalError("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return ((u % m) + m) % m;
}

struct Builder {
  GroupSpec spec;
  GeneratorTable table;
  OrderMap orders;
  std::vector<Expression> out;
  Word Q;  // B^{q/2} A^{p/2} = U^{2n}

  explicit Builder(const GroupSpec& s) : spec(s), table(generator_table(s)), orders(s.orders()) {
    if (s.family == Family::Gnm && s.p % 2 == 0 && s.q % 2 == 0) Q = Word{{"B", s.q / 2}, {"A", s.p / 2}};
  }

  Word red(const Word& w) const { return free_reduce(w, orders); }
  Word pw(const Word& w, long long k) const { return red(w.pow(k)); }
  Word conj(const Word& x, const Word& y) const { return red(x * y * x.inverse()); }
  ExactMat3 eval(const Word& w) const { return eval_word(table, w); }

  Word emit(const std::string& name, const RotationSymbol& r, const Word& w) {
    Word rw = red(w);
    if (!(eval(rw) == r.power(1))) throw InternalError("constructed word for " + name + " does not match " + r.str());
    out.push_back({name, r, rw});
    return rw;
  }

  // First candidate (or its inverse, if allowed) that evaluates to r.
  Word pick(const std::string& name, const RotationSymbol& r, std::vector<Word> cands) {
    ExactMat3 target = r.power(1);
    for (const auto& c : cands)
      if (eval(c) == target) return emit(name, r, c);
    throw InternalError("no candidate word matches " + name);
  }

  // Word for U^{2j}, as a power of Q.
  Word evenU(long long j) const {
    long long n = spec.n, m = spec.m;
    long long ord = m % 2 ? m : m / 2;
    for (long long t = 0; t < ord; ++t)
      if (((2 * n * t - 2 * j) % m + m) % m == 0) return pw(Q, balanced_mod(t, ord));
    throw InternalError("U^" + std::to_string(2 * j) + " not a power of B^{q/2} A^{p/2}");
  }

  // Same-axis rotations by 2pi/a and 2pi/b; the result rotates by 2pi/lcm(a,b).
  Word combine(const Word& w1, long long a, const Word& w2, long long b) const {
    long long u, v;
    egcd(b, a, u, v);  // u*b + v*a = gcd
    return red(w1.pow(balanced_mod(u, a)) * w2.pow(balanced_mod(v, b)));
  }

  // Z^j X Z^-j about ell(1, M) with Z = R_z^{2pi/N}, X about ell(n,m). Tries both orientations.
  Word rotate_axis(const std::string& name, const RotationSymbol& target, const Word& Z, long long N, const Word& X) {
    for (long long j = 0; j < N; ++j) {
      Word Zj = pw(Z, balanced_mod(j, N));
      Word c1 = red(Zj * X * Zj.inverse());
      ExactMat3 t = target.power(1);
      if (eval(c1) == t) return emit(name, target, c1);
      Word c2 = red(Zj * X.inverse() * Zj.inverse());
      if (eval(c2) == t) return emit(name, target, c2);
    }
    throw InternalError("no conjugate of B by a power of R_z matches " + name);
  }
};

std::string twopi(long long d) { return "2pi/" + std::to_string(d); }

void u_powers(Builder& b, long long m) {
  if (m % 2 == 0) {
    // U^2: shorter of (B A)^k and (A B)^k'; ties go to the A-first form.
    Word p1 = b.evenU(1);
    Word alt{{"A", b.spec.p / 2}, {"B", b.spec.q / 2}};
    Word best = p1;
    long long ord = m / 2;
    for (long long t = -ord / 2; t <= ord / 2; ++t) {
      Word cand = b.pw(alt, t);
      if (!(b.eval(cand) == rot(Axis::z(), 2, m))) continue;
      if (cand.letter_length() <= best.letter_length()) best = cand;
    }
    b.emit("U^2", {Axis::z(), 2, m}, best);
  } else {
    b.emit("U^2", {Axis::z(), 2, m}, b.evenU(1));
  }
}

void express_gpq24(Builder& b) {
  long long p = b.spec.p, q = b.spec.q;
  Word Rx4 = b.emit("R_x(pi/2)", {Axis::x(), 1, 4}, Word::letter("A", p / 4));
  Word Rz4 = b.emit("R_z(pi/2)", {Axis::z(), 1, 4}, Word::letter("C", q / 4));
  Word S = b.emit("S", {Axis::y(), 1, 4}, Rx4.inverse() * Rz4 * Rx4);
  Word Xq = b.pick("R_x(" + twopi(q) + ")", {Axis::x(), 1, q},
                   {b.conj(S, Word::letter("C", 1)), b.conj(S.inverse(), Word::letter("C", 1))});
  long long s = lcm_ll(p, q);
  b.emit("That", {Axis::x(), 1, s}, b.combine(Word::letter("A", 1), p, Xq, q));
}

void express_thm4(Builder& b, Case kase) {
  const long long p = b.spec.p, q = b.spec.q, n = b.spec.n, m = b.spec.m;
  Word Un;
  u_powers(b, m);
  if (kase == Case::Thm4_1) {
    Un = b.pw(b.Q, (m + 1) / 2);
  } else if (kase == Case::Thm4_2) {
    long long s = (modinv(n, m) * (m / 4)) % m;
    Word V = b.evenU(n * (s - 1) / 2);
    Word Y = b.pick("R_y(" + twopi(q) + ")", {Axis::y(), 1, q},
                    {b.conj(V, Word::letter("B", 1)), b.conj(V, Word::letter("B", -1))});
    Word S = b.pick("S", {Axis::y(), 1, 4}, {b.pw(Y, q / 4), b.pw(Y, -q / 4)});
    Word Rx4 = b.emit("R_x(pi/2)", {Axis::x(), 1, 4}, Word::letter("A", p / 4));
    Word Rz4 = b.emit("R_z(pi/2)", {Axis::z(), 1, 4}, S.inverse() * Rx4 * S);
    Un = b.red(Rz4 * V.inverse());
  } else {
    Word Rz4 = b.emit("R_z(pi/2)", {Axis::z(), 1, 4}, b.evenU(m / 8));
    Word Rx4 = b.emit("R_x(pi/2)", {Axis::x(), 1, 4}, Word::letter("A", p / 4));
    Word S = b.emit("S", {Axis::y(), 1, 4}, Rx4.inverse() * Rz4 * Rx4);
    Word Zp = b.pick("R_z(" + twopi(p) + ")", {Axis::z(), 1, p},
                     {b.conj(S.inverse(), Word::letter("A", 1)), b.conj(S, Word::letter("A", 1))});
    long long odd = m;
    while (odd % 2 == 0) odd /= 2;
    long long e = p >> rho(m);
    Word Ub = b.emit("U^" + std::to_string(odd), {Axis::z(), odd, m}, b.pw(Zp, e));
    Un = b.red(Ub * b.evenU((n - odd) / 2));
  }
  Un = b.emit("U^" + std::to_string(n), {Axis::z(), n, m}, Un);
  b.emit("U", {Axis::z(), 1, m}, b.pw(Un, modinv(n, m)));
  Word Xq = b.pick("R_x(" + twopi(q) + ")", {Axis::x(), 1, q},
                   {b.conj(Un.inverse(), Word::letter("B", 1)), b.conj(Un, Word::letter("B", 1))});
  b.emit("That", {Axis::x(), 1, lcm_ll(p, q)}, b.combine(Word::letter("A", 1), p, Xq, q));
}

void express_thm5(Builder& b, Case kase) {
  const long long p = b.spec.p, q = b.spec.q, n = b.spec.n, m = b.spec.m;
  u_powers(b, m);
  Word U2 = b.evenU(1);
  Word Rx4 = b.emit("R_x(pi/2)", {Axis::x(), 1, 4}, Word::letter("A", p / 4));
  Word B = Word::letter("B", 1);
  if (kase == Case::Thm5_4) {
    Word V = b.evenU(((m / 4 - n) / 2) % (m / 2));
    Word Y = b.pick("R_y(" + twopi(q) + ")", {Axis::y(), 1, q}, {b.conj(V, B), b.conj(V, B.inverse())});
    Word Zq = b.pick("R_z(" + twopi(q) + ")", {Axis::z(), 1, q}, {b.conj(Rx4, Y), b.conj(Rx4.inverse(), Y)});
    long long t = lcm_ll(q, m / 2);
    Word Zt = b.emit("R_z(" + twopi(t) + ")", {Axis::z(), 1, t}, b.combine(Zq, q, U2, m / 2));
    b.emit("R_z(pi)", {Axis::z(), 1, 2}, b.pw(b.Q, m / 4));
    b.emit("witness A", {Axis::x(), 1, p}, Word::letter("A", 1));
    b.rotate_axis("witness B", {Axis::ell(1, 2 * t), 1, 2}, Zt, t, Word::letter("B", q / 2));
    return;
  }
  Word Rz4 = b.emit("R_z(pi/2)", {Axis::z(), 1, 4}, b.evenU(m / 8));
  Word S = b.emit("S", {Axis::y(), 1, 4}, Rx4.inverse() * Rz4 * Rx4);
  Word Zp = b.pick("R_z(" + twopi(p) + ")", {Axis::z(), 1, p},
                   {b.conj(S.inverse(), Word::letter("A", 1)), b.conj(S, Word::letter("A", 1))});
  if (kase == Case::Thm5_3) {
    long long s = lcm_ll(p, m / 2);
    Word Zs = b.emit("R_z(" + twopi(s) + ")", {Axis::z(), 1, s}, b.combine(Zp, p, U2, m / 2));
    b.emit("witness A", {Axis::x(), 1, 4}, Rx4);
    b.rotate_axis("witness B", {Axis::ell(1, 2 * s), 1, q}, Zs, s, B);
    return;
  }
  Word L = b.red(Rz4 * Word::letter("B", q / 4) * Rz4.inverse());
  Word Zq = b.pick("R_z(" + twopi(q) + ")", {Axis::z(), 1, q}, {b.conj(L.inverse(), B), b.conj(L, B)});
  long long pq = lcm_ll(p, q);
  Word Zpq = b.combine(Zp, p, Zq, q);
  long long r = lcm_ll(pq, m / 2);
  Word Zr = b.emit("R_z(" + twopi(r) + ")", {Axis::z(), 1, r}, b.combine(Zpq, pq, U2, m / 2));
  b.emit("witness A", {Axis::x(), 1, 4}, Rx4);
  b.rotate_axis("witness B", {Axis::ell(1, 2 * r), 1, 4}, Zr, r, Word::letter("B", q / 4));
}

}  // namespace

std::vector<Expression> express_generators(const GroupSpec& spec) {
  StructureReport rep = classify(spec);
  const GroupSpec& c = rep.canonical.spec;
  Builder b(c);
  switch (rep.kase) {
    case Case::Thm2_4:
      express_gpq24(b);
      break;
    case Case::Thm4_1:
    case Case::Thm4_2:
    case Case::Thm4_3:
      express_thm4(b, rep.kase);
      break;
    case Case::Thm5_2:
    case Case::Thm5_3:
    case Case::Thm5_4:
      express_thm5(b, rep.kase);
      break;
    default:
      throw UnsupportedCase("not a coincidence case: " + spec.str() + " is " + rep.case_name());
  }
  return b.out;
}

}  // namespace rotlab
