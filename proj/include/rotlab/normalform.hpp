#pragma once

#include "rotlab/errors.hpp"
#include "rotlab/groups.hpp"

#include <string>
#include <vector>

namespace rotlab {

/// One applied rewrite, with the (syllables, quarter-turn T count) measure after it.
struct RewriteStep {
  std::string rule;
  Word result;
  long long syllables = 0;
  long long quarter_ts = 0;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

/// Normal form in Ghat(m,4) over {S,T}: empty, S^a, a single T syllable with
/// S on either side, or a word with odd interior S exponents, no half-turn T
/// and T^{+-m/4} only at a boundary syllable whose outer S is even. Every
/// applied rule strictly decreases the measure. Output matrix equals input
/// matrix (checked; InternalError otherwise).
Word nf_hatG_m4(const Word& w, long long m, RewriteTrace* trace = nullptr);

/// Word problem in Ghat(m,4) (any m >= 1) by normal form plus cyclic conjugation.
bool hatg_word_is_identity(const Word& w, long long m);

/// Raised by nf_G_pq when 4 | p and 4 | q; carries the rewritten {S,T} word in Ghat(s,4).
class DelegateToHatG : public Error {
 public:
  DelegateToHatG(long long s, Word translated)
      : Error("delegate to hatG form: 4 divides both p and q, use Ghat(" + std::to_string(s) + ",4)"),
        s_(s), word_(std::move(translated)) {}
  long long s() const { return s_; }
  const Word& translated() const { return word_; }

 private:
  long long s_;
  Word word_;
};

/// {S,T} image of a G(p,q) word under A = T^{s/p}, C = S^-1 T^{s/q} S, s = lcm(p,q).
Word gpq_to_hatg(const Word& w, long long p, long long q);

/// Normal form in G(p,q) over {A,C}: half-turn syllables are pushed out until
/// at most two syllables remain or none is a half turn. Nonempty output is
/// never the identity. Throws DelegateToHatG when 4 | p and 4 | q.
Word nf_G_pq(const Word& w, long long p, long long q);

/// Image of a G_{n/m}(p,q) word in G(s,m), s = lcm(p,q), under
/// A -> A^{s/p}, B -> C^n A^{s/q} C^-n. Same matrix.
Word embed_gnm_in_gpq(const GroupSpec& spec, const Word& w);

/// Normal form gamma^c prod A^a_i B^b_i (gamma = R_z^pi) for the quotient case
/// with rho(p) = rho(q) = 1 < rho(m). Throws UnsupportedCase for other specs.
/// The spec must already be canonical.
Word nf_thm5_case1(const Word& w, const GroupSpec& spec);

/// Generator table of the canonical spec extended with gamma = R_z^pi.
GeneratorTable thm5_table(const GroupSpec& spec);

struct IdentityVerdict {
  bool identity = false;
  std::string method;
};

/// Decides eval_word(w) == I via the case's normal form, always cross-checked
/// against the exact matrix; disagreement throws InternalError.
IdentityVerdict is_identity(const GroupSpec& spec, const Word& w);
/// Same, with the oracle matrix eval_word(w) already computed by the caller.
IdentityVerdict is_identity(const GroupSpec& spec, const Word& w, const ExactMat3& oracle);

/// The normal form is_identity works with, over the canonical spec (or the
/// embedding group); reported by the normalize command.
struct NormalFormReport {
  GroupSpec input;
  GroupSpec working;  // group the normal form lives in
  std::string method;
  Word canonical_word;
  Word normal_form;
  bool identity = false;
};

NormalFormReport normalize(const GroupSpec& spec, const Word& w);

}  // namespace rotlab
