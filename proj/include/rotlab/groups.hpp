#pragma once

#include "rotlab/spec.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rotlab {

/// 2-adic valuation; rho(0) is treated as 0.
int rho(long long N);

/// Canonical form of a G_{n/m}(p,q) spec: m odd or 4 | m, and rho(p) >= rho(q).
struct CanonicalForm {
  GroupSpec input;
  GroupSpec spec;
  bool flipped = false;  // ell replaced by -ell, m halved
  bool swapped = false;  // roles of p and q exchanged
  std::vector<std::string> changes;

  /// Word over the input {A,B} to a word over the canonical {A,B}. The
  /// image is equal as a matrix after conjugation by conjugator(), so it is
  /// the identity exactly when the input is.
  Word translate(const Word& w) const;
  /// R with R * eval(w) * R^-1 = eval(translate(w)).
  ExactMat3 conjugator() const;
};

/// Identity transform for families other than G_nm.
CanonicalForm canonicalize(const GroupSpec& spec);

enum class Case {
  Thm1_1, Thm1_2, Thm1_3,
  Thm2_1, Thm2_2, Thm2_3, Thm2_4,
  Thm3_free, Thm3_m4,
  Thm4_1, Thm4_2, Thm4_3,
  Thm5_1, Thm5_2, Thm5_3, Thm5_4,
  Finite,
};

std::string case_id(Case c);

/// Relators over abstract generators, each bound to a concrete rotation.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  GeneratorTable table;
};

struct AmalgamInfo {
  std::string left, right, common;
  std::string left_generators, right_generators, common_generators;
};

struct StructureReport {
  GroupSpec input;
  CanonicalForm canonical;
  Case kase = Case::Finite;
  std::string finite_kind;  // "Z_p", "D_p" or "cube" when kase == Finite
  std::string structure;
  std::optional<long long> order;
  std::optional<Presentation> presentation;
  std::optional<AmalgamInfo> amalgam;
  /// Group the spec coincides with, when one is known.
  std::optional<GroupSpec> witness;
  std::map<std::string, long long> derived;

  std::string case_name() const;
};

/// Throws InternalError("classification gap") if no case applies.
StructureReport classify(const GroupSpec& spec);

/// A word over the canonical spec's {A,B} (or {A,C}) equal to rot(axis, k, d).
struct Expression {
  std::string target;
  RotationSymbol rotation;
  Word word;
};

/// Constructive words for coincidence cases. Every word is checked by exact
/// matrix equality before it is returned. Throws UnsupportedCase
/// ("not a coincidence case") for Thm3.* and Thm5.1 specs.
std::vector<Expression> express_generators(const GroupSpec& spec);

struct RelationCheck {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped"
  std::string detail;
  std::optional<ExactMat3> offending;
};

struct RelationReport {
  GroupSpec spec;
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

/// R_x^pi R_y^theta R_x^pi R_y^theta = I (theta = 2 pi/q), (R_y^{pi/2} R_x^{pi/2})^3 = I,
/// and B^{q/2} A^{p/2} = U^{2n} when p and q are even.
RelationReport verify_relations(const GroupSpec& spec);

}  // namespace rotlab
