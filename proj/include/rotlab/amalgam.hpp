#pragma once

#include "rotlab/groups.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rotlab {

/// One factor-membership rule: X^e lies in `factor` (0 = left, 1 = right)
/// whenever e is a multiple of `modulus`.
struct Membership {
  int factor;
  long long modulus;
};

/// G = L *_H R with a finite common subgroup H, described concretely by
/// matrices. Coset representatives are chosen by matrix order, so the choice
/// is deterministic and independent of the word that produced an element.
struct AmalgamDecomposition {
  GroupSpec spec;     // group the input words live in
  GroupSpec working;  // group whose generators the factor rules refer to
  std::string left, right, common;
  std::function<Word(const Word&)> translate;  // spec word -> working word
  GeneratorTable table;                        // working generators
  OrderMap orders;
  std::map<std::string, std::vector<Membership>> membership;
  std::vector<Word> common_generators;
  /// Every element of H with a word for it; the identity comes first.
  std::vector<std::pair<Word, ExactMat3>> common_elements;
};

/// Throws UnsupportedCase when the spec is not a free or amalgamated product
/// whose generators lie in the factors (finite groups, the quotient case, and
/// the D_p *_{D2} D_t case when q > 2).
AmalgamDecomposition amalgam_for(const GroupSpec& spec);

struct AmalgamPiece {
  int factor;  // 0 = left, 1 = right
  Word word;   // over the working alphabet
  ExactMat3 matrix;
};

/// w = h * k_1 * k_2 * ... with h in H and each k_i the chosen representative
/// of its right coset H k_i; consecutive pieces alternate factors.
struct AmalgamNormalForm {
  Word h_word;
  ExactMat3 h;
  std::vector<AmalgamPiece> pieces;
  bool is_identity() const { return pieces.empty() && h.is_identity(); }
  /// Same element pieces and h (compared as matrices).
  bool same_as(const AmalgamNormalForm& o) const;
};

/// Throws UnsupportedCase("syllable ... not in either factor") when a
/// syllable cannot be placed.
AmalgamNormalForm amalgam_nf(const Word& w, const AmalgamDecomposition& d);

}  // namespace rotlab
