#pragma once

#include <cstddef>
#include <vector>

#include "snowflake/presentations.hpp"
#include "snowflake/words.hpp"

namespace snowflake {

/// Subgroup given by generator words in the ambient alphabet.
struct SubgroupDatum {
  std::vector<Word> generators;
};

/// Complete permutation action of the generators on right cosets, with a
/// prefix-closed (Schreier) transversal. Coset 0 is the subgroup itself.
class CosetTable {
 public:
  CosetTable(int ngens, std::vector<std::vector<int>> rows, std::vector<Word> transversal)
      : ngens_(ngens), rows_(std::move(rows)), transversal_(std::move(transversal)) {}

  int index() const { return static_cast<int>(rows_.size()); }
  int ngens() const { return ngens_; }
  int act(int coset, int gen, int sign) const { return rows_[coset][2 * gen + (sign < 0)]; }
  int act(int coset, const Word& w) const;
  const Word& transversal(int coset) const { return transversal_[coset]; }
  const std::vector<Word>& transversals() const { return transversal_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// True iff every relator traces a closed loop at every coset.
  bool relators_close(const Presentation& p) const;

 private:
  int ngens_;
  std::vector<std::vector<int>> rows_;
  std::vector<Word> transversal_;
};

/// HLT-style enumeration with immediate coincidence handling; throws
/// resource_limit_error if more than max_cosets rows get defined.
CosetTable todd_coxeter(const Presentation& p, const SubgroupDatum& h, std::size_t max_cosets);

/// Schreier generators of the kernel of a surjective character.
SubgroupDatum kernel_subgroup(const Presentation& p, const CharacterMap& c);

struct RsPresentation {
  Presentation presentation;
  /// Schreier generator words in the ambient alphabet, indexed by new gen id.
  std::vector<Word> schreier_words;
};

RsPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

struct CoverReport {
  std::vector<CheckItem> stages;
  bool all_ok = false;
  int index = 0;
  RsPresentation rs;
  Presentation simplified;
};

/// Full pipeline: mod-2 character on the Klein form, kernel subgroup, coset
/// enumeration (expected index 2), subgroup presentation, simplification, and
/// bidirectional relator-triviality checks against G_{p,q}.
CoverReport verify_cover_iso(int p, int q, std::size_t max_cosets = 1000000,
                             int tietze_budget = 10000);

}  // namespace snowflake
