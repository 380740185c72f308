#pragma once

#include <string>
#include <vector>

#include "snowflake/words.hpp"

namespace snowflake {

/// Finite presentation; relators are kept freely and cyclically reduced.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
};

/// Parameters of the one-relator family <x,y,t | x^m = y^n, t^-1 x^k t = x^l y>.
struct FamilyParams {
  long long m = 2;
  long long n = 2;
  long long k = 2;
  long long l = 1;
};

Presentation make_one_relator_R(const FamilyParams& params);
/// Specialization (m,n,k,l) = (2,2,2q,2p-1).
Presentation make_one_relator_R_pq(int p, int q);
/// <a,b,t | a^-1 b a b, t^-1 a^2q t = a^2p b>, the Klein-bottle form of R_pq.
Presentation make_klein_form(int p, int q);
/// <a,b,s,t | [a,b], s^-1 a^q s = a^p b, t^-1 a^q t = a^p b^-1>.
Presentation make_snowflake_G(int p, int q);
/// <a,b | [a,b]>.
Presentation make_z2_commutator();

/// Homomorphism to Z/modulus given by per-generator residues.
struct CharacterMap {
  long long modulus = 2;
  std::vector<long long> residues;
};

/// True iff every relator has residue-weighted exponent sum 0 mod modulus.
bool character_check(const Presentation& p, const CharacterMap& c);
bool character_surjective(const CharacterMap& c);
/// Mod-2 map sending the first generator to 1 and the rest to 0.
CharacterMap mod2_first_generator(const Alphabet& a);

struct TietzeResult {
  Presentation presentation;
  bool budget_exhausted = false;
  int eliminations = 0;
};

/// Cheap moves (reduction, dedup up to rotation/inversion, dropping trivial
/// relators) to fixpoint, then eliminations of generators occurring exactly
/// once in some relator. An elimination is applied only when it does not
/// increase the total relator length, so the result is a well-defined fixpoint.
TietzeResult tietze_simplify(const Presentation& p, int budget = 10000);

std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // elementary divisors > 1, ascending
  bool operator==(const AbelianInvariants&) const = default;
};
AbelianInvariants abelian_invariants(const Presentation& p);

/// x -> a, y -> ab, t -> t.
GeneratorMap klein_rewrite_map(const Alphabet& r_alphabet, const Alphabet& klein_alphabet);
/// a -> x, b -> x^-1 y, t -> t.
GeneratorMap klein_rewrite_inverse_map(const Alphabet& klein_alphabet, const Alphabet& r_alphabet);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RewriteReport {
  std::vector<CheckItem> checks;
  bool all_ok = false;
};

/// Checks that the Klein rewrite maps round-trip on generators and that every
/// relator of R_pq maps to a word trivial in the Klein form.
RewriteReport verify_rewrite(int p, int q);

}  // namespace snowflake
