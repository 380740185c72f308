#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <random>
#include <vector>

#include "snowflake/words.hpp"

namespace snowflake {

using BigInt = boost::multiprecision::cpp_int;

enum class BaseKind { z2, klein };

/// Element a^i b^j of Z^2 or of the Klein bottle group <a,b | a^-1 b a b>.
/// Klein multiplication: (i,j)(k,l) = (i+k, (-1)^k j + l).
struct BaseElement {
  BaseKind kind = BaseKind::z2;
  BigInt i;
  BigInt j;
  bool operator==(const BaseElement&) const = default;
};

BaseElement base_identity(BaseKind kind);
BaseElement base_mul(const BaseElement& a, const BaseElement& b);
BaseElement base_inverse(const BaseElement& a);
BaseElement base_power(const BaseElement& a, const BigInt& m);
bool is_base_identity(const BaseElement& a);

/// Exponent m with g = c^m, if any.
std::optional<BigInt> cyclic_membership(const BaseElement& g, const BaseElement& c);

/// Stable letter conjugation datum: t^-1 domain^m t = codomain^m.
struct EdgeDatum {
  int stable_gen = 0;
  BaseElement domain_gen;
  BaseElement codomain_gen;
};

enum class HnnFamily { r_klein, g_snowflake };

/// Multi-stable-letter HNN extension of Z^2 or the Klein bottle group with
/// cyclic associated subgroups. Generators 0 and 1 of the alphabet are the
/// base generators a and b; the remaining ones are stable letters.
struct HnnGroup {
  BaseKind base_kind = BaseKind::z2;
  Alphabet alphabet;
  std::vector<EdgeDatum> edges;

  const EdgeDatum* edge_for(int gen) const;
  bool is_stable(int gen) const { return edge_for(gen) != nullptr; }
  BaseElement base_letter(int gen, int sign) const;
};

HnnGroup make_hnn(HnnFamily family, int p, int q);
/// Base group alone (no stable letters); alphabet {a, b}.
HnnGroup make_base_group(BaseKind kind);

struct BrittonSyllable {
  int stable = 0;
  int sign = 1;
  BaseElement tail;
};

/// Pinch-free alternating form g0 t1^e1 g1 ... tn^en gn.
struct BrittonForm {
  BaseElement head;
  std::vector<BrittonSyllable> syllables;
  int syllable_count() const { return static_cast<int>(syllables.size()); }
  bool is_identity() const { return syllables.empty() && is_base_identity(head); }
};

enum class PinchStrategy { leftmost, rightmost, random_order };

BrittonForm britton_reduce(const HnnGroup& h, const Word& w);
BrittonForm britton_reduce(const HnnGroup& h, const Word& w, PinchStrategy strategy,
                           std::mt19937* rng = nullptr);
bool is_trivial(const HnnGroup& h, const Word& w);
std::string format_britton(const HnnGroup& h, const BrittonForm& f);

/// Witness family w_0 = a, w_{k+1} = s^-1 w_k^q s t^-1 w_k^q t, with
/// w_k = a^{(2p)^k} in G_{p,q} and length 2q len(k-1) + 4.
struct SnowflakeWitness {
  int level = 0;
  Word word;
  BigInt target_power;  // w_k equals a to this power
  std::size_t length = 0;
};

SnowflakeWitness snowflake_witness(int p, int q, int k);
/// Confirms w_k a^-N is trivial via Britton reduction.
bool verify_witness(const HnnGroup& g, const SnowflakeWitness& w);

}  // namespace snowflake
