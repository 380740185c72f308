#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace snowflake {

struct Generator {
  int id = 0;
  std::string name;
};

/// Ordered list of generators with dense ids (id == position).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int add(std::string name);
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int id) const { return gens_.at(id); }
  const std::vector<Generator>& gens() const { return gens_; }
  std::optional<int> find(std::string_view name) const;

 private:
  std::vector<Generator> gens_;
};

/// One signed generator occurrence; sign is +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w is freely equal to conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);
Word power(const Word& w, long long n);
Word conjugate(const Word& w, const Word& g);  // g w g^-1
Word rotated(const Word& w, std::size_t k);
Word letter_word(int gen, int sign, long long count = 1);

/// Per-generator images under a map between alphabets.
class GeneratorMap {
 public:
  GeneratorMap(const Alphabet& source, Alphabet target);
  void set_image(int source_gen, Word image);
  bool has_image(int source_gen) const;
  const Word& image(int source_gen) const;  // throws if unset
  const Alphabet& target() const { return target_; }
  int source_size() const { return static_cast<int>(images_.size()); }

 private:
  std::vector<std::optional<Word>> images_;
  Alphabet target_;
};

/// Applies the map letter by letter and freely reduces the result.
Word substitute(const Word& w, const GeneratorMap& m);

/// `a^-1 b a b` syntax: names with optional integer exponents, whitespace
/// optional, `1` stands for the empty word.
Word parse_word(const Alphabet& a, std::string_view text);
std::string format_word(const Alphabet& a, const Word& w);

/// Compact byte encoding, suitable as a hash/set key.
std::string encode_key(const Word& w);

}  // namespace snowflake
