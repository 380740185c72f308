#include "snowflake/words.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace snowflake {

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

int Alphabet::add(std::string name) {
  if (name.empty()) throw std::invalid_argument("generator name must be nonempty");
  if (find(name)) throw std::invalid_argument("duplicate generator name: " + name);
  int id = static_cast<int>(gens_.size());
  gens_.push_back(Generator{id, std::move(name)});
  return id;
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g.id;
  return std::nullopt;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].gen == w[i - 1].gen && w[i].sign == -w[i - 1].sign) return false;
  return true;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conj;
  while (core.size() >= 2 && core.front().gen == core.back().gen &&
         core.front().sign == -core.back().sign) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return CyclicReduction{std::move(core), std::move(conj)};
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign)
    return false;
  return true;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

Word power(const Word& w, long long n) {
  Word base = n >= 0 ? w : inverse(w);
  long long reps = n >= 0 ? n : -n;
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(reps));
  for (long long i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word conjugate(const Word& w, const Word& g) { return concat(g, w, inverse(g)); }

Word rotated(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

Word letter_word(int gen, int sign, long long count) {
  Word out;
  if (count < 0) {
    sign = -sign;
    count = -count;
  }
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) out.push_back(Letter{gen, sign});
  return out;
}

GeneratorMap::GeneratorMap(const Alphabet& source, Alphabet target)
    : images_(source.size()), target_(std::move(target)) {}

void GeneratorMap::set_image(int source_gen, Word image) {
  images_.at(source_gen) = std::move(image);
}

bool GeneratorMap::has_image(int source_gen) const {
  return source_gen >= 0 && source_gen < source_size() && images_[source_gen].has_value();
}

const Word& GeneratorMap::image(int source_gen) const {
  if (!has_image(source_gen))
    throw std::invalid_argument("generator map has no image for generator id " +
                                std::to_string(source_gen));
  return *images_[source_gen];
}

Word substitute(const Word& w, const GeneratorMap& m) {
  Word out;
  auto push_reduced = [&out](const Letter& l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  };
  for (const Letter& l : w) {
    const Word& img = m.image(l.gen);
    if (l.sign > 0)
      for (const Letter& x : img) push_reduced(x);
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(Letter{it->gen, -it->sign});
  }
  return out;
}

Word parse_word(const Alphabet& a, std::string_view text) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto at_boundary = [&](std::size_t pos) {
    return pos >= n || std::isspace(static_cast<unsigned char>(text[pos]));
  };
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '1' && at_boundary(i + 1)) {
      ++i;
      continue;
    }
    // longest generator name matching at position i
    int best = -1;
    std::size_t best_len = 0;
    for (const Generator& g : a.gens()) {
      if (g.name.size() > best_len && text.substr(i, g.name.size()) == g.name) {
        best = g.id;
        best_len = g.name.size();
      }
    }
    if (best < 0)
      throw std::invalid_argument("unknown generator at position " + std::to_string(i) +
                                  " in word '" + std::string(text) + "'");
    i += best_len;
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected integer exponent in word '" + std::string(text) +
                                    "'");
      long long v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      exp = neg ? -v : v;
    }
    int sign = exp >= 0 ? 1 : -1;
    for (long long r = 0; r < std::llabs(exp); ++r) out.push_back(Letter{best, sign});
  }
  return out;
}

std::string format_word(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long exp = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += a.gen(w[i].gen).name;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

std::string encode_key(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (const Letter& l : w)
    out.push_back(static_cast<char>(2 * l.gen + (l.sign < 0 ? 1 : 0) + 1));
  return out;
}

}  // namespace snowflake
