#include "snowflake/hnn.hpp"

#include <algorithm>
#include <stdexcept>

namespace snowflake {

BaseElement base_identity(BaseKind kind) { return BaseElement{kind, 0, 0}; }

BaseElement base_mul(const BaseElement& a, const BaseElement& b) {
  if (a.kind != b.kind) throw std::invalid_argument("base kind mismatch");
  if (a.kind == BaseKind::z2) return BaseElement{a.kind, a.i + b.i, a.j + b.j};
  bool flip = (b.i & 1) != 0;
  return BaseElement{a.kind, a.i + b.i, (flip ? -a.j : a.j) + b.j};
}

BaseElement base_inverse(const BaseElement& a) {
  if (a.kind == BaseKind::z2) return BaseElement{a.kind, -a.i, -a.j};
  bool odd = (a.i & 1) != 0;
  return BaseElement{a.kind, -a.i, odd ? a.j : -a.j};
}

BaseElement base_power(const BaseElement& a, const BigInt& m) {
  if (a.kind == BaseKind::z2) return BaseElement{a.kind, m * a.i, m * a.j};
  if ((a.i & 1) == 0) return BaseElement{a.kind, m * a.i, m * a.j};
  // odd first coordinate: squares kill the b part
  if ((m & 1) == 0) return BaseElement{a.kind, m * a.i, 0};
  return BaseElement{a.kind, m * a.i, a.j};
}

bool is_base_identity(const BaseElement& a) { return a.i == 0 && a.j == 0; }

std::optional<BigInt> cyclic_membership(const BaseElement& g, const BaseElement& c) {
  if (g.kind != c.kind) throw std::invalid_argument("base kind mismatch");
  if (is_base_identity(g)) return BigInt(0);
  if (is_base_identity(c)) return std::nullopt;
  BigInt m;
  if (c.i != 0) {
    if (g.i % c.i != 0) return std::nullopt;
    m = g.i / c.i;
  } else {
    if (g.i != 0 || g.j % c.j != 0) return std::nullopt;
    m = g.j / c.j;
  }
  if (base_power(c, m) == g) return m;
  return std::nullopt;
}

const EdgeDatum* HnnGroup::edge_for(int gen) const {
  for (const EdgeDatum& e : edges)
    if (e.stable_gen == gen) return &e;
  return nullptr;
}

BaseElement HnnGroup::base_letter(int gen, int sign) const {
  if (gen == 0) return BaseElement{base_kind, sign, 0};
  if (gen == 1) return BaseElement{base_kind, 0, sign};
  throw std::invalid_argument("not a base generator");
}

HnnGroup make_hnn(HnnFamily family, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  HnnGroup h;
  if (family == HnnFamily::r_klein) {
    h.base_kind = BaseKind::klein;
    h.alphabet = Alphabet({"a", "b", "t"});
    h.edges = {EdgeDatum{2, BaseElement{h.base_kind, 2 * q, 0},
                         BaseElement{h.base_kind, 2 * p, 1}}};
  } else {
    h.base_kind = BaseKind::z2;
    h.alphabet = Alphabet({"a", "b", "s", "t"});
    h.edges = {
        EdgeDatum{2, BaseElement{h.base_kind, q, 0}, BaseElement{h.base_kind, p, 1}},
        EdgeDatum{3, BaseElement{h.base_kind, q, 0}, BaseElement{h.base_kind, p, -1}}};
  }
  return h;
}

HnnGroup make_base_group(BaseKind kind) {
  HnnGroup h;
  h.base_kind = kind;
  h.alphabet = Alphabet({"a", "b"});
  return h;
}

namespace {

struct FoldedWord {
  BaseElement head;
  std::vector<BrittonSyllable> syllables;
};

FoldedWord fold(const HnnGroup& h, const Word& w) {
  FoldedWord f;
  f.head = base_identity(h.base_kind);
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= h.alphabet.size())
      throw std::invalid_argument("letter outside the group's alphabet");
    if (h.is_stable(l.gen)) {
      f.syllables.push_back(BrittonSyllable{l.gen, l.sign, base_identity(h.base_kind)});
    } else {
      BaseElement x = h.base_letter(l.gen, l.sign);
      BaseElement& target = f.syllables.empty() ? f.head : f.syllables.back().tail;
      target = base_mul(target, x);
    }
  }
  return f;
}

// Pinch between syllables k and k+1: t^e g t^-e with g in the associated
// subgroup selected by e. Returns the replacement base element on success.
std::optional<BaseElement> pinch_value(const HnnGroup& h, const BrittonSyllable& left,
                                       const BrittonSyllable& right) {
  if (left.stable != right.stable || left.sign != -right.sign) return std::nullopt;
  const EdgeDatum* e = h.edge_for(left.stable);
  if (left.sign < 0) {
    auto m = cyclic_membership(left.tail, e->domain_gen);
    if (!m) return std::nullopt;
    return base_power(e->codomain_gen, *m);
  }
  auto m = cyclic_membership(left.tail, e->codomain_gen);
  if (!m) return std::nullopt;
  return base_power(e->domain_gen, *m);
}

}  // namespace

BrittonForm britton_reduce(const HnnGroup& h, const Word& w) {
  FoldedWord f = fold(h, free_reduce(w));
  BrittonForm out;
  out.head = f.head;
  auto& stack = out.syllables;
  auto merge_into_prev = [&](const BaseElement& x) {
    BaseElement& target = stack.empty() ? out.head : stack.back().tail;
    target = base_mul(target, x);
  };
  for (BrittonSyllable& s : f.syllables) {
    if (!stack.empty()) {
      if (auto v = pinch_value(h, stack.back(), s)) {
        stack.pop_back();
        merge_into_prev(base_mul(*v, s.tail));
        continue;
      }
    }
    stack.push_back(std::move(s));
  }
  return out;
}

BrittonForm britton_reduce(const HnnGroup& h, const Word& w, PinchStrategy strategy,
                           std::mt19937* rng) {
  if (strategy == PinchStrategy::leftmost) return britton_reduce(h, w);
  FoldedWord f = fold(h, free_reduce(w));
  BaseElement head = f.head;
  std::vector<BrittonSyllable> syls = std::move(f.syllables);
  for (;;) {
    std::vector<std::size_t> pinches;
    for (std::size_t k = 0; k + 1 < syls.size(); ++k)
      if (pinch_value(h, syls[k], syls[k + 1])) pinches.push_back(k);
    if (pinches.empty()) break;
    std::size_t k;
    if (strategy == PinchStrategy::rightmost)
      k = pinches.back();
    else {
      if (!rng) throw std::invalid_argument("random strategy requires an rng");
      k = pinches[std::uniform_int_distribution<std::size_t>(0, pinches.size() - 1)(*rng)];
    }
    BaseElement v = *pinch_value(h, syls[k], syls[k + 1]);
    BaseElement merged = base_mul(v, syls[k + 1].tail);
    BaseElement& target = k == 0 ? head : syls[k - 1].tail;
    target = base_mul(target, merged);
    syls.erase(syls.begin() + static_cast<std::ptrdiff_t>(k),
               syls.begin() + static_cast<std::ptrdiff_t>(k) + 2);
  }
  BrittonForm out;
  out.head = head;
  out.syllables = std::move(syls);
  return out;
}

bool is_trivial(const HnnGroup& h, const Word& w) { return britton_reduce(h, w).is_identity(); }

std::string format_britton(const HnnGroup& h, const BrittonForm& f) {
  auto base_str = [](const BaseElement& e) {
    std::string s;
    if (e.i != 0) s += "a^" + e.i.str();
    if (e.j != 0) s += (s.empty() ? "" : " ") + std::string("b^") + e.j.str();
    return s.empty() ? std::string("1") : s;
  };
  std::string out = base_str(f.head);
  for (const BrittonSyllable& s : f.syllables) {
    out += " " + h.alphabet.gen(s.stable).name + (s.sign > 0 ? "" : "^-1");
    std::string t = base_str(s.tail);
    if (t != "1") out += " " + t;
  }
  return out;
}

SnowflakeWitness snowflake_witness(int p, int q, int k) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  const int a = 0, s = 2, t = 3;
  Word w = letter_word(a, 1);
  for (int lvl = 0; lvl < k; ++lvl) {
    Word wq = power(w, q);
    Word next = concat(concat(letter_word(s, -1), wq, letter_word(s, 1)),
                       concat(letter_word(t, -1), wq, letter_word(t, 1)));
    w = std::move(next);
  }
  SnowflakeWitness out;
  out.level = k;
  out.word = std::move(w);
  out.target_power = boost::multiprecision::pow(BigInt(2 * p), static_cast<unsigned>(k));
  out.length = out.word.size();
  return out;
}

bool verify_witness(const HnnGroup& g, const SnowflakeWitness& w) {
  BrittonForm f = britton_reduce(g, w.word);
  if (f.syllable_count() != 0) return false;
  return f.head == BaseElement{g.base_kind, w.target_power, 0};
}

}  // namespace snowflake
