#include "snowflake/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "snowflake/hnn.hpp"

namespace snowflake {

namespace {

Word normalize_relator(const Word& w) { return cyclic_reduce(w).core; }

void check_pq(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
}

long long mod_norm(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

// Least representative among all rotations of w and of w^-1.
Word canonical_cyclic(const Word& w) {
  Word best = w;
  auto consider = [&best](const Word& u) {
    for (std::size_t k = 0; k < std::max<std::size_t>(u.size(), 1); ++k) {
      Word r = rotated(u, k);
      if (r < best) best = r;
    }
  };
  consider(w);
  consider(inverse(w));
  return best;
}

}  // namespace

Presentation make_one_relator_R(const FamilyParams& fp) {
  if (std::llabs(fp.m) < 2 || std::llabs(fp.n) < 2)
    throw std::invalid_argument("|m| and |n| must be at least 2");
  if (fp.k == 0) throw std::invalid_argument("k must be nonzero");
  if (mod_norm(fp.l, std::llabs(fp.m)) == 0)
    throw std::invalid_argument("l must be nonzero mod m");
  Alphabet al({"x", "y", "t"});
  const int x = 0, y = 1, t = 2;
  Word r1 = concat(letter_word(x, 1, fp.m), letter_word(y, 1, -fp.n));
  // t^-1 x^k t (x^l y)^-1
  Word r2 = concat(concat(letter_word(t, -1), letter_word(x, 1, fp.k), letter_word(t, 1)),
                   concat(letter_word(y, -1), letter_word(x, 1, -fp.l)));
  return Presentation{std::move(al), {normalize_relator(r1), normalize_relator(r2)}};
}

Presentation make_one_relator_R_pq(int p, int q) {
  check_pq(p, q);
  return make_one_relator_R(FamilyParams{2, 2, 2LL * q, 2LL * p - 1});
}

Presentation make_klein_form(int p, int q) {
  check_pq(p, q);
  Alphabet al({"a", "b", "t"});
  const int a = 0, b = 1, t = 2;
  Word r1 = {Letter{a, -1}, Letter{b, 1}, Letter{a, 1}, Letter{b, 1}};
  // t^-1 a^2q t (a^2p b)^-1
  Word r2 = concat(concat(letter_word(t, -1), letter_word(a, 1, 2LL * q), letter_word(t, 1)),
                   concat(letter_word(b, -1), letter_word(a, 1, -2LL * p)));
  return Presentation{std::move(al), {normalize_relator(r1), normalize_relator(r2)}};
}

Presentation make_snowflake_G(int p, int q) {
  check_pq(p, q);
  Alphabet al({"a", "b", "s", "t"});
  const int a = 0, b = 1, s = 2, t = 3;
  Word r1 = {Letter{a, -1}, Letter{b, -1}, Letter{a, 1}, Letter{b, 1}};
  Word r2 = concat(concat(letter_word(s, -1), letter_word(a, 1, q), letter_word(s, 1)),
                   concat(letter_word(b, -1), letter_word(a, 1, -p)));
  Word r3 = concat(concat(letter_word(t, -1), letter_word(a, 1, q), letter_word(t, 1)),
                   concat(letter_word(b, 1), letter_word(a, 1, -p)));
  return Presentation{std::move(al),
                      {normalize_relator(r1), normalize_relator(r2), normalize_relator(r3)}};
}

Presentation make_z2_commutator() {
  Alphabet al({"a", "b"});
  Word r = {Letter{0, -1}, Letter{1, -1}, Letter{0, 1}, Letter{1, 1}};
  return Presentation{std::move(al), {r}};
}

bool character_check(const Presentation& p, const CharacterMap& c) {
  if (c.modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (static_cast<int>(c.residues.size()) < p.alphabet.size())
    throw std::invalid_argument("character does not cover the alphabet");
  for (const Word& r : p.relators) {
    long long sum = 0;
    for (const Letter& l : r) sum += l.sign * c.residues[l.gen];
    if (mod_norm(sum, c.modulus) != 0) return false;
  }
  return true;
}

bool character_surjective(const CharacterMap& c) {
  long long g = c.modulus;
  for (long long r : c.residues) g = std::gcd(g, mod_norm(r, c.modulus));
  return g == 1;
}

CharacterMap mod2_first_generator(const Alphabet& a) {
  CharacterMap c;
  c.modulus = 2;
  c.residues.assign(a.size(), 0);
  if (!c.residues.empty()) c.residues[0] = 1;
  return c;
}

namespace {

struct Elimination {
  std::size_t relator;
  int gen;
  std::size_t position;
};

// Candidates (relator, generator occurring exactly once in it), ordered by
// relator length then generator id.
std::vector<Elimination> elimination_candidates(const Presentation& p) {
  std::vector<Elimination> out;
  std::vector<std::size_t> order(p.relators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.relators[a].size() < p.relators[b].size();
  });
  for (std::size_t ri : order) {
    const Word& r = p.relators[ri];
    std::vector<int> count(p.alphabet.size(), 0);
    for (const Letter& l : r) ++count[l.gen];
    std::vector<Elimination> here;
    for (std::size_t pos = 0; pos < r.size(); ++pos)
      if (count[r[pos].gen] == 1) here.push_back(Elimination{ri, r[pos].gen, pos});
    std::sort(here.begin(), here.end(),
              [](const Elimination& a, const Elimination& b) { return a.gen < b.gen; });
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

void cheap_pass(Presentation& p) {
  std::vector<Word> out;
  std::set<std::string> seen;
  for (const Word& r : p.relators) {
    Word core = normalize_relator(r);
    if (core.empty()) continue;
    std::string key = encode_key(canonical_cyclic(core));
    if (seen.insert(key).second) out.push_back(std::move(core));
  }
  p.relators = std::move(out);
}

Presentation drop_generator(const Presentation& p, int gen, std::size_t defining_relator,
                            const Word& expr) {
  Alphabet al;
  std::vector<int> remap(p.alphabet.size(), -1);
  for (const Generator& g : p.alphabet.gens())
    if (g.id != gen) remap[g.id] = al.add(g.name);
  GeneratorMap m(p.alphabet, p.alphabet);
  for (const Generator& g : p.alphabet.gens())
    m.set_image(g.id, g.id == gen ? expr : letter_word(g.id, 1));
  Presentation out;
  out.alphabet = al;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == defining_relator) continue;
    Word w = substitute(p.relators[i], m);
    for (Letter& l : w) l.gen = remap[l.gen];
    out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, int budget) {
  TietzeResult res;
  res.presentation = p;
  cheap_pass(res.presentation);
  for (;;) {
    Presentation& cur = res.presentation;
    std::size_t total = 0;
    for (const Word& r : cur.relators) total += r.size();

    bool applied = false;
    for (const Elimination& e : elimination_candidates(cur)) {
      const Word& r = cur.relators[e.relator];
      // Rotate the unique occurrence to the front: r = g^s * u, so g^s = u^-1.
      Word rot = rotated(r, e.position);
      Word rest(rot.begin() + 1, rot.end());
      Word expr = rot.front().sign > 0 ? inverse(rest) : rest;
      std::size_t uses_elsewhere = 0;
      for (std::size_t i = 0; i < cur.relators.size(); ++i) {
        if (i == e.relator) continue;
        for (const Letter& l : cur.relators[i])
          if (l.gen == e.gen) ++uses_elsewhere;
      }
      std::size_t estimate = total - r.size() + uses_elsewhere * expr.size();
      if (uses_elsewhere > 0) estimate -= uses_elsewhere;  // each occurrence replaced, not added
      if (estimate > total) continue;
      if (res.eliminations >= budget) {
        res.budget_exhausted = true;
        return res;
      }
      res.presentation = drop_generator(cur, e.gen, e.relator, expr);
      cheap_pass(res.presentation);
      ++res.eliminations;
      applied = true;
      break;
    }
    if (!applied) return res;
  }
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const Generator& g : p.alphabet.gens()) out += " " + g.name;
  out += "\n";
  for (const Word& r : p.relators) out += format_word(p.alphabet, r) + "\n";
  return out;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Presentation p;
  bool have_gens = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!have_gens) {
      if (line.rfind("gens:", 0) != 0)
        throw std::invalid_argument("presentation must start with a 'gens:' line");
      std::istringstream gl(line.substr(5));
      std::string name;
      std::vector<std::string> names;
      while (gl >> name) names.push_back(name);
      p.alphabet = Alphabet(names);
      have_gens = true;
      continue;
    }
    p.relators.push_back(parse_word(p.alphabet, line));
  }
  if (!have_gens) throw std::invalid_argument("empty presentation text");
  return p;
}

namespace {

// Diagonal of the Smith normal form via integer row/column reduction.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  std::vector<long long> diag;
  if (m.empty() || m[0].empty()) return diag;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  while (r < rows && r < cols) {
    // locate a nonzero entry of least magnitude in the remaining block
    std::size_t pi = r, pj = r;
    long long best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[r], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][r], m[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        long long q = m[i][r] / m[r][r];
        if (q != 0)
          for (std::size_t j = r; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][r] != 0) {
          std::swap(m[r], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = r + 1; j < cols; ++j) {
        long long q = m[r][j] / m[r][r];
        if (q != 0)
          for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][r];
        if (m[r][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][r], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (std::size_t i = r + 1; i < rows && clean; ++i)
          for (std::size_t j = r + 1; j < cols && clean; ++j)
            if (m[i][j] % m[r][r] != 0) {
              for (std::size_t jj = r; jj < cols; ++jj) m[r][jj] += m[i][jj];
              clean = false;
            }
      }
    }
    diag.push_back(std::llabs(m[r][r]));
    ++r;
  }
  return diag;
}

}  // namespace

AbelianInvariants abelian_invariants(const Presentation& p) {
  std::vector<std::vector<long long>> m(p.relators.size(),
                                        std::vector<long long>(p.alphabet.size(), 0));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const Letter& l : p.relators[i]) m[i][l.gen] += l.sign;
  std::vector<long long> diag = smith_diagonal(std::move(m));
  AbelianInvariants inv;
  int rank = 0;
  for (long long d : diag)
    if (d != 0) {
      ++rank;
      if (d > 1) inv.torsion.push_back(d);
    }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  inv.free_rank = p.alphabet.size() - rank;
  return inv;
}

GeneratorMap klein_rewrite_map(const Alphabet& r_alphabet, const Alphabet& klein_alphabet) {
  GeneratorMap m(r_alphabet, klein_alphabet);
  int a = *klein_alphabet.find("a"), b = *klein_alphabet.find("b"), t = *klein_alphabet.find("t");
  m.set_image(*r_alphabet.find("x"), letter_word(a, 1));
  m.set_image(*r_alphabet.find("y"), concat(letter_word(a, 1), letter_word(b, 1)));
  m.set_image(*r_alphabet.find("t"), letter_word(t, 1));
  return m;
}

GeneratorMap klein_rewrite_inverse_map(const Alphabet& klein_alphabet,
                                       const Alphabet& r_alphabet) {
  GeneratorMap m(klein_alphabet, r_alphabet);
  int x = *r_alphabet.find("x"), y = *r_alphabet.find("y"), t = *r_alphabet.find("t");
  m.set_image(*klein_alphabet.find("a"), letter_word(x, 1));
  m.set_image(*klein_alphabet.find("b"), concat(letter_word(x, -1), letter_word(y, 1)));
  m.set_image(*klein_alphabet.find("t"), letter_word(t, 1));
  return m;
}

RewriteReport verify_rewrite(int p, int q) {
  check_pq(p, q);
  RewriteReport rep;
  Presentation r = make_one_relator_R_pq(p, q);
  Presentation k = make_klein_form(p, q);
  GeneratorMap fwd = klein_rewrite_map(r.alphabet, k.alphabet);
  GeneratorMap bwd = klein_rewrite_inverse_map(k.alphabet, r.alphabet);

  for (const Generator& g : r.alphabet.gens()) {
    Word round = substitute(substitute(letter_word(g.id, 1), fwd), bwd);
    rep.checks.push_back(CheckItem{"round trip " + g.name,
                                   round == letter_word(g.id, 1),
                                   format_word(r.alphabet, round)});
  }
  for (const Generator& g : k.alphabet.gens()) {
    Word round = substitute(substitute(letter_word(g.id, 1), bwd), fwd);
    rep.checks.push_back(CheckItem{"round trip " + g.name,
                                   round == letter_word(g.id, 1),
                                   format_word(k.alphabet, round)});
  }

  HnnGroup h = make_hnn(HnnFamily::r_klein, p, q);
  for (std::size_t i = 0; i < r.relators.size(); ++i) {
    Word img = substitute(r.relators[i], fwd);
    rep.checks.push_back(CheckItem{"relator " + std::to_string(i + 1) + " image trivial",
                                   is_trivial(h, img), format_word(k.alphabet, img)});
  }

  rep.all_ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckItem& c) { return c.pass; });
  return rep;
}

}  // namespace snowflake
