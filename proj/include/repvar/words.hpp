#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repvar/numbers.hpp"

namespace repvar {

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == b.exp; }
  friend bool operator<(const Letter& a, const Letter& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
  }
};

// Freely reduced word in a free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces
  static Word gen(int g, long power = 1);

  const std::vector<Letter>& letters() const { return l_; }
  std::size_t size() const { return l_.size(); }
  bool empty() const { return l_.empty(); }

  Word inverse() const;
  Word pow(long n) const;
  Word prefix(std::size_t n) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.l_ == b.l_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) { return a.l_ < b.l_; }

 private:
  std::vector<Letter> l_;
};

Word word_mul(const Word& u, const Word& v);
Word word_inv(const Word& u);
inline Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  std::optional<std::vector<long>> abelianization;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
  int generator_index(std::string_view name) const;  // -1 when absent
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.generator_names == b.generator_names && a.relators == b.relators &&
           a.abelianization == b.abelianization;
  }
};

// Builds a presentation from relators, checking phi(r) = 0 when phi is given.
Presentation make_presentation(std::vector<std::string> names, std::vector<Word> relators,
                               std::optional<std::vector<long>> phi = std::nullopt);

// Grammar:
//   gens x, y;  rel x^2 = y^3, [x, y];  ab x=3, y=2;
// Words: juxtaposition, ^n, (..), [u, v] = u v u^-1 v^-1, and 1 for the empty word.
// A run of letters such as "ab" is split into generator names when it is not
// itself a generator. '#' starts a comment.
Presentation parse_presentation(std::string_view text);
Word parse_word(const Presentation& p, std::string_view text);

std::string word_str(const Presentation& p, const Word& w);
std::string presentation_str(const Presentation& p);

// Image of w under the endomorphism sending generator i to images[i].
Word substitute(const Word& w, const std::vector<Word>& images);

// phi(w) = sum of phi(g) * exponent over letters.
long abelianize_word(const Presentation& p, const Word& w);

// Finite K-linear combination of free group elements.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, const Cyc& c = Cyc(1));

  const std::map<Word, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Cyc coeff(const Word& w) const;

  void add(const Word& w, const Cyc& c);
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  // w * x
  friend GroupRingElement operator*(const Word& w, const GroupRingElement& x);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  std::string str(const Presentation& p) const;

 private:
  std::map<Word, Cyc> terms_;
};

// Left Fox derivative: d(uv)/dx = du/dx + u dv/dx, dx^-1/dx = -x^-1.
GroupRingElement fox_derivative(const Word& w, int gen);

}  // namespace repvar
