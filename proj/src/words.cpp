#include "repvar/words.hpp"

#include <cctype>
#include <sstream>

namespace repvar {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& x) {
  if (!out.empty() && out.back().gen == x.gen && out.back().exp == -x.exp)
    out.pop_back();
  else
    out.push_back(x);
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  l_.reserve(letters.size());
  for (const auto& x : letters) push_reduced(l_, x);
}

Word Word::gen(int g, long power) {
  std::vector<Letter> l;
  int e = power < 0 ? -1 : 1;
  for (long i = 0; i < (power < 0 ? -power : power); ++i) l.push_back({g, e});
  Word w;
  w.l_ = std::move(l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.l_.reserve(l_.size());
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) w.l_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.l_.assign(l_.begin(), l_.begin() + static_cast<long>(std::min(n, l_.size())));
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const auto& x : b.l_) push_reduced(w.l_, x);
  return w;
}

Word word_mul(const Word& u, const Word& v) { return u * v; }
Word word_inv(const Word& u) { return u.inverse(); }

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generator_names.size(); ++i)
    if (generator_names[i] == name) return static_cast<int>(i);
  return -1;
}

long abelianize_word(const Presentation& p, const Word& w) {
  if (!p.abelianization) throw MissingAbelianization("presentation has no abelianization data");
  long s = 0;
  for (const auto& x : w.letters()) s += (*p.abelianization)[x.gen] * x.exp;
  return s;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const auto& x : w.letters()) out = out * (x.exp > 0 ? images.at(x.gen) : images.at(x.gen).inverse());
  return out;
}

Presentation make_presentation(std::vector<std::string> names, std::vector<Word> relators,
                               std::optional<std::vector<long>> phi) {
  Presentation p;
  p.generator_names = std::move(names);
  p.relators = std::move(relators);
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (const auto& x : p.relators[j].letters())
      if (x.gen < 0 || x.gen >= p.generator_count())
        throw DimensionMismatch("relator " + std::to_string(j) + " uses an unknown generator");
  if (phi) {
    if (static_cast<int>(phi->size()) != p.generator_count())
      throw InvalidAbelianization("need one value per generator");
    p.abelianization = std::move(phi);
    for (std::size_t j = 0; j < p.relators.size(); ++j)
      if (abelianize_word(p, p.relators[j]) != 0)
        throw InvalidAbelianization("phi does not vanish on relator " + std::to_string(j + 1));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class WordParser {
 public:
  WordParser(std::string_view s, std::size_t offset = 0) : s_(s), pos_(offset) {}

  void skip() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  bool ident_start() {
    skip();
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }

  std::string ident() {
    skip();
    if (!ident_start()) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  // word := factor+ ; stops at , ; = ] ) or end
  Word word(const Presentation& p) {
    Word w;
    bool any = false;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == ',' || c == ';' || c == '=' || c == ']' || c == ')') break;
      w = w * factor(p);
      any = true;
    }
    if (!any) fail("expected a word");
    return w;
  }

  std::size_t pos() const { return pos_; }

 private:
  Word factor(const Presentation& p) {
    Word base = atom(p);
    if (accept('^')) base = base.pow(integer());
    return base;
  }

  Word atom(const Presentation& p) {
    skip();
    if (accept('(')) {
      Word w = word(p);
      expect(')');
      return w;
    }
    if (accept('[')) {
      Word u = word(p);
      expect(',');
      Word v = word(p);
      expect(']');
      return commutator(u, v);
    }
    if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      return Word();
    }
    std::size_t at = pos_;
    std::string name = ident();
    int g = p.generator_index(name);
    if (g >= 0) return Word::gen(g);
    // split a run like "ab" or "t1t2" into generator names
    std::vector<int> parts;
    if (!split(p, name, 0, parts)) throw SyntaxError("unknown generator '" + name + "'", at);
    // a trailing exponent binds to the last generator only
    Word w;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) w = w * Word::gen(parts[i]);
    Word last = Word::gen(parts.back());
    if (accept('^')) last = last.pow(integer());
    return w * last;
  }

  static bool split(const Presentation& p, const std::string& s, std::size_t from,
                    std::vector<int>& out) {
    if (from == s.size()) return !out.empty();
    for (std::size_t len = s.size() - from; len >= 1; --len) {
      int g = p.generator_index(std::string_view(s).substr(from, len));
      if (g < 0) continue;
      out.push_back(g);
      if (split(p, s, from + len, out)) return true;
      out.pop_back();
    }
    return false;
  }

  std::string_view s_;
  std::size_t pos_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  WordParser in(text);
  Presentation p;
  std::optional<std::vector<long>> phi;
  bool seen_gens = false, seen_rel = false;
  while (!in.at_end()) {
    std::size_t at = in.pos();
    std::string kw = in.ident();
    if (kw == "gens") {
      if (seen_gens) throw SyntaxError("duplicate gens clause", at);
      seen_gens = true;
      if (!in.peek(';')) {
        do {
          std::size_t nat = in.pos();
          std::string name = in.ident();
          if (p.generator_index(name) >= 0) throw SyntaxError("duplicate generator " + name, nat);
          p.generator_names.push_back(name);
        } while (in.accept(','));
      }
      in.expect(';');
    } else if (kw == "rel") {
      if (!seen_gens) throw SyntaxError("rel before gens", at);
      seen_rel = true;
      if (!in.peek(';')) {
        do {
          Word lhs = in.word(p);
          if (in.accept('=')) {
            Word rhs = in.word(p);
            p.relators.push_back(lhs * rhs.inverse());
          } else {
            p.relators.push_back(lhs);
          }
        } while (in.accept(','));
      }
      in.expect(';');
    } else if (kw == "ab") {
      if (!seen_gens) throw SyntaxError("ab before gens", at);
      std::vector<long> v(p.generator_names.size(), 0);
      std::vector<bool> set(v.size(), false);
      do {
        std::size_t nat = in.pos();
        std::string name = in.ident();
        int g = p.generator_index(name);
        if (g < 0) throw SyntaxError("unknown generator '" + name + "'", nat);
        in.expect('=');
        v[g] = in.integer();
        set[g] = true;
      } while (in.accept(','));
      in.expect(';');
      for (std::size_t i = 0; i < set.size(); ++i)
        if (!set[i]) throw InvalidAbelianization("no value for generator " + p.generator_names[i]);
      phi = v;
    } else {
      throw SyntaxError("expected gens, rel or ab", at);
    }
  }
  if (!seen_gens) throw SyntaxError("missing gens clause", text.size());
  (void)seen_rel;
  return make_presentation(p.generator_names, p.relators, phi);
}

Word parse_word(const Presentation& p, std::string_view text) {
  WordParser in(text);
  Word w = in.word(p);
  if (!in.at_end()) in.fail("trailing input after word");
  return w;
}

std::string word_str(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& l = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    long run = static_cast<long>(j - i) * l[i].exp;
    if (!first) os << ' ';
    first = false;
    os << p.generator_names[l[i].gen];
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

std::string presentation_str(const Presentation& p) {
  std::ostringstream os;
  os << "gens ";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i)
    os << (i ? ", " : "") << p.generator_names[i];
  os << ";\nrel ";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    os << (i ? ", " : "") << word_str(p, p.relators[i]);
  os << ";\n";
  if (p.abelianization) {
    os << "ab ";
    for (std::size_t i = 0; i < p.generator_names.size(); ++i)
      os << (i ? ", " : "") << p.generator_names[i] << "=" << (*p.abelianization)[i];
    os << ";\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Group ring

GroupRingElement::GroupRingElement(const Word& w, const Cyc& c) { add(w, c); }

Cyc GroupRingElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Cyc(0) : it->second;
}

void GroupRingElement::add(const Word& w, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add(u * v, cu * cv);
  return out;
}

GroupRingElement operator*(const Word& w, const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [v, c] : x.terms_) out.add(w * v, c);
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (it->first != w || it->second != c) return false;
    ++it;
  }
  return true;
}

std::string GroupRingElement::str(const Presentation& p) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.str() << ")*";
    os << word_str(p, w);
  }
  return os.str();
}

GroupRingElement fox_derivative(const Word& w, int gen) {
  GroupRingElement out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].gen != gen) continue;
    if (l[i].exp > 0)
      out.add(w.prefix(i), Cyc(1));
    else
      out.add(w.prefix(i + 1), Cyc(-1));
  }
  return out;
}

}  // namespace repvar
