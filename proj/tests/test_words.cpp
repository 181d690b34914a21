#include <doctest.h>

#include "repvar/words.hpp"

using namespace repvar;

namespace {

Word w(const Presentation& p, const char* s) { return parse_word(p, s); }

// Sum of the coefficients of a group ring element after sending every
// generator to t^phi: an independent evaluation of abelianized Fox derivatives.
long augment(const Presentation& p, const GroupRingElement& e, long t) {
  long s = 0;
  for (const auto& [word, c] : e.terms()) {
    long ex = abelianize_word(p, word);
    long v = 1;
    for (long i = 0; i < std::abs(ex); ++i) v *= t;
    REQUIRE(ex >= 0);
    s += c.rational_part().get_num().get_si() * v;
  }
  return s;
}

}  // namespace

TEST_CASE("presentation parsing") {
  Presentation tre = parse_presentation("gens x,y; rel x^2 = y^3; ab x=3, y=2;");
  CHECK(tre.generator_count() == 2);
  REQUIRE(tre.relators.size() == 1);
  CHECK(tre.relators[0] == Word::gen(0, 2) * Word::gen(1, -3));
  REQUIRE(tre.abelianization);
  CHECK(*tre.abelianization == std::vector<long>{3, 2});

  Presentation free1 = parse_presentation("gens a; rel ;");
  CHECK(free1.generator_count() == 1);
  CHECK(free1.relators.empty());

  Presentation f8 = parse_presentation("gens t,a,b; rel t a t^-1 = a b, t b t^-1 = b a b; ab t=1, a=0, b=0;");
  CHECK(f8.relators.size() == 2);
  CHECK(word_str(f8, f8.relators[1]) == "t b t^-1 b^-1 a^-1 b^-1");
}

TEST_CASE("presentation errors") {
  CHECK_THROWS_AS(parse_presentation("gens x; rel x^2; ab x=1;"), InvalidAbelianization);
  CHECK_THROWS_AS(parse_presentation("gens x, y; rel x y; ab x=1;"), InvalidAbelianization);
  CHECK_THROWS_AS(parse_presentation("gens x; rel x^;"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("gens x; rel z;"), SyntaxError);
}

TEST_CASE("word parsing sugar") {
  Presentation p = parse_presentation("gens a, b; rel ;");
  CHECK(w(p, "ab") == Word::gen(0) * Word::gen(1));
  CHECK(w(p, "[a, b]") == commutator(Word::gen(0), Word::gen(1)));
  CHECK(w(p, "(ab)^-2") == (Word::gen(0) * Word::gen(1)).pow(-2));
  CHECK(w(p, "1").empty());
  CHECK(word_str(p, w(p, "a a a b")) == "a^3 b");
}

TEST_CASE("free reduction") {
  Word x = Word::gen(0), y = Word::gen(1);
  CHECK((x * x.inverse()).empty());
  CHECK((x * y).inverse() == y.inverse() * x.inverse());
  CHECK(x * y.inverse() * (y * x) == Word::gen(0, 2));
  CHECK(Word({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());
}

TEST_CASE("fox derivatives") {
  Presentation p = parse_presentation("gens a, b; rel ;");
  GroupRingElement d = fox_derivative(w(p, "a^3"), 0);
  GroupRingElement expected = GroupRingElement(Word()) + GroupRingElement(w(p, "a")) + GroupRingElement(w(p, "a^2"));
  CHECK(d == expected);
  CHECK(fox_derivative(w(p, "b"), 0).is_zero());
  // d(a b a^-1)/da = 1 + a d(b a^-1)/da = 1 - a b a^-1
  GroupRingElement e = GroupRingElement(Word()) - GroupRingElement(w(p, "a b a^-1"));
  CHECK(fox_derivative(w(p, "a b a^-1"), 0) == e);
  CHECK(fox_derivative(w(p, "a^-1"), 0) == GroupRingElement(w(p, "a^-1"), Cyc(-1)));
}

TEST_CASE("fox derivatives of the trefoil relator, abelianized") {
  Presentation p = parse_presentation("gens x, y; rel x^2 = y^3; ab x=3, y=2;");
  // d(x^2 y^-3)/dx = 1 + x, d/dy = -x^2 (y^-1 + y^-2 + y^-3); at t = 2: 1 + 8 and -(16 + 4 + 1)
  const Word& r = p.relators[0];
  CHECK(augment(p, fox_derivative(r, 0), 2) == 9);
  GroupRingElement dy = fox_derivative(r, 1);
  CHECK(dy.terms().size() == 3);
  CHECK(augment(p, dy, 2) == -21);
}

TEST_CASE("abelianization") {
  Presentation tre = parse_presentation("gens x,y; rel x^2 = y^3; ab x=3, y=2;");
  CHECK(abelianize_word(tre, w(tre, "x y^-1")) == 1);
  CHECK(abelianize_word(tre, Word()) == 0);
  Presentation f8 = parse_presentation("gens t,a,b; rel t a t^-1 = a b, t b t^-1 = b a b; ab t=1, a=0, b=0;");
  CHECK(abelianize_word(f8, w(f8, "[a, b]")) == 0);
  CHECK(abelianize_word(f8, w(f8, "t^-3 a")) == -3);
  Presentation bare = parse_presentation("gens a; rel a^2;");
  CHECK_THROWS_AS(abelianize_word(bare, w(bare, "a")), MissingAbelianization);
}

TEST_CASE("substitution") {
  Presentation p = parse_presentation("gens a, b; rel ;");
  std::vector<Word> images{w(p, "b a"), w(p, "a^-1")};
  CHECK(substitute(w(p, "a b"), images) == w(p, "b"));
  CHECK(substitute(w(p, "b^-2"), images) == w(p, "a^2"));
}
