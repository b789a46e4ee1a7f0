#include "doctest.h"
#include "polyforge/errors.hpp"
#include "polyforge/words.hpp"

using namespace polyforge;

TEST_CASE("word construction and reduction") {
  Word w = Word::gen(0) * Word::gen(1, -1) * Word::gen(1) * Word::gen(2);
  CHECK(w.reduced() == Word::gen(0) * Word::gen(2));
  CHECK((w * w.inverse()).reduced() == Word::one());
  CHECK(Word::gen(1, -3).length() == 3);
  CHECK(Word::gen(1, -3).inverse() == Word::gen(1, 3));
  CHECK(Word::gen(0).pow(4) == Word::gen(0, 4));
  CHECK(Word::one().max_generator() == -1);
}

TEST_CASE("word parse and format round-trip") {
  Word w = parse_word("g0 g2^-1 g10 g2");
  CHECK(w.length() == 4);
  CHECK(format_word(w) == "g0 g2^-1 g10 g2");
  CHECK(parse_word(format_word(w)) == w);
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("h1"), MalformedPresentation);
  CHECK_THROWS_AS(parse_word("g-1"), MalformedPresentation);
}

TEST_CASE("presentation normalization") {
  // involutory generator folds its inverse, non-involutory keeps it
  Presentation p(2, {true, false}, {parse_word("g0^-1 g1^-1 g1 g1")});
  CHECK(p.relators.size() == 2);  // implicit g0^2 plus the reduced relator
  CHECK(p.relators[0] == Word::gen(0).pow(2));
  CHECK(p.relators[1] == Word::gen(0) * Word::gen(1));
  CHECK_THROWS_AS(Presentation(1, {false}, {parse_word("g3")}),
                  MalformedPresentation);
}

TEST_CASE("coxeter string presentations") {
  Presentation p = Presentation::coxeter_string({4, 3});
  CHECK(p.n_generators == 3);
  // g0^2 g1^2 g2^2, (g0 g1)^4, (g1 g2)^3, (g0 g2)^2
  CHECK(p.relators.size() == 6);
  CHECK_THROWS_AS(Presentation::coxeter_string({1, 3}), MalformedPresentation);
}

TEST_CASE("presentation text format is bit-exact") {
  Presentation p(3, {true, true, true},
                 {(Word::gen(0) * Word::gen(1)).pow(4),
                  (Word::gen(1) * Word::gen(2)).pow(3),
                  (Word::gen(0) * Word::gen(2)).pow(2)});
  std::string text = format_presentation(p);
  Presentation q = parse_presentation_text(text);
  CHECK(p == q);
  CHECK(format_presentation(q) == text);  // byte-for-byte round trip

  CHECK_THROWS_AS(parse_presentation_text("generators 0\ninvolutory\n"),
                  MalformedPresentation);
  CHECK_THROWS_AS(parse_presentation_text("generators 2\ninvolutory 1\n"),
                  MalformedPresentation);
  CHECK_THROWS_AS(parse_presentation_text("gens 2\ninvolutory 1 1\n"),
                  MalformedPresentation);
}
