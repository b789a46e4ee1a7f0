#ifndef POLYFORGE_WORDS_HPP
#define POLYFORGE_WORDS_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polyforge {

// A letter packs a generator index with an inversion flag:
// 2*i encodes g_i, 2*i+1 encodes g_i^-1.
using Letter = int;

inline Letter make_letter(int gen, bool inverse = false) {
  return gen * 2 + (inverse ? 1 : 0);
}
inline int letter_gen(Letter l) { return l >> 1; }
inline bool letter_is_inverse(Letter l) { return l & 1; }
inline Letter letter_inverse(Letter l) { return l ^ 1; }

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  static Word one() { return Word{}; }
  static Word gen(int i, int exponent = 1);

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(int k) const;

  // Free reduction: cancels adjacent g g^-1 / g^-1 g pairs.
  Word reduced() const;

  int max_generator() const;  // largest generator index used, -1 if empty

  // Re-index generators: letter for g_i becomes letter for g_{map[i]}.
  Word relabeled(const std::vector<int>& map) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// Parses whitespace-separated tokens of the form g<i> or g<i>^-1.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

struct Presentation {
  int n_generators = 0;
  std::vector<bool> involutory;
  std::vector<Word> relators;

  Presentation() = default;
  // Normalizes on construction: words are freely reduced, inverses of
  // involutory generators are folded to the generator itself, a g_i^2
  // relator is ensured for every involutory generator, and exact
  // duplicate relators are dropped.
  Presentation(int n_gens, std::vector<bool> involutory_flags,
               std::vector<Word> relator_words);

  // Coxeter-style string presentation [p_1,...,p_{n-1}] on n involutions.
  static Presentation coxeter_string(const std::vector<int>& periods);

  // Freely reduce, then fold involutory inverses.
  Word normalize(const Word& w) const;

  void require_valid_word(const Word& w) const;  // throws MalformedPresentation

  bool operator==(const Presentation&) const = default;
};

// Text format, used by files and the CLI:
//   line 1: generators <k>
//   line 2: involutory <k space-separated 0/1 flags>
//   then one relator per line as whitespace-separated letter tokens.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_text(const std::string& text);
std::string format_presentation(const Presentation& p);

}  // namespace polyforge

#endif
