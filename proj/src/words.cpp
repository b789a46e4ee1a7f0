#include "polyforge/words.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "polyforge/errors.hpp"

namespace polyforge {

Word Word::gen(int i, int exponent) {
  Word w;
  Letter l = make_letter(i, exponent < 0);
  int n = exponent < 0 ? -exponent : exponent;
  w.letters.assign(static_cast<std::size_t>(n), l);
  return w;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(letter_inverse(*it));
  return w;
}

Word Word::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Word w;
  w.letters.reserve(letters.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    w.letters.insert(w.letters.end(), letters.begin(), letters.end());
  return w;
}

Word Word::reduced() const {
  Word w;
  w.letters.reserve(letters.size());
  for (Letter l : letters) {
    if (!w.letters.empty() && w.letters.back() == letter_inverse(l))
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

int Word::max_generator() const {
  int m = -1;
  for (Letter l : letters) m = std::max(m, letter_gen(l));
  return m;
}

Word Word::relabeled(const std::vector<int>& map) const {
  Word w;
  w.letters.reserve(letters.size());
  for (Letter l : letters)
    w.letters.push_back(make_letter(map[static_cast<std::size_t>(letter_gen(l))],
                                    letter_is_inverse(l)));
  return w;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'g')
      throw MalformedPresentation("word token must start with 'g': " +
                                  std::string(text));
    ++i;
    int gen = -1;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), gen);
    if (ec != std::errc{} || gen < 0)
      throw MalformedPresentation("bad generator index in word: " + std::string(text));
    i = static_cast<std::size_t>(ptr - text.data());
    bool inv = false;
    if (i + 2 < text.size() && text.compare(i, 3, "^-1") == 0) {
      inv = true;
      i += 3;
    }
    w.letters.push_back(make_letter(gen, inv));
    skip_ws();
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    Letter l = w.letters[i];
    out += 'g';
    out += std::to_string(letter_gen(l));
    if (letter_is_inverse(l)) out += "^-1";
  }
  return out;
}

Presentation::Presentation(int n_gens, std::vector<bool> involutory_flags,
                           std::vector<Word> relator_words)
    : n_generators(n_gens), involutory(std::move(involutory_flags)) {
  if (n_generators <= 0)
    throw MalformedPresentation("presentation needs at least one generator");
  if (static_cast<int>(involutory.size()) != n_generators)
    throw MalformedPresentation("involutory flag count does not match generators");

  for (int i = 0; i < n_generators; ++i)
    if (involutory[static_cast<std::size_t>(i)])
      relators.push_back(Word::gen(i).pow(2));
  for (auto& r : relator_words) {
    require_valid_word(r);
    Word n = normalize(r);
    if (n.empty()) continue;
    if (std::find(relators.begin(), relators.end(), n) == relators.end())
      relators.push_back(std::move(n));
  }
}

Presentation Presentation::coxeter_string(const std::vector<int>& periods) {
  int n = static_cast<int>(periods.size()) + 1;
  std::vector<Word> rels;
  for (int i = 0; i + 1 < n; ++i) {
    if (periods[static_cast<std::size_t>(i)] < 2)
      throw MalformedPresentation("string Coxeter period must be >= 2");
    rels.push_back((Word::gen(i) * Word::gen(i + 1)).pow(periods[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      rels.push_back((Word::gen(i) * Word::gen(j)).pow(2));
  return Presentation(n, std::vector<bool>(static_cast<std::size_t>(n), true),
                      std::move(rels));
}

Word Presentation::normalize(const Word& w) const {
  Word r = w.reduced();
  for (Letter& l : r.letters)
    if (letter_is_inverse(l) && involutory[static_cast<std::size_t>(letter_gen(l))])
      l = letter_inverse(l);
  return r;
}

void Presentation::require_valid_word(const Word& w) const {
  if (w.max_generator() >= n_generators)
    throw MalformedPresentation("word uses generator index beyond presentation: " +
                                format_word(w));
}

Presentation parse_presentation(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw MalformedPresentation("empty presentation text");
  std::istringstream l1(line);
  std::string kw;
  int n = 0;
  if (!(l1 >> kw >> n) || kw != "generators" || n <= 0)
    throw MalformedPresentation("first line must be 'generators <k>'");
  if (!std::getline(in, line))
    throw MalformedPresentation("missing involutory line");
  std::istringstream l2(line);
  if (!(l2 >> kw) || kw != "involutory")
    throw MalformedPresentation("second line must be 'involutory <flags>'");
  std::vector<bool> inv;
  int flag;
  while (l2 >> flag) {
    if (flag != 0 && flag != 1)
      throw MalformedPresentation("involutory flags must be 0 or 1");
    inv.push_back(flag == 1);
  }
  if (static_cast<int>(inv.size()) != n)
    throw MalformedPresentation("involutory line must carry one flag per generator");
  std::vector<Word> rels;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    rels.push_back(parse_word(line));
  }
  return Presentation(n, std::move(inv), std::move(rels));
}

Presentation parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

std::string format_presentation(const Presentation& p) {
  std::string out = "generators " + std::to_string(p.n_generators) + "\n";
  out += "involutory";
  for (int i = 0; i < p.n_generators; ++i)
    out += p.involutory[static_cast<std::size_t>(i)] ? " 1" : " 0";
  out += '\n';
  for (const auto& r : p.relators) {
    out += format_word(r);
    out += '\n';
  }
  return out;
}

}  // namespace polyforge
