#include "provar/words.hpp"

#include <cctype>
#include <cstdlib>

namespace provar {

Alphabet::Alphabet(std::size_t size) : size_(size) {}

Alphabet::Alphabet(std::size_t size, std::string symbols)
    : size_(size), symbols_(std::move(symbols)) {}

Alphabet Alphabet::latin(std::size_t size) {
  if (size < 1 || size > 26) throw Error("latin alphabet size must be 1..26");
  std::string s;
  for (std::size_t i = 0; i < size; ++i) s.push_back(static_cast<char>('a' + i));
  return Alphabet(size, std::move(s));
}

Alphabet Alphabet::from_symbols(std::string_view symbols) {
  if (symbols.empty() || symbols.size() > 26)
    throw Error("alphabet must have 1..26 symbols");
  std::string s(symbols);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::islower(static_cast<unsigned char>(s[i])))
      throw UnknownSymbol(s[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (s[i] == s[j]) throw Error("alphabet symbols must be distinct");
  }
  std::size_t n = s.size();
  return Alphabet(n, std::move(s));
}

std::string Alphabet::letter_name(int signed_letter) const {
  std::size_t idx = static_cast<std::size_t>(std::abs(signed_letter)) - 1;
  if (has_symbols()) {
    char c = symbols_[idx];
    if (signed_letter < 0) c = static_cast<char>(std::toupper(c));
    return std::string(1, c);
  }
  std::string s = "x" + std::to_string(idx + 1);
  if (signed_letter < 0) s += "^-1";
  return s;
}

Word Word::from_letters(std::size_t alphabet_size, std::vector<int> letters) {
  Word w(alphabet_size);
  for (int l : letters) {
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > alphabet_size)
      throw Error("letter out of range");
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  if (!alphabet.has_symbols()) throw Error("alphabet has no text symbols");
  std::vector<int> letters;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int idx = -1;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet.symbol(i) == lc) idx = static_cast<int>(i);
    if (idx < 0) throw UnknownSymbol(c);
    letters.push_back(std::isupper(static_cast<unsigned char>(c)) ? -(idx + 1)
                                                                  : idx + 1);
  }
  return from_letters(alphabet.size(), std::move(letters));
}

std::string Word::format(const Alphabet& alphabet) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) out += alphabet.letter_name(l);
  return out;
}

Word multiply(const Word& u, const Word& v) {
  if (u.alphabet_size() != v.alphabet_size()) throw AlphabetMismatch();
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word::from_letters(u.alphabet_size(), std::move(letters));
}

Word invert(const Word& u) {
  std::vector<int> letters(u.letters().rbegin(), u.letters().rend());
  for (int& l : letters) l = -l;
  return Word::from_letters(u.alphabet_size(), std::move(letters));
}

Word power(const Word& u, long e) {
  Word base = e < 0 ? invert(u) : u;
  Word out(u.alphabet_size());
  for (long i = 0; i < std::labs(e); ++i) out = multiply(out, base);
  return out;
}

std::vector<Word> parse_words(std::string_view text, const Alphabet& alphabet) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    Word w = Word::parse(text.substr(start, comma - start), alphabet);
    if (!w.empty()) out.push_back(std::move(w));
    start = comma + 1;
  }
  return out;
}

}  // namespace provar
