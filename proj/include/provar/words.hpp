#ifndef PROVAR_WORDS_HPP
#define PROVAR_WORDS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "provar/errors.hpp"

namespace provar {

/// A finite ordered alphabet.  Symbol order is total and fixed; every
/// canonical form downstream depends on it.  Alphabets larger than 26 have
/// no character symbols and format their letters as x1, x2, ...
class Alphabet {
 public:
  explicit Alphabet(std::size_t size);  // anonymous symbols
  Alphabet(std::size_t size, std::string symbols);

  /// 'a', 'b', ... ; size must be between 1 and 26.
  static Alphabet latin(std::size_t size);
  /// Alphabet from the distinct characters of `symbols`, in order.
  static Alphabet from_symbols(std::string_view symbols);

  std::size_t size() const { return size_; }
  bool has_symbols() const { return !symbols_.empty(); }
  char symbol(std::size_t i) const { return symbols_[i]; }
  /// Display name of a signed letter (+i forward, uppercase/inverse marked).
  std::string letter_name(int signed_letter) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.size_ == b.size_ && a.symbols_ == b.symbols_;
  }

 private:
  std::size_t size_;
  std::string symbols_;  // empty for anonymous alphabets
};

/// A freely reduced word.  Letters are nonzero ints: +(i+1) is generator i,
/// -(i+1) its inverse.  The empty word is the identity.
class Word {
 public:
  Word() : alphabet_size_(0) {}
  explicit Word(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

  /// Reduces the given letter sequence.
  static Word from_letters(std::size_t alphabet_size, std::vector<int> letters);
  static Word parse(std::string_view text, const Alphabet& alphabet);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t alphabet_size() const { return alphabet_size_; }

  std::string format(const Alphabet& alphabet) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

 private:
  std::size_t alphabet_size_;
  std::vector<int> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long e);

/// Parses a comma-separated generator list, dropping empty entries.
std::vector<Word> parse_words(std::string_view text, const Alphabet& alphabet);

}  // namespace provar

#endif  // PROVAR_WORDS_HPP
