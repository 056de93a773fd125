#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cgw {

// A generator name with an exponent sign of +1 or -1.
struct Letter {
  std::string generator;
  int sign = 1;

  Letter inverse() const { return Letter{generator, -sign}; }
  bool is_inverse_of(const Letter& other) const {
    return sign == -other.sign && generator == other.generator;
  }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter&,
                                          const Letter&) = default;
};

// A finite sequence of letters. Equality is letter-by-letter (the U ≡ V of
// combinatorial group theory); the reduced flag is a cache and does not take
// part in comparisons.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(std::string generator, int sign = 1) {
    return Word({Letter{std::move(generator), sign}});
  }

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  // Set only by free_reduce (or by callers that know the word is reduced).
  bool reduced_flag() const noexcept { return reduced_; }
  Word& mark_reduced() noexcept {
    reduced_ = true;
    return *this;
  }

  Word inverse() const;
  Word subword(std::size_t pos, std::size_t len) const;
  // Rotation by k letters to the left: a_k ... a_{n-1} a_0 ... a_{k-1}.
  Word rotate(std::size_t k) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  bool reduced_ = false;
};

Word free_reduce(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1 after reduction
};

// Requires a freely reduced word.
CyclicReduction cyclic_reduce(const Word& w);

// All distinct rotations of w (inverses not included), sorted.
std::vector<Word> cyclic_shifts(const Word& w);

// Canonical print: runs of one letter collapse to exponents, "1" for the
// empty word, factors joined by '*'.
std::string to_string(const Word& w);

// Word DSL: term ("*" term)*, term := name ("^" int)?. "1" and the empty
// string denote the empty word. Names consist of [A-Za-z0-9_.] and
// bracketed segments "[...]"; a name may not be all digits.
Word parse_word(std::string_view text, const std::vector<std::string>& alphabet);

// As above without alphabet validation.
Word parse_word(std::string_view text);

}  // namespace cgw
