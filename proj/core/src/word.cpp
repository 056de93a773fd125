#include "cgw/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "cgw/error.hpp"

namespace cgw {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  Word w(std::move(out));
  w.reduced_ = reduced_;
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word Word::rotate(std::size_t k) const {
  if (letters_.empty()) {
    return *this;
  }
  k %= letters_.size();
  std::vector<Letter> out(letters_.begin() + k, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + k);
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  Word out(std::move(stack));
  out.mark_reduced();
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo].is_inverse_of(l[hi - 1])) {
    ++lo;
    --hi;
  }
  CyclicReduction r{w.subword(lo, hi - lo), w.subword(0, lo)};
  r.core.mark_reduced();
  r.conjugator.mark_reduced();
  return r;
}

std::vector<Word> cyclic_shifts(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  out.reserve(w.length());
  for (std::size_t k = 0; k < w.length(); ++k) {
    out.push_back(w.rotate(k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  const auto& l = w.letters();
  std::size_t i = 0;
  while (i < l.size()) {
    std::size_t j = i + 1;
    while (j < l.size() && l[j] == l[i]) {
      ++j;
    }
    long long exponent = static_cast<long long>(j - i) * l[i].sign;
    if (!out.empty()) {
      out += '*';
    }
    out += l[i].generator;
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

namespace {

class WordLexer {
 public:
  explicit WordLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string name() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.') {
        ++pos_;
      } else if (c == '[') {
        int depth = 0;
        while (pos_ < text_.size()) {
          if (text_[pos_] == '[') {
            ++depth;
          } else if (text_[pos_] == ']' && --depth == 0) {
            break;
          }
          ++pos_;
        }
        if (pos_ >= text_.size()) {
          fail("unterminated '[' in generator name", start);
        }
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) {
      fail("expected generator name", start);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') {
      digits.remove_prefix(1);
    }
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty() || digits == "-") {
      fail("malformed exponent", start);
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(what, at, line, column);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool all_digits(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

constexpr long long kMaxExponent = 1'000'000;

Word parse_word_impl(std::string_view text,
                     const std::vector<std::string>* alphabet) {
  WordLexer lex(text);
  std::vector<Letter> letters;
  if (lex.at_end()) {
    return Word();
  }
  do {
    lex.skip_space();
    std::size_t at = lex.position();
    std::string name = lex.name();
    bool identity = all_digits(name);
    if (identity && name != "1") {
      lex.fail("generator names may not be numeric", at);
    }
    if (!identity && alphabet != nullptr &&
        std::find(alphabet->begin(), alphabet->end(), name) ==
            alphabet->end()) {
      throw InputError("unknown generator '" + name + "' at offset " +
                       std::to_string(at));
    }
    long long exponent = 1;
    if (lex.accept('^')) {
      std::size_t exp_at = lex.position();
      exponent = lex.integer();
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        lex.fail("exponent out of range", exp_at);
      }
    }
    if (!identity) {
      int sign = exponent < 0 ? -1 : 1;
      for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
        letters.push_back(Letter{name, sign});
      }
    }
  } while (lex.accept('*'));
  if (!lex.at_end()) {
    lex.fail("unexpected character", lex.position());
  }
  return Word(std::move(letters));
}

}  // namespace

Word parse_word(std::string_view text,
                const std::vector<std::string>& alphabet) {
  return parse_word_impl(text, &alphabet);
}

Word parse_word(std::string_view text) {
  return parse_word_impl(text, nullptr);
}

}  // namespace cgw
