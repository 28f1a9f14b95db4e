#include "windinv/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace windinv {

void Word::reduce_in_place(std::vector<Letter>& letters) {
  std::size_t top = 0;  // letters[0..top) is the reduced prefix
  for (const Letter& a : letters) {
    if (top > 0 && letters[top - 1] == inverse(a)) {
      --top;
    } else {
      letters[top++] = a;
    }
  }
  letters.resize(top);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& u = a.letters();
  const auto& v = b.letters();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != v[k]) return letter_rank(u[k]) < letter_rank(v[k]);
  }
  return false;
}

Word multiply(const Word& u, const Word& v) {
  // Both inputs are reduced, so cancellation happens only at the seam.
  std::vector<Letter> out = u.letters();
  std::size_t i = 0;
  const auto& w = v.letters();
  while (i < w.size() && !out.empty() && out.back() == inverse(w[i])) {
    out.pop_back();
    ++i;
  }
  out.insert(out.end(), w.begin() + i, w.end());
  return Word(std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return Word(std::move(out));
}

Word power(const Word& u, std::int64_t n) {
  const Word base = n < 0 ? invert(u) : u;
  const std::int64_t count = n < 0 ? -n : n;
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(count) * base.size());
  for (std::int64_t k = 0; k < count; ++k) {
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  }
  return Word(std::move(out));
}

Word conjugate(const Word& g, const Word& w) {
  return multiply(multiply(g, w), invert(g));
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

int word_rank(const Word& w) {
  int rank = 2;
  for (const Letter& a : w) rank = std::max(rank, static_cast<int>(a.gen) + 1);
  return rank;
}

ExponentSums exponent_sums(const Word& w) {
  ExponentSums sums;
  for (const Letter& a : w) {
    switch (a.gen) {
      case 0: sums.x += a.sign; break;
      case 1: sums.y += a.sign; break;
      default:
        throw std::domain_error("exponent_sums: word uses a generator beyond x, y");
    }
  }
  return sums;
}

bool is_commutator_element(const Word& w) {
  ExponentSums sums = exponent_sums(w);
  return sums.x == 0 && sums.y == 0;
}

PathTrace trace_path(const Word& w) {
  PathTrace trace;
  trace.points.reserve(w.size() + 1);
  PathPoint p;
  trace.points.push_back(p);
  for (const Letter& a : w) {
    switch (a.gen) {
      case 0: p.x += a.sign; break;
      case 1: p.y += a.sign; break;
      default:
        throw std::domain_error("trace_path: word uses a generator beyond x, y");
    }
    trace.points.push_back(p);
  }
  return trace;
}

CyclicForm cyclic_reduce(const Word& w) {
  const auto& letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  std::vector<Letter> conj;
  while (hi - lo >= 2 && letters[lo] == inverse(letters[hi - 1])) {
    conj.push_back(letters[lo]);
    ++lo;
    --hi;
  }
  CyclicForm form;
  form.core = Word(std::vector<Letter>(letters.begin() + lo, letters.begin() + hi));
  form.conjugator = Word(std::move(conj));
  return form;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {
    if (rank_ < 1 || rank_ > kMaxGenerators) {
      throw std::invalid_argument("parse_word: rank out of range");
    }
  }

  Word parse() {
    Word w = parse_sequence();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (c == '[' || c == '(' || c == '1') return true;
    for (int g = 0; g < rank_; ++g) {
      if (c == kGeneratorNames[g]) return true;
    }
    return false;
  }

  Word parse_sequence() {
    Word w;
    while (at_atom_start()) w = multiply(w, parse_term());
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return power(atom, parse_integer());
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an atom");
    char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (c == '(') {
      ++pos_;
      Word w = parse_sequence();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_sequence();
      expect(',');
      Word v = parse_sequence();
      expect(']');
      return commutator(u, v);
    }
    for (int g = 0; g < rank_; ++g) {
      if (c == kGeneratorNames[g]) {
        ++pos_;
        return Word::generator(g);
      }
    }
    fail("expected a generator, '1', '[' or '('");
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::int64_t parse_integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer exponent");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 10'000) fail("exponent too large");
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int rank) { return WordParser(text, rank).parse(); }

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& a : w) {
    out += kGeneratorNames[a.gen];
    if (a.sign < 0) out += "^-1";
  }
  return out;
}

std::vector<Word> reduced_words_up_to(int max_len, int rank) {
  std::vector<Word> result;
  result.emplace_back();
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = result.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int g = 0; g < rank; ++g) {
        for (int sign : {+1, -1}) {
          Letter a{static_cast<std::uint8_t>(g), static_cast<std::int8_t>(sign)};
          const auto& base = result[k].letters();
          if (!base.empty() && base.back() == inverse(a)) continue;
          std::vector<Letter> letters = base;
          letters.push_back(a);
          result.push_back(Word(std::move(letters)));
        }
      }
    }
    level_begin = level_end;
  }
  return result;
}

}  // namespace windinv
