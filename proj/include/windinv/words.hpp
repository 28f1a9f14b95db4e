#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "windinv/errors.hpp"

namespace windinv {

// Generators are indexed 0, 1, 2, ... and named after this list. Rank two
// (x, y) is the home of every invariant; indices >= 2 exist only so that
// stabilization moves have somewhere to live.
inline constexpr int kMaxGenerators = 6;
inline constexpr const char* kGeneratorNames = "xyzuvw";

enum class Gen : std::uint8_t { x = 0, y = 1 };

struct Letter {
  std::uint8_t gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

constexpr Letter inverse(Letter a) {
  return Letter{a.gen, static_cast<std::int8_t>(-a.sign)};
}

// Total order on letters: x < x^-1 < y < y^-1 < z < ...
constexpr int letter_rank(Letter a) { return 2 * a.gen + (a.sign < 0 ? 1 : 0); }

// A freely reduced word in the free group. The empty word is the identity.
// Construction reduces eagerly, so every Word in the system is reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    reduce_in_place(letters_);
  }

  static Word single(Letter a) { return Word(std::vector<Letter>{a}); }
  static Word generator(int gen, int sign = 1) {
    return single(Letter{static_cast<std::uint8_t>(gen), static_cast<std::int8_t>(sign)});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

  // Free reduction: cancel adjacent inverse pairs until none remain.
  // Cancellation is confluent, so the result does not depend on order.
  static void reduce_in_place(std::vector<Letter>& letters);

 private:
  std::vector<Letter> letters_;
};

// Shortlex order (length first, then letter_rank); strict weak order used
// for map keys and canonical sorting of relators.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

struct ExponentSums {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

struct PathPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

// Lattice path traced by a rank-2 word, starting at the origin; one entry
// per letter plus the starting point.
struct PathTrace {
  std::vector<PathPoint> points;

  friend bool operator==(const PathTrace&, const PathTrace&) = default;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, std::int64_t n);

// g w g^-1
Word conjugate(const Word& g, const Word& w);

// [u, v] = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

// Number of generators the word actually uses (max index + 1, rank >= 2).
int word_rank(const Word& w);

// Signed letter counts of x and y. Rank-2 only.
ExponentSums exponent_sums(const Word& w);

// True iff both exponent sums vanish, i.e. w lies in the commutator subgroup.
bool is_commutator_element(const Word& w);

PathTrace trace_path(const Word& w);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
  Word core;
  Word conjugator;
};
CyclicForm cyclic_reduce(const Word& w);

// Parses the word grammar (whitespace ignored):
//   word := term* ; term := atom ("^" integer)?
//   atom := generator | "1" | "[" word "," word "]" | "(" word ")"
//   integer := "-"? digit+
// "[u,v]" expands to the commutator u v u^-1 v^-1; "1" is the identity.
// Generators accepted are the first `rank` names of kGeneratorNames.
// Throws ParseError with the offending byte offset.
Word parse_word(std::string_view text, int rank = 2);

// Letters concatenated, inverses as "x^-1"; the empty word prints as "1".
// parse_word(to_string(w)) == w.
std::string to_string(const Word& w);

// All freely reduced words of length <= max_len over the first `rank`
// generators, in length-lexicographic order (empty word first).
std::vector<Word> reduced_words_up_to(int max_len, int rank = 2);

}  // namespace windinv
