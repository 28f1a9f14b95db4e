#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "windinv/words.hpp"

namespace windinv {

class LaurentMatrix;  // matrices.hpp

// <x_1, ..., x_n | r_1, ..., r_m>. Rank is 2 unless stabilization moves
// have extended it; every invariant computation requires rank 2.
struct Presentation {
  int generator_count = 2;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Endomorphism of the rank-2 free group, given by the images of x and y.
// Being an automorphism is a checked property, not an invariant.
struct Endomorphism {
  Word image_of_x;
  Word image_of_y;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

// Relator indices in moves are 1-based, matching the script file format.
struct MultMove {     // r_j <- r_j * r_i, i != j
  int j = 1;
  int i = 2;
};
struct InvertMove {   // r_j <- r_j^-1
  int j = 1;
};
struct ConjugateMove {  // r_j <- g * r_j * g^-1
  int j = 1;
  Word g;
};
struct AutomorphMove {  // r_j <- phi(r_j) for every j; phi must be an automorphism
  Endomorphism phi;
};
struct StabilizeMove {};    // add generator x_{n+1} and relator x_{n+1}
struct DestabilizeMove {};  // inverse of StabilizeMove, when legal

using Move = std::variant<MultMove, InvertMove, ConjugateMove, AutomorphMove,
                          StabilizeMove, DestabilizeMove>;

// Applies one move, validating its preconditions (index ranges, Automorph
// only for genuine rank-2 automorphisms, Destabilize only when the last
// generator occurs exactly as its own trivializing relator and nowhere
// else). Throws std::invalid_argument on violations.
Presentation apply_move(const Presentation& p, const Move& m);

// Substitutes images for letters and reduces. The word must be rank-2.
Word apply_endomorphism(const Endomorphism& phi, const Word& w);

// Magnus criterion: phi is an automorphism of the rank-2 free group iff
// phi([x,y]) is conjugate to [x,y] or [y,x], i.e. its cyclic core is a
// rotation of one of them.
bool is_automorphism_rank2(const Endomorphism& phi);

enum class NielsenKind { swap, invert_x, shear };

// swap: x<->y; invert_x: x -> x^-1; shear: x -> xy. Together they generate
// the automorphism group.
Endomorphism nielsen(NielsenKind kind);

// compose(phi, psi)(g) = phi(psi(g))
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

// True iff every relator lies in the commutator subgroup. Rank-2 only.
bool is_cocommutative(const Presentation& p);

// The m x m matrix by which the vector of relator winding invariants
// transforms under the move: Mult(j,i) -> identity plus a 1 at (j,i),
// Invert(j) -> diagonal -1 at j, Conjugate(j,g) -> diagonal X^k Y^l at j,
// Automorph(phi) -> u * I with u the (unit) winding invariant of
// phi([x,y]). Stabilize/Destabilize have no such action and throw.
LaurentMatrix move_lambda_action(const Move& m, int size);

struct SearchBounds {
  int max_moves = 4;
  int max_conjugator_len = 2;
  int max_relator_len = 24;
};

// Breadth-first search for a move script turning `start` into `goal`,
// using relator multiplication, inversion, conjugation (conjugators up to
// max_conjugator_len, in length-lexicographic order) and the three Nielsen
// automorphisms. States are deduplicated by canonical form (freely and
// cyclically reduced relators, sorted shortlex); the goal test uses the
// same canonical form, and relators longer than max_relator_len are
// pruned. The result is deterministic for fixed bounds; absence within
// bounds is a value, not an error, and claims nothing beyond the bounds.
std::optional<std::vector<Move>> bounded_search(const Presentation& start,
                                                const Presentation& goal,
                                                const SearchBounds& bounds);

// <x, y | [x,y], 1>, the standard presentation of Z x Z padded with a
// trivial relator (its complex is a torus wedge a sphere).
Presentation standard_zz_presentation();

// <x, y | [x,[x,y^-1]]^2 y [y^-1,x] y^-1, [x,[[y^-1,x],x]]>, the exotic
// presentation of Z x Z this workbench replays: same normal closure as the
// standard one, but its relator invariants fill the first column of the
// Evans matrix.
Presentation exotic_zz_presentation();

// Line-oriented text format:
//   generators: x y
//   relator: [x,y]
//   relator: 1
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);

// Move script format, one move per line, 1-based indices:
//   mult j i | invert j | conj j <word> | auto <word> ; <word> | stab | destab
std::vector<Move> parse_move_script(std::string_view text, int rank = kMaxGenerators);
std::string to_string(const Move& m);
std::string to_string(const std::vector<Move>& script);

}  // namespace windinv
