#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windinv/presentations.hpp"
#include "windinv/words.hpp"

namespace windinv {

// One factor u * r_j^s * u^-1 of a normal-closure membership witness.
struct CertificateStep {
  Word conjugator;
  int relator_index = 1;  // 1-based
  int sign = 1;           // +1 or -1

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

// A verifiable witness that a word lies in the normal closure of the
// relators: the expansion of the steps must equal the target exactly.
struct Certificate {
  std::vector<CertificateStep> steps;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// The freely reduced product of the step factors, in order.
// Throws std::invalid_argument on an out-of-range relator index.
Word expand(const Certificate& c, const Presentation& p);

// True iff expand(c, p) == target.
bool verify(const Certificate& c, const Presentation& p, const Word& target);

// Necessary condition via the winding invariant: the invariant of the
// target must equal the accumulated combination
// sum_i sign_i * X^k_i Y^l_i * P_{r_{j_i}} with (k_i, l_i) the exponent
// sums of the i-th conjugator. Requires p cocommutative (rank 2) and
// target in the commutator subgroup; throws std::domain_error otherwise.
// A valid certificate always passes; a fast filter for candidate ones.
bool lambda_consistency(const Certificate& c, const Presentation& p, const Word& target);

struct CertificateSearchBounds {
  int max_steps = 3;
  int max_conjugator_len = 2;
};

// Breadth-first search for a certificate with at most max_steps factors,
// conjugators enumerated in length-lexicographic order. An exponent-sum
// filter rejects targets outside the lattice spanned by the relators'
// exponent sums before any expansion. Deterministic; absence within the
// bounds is a value, not an error.
std::optional<Certificate> search_certificate(const Presentation& p, const Word& target,
                                              const CertificateSearchBounds& bounds);

// Line format: `<sign:+|-> <relator_index> <conjugator>` per step, where
// the conjugator is in word grammar ("1" for the empty word). Blank lines
// and '#' comments are ignored.
Certificate parse_certificate(std::string_view text, int rank = 2);
std::string to_string(const Certificate& c);

}  // namespace windinv
