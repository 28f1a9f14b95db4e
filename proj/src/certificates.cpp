#include "windinv/certificates.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "windinv/winding.hpp"

namespace windinv {

namespace {

void require_step(const CertificateStep& step, const Presentation& p) {
  if (step.relator_index < 1 || step.relator_index > static_cast<int>(p.relators.size())) {
    throw std::invalid_argument("certificate: relator index out of range");
  }
  if (step.sign != 1 && step.sign != -1) {
    throw std::invalid_argument("certificate: sign must be +1 or -1");
  }
}

Word step_factor(const CertificateStep& step, const Presentation& p) {
  const Word& r = p.relators[step.relator_index - 1];
  return conjugate(step.conjugator, step.sign > 0 ? r : invert(r));
}

}  // namespace

Word expand(const Certificate& c, const Presentation& p) {
  Word product;
  for (const CertificateStep& step : c.steps) {
    require_step(step, p);
    product = multiply(product, step_factor(step, p));
  }
  return product;
}

bool verify(const Certificate& c, const Presentation& p, const Word& target) {
  return expand(c, p) == target;
}

bool lambda_consistency(const Certificate& c, const Presentation& p, const Word& target) {
  if (!is_cocommutative(p)) {
    throw std::domain_error("lambda_consistency: presentation is not cocommutative");
  }
  if (!is_commutator_element(target)) {
    throw std::domain_error("lambda_consistency: target is not in the commutator subgroup");
  }
  const std::vector<LaurentPoly> lambda = lambda_vector(p);
  LaurentPoly sum;
  for (const CertificateStep& step : c.steps) {
    require_step(step, p);
    const ExponentSums sums = exponent_sums(step.conjugator);
    const LaurentPoly contribution =
        LaurentPoly::monomial(sums.x, sums.y, step.sign) * lambda[step.relator_index - 1];
    sum += contribution;
  }
  return sum == winding_invariant(target);
}

namespace {

// Membership of `target` in the subgroup of Z^2 spanned by `vectors`,
// by column reduction to a triangular basis.
bool in_exponent_lattice(ExponentSums target, std::vector<ExponentSums> vectors) {
  // Reduce to (a, b), (0, c) with a >= 0, c >= 0.
  std::int64_t a = 0, b = 0, c = 0;
  for (ExponentSums v : vectors) {
    // Fold (v.x, v.y) into the triangular form with a gcd loop on the
    // first coordinate.
    std::int64_t vx = v.x, vy = v.y;
    while (vx != 0) {
      if (a == 0) {
        std::swap(a, vx);
        std::swap(b, vy);
        continue;
      }
      const std::int64_t q = vx / a;
      vx -= q * a;
      vy -= q * b;
      if (vx != 0) {
        std::swap(a, vx);
        std::swap(b, vy);
      }
    }
    // vx is now 0; fold vy into c.
    while (vy != 0) {
      if (c == 0) std::swap(c, vy);
      else {
        const std::int64_t q = vy / c;
        vy -= q * c;
        if (vy != 0) std::swap(c, vy);
      }
    }
  }
  if (a < 0) { a = -a; b = -b; }
  if (c < 0) c = -c;
  std::int64_t tx = target.x, ty = target.y;
  if (a == 0) {
    if (tx != 0) return false;
  } else {
    if (tx % a != 0) return false;
    ty -= (tx / a) * b;
  }
  if (c == 0) return ty == 0;
  return ty % c == 0;
}

}  // namespace

std::optional<Certificate> search_certificate(const Presentation& p, const Word& target,
                                              const CertificateSearchBounds& bounds) {
  if (p.relators.empty()) {
    return target.empty() ? std::optional<Certificate>(Certificate{}) : std::nullopt;
  }

  std::vector<ExponentSums> relator_sums;
  relator_sums.reserve(p.relators.size());
  for (const Word& r : p.relators) relator_sums.push_back(exponent_sums(r));
  if (!in_exponent_lattice(exponent_sums(target), relator_sums)) return std::nullopt;

  if (target.empty()) return Certificate{};

  // All step factors, in deterministic enumeration order: relator index
  // ascending, sign + before -, conjugators length-lexicographic.
  std::vector<CertificateStep> steps;
  std::vector<Word> factors;
  std::size_t max_factor_len = 0;
  for (const Word& g : reduced_words_up_to(bounds.max_conjugator_len)) {
    for (int j = 1; j <= static_cast<int>(p.relators.size()); ++j) {
      for (int sign : {+1, -1}) {
        CertificateStep step{g, j, sign};
        Word factor = step_factor(step, p);
        if (factor.empty()) continue;
        max_factor_len = std::max(max_factor_len, factor.size());
        steps.push_back(std::move(step));
        factors.push_back(std::move(factor));
      }
    }
  }
  if (steps.empty()) return std::nullopt;

  // Breadth-first over partial products. A state at depth d can still
  // reach the target only if the remaining steps can bridge the length
  // gap, each factor changing the product length by at most its own.
  struct Node {
    std::int32_t parent;
    std::int32_t step_index;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<Word, std::int32_t>> frontier{{Word(), -1}};
  std::unordered_map<std::string, bool> visited;
  const auto word_key = [](const Word& w) {
    std::string key;
    key.reserve(w.size());
    for (const Letter& a : w) key += static_cast<char>('a' + letter_rank(a));
    return key;
  };
  visited[word_key(Word())] = true;

  for (int depth = 1; depth <= bounds.max_steps && !frontier.empty(); ++depth) {
    const std::int64_t remaining_after =
        static_cast<std::int64_t>(bounds.max_steps - depth) *
        static_cast<std::int64_t>(max_factor_len);
    std::vector<std::pair<Word, std::int32_t>> next;
    for (const auto& [product, parent] : frontier) {
      for (std::size_t s = 0; s < steps.size(); ++s) {
        Word extended = multiply(product, factors[s]);
        const std::int64_t gap =
            std::llabs(static_cast<std::int64_t>(extended.size()) -
                       static_cast<std::int64_t>(target.size()));
        if (gap > remaining_after) continue;
        auto [it, inserted] = visited.try_emplace(word_key(extended), true);
        if (!inserted) continue;
        nodes.push_back(Node{parent, static_cast<std::int32_t>(s)});
        const auto id = static_cast<std::int32_t>(nodes.size() - 1);
        if (extended == target) {
          Certificate cert;
          for (std::int32_t at = id; at >= 0; at = nodes[at].parent) {
            cert.steps.push_back(steps[nodes[at].step_index]);
          }
          std::reverse(cert.steps.begin(), cert.steps.end());
          return cert;
        }
        if (depth < bounds.max_steps) next.emplace_back(std::move(extended), id);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

Certificate parse_certificate(std::string_view text, int rank) {
  Certificate cert;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line{text.substr(start, end - start)};
    start = end + 1;
    ++line_no;
    // Trim and skip blanks/comments.
    std::istringstream in(line);
    std::string sign_token;
    if (!(in >> sign_token) || sign_token.front() == '#') continue;
    CertificateStep step;
    if (sign_token == "+") step.sign = 1;
    else if (sign_token == "-") step.sign = -1;
    else throw ParseError("certificate step must begin with '+' or '-'", line_no);
    if (!(in >> step.relator_index)) {
      throw ParseError("certificate step needs a relator index", line_no);
    }
    std::string conjugator_text;
    std::getline(in, conjugator_text);
    try {
      step.conjugator = parse_word(conjugator_text, rank);
    } catch (const ParseError& err) {
      throw ParseError(std::string("bad conjugator: ") + err.what(), line_no);
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::string to_string(const Certificate& c) {
  std::string out;
  for (const CertificateStep& step : c.steps) {
    out += step.sign > 0 ? '+' : '-';
    out += ' ';
    out += std::to_string(step.relator_index);
    out += ' ';
    out += to_string(step.conjugator);
    out += '\n';
  }
  return out;
}

}  // namespace windinv
