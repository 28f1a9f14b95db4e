#include "windinv/presentations.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "windinv/matrices.hpp"
#include "windinv/winding.hpp"

namespace windinv {

namespace {

void require_index(int j, int m, const char* who) {
  if (j < 1 || j > m) {
    throw std::invalid_argument(std::string(who) + ": relator index out of range");
  }
}

}  // namespace

Word apply_endomorphism(const Endomorphism& phi, const Word& w) {
  Word out;
  for (const Letter& a : w) {
    if (a.gen > 1) {
      throw std::domain_error("apply_endomorphism: word uses a generator beyond x, y");
    }
    const Word& image = a.gen == 0 ? phi.image_of_x : phi.image_of_y;
    out = multiply(out, a.sign > 0 ? image : invert(image));
  }
  return out;
}

bool is_automorphism_rank2(const Endomorphism& phi) {
  // Magnus: phi is an automorphism iff phi([x,y]) is conjugate to [x,y]
  // or [y,x]; conjugacy classes of cyclically reduced words are rotation
  // classes, so the cyclic core must be one of eight 4-letter words.
  static const std::vector<Word> rotations = [] {
    std::vector<Word> all;
    for (const Word& base : {commutator(Word::generator(0), Word::generator(1)),
                             commutator(Word::generator(1), Word::generator(0))}) {
      std::vector<Letter> letters = base.letters();
      for (std::size_t r = 0; r < letters.size(); ++r) {
        std::rotate(letters.begin(), letters.begin() + 1, letters.end());
        all.push_back(Word(letters));
      }
    }
    return all;
  }();
  const Word image = apply_endomorphism(phi, commutator(Word::generator(0), Word::generator(1)));
  const Word core = cyclic_reduce(image).core;
  return std::find(rotations.begin(), rotations.end(), core) != rotations.end();
}

Endomorphism nielsen(NielsenKind kind) {
  const Word x = Word::generator(0);
  const Word y = Word::generator(1);
  switch (kind) {
    case NielsenKind::swap: return {y, x};
    case NielsenKind::invert_x: return {invert(x), y};
    case NielsenKind::shear: return {multiply(x, y), y};
  }
  throw std::invalid_argument("nielsen: unknown kind");
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  return {apply_endomorphism(phi, psi.image_of_x), apply_endomorphism(phi, psi.image_of_y)};
}

bool is_cocommutative(const Presentation& p) {
  if (p.generator_count != 2) {
    throw std::domain_error("is_cocommutative: presentation must have rank 2");
  }
  return std::all_of(p.relators.begin(), p.relators.end(), is_commutator_element);
}

Presentation apply_move(const Presentation& p, const Move& m) {
  const int count = static_cast<int>(p.relators.size());
  Presentation out = p;
  if (const auto* mult = std::get_if<MultMove>(&m)) {
    require_index(mult->j, count, "apply_move(mult)");
    require_index(mult->i, count, "apply_move(mult)");
    if (mult->i == mult->j) {
      throw std::invalid_argument("apply_move(mult): indices must differ");
    }
    out.relators[mult->j - 1] = multiply(p.relators[mult->j - 1], p.relators[mult->i - 1]);
  } else if (const auto* inv = std::get_if<InvertMove>(&m)) {
    require_index(inv->j, count, "apply_move(invert)");
    out.relators[inv->j - 1] = invert(p.relators[inv->j - 1]);
  } else if (const auto* conj = std::get_if<ConjugateMove>(&m)) {
    require_index(conj->j, count, "apply_move(conj)");
    if (word_rank(conj->g) > p.generator_count) {
      throw std::invalid_argument("apply_move(conj): conjugator uses an absent generator");
    }
    out.relators[conj->j - 1] = conjugate(conj->g, p.relators[conj->j - 1]);
  } else if (const auto* autom = std::get_if<AutomorphMove>(&m)) {
    if (p.generator_count != 2) {
      throw std::invalid_argument("apply_move(auto): presentation must have rank 2");
    }
    if (!is_automorphism_rank2(autom->phi)) {
      throw std::invalid_argument("apply_move(auto): endomorphism is not an automorphism");
    }
    for (Word& r : out.relators) r = apply_endomorphism(autom->phi, r);
  } else if (std::holds_alternative<StabilizeMove>(m)) {
    if (p.generator_count >= kMaxGenerators) {
      throw std::invalid_argument("apply_move(stab): generator name supply exhausted");
    }
    out.relators.push_back(Word::generator(p.generator_count));
    out.generator_count = p.generator_count + 1;
  } else if (std::holds_alternative<DestabilizeMove>(m)) {
    if (p.generator_count <= 2) {
      throw std::invalid_argument("apply_move(destab): rank-2 base cannot be destabilized");
    }
    const int last_gen = p.generator_count - 1;
    if (p.relators.empty() || p.relators.back() != Word::generator(last_gen)) {
      throw std::invalid_argument(
          "apply_move(destab): last relator must be the last generator itself");
    }
    for (std::size_t k = 0; k + 1 < p.relators.size(); ++k) {
      if (word_rank(p.relators[k]) > last_gen) {
        throw std::invalid_argument(
            "apply_move(destab): last generator occurs in another relator");
      }
    }
    out.relators.pop_back();
    out.generator_count = p.generator_count - 1;
  }
  return out;
}

LaurentMatrix move_lambda_action(const Move& m, int size) {
  if (const auto* mult = std::get_if<MultMove>(&m)) {
    require_index(mult->j, size, "move_lambda_action(mult)");
    require_index(mult->i, size, "move_lambda_action(mult)");
    LaurentMatrix action = LaurentMatrix::identity(size);
    action.at(mult->j, mult->i) = LaurentPoly(1);
    return action;
  }
  if (const auto* inv = std::get_if<InvertMove>(&m)) {
    require_index(inv->j, size, "move_lambda_action(invert)");
    LaurentMatrix action = LaurentMatrix::identity(size);
    action.at(inv->j, inv->j) = LaurentPoly(-1);
    return action;
  }
  if (const auto* conj = std::get_if<ConjugateMove>(&m)) {
    require_index(conj->j, size, "move_lambda_action(conj)");
    const ExponentSums sums = exponent_sums(conj->g);
    LaurentMatrix action = LaurentMatrix::identity(size);
    action.at(conj->j, conj->j) = LaurentPoly::monomial(sums.x, sums.y, 1);
    return action;
  }
  if (const auto* autom = std::get_if<AutomorphMove>(&m)) {
    if (!is_automorphism_rank2(autom->phi)) {
      throw std::invalid_argument("move_lambda_action(auto): not an automorphism");
    }
    const LaurentPoly u = winding_invariant(
        apply_endomorphism(autom->phi, commutator(Word::generator(0), Word::generator(1))));
    LaurentMatrix action(size, size);
    for (int k = 1; k <= size; ++k) action.at(k, k) = u;
    return action;
  }
  throw std::invalid_argument("move_lambda_action: no rank-preserving action for stab/destab");
}

namespace {

// One byte per letter; distinct from '|' so relators can be joined safely.
std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size());
  for (const Letter& a : w) key += static_cast<char>('a' + letter_rank(a));
  return key;
}

// Dedup key: cyclically reduced relators, sorted shortlex. A cheap sound
// pruning key, not a complete equivalence invariant.
std::string canonical_key(const Presentation& p) {
  std::vector<Word> cores;
  cores.reserve(p.relators.size());
  for (const Word& r : p.relators) cores.push_back(cyclic_reduce(r).core);
  std::sort(cores.begin(), cores.end(), shortlex_less);
  std::string key;
  for (const Word& core : cores) {
    key += word_key(core);
    key += '|';
  }
  return key;
}

std::vector<Move> enumerate_moves(int relator_count, const SearchBounds& bounds) {
  std::vector<Move> moves;
  for (int j = 1; j <= relator_count; ++j) {
    for (int i = 1; i <= relator_count; ++i) {
      if (i != j) moves.push_back(MultMove{j, i});
    }
  }
  for (int j = 1; j <= relator_count; ++j) moves.push_back(InvertMove{j});
  const std::vector<Word> conjugators = reduced_words_up_to(bounds.max_conjugator_len);
  for (int j = 1; j <= relator_count; ++j) {
    for (const Word& g : conjugators) {
      if (!g.empty()) moves.push_back(ConjugateMove{j, g});
    }
  }
  for (NielsenKind kind : {NielsenKind::swap, NielsenKind::invert_x, NielsenKind::shear}) {
    moves.push_back(AutomorphMove{nielsen(kind)});
  }
  return moves;
}

bool within_relator_cap(const Presentation& p, int cap) {
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [cap](const Word& r) { return static_cast<int>(r.size()) <= cap; });
}

struct SearchNode {
  std::int32_t parent;
  std::int32_t move_index;
};

}  // namespace

std::optional<std::vector<Move>> bounded_search(const Presentation& start,
                                                const Presentation& goal,
                                                const SearchBounds& bounds) {
  if (start.generator_count != 2 || goal.generator_count != 2) {
    throw std::invalid_argument("bounded_search: both presentations must have rank 2");
  }
  if (start.relators.size() != goal.relators.size()) return std::nullopt;

  const std::vector<Move> moves = enumerate_moves(static_cast<int>(start.relators.size()), bounds);
  const std::string goal_key = canonical_key(goal);

  const auto script_for = [&](const std::vector<SearchNode>& nodes, std::int32_t id) {
    std::vector<Move> script;
    for (std::int32_t at = id; at >= 0; at = nodes[at].parent) {
      script.push_back(moves[nodes[at].move_index]);
    }
    std::reverse(script.begin(), script.end());
    return script;
  };

  if (canonical_key(start) == goal_key) return std::vector<Move>{};

  std::vector<SearchNode> nodes;
  std::unordered_set<std::string> visited{canonical_key(start)};
  std::vector<std::pair<Presentation, std::int32_t>> frontier{{start, -1}};

  struct Candidate {
    Presentation pres;
    std::int32_t move_index;
  };

  for (int depth = 1; depth <= bounds.max_moves && !frontier.empty(); ++depth) {
    std::vector<std::vector<Candidate>> expansions(frontier.size());

    // Expansion of each frontier state is independent; candidates land in
    // per-state slots so the merge order below is fixed regardless of
    // thread scheduling.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      std::vector<Candidate>& slot = expansions[f];
      for (std::size_t mi = 0; mi < moves.size(); ++mi) {
        Presentation child = apply_move(frontier[f].first, moves[mi]);
        if (!within_relator_cap(child, bounds.max_relator_len)) continue;
        slot.push_back(Candidate{std::move(child), static_cast<std::int32_t>(mi)});
      }
    }

    std::vector<std::pair<Presentation, std::int32_t>> next;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (Candidate& cand : expansions[f]) {
        std::string key = canonical_key(cand.pres);
        const bool is_goal = key == goal_key;
        if (!visited.insert(std::move(key)).second) continue;
        nodes.push_back(SearchNode{frontier[f].second, cand.move_index});
        const auto id = static_cast<std::int32_t>(nodes.size() - 1);
        if (is_goal) return script_for(nodes, id);
        if (depth < bounds.max_moves) next.emplace_back(std::move(cand.pres), id);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

Presentation standard_zz_presentation() {
  const Word x = Word::generator(0);
  const Word y = Word::generator(1);
  return Presentation{2, {commutator(x, y), Word()}};
}

Presentation exotic_zz_presentation() {
  const Word x = Word::generator(0);
  const Word y = Word::generator(1);
  const Word d = commutator(x, invert(y));  // [x, y^-1]
  const Word r1 = multiply(multiply(power(commutator(x, d), 2), y),
                           multiply(commutator(invert(y), x), invert(y)));
  const Word r2 = commutator(x, commutator(commutator(invert(y), x), x));
  return Presentation{2, {r1, r2}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool skippable(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  p.generator_count = 0;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = trim(lines[n]);
    if (skippable(line)) continue;
    const std::size_t line_no = n + 1;
    if (line.starts_with("generators:")) {
      if (p.generator_count != 0) {
        throw ParseError("duplicate generators line", line_no);
      }
      std::istringstream names(std::string(line.substr(11)));
      std::string name;
      int index = 0;
      while (names >> name) {
        if (index >= kMaxGenerators || name != std::string(1, kGeneratorNames[index])) {
          throw ParseError("generators must be named x, y, z, ... in order", line_no);
        }
        ++index;
      }
      if (index < 2) throw ParseError("at least two generators required", line_no);
      p.generator_count = index;
    } else if (line.starts_with("relator:")) {
      if (p.generator_count == 0) {
        throw ParseError("relator before generators line", line_no);
      }
      Word r;
      try {
        r = parse_word(line.substr(8), p.generator_count);
      } catch (const ParseError& err) {
        throw ParseError(std::string("bad relator: ") + err.what(), line_no);
      }
      p.relators.push_back(std::move(r));
    } else {
      throw ParseError("expected 'generators:' or 'relator:'", line_no);
    }
  }
  if (p.generator_count == 0) throw ParseError("missing generators line", 0);
  return p;
}

std::string to_string(const Presentation& p) {
  std::string out = "generators:";
  for (int g = 0; g < p.generator_count; ++g) {
    out += ' ';
    out += kGeneratorNames[g];
  }
  out += '\n';
  for (const Word& r : p.relators) {
    out += "relator: ";
    out += to_string(r);
    out += '\n';
  }
  return out;
}

std::vector<Move> parse_move_script(std::string_view text, int rank) {
  std::vector<Move> script;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = trim(lines[n]);
    if (skippable(line)) continue;
    const std::size_t line_no = n + 1;
    std::istringstream in{std::string(line)};
    std::string op;
    in >> op;
    if (op == "mult") {
      MultMove m;
      if (!(in >> m.j >> m.i)) throw ParseError("mult needs two indices", line_no);
      script.push_back(m);
    } else if (op == "invert") {
      InvertMove m;
      if (!(in >> m.j)) throw ParseError("invert needs an index", line_no);
      script.push_back(m);
    } else if (op == "conj" || op == "auto") {
      std::string rest;
      int j = 0;
      if (op == "conj" && !(in >> j)) throw ParseError("conj needs an index", line_no);
      std::getline(in, rest);
      try {
        if (op == "conj") {
          script.push_back(ConjugateMove{j, parse_word(rest, rank)});
        } else {
          const std::size_t semi = rest.find(';');
          if (semi == std::string::npos) {
            throw ParseError("auto needs '<word> ; <word>'", line_no);
          }
          AutomorphMove m;
          m.phi.image_of_x = parse_word(std::string_view(rest).substr(0, semi), 2);
          m.phi.image_of_y = parse_word(std::string_view(rest).substr(semi + 1), 2);
          script.push_back(m);
        }
      } catch (const ParseError& err) {
        throw ParseError(std::string("bad word in move: ") + err.what(), line_no);
      }
    } else if (op == "stab") {
      script.push_back(StabilizeMove{});
    } else if (op == "destab") {
      script.push_back(DestabilizeMove{});
    } else {
      throw ParseError("unknown move '" + op + "'", line_no);
    }
  }
  return script;
}

std::string to_string(const Move& m) {
  if (const auto* mult = std::get_if<MultMove>(&m)) {
    return "mult " + std::to_string(mult->j) + " " + std::to_string(mult->i);
  }
  if (const auto* inv = std::get_if<InvertMove>(&m)) {
    return "invert " + std::to_string(inv->j);
  }
  if (const auto* conj = std::get_if<ConjugateMove>(&m)) {
    return "conj " + std::to_string(conj->j) + " " + to_string(conj->g);
  }
  if (const auto* autom = std::get_if<AutomorphMove>(&m)) {
    return "auto " + to_string(autom->phi.image_of_x) + " ; " + to_string(autom->phi.image_of_y);
  }
  if (std::holds_alternative<StabilizeMove>(m)) return "stab";
  return "destab";
}

std::string to_string(const std::vector<Move>& script) {
  std::string out;
  for (const Move& m : script) {
    out += to_string(m);
    out += '\n';
  }
  return out;
}

}  // namespace windinv
