#include "windinv/winding.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace windinv {

namespace {

struct VerticalSegment {
  std::int64_t k;     // horizontal position of the segment
  std::int64_t j;     // lower endpoint height: spans [j, j+1]
  std::int64_t sign;  // +1 upward, -1 downward
};

std::vector<VerticalSegment> vertical_segments(const Word& w) {
  std::vector<VerticalSegment> segments;
  std::int64_t k = 0, l = 0;
  for (const Letter& a : w) {
    if (a.gen == 0) {
      k += a.sign;
    } else {
      std::int64_t lower = a.sign > 0 ? l : l - 1;
      segments.push_back({k, lower, a.sign});
      l += a.sign;
    }
  }
  return segments;
}

void require_commutator_element(const Word& w, const char* who) {
  if (!is_commutator_element(w)) {
    throw std::domain_error(std::string(who) + ": word has nonzero exponent sums");
  }
}

struct Box {
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

Box bounding_box(const PathTrace& trace) {
  Box box;
  for (const PathPoint& p : trace.points) {
    box.min_x = std::min(box.min_x, p.x);
    box.max_x = std::max(box.max_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

WindingGrid grid_by_ray_casting(const Word& w, bool parallel) {
  require_commutator_element(w, "winding_grid_oracle");
  const PathTrace trace = trace_path(w);
  const Box box = bounding_box(trace);
  const std::vector<VerticalSegment> segments = vertical_segments(w);

  const std::int64_t cells_x = box.max_x - box.min_x;
  const std::int64_t cells_y = box.max_y - box.min_y;
  WindingGrid grid;
  if (cells_x == 0 || cells_y == 0) return grid;

  // Dense cell array in (j, i) row-major order; cell (i, j) has center
  // (i + 1/2, j + 1/2). A ray from the center in the +x direction crosses
  // exactly the vertical segments with the same lower height and k > i.
  std::vector<std::int64_t> cells(static_cast<std::size_t>(cells_x * cells_y), 0);
  const std::int64_t total = cells_x * cells_y;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const std::int64_t i = box.min_x + idx % cells_x;
    const std::int64_t j = box.min_y + idx / cells_x;
    std::int64_t winding = 0;
    for (const VerticalSegment& s : segments) {
      if (s.j == j && s.k > i) winding += s.sign;
    }
    cells[static_cast<std::size_t>(idx)] = winding;
  }
#ifndef _OPENMP
  (void)parallel;
#endif

  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (cells[static_cast<std::size_t>(idx)] != 0) {
      grid[{box.min_x + idx % cells_x, box.min_y + idx / cells_x}] =
          cells[static_cast<std::size_t>(idx)];
    }
  }
  return grid;
}

}  // namespace

LaurentPoly winding_invariant(const Word& w) {
  require_commutator_element(w, "winding_invariant");
  LaurentPoly p;
  std::int64_t k = 0, l = 0;
  for (const Letter& a : w) {
    if (a.gen == 0) {
      k += a.sign;
      continue;
    }
    const std::int64_t lower = a.sign > 0 ? l : l - 1;
    // s * q_k * Y^lower, with q_k expanded term by term.
    if (k >= 0) {
      for (std::int64_t i = 0; i < k; ++i) p.add_term({i, lower}, a.sign);
    } else {
      for (std::int64_t i = k; i < 0; ++i) p.add_term({i, lower}, -a.sign);
    }
    l += a.sign;
  }
  return p;
}

WindingGrid winding_grid_oracle(const Word& w) { return grid_by_ray_casting(w, false); }

WindingGrid winding_grid_oracle_parallel(const Word& w) { return grid_by_ray_casting(w, true); }

LaurentPoly grid_polynomial(const WindingGrid& grid) {
  LaurentPoly p;
  for (const auto& [cell, value] : grid) p.add_term(cell, value);
  return p;
}

std::vector<LaurentPoly> lambda_vector(const Presentation& p) {
  if (p.generator_count != 2) {
    throw std::domain_error("lambda_vector: presentation must have rank 2");
  }
  std::vector<LaurentPoly> lambda;
  lambda.reserve(p.relators.size());
  for (const Word& r : p.relators) {
    if (!is_commutator_element(r)) {
      throw std::domain_error("lambda_vector: presentation is not cocommutative");
    }
    lambda.push_back(winding_invariant(r));
  }
  return lambda;
}

bool equal_mod_second_derived(const Word& u, const Word& v) {
  if (exponent_sums(u) != exponent_sums(v)) return false;
  return winding_invariant(multiply(u, invert(v))).is_zero();
}

namespace {

struct EdgeSets {
  // Horizontal edge (x, y)-(x+1, y) keyed by (x, y); vertical edge
  // (x, y)-(x, y+1) keyed by (x, y).
  std::set<std::pair<std::int64_t, std::int64_t>> horizontal;
  std::set<std::pair<std::int64_t, std::int64_t>> vertical;
};

EdgeSets traversed_edges(const PathTrace& trace) {
  EdgeSets edges;
  for (std::size_t k = 1; k < trace.points.size(); ++k) {
    const PathPoint& a = trace.points[k - 1];
    const PathPoint& b = trace.points[k];
    if (a.y == b.y) {
      edges.horizontal.insert({std::min(a.x, b.x), a.y});
    } else {
      edges.vertical.insert({a.x, std::min(a.y, b.y)});
    }
  }
  return edges;
}

std::string render_ascii(const PathTrace& trace, const WindingGrid& grid) {
  const Box box = bounding_box(trace);
  const EdgeSets edges = traversed_edges(trace);

  std::size_t label_width = 1;
  for (const auto& [cell, value] : grid) {
    label_width = std::max(label_width, std::to_string(value).size());
  }
  const std::size_t cell_width = label_width + 2;

  std::string out;
  for (std::int64_t y = box.max_y; y >= box.min_y; --y) {
    // Corner row at height y.
    std::string row;
    for (std::int64_t x = box.min_x; x <= box.max_x; ++x) {
      row += (x == 0 && y == 0) ? 'o' : '+';
      if (x < box.max_x) {
        row += std::string(cell_width, edges.horizontal.count({x, y}) ? '-' : ' ');
      }
    }
    out += row;
    out += '\n';
    if (y == box.min_y) break;
    // Cell row for cells with j = y - 1.
    row.clear();
    for (std::int64_t x = box.min_x; x <= box.max_x; ++x) {
      row += edges.vertical.count({x, y - 1}) ? '|' : ' ';
      if (x < box.max_x) {
        auto it = grid.find({x, y - 1});
        std::string label = it == grid.end() ? "" : std::to_string(it->second);
        const std::size_t pad = cell_width - label.size();
        row += std::string(pad / 2 + pad % 2, ' ') + label + std::string(pad / 2, ' ');
      }
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const PathTrace& trace, const WindingGrid& grid) {
  const Box box = bounding_box(trace);
  constexpr std::int64_t unit = 40, margin = 20;
  const std::int64_t width = (box.max_x - box.min_x) * unit + 2 * margin;
  const std::int64_t height = (box.max_y - box.min_y) * unit + 2 * margin;
  const auto sx = [&](std::int64_t x) { return margin + (x - box.min_x) * unit; };
  const auto sy = [&](std::int64_t y) { return margin + (box.max_y - y) * unit; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (std::int64_t x = box.min_x; x <= box.max_x; ++x) {
    svg << "    <line x1=\"" << sx(x) << "\" y1=\"" << sy(box.max_y) << "\" x2=\"" << sx(x)
        << "\" y2=\"" << sy(box.min_y) << "\"/>\n";
  }
  for (std::int64_t y = box.min_y; y <= box.max_y; ++y) {
    svg << "    <line x1=\"" << sx(box.min_x) << "\" y1=\"" << sy(y) << "\" x2=\""
        << sx(box.max_x) << "\" y2=\"" << sy(y) << "\"/>\n";
  }
  svg << "  </g>\n";
  if (trace.points.size() > 1) {
    svg << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
      if (k > 0) svg << " ";
      svg << sx(trace.points[k].x) << "," << sy(trace.points[k].y);
    }
    svg << "\"/>\n";
  }
  svg << "  <circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"5\" fill=\"black\"/>\n";
  for (const auto& [cell, value] : grid) {
    svg << "  <text x=\"" << sx(cell.i) + unit / 2 << "\" y=\"" << sy(cell.j) - unit / 2 + 6
        << "\" text-anchor=\"middle\" font-size=\"16\">" << value << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_grid(const Word& w, GridFormat format) {
  require_commutator_element(w, "render_grid");
  const PathTrace trace = trace_path(w);
  const WindingGrid grid = winding_grid_oracle(w);
  return format == GridFormat::ascii ? render_ascii(trace, grid) : render_svg(trace, grid);
}

}  // namespace windinv
