#pragma once

// ASCII diagrams in French notation, printed top row first.

#include <algorithm>
#include <string>
#include <vector>

#include "kschur/tableau.hpp"

namespace kschur {

namespace detail {

inline std::string render_grid(const std::vector<std::vector<std::string>>& rows_bottom_first) {
  std::size_t width = 1;
  for (const auto& row : rows_bottom_first)
    for (const auto& tok : row) width = std::max(width, tok.size());
  std::string out;
  for (auto it = rows_bottom_first.rbegin(); it != rows_bottom_first.rend(); ++it) {
    std::string line;
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (i > 0) line += ' ';
      line += (*it)[i];
      line.append(width - (*it)[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace detail

/// One token "L.r" (letter, residue) per skew cell; inner cells show ".".
inline std::string render(const KTableau& t) {
  std::vector<std::vector<std::string>> grid;
  const int m = t.modulus();
  for (int r = 1; r <= t.outer.length(); ++r) {
    std::vector<std::string> row;
    for (int c = 1; c <= t.outer.row(r); ++c) {
      if (c <= t.inner.row(r)) row.emplace_back(".");
      else row.push_back(std::to_string(t.at(Cell{r, c})) + "." + std::to_string(residue(Cell{r, c}, m)));
    }
    grid.push_back(std::move(row));
  }
  return detail::render_grid(grid);
}

/// Residue labels of the cells of p.
inline std::string render_residues(const Partition& p, int modulus) {
  std::vector<std::vector<std::string>> grid;
  for (int r = 1; r <= p.length(); ++r) {
    std::vector<std::string> row;
    for (int c = 1; c <= p.row(r); ++c) row.push_back(std::to_string(residue(Cell{r, c}, modulus)));
    grid.push_back(std::move(row));
  }
  return detail::render_grid(grid);
}

}  // namespace kschur
