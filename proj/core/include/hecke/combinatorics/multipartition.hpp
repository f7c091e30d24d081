#pragma once

#include <string>
#include <vector>

#include "hecke/combinatorics/perm.hpp"

namespace hecke {

using Partition = std::vector<int>;

/// An r-tuple of partitions.
struct Multipartition {
  std::vector<Partition> comp;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c);
  int r() const { return static_cast<int>(comp.size()); }
  int size() const;
  int comp_size(int s) const;
  bool operator==(const Multipartition& o) const { return comp == o.comp; }
  bool operator!=(const Multipartition& o) const { return comp != o.comp; }
  bool operator<(const Multipartition& o) const { return comp < o.comp; }

  /// Text form "[[2,1],[],[1]]".
  std::string to_string() const;
  static Multipartition parse(const std::string& text);
};

/// A node of a diagram; row, column and component are all 0-based.
struct Node {
  int row = 0, col = 0, comp = 0;
  bool operator==(const Node& o) const { return row == o.row && col == o.col && comp == o.comp; }
};

std::vector<Partition> enumerate_partitions(int n);
/// All multipartitions of n with r components, greatest first in a total order refining dominance.
std::vector<Multipartition> enumerate_multipartitions(int n, int r);
/// Dominance order; throws ShapeMismatch when sizes or component counts differ.
bool dominance_ge(const Multipartition& a, const Multipartition& b);
/// Sort key realizing the total order used throughout (larger key comes first).
std::vector<int> dominance_key(const Multipartition& a);
/// Number of standard tableaux, by hook lengths and a multinomial coefficient.
long hook_count(const Multipartition& a);

/// Standard tableau: entries[s][i][j] in 1..n.
struct Tableau {
  Multipartition shape;
  std::vector<std::vector<std::vector<int>>> entries;
  std::vector<Node> pos;  // pos[k-1] = node holding k

  int n() const { return static_cast<int>(pos.size()); }
  int at(const Node& x) const { return entries[x.comp][x.row][x.col]; }
  bool operator==(const Tableau& o) const { return shape == o.shape && entries == o.entries; }
  bool operator<(const Tableau& o) const { return entries < o.entries; }
  bool is_standard() const;
  /// Component holding k (1-based k, 0-based component).
  int comp_of(int k) const { return pos[k - 1].comp; }
  /// Shape formed by the entries 1..k.
  Multipartition shape_k(int k) const;
  /// The tableau t.w, which places w(t(x)) at each node x.
  Tableau act(const Perm& w) const;
  std::string to_string() const;
};

Tableau from_entries(const Multipartition& shape, std::vector<std::vector<std::vector<int>>> entries);
/// Row-reading superstandard tableau: 1..n along rows, component by component.
Tableau superstandard(const Multipartition& shape);
/// d(t), defined by t = t^lambda . d(t).
Perm tableau_perm(const Tableau& t);
/// Standard tableaux of the given shape, sorted by the lexicographic order on d(t).
std::vector<Tableau> enumerate_standard_tableaux(const Multipartition& shape);

}  // namespace hecke
