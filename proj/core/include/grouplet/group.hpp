#pragma once

#include <memory>
#include <string>
#include <vector>

#include "grouplet/errors.hpp"

namespace grouplet {

/// A finite group of order n given as a validated Cayley table with a fixed
/// element ordering. Index 0 is always the identity. Construction verifies
/// the identity convention, the Latin-square property, associativity
/// (exhaustively for n <= 64, by Light's test on a greedy generating set
/// above), and two-sided consistency of the inverse map.
///
/// FiniteGroup is a cheap value handle over immutable shared data: copies
/// alias the same table, so group-ring elements and verdicts can hold their
/// group by value.
class FiniteGroup {
 public:
  /// Validates and adopts an n x n Cayley table; table[i][j] is the index
  /// of g_i * g_j. Orders above 128 are rejected.
  static FiniteGroup from_table(int n, const std::vector<std::vector<int>>& table,
                                std::string label);

  /// Cyclic group of order n with the ordering 1, g, g^2, ..., g^{n-1}
  /// (index k holds g^k).
  static FiniteGroup cyclic(int n);

  /// Dihedral group of order 2m: rotations r^0..r^{m-1} first, then the
  /// reflections s*r^0..s*r^{m-1}.
  static FiniteGroup dihedral(int m);

  /// Symmetric group on m letters (m <= 5), elements in lexicographic
  /// order so the identity permutation comes first.
  static FiniteGroup symmetric(int m);

  /// Quaternion group of order 8, ordered 1, i, j, k, -1, -i, -j, -k.
  static FiniteGroup quaternion8();

  /// Direct product with lexicographic pair ordering: index of (g_i, h_j)
  /// is i*|H| + j.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return data_->n; }

  /// Index of g_i * g_j.
  int op(int i, int j) const {
    return data_->table[static_cast<std::size_t>(i) * data_->n + j];
  }

  /// Index of g_i^{-1}.
  int inverse_index(int i) const;

  const std::string& label() const { return data_->label; }

  /// Structural equality: same order and same Cayley table. Aliased
  /// handles compare equal without touching the table.
  bool same_structure(const FiniteGroup& other) const;

 private:
  struct Data {
    int n;
    std::vector<int> table;  // row-major n x n
    std::vector<int> inv;
    std::string label;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteGroup build(int n, std::vector<int> table, std::string label);
  static void validate(const Data& data);

  std::shared_ptr<const Data> data_;
};

/// Parses the group spec syntax: `C<n>`, `D<m>`, `S<m>`, `Q8`, direct
/// products joined with `x` (e.g. `C2xC2`), or `@file.json` for a Cayley
/// table file { "n": int, "label": string, "table": [[int]] }. Loaded
/// tables are re-validated in full.
FiniteGroup parse_group_spec(const std::string& text);

/// The built-in test corpus: C1..C12, D3..D6, S3, Q8, C2xC2, C2xC4,
/// C2xC2xC2, and S4 when max_order admits it. Sorted by order, then label.
std::vector<FiniteGroup> catalog_groups(int max_order = 12);

}  // namespace grouplet
