#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qharmonic/rational.hpp"

namespace qharmonic {

/// Finite list of non-negative integer exponents.  Most operations require
/// strictly positive entries; evaluators additionally accept zeros.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);

  static Composition ones(int m);  // (1, 1, ..., 1), m entries

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int weight() const;
  bool all_positive() const;

  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  friend bool operator==(const Composition& a, const Composition& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.entries_ < b.entries_;
  }

  /// Comma-separated entries, e.g. "1,2,1"; "" for the empty composition.
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Parses the list grammar
///   list ::= item (',' item)*
///   item ::= INT | '{' INT '}' '^' INT
/// where a braced item repeats its entry, e.g. "{1}^3,2" -> (1,1,1,2).
/// A repeat count of 0 contributes nothing; "{1}^0" alone parses to the
/// empty composition.  Throws std::invalid_argument with the offending
/// position on malformed input.
Composition parse_composition(const std::string& text);

/// Partial sums (t_i = s_1 + ... + s_i), strictly increasing when all
/// entries are positive.  Throws std::invalid_argument on empty input or
/// an entry < 1.
std::vector<int> partial_sums(const Composition& s);

/// Inverse of partial_sums: first differences of a strictly increasing
/// positive sequence.  Validates its input.
Composition first_differences(const std::vector<int>& t);

/// The reflection on strictly increasing sequences: replaces t_1..t_(m-1)
/// by their complement in {1, ..., t_m}, sorted increasing; the maximum
/// t_m stays (it ends up last).  An involution.
std::vector<int> complement_keep_max(const std::vector<int>& t);

/// Conjugates complement_keep_max by partial sums.  Weight-preserving
/// involution on compositions with positive entries.
Composition dual(const Composition& s);

/// All 2^(m-1) ways of replacing commas by plus signs, ordered by the
/// binary counter over comma positions whose low bit is the rightmost
/// comma; the all-commas original comes first, the full sum last.
std::vector<Composition> coarsenings(const Composition& s);

/// Builds the related pair of compositions indexed by blocks (a_j, b_j),
/// j = 1..r (all entries >= 1, r >= 1):
///   first  = cat_{j<r} [ {1}^(a_j - 1), b_j + 1 ] ++ {1}^(a_r - 1) ++ [b_r]
///   second = [a_1] ++ {1}^(b_1 - 1) ++ cat_{j>=2} [ a_j + 1, {1}^(b_j - 1) ]
/// The two outputs are dual to each other, and `first` ranges over all
/// positive compositions exactly once as (a, b) ranges over all blocks.
std::pair<Composition, Composition> dual_pair_from_blocks(
    const std::vector<int>& a, const std::vector<int>& b);

/// Inverse of the `first` component above: recovers the unique blocks
/// (a, b) with dual_pair_from_blocks(a, b).first == s.
std::pair<std::vector<int>, std::vector<int>> blocks_from_composition(
    const Composition& s);

}  // namespace qharmonic
