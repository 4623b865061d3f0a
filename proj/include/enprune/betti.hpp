#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace enprune {

/// Graded Betti numbers: (homological index i, internal total degree j) -> rank.
/// Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;

  long at(int i, int j) const;
  void set(int i, int j, long rank);
  void add(int i, int j, long delta);

  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  /// Sum over j of beta_{i,j}.
  long total(int i) const;
  /// Ranks (beta_0, beta_1, ...) up to the projective dimension.
  std::vector<long> ranks() const;

  int projective_dimension() const;
  /// max(j - i) over nonzero entries.
  int regularity() const;
  /// True if for every i >= 1, beta_i is concentrated in degree `start + i - 1`.
  bool is_linear_from(int start) const;

  /// Each entry's degree shifted by `dj` and index by `di`.
  BettiTable shifted(int di, int dj) const;
  /// Entrywise a <= b.
  friend bool entrywise_leq(const BettiTable& a, const BettiTable& b);

  /// Step-diagram layout: rows are j - i, columns are i.
  std::string to_text() const;
  /// {"entries":[[i,j,rank],...]}
  std::string to_json() const;
  static BettiTable from_json(const std::string& text);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, long> entries_;
};

}  // namespace enprune
