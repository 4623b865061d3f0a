#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "enprune/field.hpp"

namespace enprune::linalg {

struct ModOps {
  using T = std::uint32_t;
  ModArith arith;

  static bool is_zero(T a) { return a == 0; }
  T add(T a, T b) const { return arith.add(a, b); }
  T sub(T a, T b) const { return arith.sub(a, b); }
  T mul(T a, T b) const { return arith.mul(a, b); }
  T inv(T a) const { return arith.inv(a); }
  T from(const Coeff& c) const { return static_cast<T>(c.get_num().get_ui() % arith.p); }
};

struct RationalOps {
  using T = mpq_class;

  static bool is_zero(const T& a) { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T from(const Coeff& c) const { return c; }
};

/// Incremental rank of a set of sparse column vectors. Each column is a list
/// of (row index, value) pairs sorted by row index with no zero values.
template <class Ops>
class ColumnReducer {
 public:
  using T = typename Ops::T;
  using Vec = std::vector<std::pair<std::uint32_t, T>>;

  explicit ColumnReducer(Ops ops = {}) : ops_(std::move(ops)) {}

  /// Reduces v against the stored pivots; returns true if it was independent.
  bool add(Vec v) {
    while (!v.empty()) {
      auto lead = v.back().first;
      if (lead >= slot_.size()) slot_.resize(lead + 1, none);
      if (slot_[lead] == none) {
        T scale = ops_.inv(v.back().second);
        for (auto& [r, x] : v) x = ops_.mul(x, scale);
        slot_[lead] = static_cast<std::uint32_t>(pivots_.size());
        pivots_.push_back(std::move(v));
        return true;
      }
      T factor = v.back().second;
      axpy(v, factor, pivots_[slot_[lead]], scratch_);
      std::swap(v, scratch_);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  static constexpr std::uint32_t none = ~std::uint32_t{0};

  // out = v - factor * p, where p has leading coefficient 1 at the same index as v.
  void axpy(const Vec& v, const T& factor, const Vec& p, Vec& out) const {
    out.clear();
    out.reserve(v.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < p.size()) {
      if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || p[j].first < v[i].first) {
        T x = ops_.sub(T(0), ops_.mul(factor, p[j].second));
        if (!Ops::is_zero(x)) out.emplace_back(p[j].first, std::move(x));
        ++j;
      } else {
        T x = ops_.sub(v[i].second, ops_.mul(factor, p[j].second));
        if (!Ops::is_zero(x)) out.emplace_back(v[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
  }

  Ops ops_;
  std::vector<Vec> pivots_;
  std::vector<std::uint32_t> slot_;
  Vec scratch_;
};

/// Rank of integer columns (entries given as small signed integers) over a field.
std::size_t rank_of_integer_columns(const Field& field,
                                    const std::vector<std::vector<std::pair<std::uint32_t, long>>>& cols);

}  // namespace enprune::linalg
