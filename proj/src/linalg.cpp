#include "enprune/linalg.hpp"

namespace enprune::linalg {

std::size_t rank_of_integer_columns(const Field& field,
                                    const std::vector<std::vector<std::pair<std::uint32_t, long>>>& cols) {
  if (field.is_prime()) {
    const long p = field.characteristic();
    ColumnReducer<ModOps> reducer(ModOps{ModArith{field.characteristic()}});
    for (const auto& col : cols) {
      ColumnReducer<ModOps>::Vec v;
      for (auto [r, x] : col) {
        long m = ((x % p) + p) % p;
        if (m) v.emplace_back(r, static_cast<std::uint32_t>(m));
      }
      reducer.add(std::move(v));
    }
    return reducer.rank();
  }
  ColumnReducer<RationalOps> reducer;
  for (const auto& col : cols) {
    ColumnReducer<RationalOps>::Vec v;
    for (auto [r, x] : col)
      if (x) v.emplace_back(r, mpq_class(x));
    reducer.add(std::move(v));
  }
  return reducer.rank();
}

}  // namespace enprune::linalg
