#include "enprune/homology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <unordered_map>

#include "enprune/linalg.hpp"

namespace enprune {

std::size_t HomologyReport::total_at(std::size_t position) const {
  std::size_t s = 0;
  for (const auto& p : pieces)
    if (p.position == position) s += p.homology;
  return s;
}

bool HomologyReport::vanishes_from(std::size_t from) const { return first_nonzero(from) == nullptr; }

const HomologyPiece* HomologyReport::first_nonzero(std::size_t from) const {
  for (const auto& p : pieces)
    if (p.position >= from && p.homology > 0) return &p;
  return nullptr;
}

int default_homology_bound(const BasedComplex& c) {
  int top = 0;
  for (const auto& m : c.modules())
    for (const auto& g : m.gens) top = std::max(top, c.grading().total(g.degree));
  return top + 3;
}

namespace {

// Exponent vector packed into fixed-width fields; products are word sums.
struct Packed {
  std::array<std::uint64_t, 8> w{};
  bool operator==(const Packed&) const = default;
};

class Packer {
 public:
  Packer(std::size_t nvars, int max_exponent) {
    bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(max_exponent, 1)))));
    per_word_ = static_cast<std::size_t>(64 / bits_);
    if ((nvars + per_word_ - 1) / per_word_ > Packed{}.w.size())
      throw InputError("too many variables for truncated homology at this bound");
  }

  Packed pack(const Monomial& m) const {
    Packed p;
    for (std::size_t v = 0; v < m.size(); ++v)
      p.w[v / per_word_] |= static_cast<std::uint64_t>(m[v]) << (bits_ * static_cast<int>(v % per_word_));
    return p;
  }

 private:
  int bits_;
  std::size_t per_word_;
};

inline Packed product(const Packed& a, const Packed& b) {
  Packed r;
  for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] = a.w[i] + b.w[i];
  return r;
}

struct Term {
  Packed mono;
  Coeff coeff;
};

struct ColumnEntry {
  std::size_t row;
  std::vector<Term> terms;
};

struct BasisElement {
  std::size_t gen;
  std::size_t mono;  // index into the monomial table
};

struct RowKey {
  std::size_t row;
  Packed mono;
  bool operator==(const RowKey&) const = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const noexcept {
    std::uint64_t h = k.row * 0x9e3779b97f4a7c15ull;
    for (auto x : k.mono.w) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

struct MonomialRecord {
  Monomial mono;
  Packed packed;
  MultiDegree degree;
  int total;
};

using Groups = std::map<MultiDegree, std::vector<BasisElement>>;

struct DegreeHash {
  std::size_t operator()(const MultiDegree& d) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int x : d) h = (h ^ static_cast<std::uint32_t>(x)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

class Engine {
 public:
  Engine(const BasedComplex& c, const HomologyOptions& opt)
      : c_(c), opt_(opt), bound_(opt.bound.value_or(default_homology_bound(c))), packer_(c.ring()->nvars(), max_exponent(c, bound_)) {
    int top = 0;
    for (const auto& m : c.modules())
      for (const auto& g : m.gens) top = std::max(top, c.grading().total(g.degree));
    if (bound_ < top)
      throw InputError("truncation bound " + std::to_string(bound_) + " is below the top generator degree " +
                       std::to_string(top));
    auto mask = c.killed_mask();
    const auto& grading = c.grading();
    for (std::size_t v = 0; v < mask.size(); ++v) {
      if (mask[v]) continue;
      if (grading.total(grading.var_degree(v)) <= 0)
        throw InputError("variable " + c.ring()->name(v) + " has non-positive total degree");
      free_.push_back(v);
    }
    columns_.resize(c.length() + 1);
    for (std::size_t i = 1; i <= c.length(); ++i) {
      columns_[i].resize(c.module(i).rank());
      for (const auto& e : c.map(i).entries()) {
        Polynomial p = e.value.kill(mask);
        if (p.is_zero()) continue;
        ColumnEntry ce{e.row, {}};
        for (const auto& [m, a] : p.terms()) ce.terms.push_back({packer_.pack(m), a});
        columns_[i][e.col].push_back(std::move(ce));
      }
    }
    int lowest = bound_;
    for (std::size_t i = opt.min_position; i <= c.length(); ++i)
      for (const auto& g : c.module(i).gens) lowest = std::min(lowest, grading.total(g.degree));
    enumerate(0, Monomial(c.ring()->nvars()), grading.zero(), 0, bound_ - lowest);
  }

  HomologyReport run() {
    HomologyReport report;
    report.bound = bound_;
    const Field& field = c_.ring()->field();
    for (std::size_t i = opt_.min_position; i <= c_.length(); ++i) {
      for (const auto& [deg, basis] : groups(i)) {
        HomologyPiece piece;
        piece.position = i;
        piece.degree = deg;
        piece.total = c_.grading().total(deg);
        piece.dim = basis.size();
        std::size_t rank_out = i == 0 ? 0 : rank(field, i, deg, basis);
        piece.kernel = piece.dim - rank_out;
        const auto& up = groups(i + 1);
        auto it = up.find(deg);
        piece.image = it == up.end() ? 0 : rank(field, i + 1, deg, it->second);
        piece.homology = piece.kernel - piece.image;
        if (piece.homology > 0 && opt_.witnesses) piece.witness = witness(field, i, deg, basis);
        if (piece.homology > 0 || opt_.keep_all_pieces) report.pieces.push_back(std::move(piece));
      }
    }
    return report;
  }

 private:
  static int max_exponent(const BasedComplex& c, int bound) {
    int lowest = 0;
    for (const auto& m : c.modules())
      for (const auto& g : m.gens) lowest = std::min(lowest, c.grading().total(g.degree));
    return bound - lowest;
  }

  void enumerate(std::size_t idx, Monomial m, MultiDegree d, int total, int budget) {
    if (idx == free_.size()) {
      monomials_.push_back({m, packer_.pack(m), d, total});
      return;
    }
    std::size_t v = free_[idx];
    const auto& vd = c_.grading().var_degree(v);
    int vt = c_.grading().total(vd);
    while (true) {
      enumerate(idx + 1, m, d, total, budget);
      if (total + vt > budget) break;
      m[v] += 1;
      d = d + vd;
      total += vt;
    }
  }

  const Groups& groups(std::size_t i) {
    auto it = groups_.find(i);
    if (it != groups_.end()) return it->second;
    std::unordered_map<MultiDegree, std::vector<BasisElement>, DegreeHash> g;
    if (i <= c_.length()) {
      const auto& gens = c_.module(i).gens;
      MultiDegree d;
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& gd = gens[gi].degree;
        int room = bound_ - c_.grading().total(gd);
        for (std::size_t mi = 0; mi < monomials_.size(); ++mi) {
          if (monomials_[mi].total > room) continue;
          const auto& md = monomials_[mi].degree;
          d.resize(gd.size());
          for (std::size_t x = 0; x < d.size(); ++x) d[x] = gd[x] + md[x];
          if (opt_.degree_filter && !opt_.degree_filter(d)) continue;
          auto it = g.find(d);
          if (it == g.end()) it = g.emplace(d, std::vector<BasisElement>{}).first;
          it->second.push_back({gi, mi});
        }
      }
    }
    Groups ordered;
    for (auto& [d, basis] : g) ordered.emplace(d, std::move(basis));
    return groups_.emplace(i, std::move(ordered)).first->second;
  }

  // Image of one basis element of F_i under A_i, as (row key, coefficient) pairs.
  template <class F>
  void apply(std::size_t i, const BasisElement& b, F&& emit) const {
    const Packed& m = monomials_[b.mono].packed;
    for (const auto& ce : columns_[i][b.gen])
      for (const auto& t : ce.terms) emit(RowKey{ce.row, product(t.mono, m)}, t.coeff);
  }

  template <class Ops>
  typename Ops::T convert(const Ops& ops, const Coeff& c) const {
    return ops.from(c);
  }

  template <class Ops>
  std::vector<typename linalg::ColumnReducer<Ops>::Vec> columns(const Ops& ops, std::size_t i,
                                                               const std::vector<BasisElement>& basis) const {
    using Vec = typename linalg::ColumnReducer<Ops>::Vec;
    std::unordered_map<RowKey, std::uint32_t, RowKeyHash> index;
    std::vector<Vec> cols;
    cols.reserve(basis.size());
    for (const auto& b : basis) {
      Vec v;
      apply(i, b, [&](RowKey key, const Coeff& a) {
        auto [it, fresh] = index.emplace(std::move(key), static_cast<std::uint32_t>(index.size()));
        v.emplace_back(it->second, convert(ops, a));
      });
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      cols.push_back(std::move(v));
    }
    return cols;
  }

  template <class Ops>
  std::size_t rank_with(const Ops& ops, std::size_t i, const std::vector<BasisElement>& basis) const {
    linalg::ColumnReducer<Ops> reducer(ops);
    for (auto& v : columns(ops, i, basis)) reducer.add(std::move(v));
    return reducer.rank();
  }

  std::size_t rank(const Field& field, std::size_t i, const MultiDegree& deg, const std::vector<BasisElement>& basis) {
    auto key = std::pair{i, deg};
    auto it = ranks_.find(key);
    if (it != ranks_.end()) return it->second;
    std::size_t r = field.is_prime() ? rank_with(linalg::ModOps{ModArith{field.characteristic()}}, i, basis)
                                     : rank_with(linalg::RationalOps{}, i, basis);
    ranks_.emplace(key, r);
    return r;
  }

  std::vector<Polynomial> witness(const Field& field, std::size_t i, const MultiDegree& deg,
                                  const std::vector<BasisElement>& basis) const {
    if (field.is_prime()) return witness_with(linalg::ModOps{ModArith{field.characteristic()}}, i, deg, basis);
    return witness_with(linalg::RationalOps{}, i, deg, basis);
  }

  template <class Ops>
  std::vector<Polynomial> witness_with(const Ops& ops, std::size_t i, const MultiDegree& deg,
                                       const std::vector<BasisElement>& basis) const {
    using T = typename Ops::T;
    using Vec = typename linalg::ColumnReducer<Ops>::Vec;
    const std::size_t d = basis.size();
    // Kernel of A_i on this piece by dense row reduction.
    std::vector<std::vector<T>> rows;
    if (i > 0) {
      auto cols = columns(ops, i, basis);
      std::uint32_t nrows = 0;
      for (const auto& v : cols)
        for (const auto& [r, x] : v) nrows = std::max(nrows, r + 1);
      rows.assign(nrows, std::vector<T>(d, T(0)));
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [r, x] : cols[j]) rows[r][j] = x;
    }
    std::vector<long> pivot_col;
    std::size_t prow = 0;
    for (std::size_t j = 0; j < d && prow < rows.size(); ++j) {
      std::size_t r = prow;
      while (r < rows.size() && Ops::is_zero(rows[r][j])) ++r;
      if (r == rows.size()) continue;
      std::swap(rows[r], rows[prow]);
      T s = ops.inv(rows[prow][j]);
      for (auto& x : rows[prow]) x = ops.mul(x, s);
      for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
        if (r2 == prow || Ops::is_zero(rows[r2][j])) continue;
        T f = rows[r2][j];
        for (std::size_t jj = 0; jj < d; ++jj) rows[r2][jj] = ops.sub(rows[r2][jj], ops.mul(f, rows[prow][jj]));
      }
      pivot_col.push_back(static_cast<long>(j));
      ++prow;
    }
    std::vector<bool> is_pivot(d, false);
    for (auto j : pivot_col) is_pivot[j] = true;

    // Boundaries in the coordinates of this piece.
    std::unordered_map<RowKey, std::uint32_t, RowKeyHash> coord;
    for (std::size_t j = 0; j < d; ++j)
      coord[RowKey{basis[j].gen, monomials_[basis[j].mono].packed}] = static_cast<std::uint32_t>(j);
    linalg::ColumnReducer<Ops> reducer(ops);
    if (groups_.count(i + 1)) {
      const auto& up = groups_.at(i + 1);
      auto it = up.find(deg);
      if (it != up.end()) {
        for (const auto& b : it->second) {
          std::map<std::uint32_t, T> acc;
          apply(i + 1, b, [&](RowKey key, const Coeff& a) {
            auto idx = coord.at(key);
            auto [pos, fresh] = acc.emplace(idx, convert(ops, a));
            if (!fresh) pos->second = ops.add(pos->second, convert(ops, a));
          });
          Vec v;
          for (auto& [r, x] : acc)
            if (!Ops::is_zero(x)) v.emplace_back(r, x);
          reducer.add(std::move(v));
        }
      }
    }

    for (std::size_t free_col = 0; free_col < d; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<T> kv(d, T(0));
      kv[free_col] = T(1);
      for (std::size_t r = 0; r < pivot_col.size(); ++r) kv[pivot_col[r]] = ops.sub(T(0), rows[r][free_col]);
      Vec v;
      for (std::size_t j = 0; j < d; ++j)
        if (!Ops::is_zero(kv[j])) v.emplace_back(static_cast<std::uint32_t>(j), kv[j]);
      if (!reducer.add(v)) continue;
      T scale = ops.inv(v.front().second);
      std::vector<Polynomial> out(c_.module(i).rank(), Polynomial::zero(c_.ring()));
      const Field& field = c_.ring()->field();
      for (const auto& [j, x] : v) {
        T y = ops.mul(x, scale);
        Coeff cy;
        if constexpr (std::is_same_v<T, mpq_class>)
          cy = y;
        else
          cy = field.from_int(static_cast<long>(y));
        out[basis[j].gen] += Polynomial::term(c_.ring(), monomials_[basis[j].mono].mono, cy);
      }
      return out;
    }
    throw VerificationError("no homology witness found in a piece with nonzero homology");
  }

  const BasedComplex& c_;
  const HomologyOptions& opt_;
  int bound_ = 0;
  Packer packer_;
  std::vector<std::size_t> free_;
  std::vector<std::vector<std::vector<ColumnEntry>>> columns_;
  std::vector<MonomialRecord> monomials_;
  std::map<std::size_t, Groups> groups_;
  std::map<std::pair<std::size_t, MultiDegree>, std::size_t> ranks_;
};

}  // namespace

HomologyReport truncated_homology(const BasedComplex& c, const HomologyOptions& options) {
  Engine engine(c, options);
  return engine.run();
}

}  // namespace enprune
