#include "enprune/pattern.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace enprune {

namespace {

std::string default_name(int r, int j) { return "x_" + std::to_string(r + 1) + "_" + std::to_string(j + 1); }

}  // namespace

SparsePattern::SparsePattern(int k, int n, std::vector<bool> zero, std::vector<std::string> names)
    : k_(k), n_(n), zero_(std::move(zero)), names_(std::move(names)) {
  if (k < 1 || n < 1) throw InputError("pattern dimensions must be positive");
  if (k > n) throw InputError("pattern has more rows than columns");
  if (k * n > 64) throw InputError("pattern has more than 64 cells");
  std::size_t cells = static_cast<std::size_t>(k * n);
  if (zero_.size() != cells) throw InputError("pattern cell count does not match k x n");
  if (names_.empty())
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < n; ++j) names_.push_back(default_name(r, j));
  if (names_.size() != cells) throw InputError("pattern name count does not match k x n");
  std::set<std::string> seen;
  for (const auto& nm : names_) {
    if (!is_valid_variable_name(nm)) throw InputError("invalid variable name '" + nm + "'");
    if (!seen.insert(nm).second) throw InputError("variable '" + nm + "' appears twice in the pattern");
  }
}

SparsePattern SparsePattern::generic(int k, int n) {
  return SparsePattern(k, n, std::vector<bool>(static_cast<std::size_t>(k * n), false));
}

SparsePattern SparsePattern::from_mask(int k, int n, std::uint64_t mask) {
  std::vector<bool> zero(static_cast<std::size_t>(k * n));
  for (std::size_t i = 0; i < zero.size(); ++i) zero[i] = (mask >> i) & 1u;
  return SparsePattern(k, n, std::move(zero));
}

SparsePattern SparsePattern::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  int k = 0, n = 0;
  if (!(in >> k >> n)) throw InputError("pattern: expected 'k n' on the first line");
  if (k < 1 || n < 1 || k > n) throw InputError("pattern: need 1 <= k <= n");
  std::vector<bool> zero;
  std::vector<std::string> names;
  for (int r = 0; r < k; ++r) {
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw InputError("pattern: expected " + std::to_string(k * n) + " cells");
      if (tok == "0") {
        zero.push_back(true);
        names.push_back(default_name(r, j));
      } else if (tok == "*") {
        zero.push_back(false);
        names.push_back(default_name(r, j));
      } else {
        zero.push_back(false);
        names.push_back(tok);
      }
    }
  }
  std::string extra;
  if (in >> extra) throw InputError("pattern: unexpected trailing token '" + extra + "'");
  return SparsePattern(k, n, std::move(zero), std::move(names));
}

SparsePattern SparsePattern::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open pattern file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::uint64_t SparsePattern::mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < zero_.size(); ++i)
    if (zero_[i]) m |= std::uint64_t{1} << i;
  return m;
}

std::size_t SparsePattern::zero_count() const {
  std::size_t c = 0;
  for (bool z : zero_) c += z;
  return c;
}

SparsePattern SparsePattern::without_zeros() const {
  return SparsePattern(k_, n_, std::vector<bool>(zero_.size(), false), names_);
}

SparsePattern SparsePattern::with_zero(int r, int j) const {
  SparsePattern p = *this;
  p.zero_.at(cell_index(r, j)) = true;
  return p;
}

std::vector<std::size_t> SparsePattern::killed() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < zero_.size(); ++i)
    if (zero_[i]) out.push_back(i);
  return out;
}

std::vector<int> SparsePattern::zero_columns() const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    bool all = true;
    for (int r = 0; r < k_; ++r) all = all && is_zero(r, j);
    if (all) out.push_back(j);
  }
  return out;
}

RingPtr SparsePattern::generic_ring(const Field& field) const { return Ring::make(field, names_); }

Grading SparsePattern::row_column_grading() const {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < k_; ++r)
    for (int j = 0; j < n_; ++j) cells.emplace_back(r, j);
  return Grading::row_column(k_, n_, cells);
}

std::string SparsePattern::to_text() const {
  std::string out = std::to_string(k_) + " " + std::to_string(n_) + "\n";
  for (int r = 0; r < k_; ++r) {
    for (int j = 0; j < n_; ++j) {
      if (j) out += ' ';
      if (is_zero(r, j))
        out += '0';
      else if (name(r, j) == default_name(r, j))
        out += '*';
      else
        out += name(r, j);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Sum over bijections rows -> columns avoiding zero cells.
void expand(const SparsePattern& p, const std::vector<int>& cols, int row, std::vector<bool>& used, Monomial& mono,
            int sign, Polynomial& acc) {
  if (row == p.k()) {
    acc += Polynomial::term(acc.ring(), mono, acc.field().from_int(sign));
    return;
  }
  int passed = 0;  // used columns to the right of the chosen one give the inversion count
  for (std::size_t c = cols.size(); c-- > 0;) {
    if (used[c]) {
      ++passed;
      continue;
    }
    int j = cols[c];
    if (p.is_zero(row, j)) continue;
    used[c] = true;
    std::size_t v = p.cell_index(row, j);
    mono[v] += 1;
    expand(p, cols, row + 1, used, mono, (passed % 2) ? -sign : sign, acc);
    mono[v] -= 1;
    used[c] = false;
  }
}

}  // namespace

std::vector<Minor> minors(const SparsePattern& p, const RingPtr& ring) {
  if (ring->nvars() != static_cast<std::size_t>(p.k() * p.n()))
    throw InputError("minors: ring does not match the pattern");
  std::vector<Minor> out;
  for (auto& cols : subsets(p.n(), p.k())) {
    Polynomial acc = Polynomial::zero(ring);
    std::vector<bool> used(cols.size(), false);
    Monomial mono(ring->nvars());
    expand(p, cols, 0, used, mono, 1, acc);
    out.push_back({std::move(cols), std::move(acc)});
  }
  return out;
}

std::optional<ZeroRectangle> largest_zero_rectangle(const SparsePattern& p) {
  std::optional<ZeroRectangle> best;
  for (std::uint32_t rm = 1; rm < (1u << p.k()); ++rm) {
    ZeroRectangle z;
    for (int r = 0; r < p.k(); ++r)
      if (rm >> r & 1u) z.rows.push_back(r);
    for (int j = 0; j < p.n(); ++j) {
      bool all = true;
      for (int r : z.rows) all = all && p.is_zero(r, j);
      if (all) z.columns.push_back(j);
    }
    if (z.columns.empty()) continue;
    if (!best || z.perimeter() > best->perimeter()) best = std::move(z);
  }
  return best;
}

bool is_ideal_zero(const SparsePattern& p) {
  auto z = largest_zero_rectangle(p);
  return z && z->perimeter() >= 2 * p.n() + 2;
}

}  // namespace enprune
