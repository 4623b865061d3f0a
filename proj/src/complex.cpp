#include "enprune/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace enprune {

void SparseMatrix::set(std::size_t row, std::size_t col, Polynomial value) {
  if (row >= rows_ || col >= cols_) throw InputError("matrix index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{e.row, e.col} < key;
                             });
  bool present = it != entries_.end() && it->row == row && it->col == col;
  if (value.is_zero()) {
    if (present) entries_.erase(it);
    return;
  }
  if (present)
    it->value = std::move(value);
  else
    entries_.insert(it, MatrixEntry{row, col, std::move(value)});
}

const Polynomial* SparseMatrix::find(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{e.row, e.col} < key;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return &it->value;
  return nullptr;
}

std::vector<const MatrixEntry*> SparseMatrix::column(std::size_t col) const {
  std::vector<const MatrixEntry*> out;
  for (const auto& e : entries_)
    if (e.col == col) out.push_back(&e);
  return out;
}

SparseMatrix SparseMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<long> row_pos(rows_, -1), col_pos(cols_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_pos.at(rows[i]) = static_cast<long>(i);
  for (std::size_t i = 0; i < cols.size(); ++i) col_pos.at(cols[i]) = static_cast<long>(i);
  SparseMatrix out(rows.size(), cols.size());
  for (const auto& e : entries_)
    if (row_pos[e.row] >= 0 && col_pos[e.col] >= 0)
      out.entries_.push_back({static_cast<std::size_t>(row_pos[e.row]), static_cast<std::size_t>(col_pos[e.col]),
                              e.value});
  std::sort(out.entries_.begin(), out.entries_.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return std::pair{a.row, a.col} < std::pair{b.row, b.col}; });
  return out;
}

SparseMatrix SparseMatrix::transform(const std::function<Polynomial(const Polynomial&)>& f) const {
  SparseMatrix out(rows_, cols_);
  for (const auto& e : entries_) {
    Polynomial v = f(e.value);
    if (!v.is_zero()) out.entries_.push_back({e.row, e.col, std::move(v)});
  }
  return out;
}

BasedComplex::BasedComplex(RingPtr ring, Grading grading, std::vector<GradedFreeModule> modules,
                           std::vector<SparseMatrix> maps, std::vector<std::size_t> killed)
    : ring_(std::move(ring)),
      grading_(std::move(grading)),
      modules_(std::move(modules)),
      maps_(std::move(maps)),
      killed_(std::move(killed)) {
  std::sort(killed_.begin(), killed_.end());
  killed_.erase(std::unique(killed_.begin(), killed_.end()), killed_.end());
  if (modules_.size() != maps_.size() + 1) throw InputError("complex needs exactly one more module than maps");
  for (std::size_t i = 1; i <= maps_.size(); ++i) {
    if (maps_[i - 1].rows() != modules_[i - 1].rank() || maps_[i - 1].cols() != modules_[i].rank())
      throw InputError("map A_" + std::to_string(i) + " has dimensions inconsistent with its modules");
  }
}

std::vector<bool> BasedComplex::killed_mask() const {
  std::vector<bool> mask(ring_->nvars(), false);
  for (auto v : killed_) mask.at(v) = true;
  return mask;
}

std::vector<std::size_t> BasedComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& m : modules_) r.push_back(m.rank());
  return r;
}

void BasedComplex::validate() const {
  if (grading_.nvars() != ring_->nvars()) throw InputError("grading does not match the ring's variables");
  for (auto v : killed_)
    if (v >= ring_->nvars()) throw InputError("killed variable index out of range");
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    std::set<std::string> labels;
    for (const auto& g : modules_[i].gens) {
      if (!labels.insert(g.label).second)
        throw InputError("duplicate label '" + g.label + "' in F_" + std::to_string(i));
      if (g.degree.size() != grading_.dim())
        throw InputError("generator '" + g.label + "' has a degree of the wrong dimension");
    }
  }
  for (std::size_t i = 1; i <= maps_.size(); ++i) {
    for (const auto& e : maps_[i - 1].entries()) {
      if (!same_ring(e.value.ring(), ring_)) throw InputError("matrix entry lives in a different ring");
      MultiDegree want = modules_[i].gens[e.col].degree - modules_[i - 1].gens[e.row].degree;
      if (!grading_.is_homogeneous(e.value, want))
        throw InputError("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ") of A_" +
                         std::to_string(i) + " = " + e.value.to_string() + " is not homogeneous of degree " +
                         to_string(want));
    }
  }
}

ComposeResult compose_check(const BasedComplex& c) {
  auto mask = c.killed_mask();
  for (std::size_t i = 2; i <= c.length(); ++i) {
    const auto& left = c.map(i - 1);   // F_{i-1} -> F_{i-2}
    const auto& right = c.map(i);      // F_i -> F_{i-1}
    std::vector<std::vector<const MatrixEntry*>> left_cols(left.cols());
    for (const auto& e : left.entries()) left_cols[e.col].push_back(&e);
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> product;
    for (const auto& e : right.entries()) {
      for (const auto* l : left_cols[e.row]) {
        auto key = std::pair{l->row, e.col};
        auto it = product.find(key);
        if (it == product.end())
          product.emplace(key, l->value * e.value);
        else
          it->second += l->value * e.value;
      }
    }
    for (const auto& [key, value] : product)
      if (!value.kill(mask).is_zero()) return {false, i};
  }
  return {};
}

bool is_minimal(const BasedComplex& c) {
  for (const auto& m : c.maps())
    for (const auto& e : m.entries())
      if (sgn(e.value.constant_term()) != 0) return false;
  return true;
}

namespace {

using EntryMap = std::map<std::pair<std::size_t, std::size_t>, Polynomial>;

}  // namespace

BasedComplex minimize(const BasedComplex& c) {
  const auto& ring = c.ring();
  const Field& field = ring->field();
  std::size_t t = c.length();
  std::vector<EntryMap> maps(t + 1);  // maps[i] = A_i, index 0 unused
  for (std::size_t i = 1; i <= t; ++i)
    for (const auto& e : c.map(i).entries()) maps[i].emplace(std::pair{e.row, e.col}, e.value);
  std::vector<std::vector<bool>> alive(t + 1);
  for (std::size_t i = 0; i <= t; ++i) alive[i].assign(c.module(i).rank(), true);

  while (true) {
    std::size_t pi = 0, pr = 0, pc = 0;
    bool found = false;
    for (std::size_t i = 1; i <= t && !found; ++i) {
      for (const auto& [key, value] : maps[i]) {
        if (value.is_constant() && !value.is_zero()) {
          pi = i;
          pr = key.first;
          pc = key.second;
          found = true;
          break;
        }
      }
    }
    if (!found) break;

    EntryMap& a = maps[pi];
    Coeff u_inv = field.inv(a.at({pr, pc}).constant_term());
    std::vector<std::pair<std::size_t, Polynomial>> col_c, row_r;
    for (const auto& [key, value] : a) {
      if (key.second == pc && key.first != pr) col_c.emplace_back(key.first, value);
      if (key.first == pr && key.second != pc) row_r.emplace_back(key.second, value);
    }
    for (const auto& [r2, left] : col_c) {
      Polynomial scaled_left = left.scaled(u_inv);
      for (const auto& [c2, right] : row_r) {
        Polynomial delta = scaled_left * right;
        auto key = std::pair{r2, c2};
        auto it = a.find(key);
        if (it == a.end()) {
          a.emplace(key, -delta);
        } else {
          it->second -= delta;
          if (it->second.is_zero()) a.erase(it);
        }
      }
    }
    std::erase_if(a, [&](const auto& kv) { return kv.first.first == pr || kv.first.second == pc; });
    if (pi + 1 <= t) std::erase_if(maps[pi + 1], [&](const auto& kv) { return kv.first.first == pc; });
    if (pi >= 2) std::erase_if(maps[pi - 1], [&](const auto& kv) { return kv.first.second == pr; });
    alive[pi][pc] = false;
    alive[pi - 1][pr] = false;
  }

  std::vector<GradedFreeModule> modules(t + 1);
  std::vector<std::vector<std::size_t>> kept(t + 1);
  for (std::size_t i = 0; i <= t; ++i)
    for (std::size_t g = 0; g < alive[i].size(); ++g)
      if (alive[i][g]) {
        kept[i].push_back(g);
        modules[i].gens.push_back(c.module(i).gens[g]);
      }
  std::vector<SparseMatrix> out_maps;
  for (std::size_t i = 1; i <= t; ++i) {
    SparseMatrix full(c.module(i - 1).rank(), c.module(i).rank());
    for (auto& [key, value] : maps[i]) full.set(key.first, key.second, value);
    out_maps.push_back(full.select(kept[i - 1], kept[i]));
  }
  return trim(BasedComplex(ring, c.grading(), std::move(modules), std::move(out_maps), c.killed()));
}

BettiTable betti_table(const BasedComplex& c) {
  if (!is_minimal(c)) throw InputError("betti_table requires a minimal complex");
  BettiTable b;
  for (std::size_t i = 0; i <= c.length(); ++i)
    for (const auto& g : c.module(i).gens) b.add(static_cast<int>(i), c.grading().total(g.degree), 1);
  return b;
}

BasedComplex tensor_koszul_variable(const BasedComplex& c, std::size_t var) {
  const auto& ring = c.ring();
  if (var >= ring->nvars()) throw InputError("variable index out of range");
  for (auto k : c.killed())
    if (k == var) throw InputError("cannot tensor with the Koszul complex on a killed variable");
  const MultiDegree& dv = c.grading().var_degree(var);
  const std::string tag = "|e_" + ring->name(var);
  std::size_t t = c.length();
  auto rank = [&](long i) -> std::size_t {
    return (i < 0 || i > static_cast<long>(t)) ? 0 : c.module(static_cast<std::size_t>(i)).rank();
  };
  std::vector<GradedFreeModule> modules(t + 2);
  for (std::size_t i = 0; i <= t + 1; ++i) {
    if (i <= t) modules[i].gens = c.module(i).gens;
    if (i >= 1)
      for (const auto& g : c.module(i - 1).gens) modules[i].gens.push_back({g.label + tag, g.degree + dv});
  }
  Polynomial v = Polynomial::variable(ring, var);
  std::vector<SparseMatrix> maps;
  for (std::size_t i = 1; i <= t + 1; ++i) {
    SparseMatrix m(modules[i - 1].rank(), modules[i].rank());
    std::size_t top_rows = rank(static_cast<long>(i) - 1), top_cols = rank(static_cast<long>(i));
    if (i <= t)
      for (const auto& e : c.map(i).entries()) m.set(e.row, e.col, e.value);
    Polynomial sv = (i % 2 == 1) ? v : -v;  // (-1)^(i-1) v
    for (std::size_t g = 0; g < rank(static_cast<long>(i) - 1); ++g) m.set(g, top_cols + g, sv);
    if (i >= 2)
      for (const auto& e : c.map(i - 1).entries()) m.set(top_rows + e.row, top_cols + e.col, e.value);
    maps.push_back(std::move(m));
  }
  return BasedComplex(ring, c.grading(), std::move(modules), std::move(maps), c.killed());
}

BasedComplex kill_variables(const BasedComplex& c, const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> killed = c.killed();
  killed.insert(killed.end(), vars.begin(), vars.end());
  std::vector<bool> mask(c.ring()->nvars(), false);
  for (auto v : killed) mask.at(v) = true;
  std::vector<SparseMatrix> maps;
  for (const auto& m : c.maps()) maps.push_back(m.transform([&](const Polynomial& p) { return p.kill(mask); }));
  return BasedComplex(c.ring(), c.grading(), c.modules(), std::move(maps), killed);
}

BasedComplex change_field(const BasedComplex& c, const Field& field) {
  auto ring = c.ring()->with_field(field);
  std::vector<SparseMatrix> maps;
  for (const auto& m : c.maps()) maps.push_back(m.transform([&](const Polynomial& p) { return p.with_field(ring); }));
  return BasedComplex(ring, c.grading(), c.modules(), std::move(maps), c.killed());
}

BasedComplex trim(const BasedComplex& c) {
  std::size_t t = c.length();
  while (t > 0 && c.module(t).rank() == 0) --t;
  if (t == c.length()) return c;
  std::vector<GradedFreeModule> modules(c.modules().begin(), c.modules().begin() + static_cast<long>(t) + 1);
  std::vector<SparseMatrix> maps(c.maps().begin(), c.maps().begin() + static_cast<long>(t));
  return BasedComplex(c.ring(), c.grading(), std::move(modules), std::move(maps), c.killed());
}

}  // namespace enprune
