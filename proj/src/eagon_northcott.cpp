#include "enprune/eagon_northcott.hpp"

#include <map>
#include <set>

namespace enprune {

namespace {

std::string set_label(const std::vector<int>& cols) {
  std::string s = "{";
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + std::to_string(cols[i] + 1);
  return s + "}";
}

std::string alpha_label(const std::vector<int>& alpha) {
  std::string s = "[";
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
  return s + "]";
}

std::vector<int> drop(const std::vector<int>& cols, std::size_t t) {
  std::vector<int> out = cols;
  out.erase(out.begin() + static_cast<long>(t));
  return out;
}

int minor_sign(const std::vector<int>& cols) {
  int k = static_cast<int>(cols.size());
  int s = -k * (k + 1) / 2;
  for (int j : cols) s += j + 1;
  return (s % 2 == 0) ? 1 : -1;
}

void compositions(int k, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur.push_back(a);
    compositions(k, d - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> divided_power_basis(int k, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 1 && degree >= 0) compositions(k, degree, cur, out);
  return out;
}

BasedComplex eagon_northcott(const SparsePattern& pattern, const Field& field) {
  const int k = pattern.k(), n = pattern.n();
  if (k < 1 || k > n) throw InputError("Eagon-Northcott complex needs 1 <= k <= n");
  RingPtr ring = pattern.generic_ring(field);
  Grading grading = pattern.row_column_grading();
  auto var = [&](int r, int j) { return Polynomial::variable(ring, pattern.cell_index(r, j)); };
  auto signed_var = [&](int sign, int r, int j) { return sign > 0 ? var(r, j) : -var(r, j); };

  const int length = n - k + 1;
  std::vector<GradedFreeModule> modules(static_cast<std::size_t>(length) + 1);
  modules[0].gens.push_back({"1", grading.zero()});

  auto degree_of = [&](const std::vector<int>& alpha, const std::vector<int>& cols) {
    MultiDegree d = grading.zero();
    for (int r = 0; r < k; ++r) d[r] = 1 + (alpha.empty() ? 0 : alpha[r]);
    for (int j : cols) d[k + j] = 1;
    return d;
  };

  // index[i] maps (alpha, J) to the generator position in F_i (alpha empty for i = 1)
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<std::map<Key, std::size_t>> index(static_cast<std::size_t>(length) + 1);
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(length) + 1);
  for (auto& cols : subsets(n, k)) {
    index[1][{{}, cols}] = modules[1].gens.size();
    keys[1].push_back({{}, cols});
    modules[1].gens.push_back({set_label(cols), degree_of({}, cols)});
  }
  for (int i = 2; i <= length; ++i) {
    for (auto& alpha : divided_power_basis(k, i - 1)) {
      for (auto& cols : subsets(n, k + i - 1)) {
        index[i][{alpha, cols}] = modules[i].gens.size();
        keys[i].push_back({alpha, cols});
        modules[i].gens.push_back({alpha_label(alpha) + set_label(cols), degree_of(alpha, cols)});
      }
    }
  }

  auto mins = minors(pattern.without_zeros(), ring);

  std::vector<SparseMatrix> maps;
  SparseMatrix a1(1, modules[1].rank());
  for (std::size_t c = 0; c < mins.size(); ++c) {
    int s = minor_sign(mins[c].columns);
    a1.set(0, c, s > 0 ? mins[c].value : -mins[c].value);
  }
  maps.push_back(std::move(a1));

  for (int i = 2; i <= length; ++i) {
    SparseMatrix a(modules[i - 1].rank(), modules[i].rank());
    for (std::size_t c = 0; c < keys[i].size(); ++c) {
      const auto& [alpha, cols] = keys[i][c];
      for (int r = 0; r < k; ++r) {
        if (alpha[r] == 0) continue;
        std::vector<int> lower;
        if (i > 2) {
          lower = alpha;
          lower[r] -= 1;
        }
        for (std::size_t t = 0; t < cols.size(); ++t) {
          std::vector<int> rest = drop(cols, t);
          std::size_t row = index[i - 1].at({lower, rest});
          int tt = static_cast<int>(t) + 1;
          int sign = (i == 2) ? ((tt % 2 == 0) ? 1 : -1) * minor_sign(rest) : ((tt % 2 == 1) ? 1 : -1);
          a.set(row, c, signed_var(sign, r, cols[t]));
        }
      }
    }
    maps.push_back(std::move(a));
  }

  BasedComplex en(ring, grading, std::move(modules), std::move(maps));
  auto z = pattern.killed();
  return z.empty() ? en : kill_variables(en, z);
}

BasedComplex eagon_northcott(int k, int n, const Field& field) {
  if (k > n) throw InputError("Eagon-Northcott complex needs k <= n");
  return eagon_northcott(SparsePattern::generic(k, n), field);
}

std::optional<std::string> check_entry_structure(const BasedComplex& c) {
  for (std::size_t i = 2; i <= c.length(); ++i) {
    std::map<std::size_t, std::set<Monomial>> by_row, by_col;
    for (const auto& e : c.map(i).entries()) {
      const auto& terms = e.value.terms();
      const auto& [m, a] = *terms.begin();
      bool unit = a == 1 || a == c.ring()->field().from_int(-1);
      if (terms.size() != 1 || m.degree() != 1 || !unit)
        return "A_" + std::to_string(i) + " entry " + e.value.to_string() + " is not a signed variable";
      if (!by_row[e.row].insert(m).second)
        return "A_" + std::to_string(i) + " repeats " + e.value.to_string() + " in row " + std::to_string(e.row);
      if (!by_col[e.col].insert(m).second)
        return "A_" + std::to_string(i) + " repeats " + e.value.to_string() + " in column " + std::to_string(e.col);
    }
  }
  return std::nullopt;
}

BasedComplex homogenize_complex(const BasedComplex& c, const std::vector<long>& weights) {
  const auto& ring = c.ring();
  if (weights.size() != ring->nvars()) throw InputError("weight vector length does not match the ring");
  for (long w : weights)
    if (w < 0) throw InputError("weights must be non-negative");
  if (ring->index_of("t")) throw InputError("ring already has a variable named t");
  RingPtr target = ring->extended("t");
  const std::size_t tv = ring->nvars();
  Grading grading = c.grading().with_weight_component(weights);
  std::vector<std::optional<std::size_t>> var_map;
  for (std::size_t v = 0; v < tv; ++v) var_map.push_back(v);

  std::vector<GradedFreeModule> modules = c.modules();
  for (auto& g : modules[0].gens) g.degree.insert(g.degree.begin(), 0);
  std::vector<SparseMatrix> maps;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const auto& a = c.map(i);
    std::vector<std::optional<long>> col_weight(a.cols());
    for (const auto& e : a.entries()) {
      long w = modules[i - 1].gens[e.row].degree[0] + max_weight(e.value, weights);
      if (!col_weight[e.col] || *col_weight[e.col] < w) col_weight[e.col] = w;
    }
    for (std::size_t col = 0; col < a.cols(); ++col) {
      if (!col_weight[col])
        throw InputError("cannot homogenize: column " + std::to_string(col) + " of A_" + std::to_string(i) +
                         " is zero");
      auto& d = modules[i].gens[col].degree;
      d.insert(d.begin(), static_cast<int>(*col_weight[col]));
    }
    SparseMatrix h(a.rows(), a.cols());
    for (const auto& e : a.entries()) {
      long room = *col_weight[e.col] - modules[i - 1].gens[e.row].degree[0];
      Polynomial out = Polynomial::zero(target);
      for (const auto& [m, coef] : e.value.terms()) {
        Monomial hm(target->nvars());
        for (std::size_t v = 0; v < tv; ++v) hm[v] = m[v];
        hm[tv] = static_cast<int>(room - weight_of(m, weights));
        out += Polynomial::term(target, hm, coef);
      }
      h.set(e.row, e.col, std::move(out));
    }
    maps.push_back(std::move(h));
  }
  return BasedComplex(target, grading, std::move(modules), std::move(maps), c.killed());
}

BasedComplex set_t_zero(const BasedComplex& c) {
  const auto& ring = c.ring();
  if (ring->nvars() == 0 || ring->name(ring->nvars() - 1) != "t") return c;
  const std::size_t tv = ring->nvars() - 1;
  std::vector<std::string> names(ring->names().begin(), ring->names().end() - 1);
  RingPtr base = Ring::make(ring->field(), names);
  std::vector<bool> mask(ring->nvars(), false);
  mask[tv] = true;
  std::vector<std::optional<std::size_t>> var_map;
  for (std::size_t v = 0; v < tv; ++v) var_map.push_back(v);
  var_map.push_back(std::nullopt);
  std::vector<SparseMatrix> maps;
  for (const auto& m : c.maps())
    maps.push_back(m.transform([&](const Polynomial& p) { return p.kill(mask).map_to(base, var_map); }));
  std::vector<std::size_t> killed;
  for (auto v : c.killed())
    if (v != tv) killed.push_back(v);
  return BasedComplex(base, c.grading().without_variable(tv).with_base_total(), c.modules(), std::move(maps),
                      killed);
}

BasedComplex buchsbaum_rim_2x3(const std::vector<std::string>& names, const Field& field) {
  if (names.size() != 6) throw InputError("the 2 x 3 fixture needs six variable names");
  RingPtr ring = Ring::make(field, names);
  Grading grading = Grading::standard(6);
  auto v = [&](int r, int j) { return Polynomial::variable(ring, static_cast<std::size_t>(3 * r + j)); };
  auto minor = [&](int i, int j) { return v(0, i) * v(1, j) - v(0, j) * v(1, i); };
  std::vector<GradedFreeModule> modules(3);
  modules[0].gens = {{"e1", {0}}, {"e2", {0}}};
  modules[1].gens = {{"f1", {1}}, {"f2", {1}}, {"f3", {1}}};
  modules[2].gens = {{"g", {3}}};
  SparseMatrix a1(2, 3), a2(3, 1);
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < 3; ++j) a1.set(r, j, v(r, j));
  a2.set(0, 0, minor(1, 2));
  a2.set(1, 0, -minor(0, 2));
  a2.set(2, 0, minor(0, 1));
  return BasedComplex(ring, grading, std::move(modules), {std::move(a1), std::move(a2)});
}

}  // namespace enprune
