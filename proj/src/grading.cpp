#include "enprune/grading.hpp"

namespace enprune {

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::string to_string(const MultiDegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

Grading::Grading(std::string name, std::vector<MultiDegree> var_degrees, std::vector<int> total_weights)
    : name_(std::move(name)), var_degrees_(std::move(var_degrees)), total_weights_(std::move(total_weights)) {
  for (const auto& d : var_degrees_)
    if (d.size() != total_weights_.size()) throw InputError("grading: inconsistent degree dimensions");
}

Grading Grading::fine(std::size_t nvars) {
  std::vector<MultiDegree> deg(nvars, MultiDegree(nvars, 0));
  for (std::size_t i = 0; i < nvars; ++i) deg[i][i] = 1;
  return Grading("fine", std::move(deg), std::vector<int>(nvars, 1));
}

Grading Grading::standard(std::size_t nvars) {
  return Grading("standard", std::vector<MultiDegree>(nvars, MultiDegree{1}), {1});
}

Grading Grading::row_column(int k, int n, const std::vector<std::pair<int, int>>& cells) {
  std::vector<MultiDegree> deg;
  for (auto [i, j] : cells) {
    if (i < 0 || i >= k || j < 0 || j >= n) throw InputError("row-column grading: cell out of range");
    MultiDegree d(k + n, 0);
    d[i] = 1;
    d[k + j] = 1;
    deg.push_back(std::move(d));
  }
  std::vector<int> total(k + n, 0);
  for (int j = 0; j < n; ++j) total[k + j] = 1;
  return Grading("row-column", std::move(deg), std::move(total));
}

Grading Grading::weighted(const std::vector<long>& w) {
  std::vector<MultiDegree> deg;
  for (long v : w) deg.push_back(MultiDegree{static_cast<int>(v)});
  return Grading("weight", std::move(deg), {1});
}

MultiDegree Grading::degree(const Monomial& m) const {
  MultiDegree d = zero();
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v])
      for (std::size_t c = 0; c < d.size(); ++c) d[c] += m[v] * var_degrees_[v][c];
  return d;
}

int Grading::total(const MultiDegree& d) const {
  int s = 0;
  for (std::size_t c = 0; c < d.size(); ++c) s += d[c] * total_weights_[c];
  return s;
}

std::optional<MultiDegree> Grading::homogeneous_degree(const Polynomial& f) const {
  if (f.is_zero()) return std::nullopt;
  MultiDegree d = degree(f.terms().begin()->first);
  for (const auto& [m, c] : f.terms())
    if (degree(m) != d) return std::nullopt;
  return d;
}

bool Grading::is_homogeneous(const Polynomial& f, const MultiDegree& d) const {
  for (const auto& [m, c] : f.terms())
    if (degree(m) != d) return false;
  return true;
}

Grading Grading::with_weight_component(const std::vector<long>& w) const {
  if (w.size() != nvars()) throw InputError("weight vector length does not match grading");
  std::vector<MultiDegree> deg;
  for (std::size_t v = 0; v < nvars(); ++v) {
    MultiDegree d{static_cast<int>(w[v])};
    d.insert(d.end(), var_degrees_[v].begin(), var_degrees_[v].end());
    deg.push_back(std::move(d));
  }
  MultiDegree t(dim() + 1, 0);
  t[0] = 1;
  deg.push_back(std::move(t));
  std::vector<int> total(dim() + 1, 0);
  total[0] = 1;
  Grading g("weight+" + name_, std::move(deg), std::move(total));
  g.base_total_ = total_weights_;
  return g;
}

Grading Grading::without_variable(std::size_t var) const {
  Grading g = *this;
  g.var_degrees_.erase(g.var_degrees_.begin() + static_cast<long>(var));
  return g;
}

Grading Grading::with_total_weights(std::vector<int> total) const {
  if (total.size() != dim()) throw InputError("total weights have wrong dimension");
  Grading g = *this;
  g.total_weights_ = std::move(total);
  return g;
}

Grading Grading::with_base_total() const {
  if (base_total_.size() + 1 != dim()) throw InputError("grading has no base total degree");
  std::vector<int> total{0};
  total.insert(total.end(), base_total_.begin(), base_total_.end());
  Grading g = with_total_weights(std::move(total));
  g.base_total_.clear();
  return g;
}

Grading Grading::with_stored_base_total(std::vector<int> base) const {
  if (!base.empty() && base.size() + 1 != dim()) throw InputError("base total has wrong dimension");
  Grading g = *this;
  g.base_total_ = std::move(base);
  return g;
}

}  // namespace enprune
