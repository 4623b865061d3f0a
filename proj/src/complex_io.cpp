#include "enprune/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace enprune {

using nlohmann::json;

json complex_to_json(const BasedComplex& c) {
  json j;
  j["grading"] = c.grading().name();
  j["ring"] = {{"field", c.ring()->field().to_string()}, {"variables", c.ring()->names()}};
  json killed = json::array();
  for (auto v : c.killed()) killed.push_back(c.ring()->name(v));
  j["killed"] = killed;
  json gd;
  gd["var_degrees"] = c.grading().var_degrees();
  gd["total"] = c.grading().total_weights();
  if (!c.grading().base_total().empty()) gd["base_total"] = c.grading().base_total();
  j["grading_data"] = gd;
  j["modules"] = json::array();
  for (const auto& m : c.modules()) {
    json gens = json::array();
    for (const auto& g : m.gens) gens.push_back({{"label", g.label}, {"deg", g.degree}});
    j["modules"].push_back({{"gens", gens}});
  }
  j["maps"] = json::array();
  for (const auto& m : c.maps()) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back({e.row, e.col, e.value.to_string()});
    j["maps"].push_back({{"entries", entries}});
  }
  return j;
}

std::string complex_to_json_text(const BasedComplex& c, int indent) { return complex_to_json(c).dump(indent); }

std::string complex_to_text(const BasedComplex& c) {
  std::ostringstream out;
  out << "ring " << c.ring()->field().to_string() << "[";
  for (std::size_t v = 0; v < c.ring()->nvars(); ++v) out << (v ? ", " : "") << c.ring()->name(v);
  out << "], grading " << c.grading().name() << "\n";
  if (!c.killed().empty()) {
    out << "killed:";
    for (auto v : c.killed()) out << " " << c.ring()->name(v);
    out << "\n";
  }
  for (std::size_t i = 0; i < c.modules().size(); ++i) {
    out << "F_" << i << " rank " << c.module(i).rank() << ":";
    for (const auto& g : c.module(i).gens) out << " " << g.label << "@" << c.grading().total(g.degree);
    out << "\n";
  }
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const auto& a = c.map(i);
    out << "A_" << i << " (" << a.rows() << " x " << a.cols() << "):\n";
    std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols(), "0"));
    std::size_t width = 1;
    for (const auto& e : a.entries()) {
      cells[e.row][e.col] = e.value.to_string();
      width = std::max(width, cells[e.row][e.col].size());
    }
    for (const auto& row : cells) {
      out << " ";
      for (const auto& cell : row) out << "  " << std::string(width - cell.size(), ' ') << cell;
      out << "\n";
    }
  }
  return out.str();
}

BasedComplex complex_from_json(const json& j) {
  try {
    const auto& rj = j.at("ring");
    Field field = Field::parse(rj.at("field").get<std::string>());
    auto names = rj.at("variables").get<std::vector<std::string>>();
    RingPtr ring = Ring::make(field, names);

    std::string gname = j.at("grading").get<std::string>();
    Grading grading;
    if (j.contains("grading_data")) {
      const auto& gd = j.at("grading_data");
      grading = Grading(gname, gd.at("var_degrees").get<std::vector<MultiDegree>>(),
                        gd.at("total").get<std::vector<int>>());
      if (gd.contains("base_total")) grading = grading.with_stored_base_total(gd.at("base_total").get<std::vector<int>>());
    } else if (gname == "standard") {
      grading = Grading::standard(names.size());
    } else if (gname == "fine") {
      grading = Grading::fine(names.size());
    } else {
      throw InputError("grading '" + gname + "' needs grading_data");
    }
    if (grading.nvars() != names.size()) throw InputError("grading does not cover every variable");

    std::vector<GradedFreeModule> modules;
    for (const auto& mj : j.at("modules")) {
      GradedFreeModule m;
      for (const auto& g : mj.at("gens"))
        m.gens.push_back({g.at("label").get<std::string>(), g.at("deg").get<MultiDegree>()});
      modules.push_back(std::move(m));
    }
    if (modules.empty()) throw InputError("complex has no modules");
    const auto& maps_j = j.at("maps");
    if (maps_j.size() + 1 != modules.size()) throw InputError("complex needs exactly one more module than maps");
    std::vector<SparseMatrix> maps;
    for (std::size_t i = 0; i < maps_j.size(); ++i) {
      SparseMatrix m(modules[i].rank(), modules[i + 1].rank());
      for (const auto& e : maps_j[i].at("entries")) {
        if (!e.is_array() || e.size() != 3) throw InputError("map entry must be [row, col, \"poly\"]");
        auto row = e[0].get<std::size_t>(), col = e[1].get<std::size_t>();
        if (row >= m.rows() || col >= m.cols()) throw InputError("map entry index out of range");
        if (m.find(row, col)) throw InputError("duplicate map entry");
        m.set(row, col, Polynomial::parse(ring, e[2].get<std::string>()));
      }
      maps.push_back(std::move(m));
    }
    std::vector<std::size_t> killed;
    if (j.contains("killed"))
      for (const auto& k : j.at("killed")) killed.push_back(ring->require_index(k.get<std::string>()));
    BasedComplex c(ring, grading, std::move(modules), std::move(maps), killed);
    c.validate();
    return c;
  } catch (const json::exception& ex) {
    throw InputError(std::string("bad complex JSON: ") + ex.what());
  }
}

BasedComplex complex_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw InputError(std::string("bad complex JSON: ") + ex.what());
  }
  return complex_from_json(j);
}

BasedComplex load_complex(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open complex file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return complex_from_json_text(ss.str());
}

namespace {

class SignedPermutationSearch {
 public:
  SignedPermutationSearch(const BasedComplex& a, const BasedComplex& b) : a_(a), b_(b) {
    for (std::size_t i = 0; i <= a.length(); ++i) {
      perm_.emplace_back(a.module(i).rank(), -1);
      sign_.emplace_back(a.module(i).rank(), 0);
      used_.emplace_back(a.module(i).rank(), false);
      for (std::size_t g = 0; g < a.module(i).rank(); ++g) order_.push_back({i, g});
    }
    for (std::size_t i = 1; i <= a.length(); ++i) {
      cols_a_.push_back(columns(a.map(i)));
      cols_b_.push_back(columns(b.map(i)));
    }
  }

  bool run() { return step(0); }

 private:
  using Column = std::map<std::size_t, const Polynomial*>;

  static std::vector<Column> columns(const SparseMatrix& m) {
    std::vector<Column> out(m.cols());
    for (const auto& e : m.entries()) out[e.col][e.row] = &e.value;
    return out;
  }

  bool column_matches(std::size_t i, std::size_t c, std::size_t cb, int s) const {
    const Column& ca = cols_a_[i - 1][c];
    const Column& cbm = cols_b_[i - 1][cb];
    if (ca.size() != cbm.size()) return false;
    for (const auto& [r, p] : ca) {
      auto it = cbm.find(static_cast<std::size_t>(perm_[i - 1][r]));
      if (it == cbm.end()) return false;
      int total = s * sign_[i - 1][r];
      if (total > 0 ? !(*it->second == *p) : !(*it->second == -*p)) return false;
    }
    return true;
  }

  bool step(std::size_t k) {
    if (k == order_.size()) return true;
    auto [i, g] = order_[k];
    const auto& deg = a_.module(i).gens[g].degree;
    for (std::size_t cand = 0; cand < b_.module(i).rank(); ++cand) {
      if (used_[i][cand] || b_.module(i).gens[cand].degree != deg) continue;
      for (int s : {1, -1}) {
        if (i > 0 && !column_matches(i, g, cand, s)) continue;
        perm_[i][g] = static_cast<long>(cand);
        sign_[i][g] = s;
        used_[i][cand] = true;
        if (step(k + 1)) return true;
        used_[i][cand] = false;
        perm_[i][g] = -1;
      }
    }
    return false;
  }

  const BasedComplex& a_;
  const BasedComplex& b_;
  std::vector<std::pair<std::size_t, std::size_t>> order_;
  std::vector<std::vector<long>> perm_;
  std::vector<std::vector<int>> sign_;
  std::vector<std::vector<bool>> used_;
  std::vector<std::vector<Column>> cols_a_, cols_b_;
};

}  // namespace

DiffResult complex_diff(const BasedComplex& a, const BasedComplex& b) {
  if (!same_ring(a.ring(), b.ring())) return {false, "different rings"};
  if (a.length() != b.length())
    return {false, "different lengths " + std::to_string(a.length()) + " and " + std::to_string(b.length())};
  for (std::size_t i = 0; i <= a.length(); ++i)
    if (a.module(i).rank() != b.module(i).rank()) return {false, "rank of F_" + std::to_string(i) + " differs"};
  if (a.killed() != b.killed()) return {false, "different killed variables"};
  SignedPermutationSearch search(a, b);
  if (!search.run()) return {false, "no signed basis permutation matches the maps"};
  return {true, ""};
}

}  // namespace enprune
