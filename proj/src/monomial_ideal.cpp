#include "enprune/monomial_ideal.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include "enprune/linalg.hpp"

namespace enprune {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) redundant = redundant || h.divides(g);
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens)
    if (g.size() != ring_->nvars()) throw InputError("monomial does not match the ring");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::parse(RingPtr ring, std::string_view text) {
  std::vector<Monomial> gens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Polynomial p = Polynomial::parse(ring, line);
    if (p.size() != 1) throw InputError("ideal file line is not a single monomial: " + line);
    gens.push_back(p.terms().begin()->first);
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::parse_inferring_ring(std::string_view text, const Field& field) {
  std::vector<std::string> names;
  std::string body{text};
  std::istringstream in(body);
  std::string line;
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (std::sregex_iterator it(line.begin(), line.end(), ident), end; it != end; ++it)
      if (std::find(names.begin(), names.end(), it->str()) == names.end()) names.push_back(it->str());
  }
  return parse(Ring::make(field, names), text);
}

MonomialIdeal MonomialIdeal::load(const std::string& path, const Field& field) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open ideal file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_inferring_ring(ss.str(), field);
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

Monomial MonomialIdeal::lcm_all() const {
  Monomial l(ring_->nvars());
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

std::string MonomialIdeal::to_string() const {
  std::string out;
  for (const auto& g : gens_) out += ring_->to_string(g) + "\n";
  return out;
}

BasedComplex taylor_complex(const MonomialIdeal& ideal) { return taylor_complex(ideal.ring(), ideal.gens()); }

BasedComplex taylor_complex(const RingPtr& ring, const std::vector<Monomial>& gens) {
  const std::size_t m = gens.size();
  if (m > taylor_generator_limit)
    throw InputError("Taylor complex limited to " + std::to_string(taylor_generator_limit) + " generators");
  for (const auto& g : gens)
    if (g.size() != ring->nvars()) throw InputError("monomial does not match the ring");
  const std::size_t nv = ring->nvars();
  Grading grading = Grading::fine(nv);
  auto label = [](const std::vector<int>& s) {
    std::string l = "{";
    for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i] + 1);
    return l + "}";
  };
  auto lcm_of = [&](const std::vector<int>& s) {
    Monomial l(nv);
    for (int i : s) l = lcm(l, gens[i]);
    return l;
  };
  std::vector<GradedFreeModule> modules(m + 1);
  std::vector<std::map<std::vector<int>, std::size_t>> index(m + 1);
  std::vector<std::vector<std::vector<int>>> sets(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    sets[i] = subsets(static_cast<int>(m), static_cast<int>(i));
    for (std::size_t g = 0; g < sets[i].size(); ++g) {
      index[i][sets[i][g]] = g;
      modules[i].gens.push_back({label(sets[i][g]), lcm_of(sets[i][g]).exps});
    }
  }
  std::vector<SparseMatrix> maps;
  for (std::size_t i = 1; i <= m; ++i) {
    SparseMatrix a(modules[i - 1].rank(), modules[i].rank());
    for (std::size_t c = 0; c < sets[i].size(); ++c) {
      const auto& s = sets[i][c];
      Monomial top = lcm_of(s);
      for (std::size_t t = 0; t < s.size(); ++t) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + static_cast<long>(t));
        Coeff sign = ring->field().from_int(t % 2 == 0 ? 1 : -1);
        a.set(index[i - 1].at(rest), c, Polynomial::term(ring, top / lcm_of(rest), sign));
      }
    }
    maps.push_back(std::move(a));
  }
  return BasedComplex(ring, grading, std::move(modules), std::move(maps));
}

namespace {

/// Homology dimensions of the chain complex spanned by a family of faces
/// (sorted vertex lists), with boundary terms outside the family dropped.
/// Result index s is the homology at faces with s vertices.
std::vector<long> family_homology(const std::vector<std::vector<int>>& faces, const Field& field) {
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  std::vector<std::map<std::vector<int>, std::uint32_t>> index(top + 1);
  for (const auto& f : faces) index[f.size()].emplace(f, static_cast<std::uint32_t>(index[f.size()].size()));
  std::vector<long> rank(top + 2, 0);  // rank[s]: boundary from size s to size s-1
  for (std::size_t s = 1; s <= top; ++s) {
    std::vector<std::vector<std::pair<std::uint32_t, long>>> cols;
    for (const auto& [f, idx] : index[s]) {
      std::vector<std::pair<std::uint32_t, long>> col;
      for (std::size_t t = 0; t < f.size(); ++t) {
        std::vector<int> g = f;
        g.erase(g.begin() + static_cast<long>(t));
        auto it = index[s - 1].find(g);
        if (it != index[s - 1].end()) col.emplace_back(it->second, t % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    rank[s] = static_cast<long>(linalg::rank_of_integer_columns(field, cols));
  }
  std::vector<long> h(top + 1, 0);
  for (std::size_t s = 0; s <= top; ++s) h[s] = static_cast<long>(index[s].size()) - rank[s] - rank[s + 1];
  return h;
}

std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& gens) {
  std::set<Monomial> seen(gens.begin(), gens.end());
  std::vector<Monomial> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Monomial l = lcm(a, g);
        if (seen.insert(l).second) next.push_back(l);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> crosscut_faces(const std::vector<Monomial>& below, const Monomial& m) {
  std::vector<std::vector<int>> faces;
  std::vector<int> cur;
  std::function<void(std::size_t, const Monomial&)> dfs = [&](std::size_t from, const Monomial& l) {
    faces.push_back(cur);
    for (std::size_t i = from; i < below.size(); ++i) {
      Monomial l2 = lcm(l, below[i]);
      if (l2 == m) continue;
      cur.push_back(static_cast<int>(i));
      dfs(i + 1, l2);
      cur.pop_back();
    }
  };
  dfs(0, Monomial(m.size()));
  return faces;
}

std::vector<std::vector<int>> order_complex_faces(const std::vector<Monomial>& lattice, const Monomial& m) {
  std::vector<Monomial> interval;
  for (const auto& l : lattice)
    if (l != m && l.divides(m)) interval.push_back(l);
  std::sort(interval.begin(), interval.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<std::vector<int>> faces;
  std::vector<int> cur;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    faces.push_back(cur);
    for (std::size_t i = from; i < interval.size(); ++i) {
      if (!cur.empty() && !interval[static_cast<std::size_t>(cur.back())].divides(interval[i])) continue;
      cur.push_back(static_cast<int>(i));
      dfs(i + 1);
      cur.pop_back();
    }
  };
  dfs(0);
  return faces;
}

constexpr std::size_t crosscut_limit = 14;

}  // namespace

std::map<Monomial, std::map<int, long>> lcm_betti_multigraded(const MonomialIdeal& ideal, LcmRoute route) {
  std::map<Monomial, std::map<int, long>> out;
  if (ideal.is_zero() || ideal.is_unit()) return out;
  const Field& field = ideal.ring()->field();
  const auto& gens = ideal.gens();
  auto lattice = lcm_lattice(gens);
  for (const auto& m : lattice) {
    std::vector<Monomial> below;
    for (const auto& g : gens)
      if (g.divides(m)) below.push_back(g);
    bool cone = false;
    for (const auto& g : below) {
      bool attains = false;
      for (std::size_t v = 0; v < m.size(); ++v) attains = attains || (g[v] > 0 && g[v] == m[v]);
      cone = cone || !attains;
    }
    if (cone) continue;
    LcmRoute r = route;
    if (r == LcmRoute::automatic) r = below.size() <= crosscut_limit ? LcmRoute::crosscut : LcmRoute::order_complex;
    auto faces = r == LcmRoute::crosscut ? crosscut_faces(below, m) : order_complex_faces(lattice, m);
    auto h = family_homology(faces, field);
    for (std::size_t s = 0; s < h.size(); ++s)
      if (h[s] > 0) out[m][static_cast<int>(s) + 1] = h[s];
  }
  return out;
}

BettiTable lcm_betti(const MonomialIdeal& ideal, LcmRoute route) {
  BettiTable b;
  if (ideal.is_unit()) return b;
  b.set(0, 0, 1);
  for (const auto& [m, row] : lcm_betti_multigraded(ideal, route))
    for (const auto& [i, r] : row) b.add(i, m.degree(), r);
  return b;
}

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw InputError("minimal primes need a squarefree monomial ideal");
  if (ideal.ring()->nvars() > 64) throw InputError("minimal primes limited to 64 variables");
  std::vector<std::uint64_t> edges;
  for (const auto& g : ideal.gens()) {
    std::uint64_t e = 0;
    for (auto v : g.support()) e |= std::uint64_t{1} << v;
    edges.push_back(e);
  }
  std::vector<std::uint64_t> covers;
  if (std::find(edges.begin(), edges.end(), 0) != edges.end()) {
    covers.clear();  // unit ideal: no primes
  } else {
    std::function<void(std::uint64_t, std::uint64_t)> search = [&](std::uint64_t cover, std::uint64_t banned) {
      // every chosen vertex must keep an edge covered only by it
      for (std::uint64_t rest = cover; rest; rest &= rest - 1) {
        std::uint64_t v = rest & -rest;
        bool priv = false;
        for (auto e : edges) priv = priv || ((e & cover) == v);
        if (!priv) return;
      }
      const std::uint64_t* open = nullptr;
      for (const auto& e : edges)
        if (!(e & cover) && (!open || __builtin_popcountll(e & ~banned) < __builtin_popcountll(*open & ~banned)))
          open = &e;
      if (!open) {
        covers.push_back(cover);
        return;
      }
      std::uint64_t choices = *open & ~banned, ban = banned;
      for (; choices; choices &= choices - 1) {
        std::uint64_t v = choices & -choices;
        search(cover | v, ban);
        ban |= v;
      }
    };
    search(0, 0);
  }
  std::vector<std::vector<std::size_t>> primes;
  for (auto c : covers) {
    std::vector<std::size_t> p;
    for (std::size_t v = 0; v < 64; ++v)
      if (c >> v & 1u) p.push_back(v);
    primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (!ideal.is_zero() && !ideal.is_unit()) {
    const std::size_t nv = ideal.ring()->nvars();
    MonomialIdeal acc(ideal.ring(), {Monomial(nv)});
    for (const auto& p : primes) {
      std::vector<Monomial> vars;
      for (auto v : p) vars.push_back(Monomial::variable(nv, v));
      acc = intersection(acc, MonomialIdeal(ideal.ring(), vars));
    }
    if (!(acc == ideal)) throw VerificationError("intersection of the minimal primes differs from the ideal");
  }
  return primes;
}

int codim(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("codim of the zero ideal");
  auto primes = minimal_primes(ideal);
  if (primes.empty()) return static_cast<int>(ideal.ring()->nvars()) + 1;
  return static_cast<int>(primes.front().size());
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw InputError("intersection of ideals in different rings");
  std::vector<Monomial> gens;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.ring()->nvars()) throw InputError("variable index out of range");
  std::vector<Monomial> gens;
  for (auto g : ideal.gens()) {
    if (g[var] > 0) g[var] -= 1;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal kill_variables(const MonomialIdeal& ideal, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    bool dies = false;
    for (auto v : vars) dies = dies || g[v] > 0;
    if (!dies) gens.push_back(g);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal substitute_columns(const MonomialIdeal& ideal, const SparsePattern& pattern,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& mapping) {
  const std::size_t nv = ideal.ring()->nvars();
  if (nv != static_cast<std::size_t>(pattern.k() * pattern.n()))
    throw InputError("ideal ring does not match the pattern");
  std::vector<std::size_t> image(nv);
  for (std::size_t v = 0; v < nv; ++v) image[v] = v;
  for (auto [from, to] : mapping) {
    if (from >= nv || to >= nv) throw InputError("substitution variable out of range");
    if (pattern.cell_of(from).second != pattern.cell_of(to).second)
      throw InputError("substitution " + ideal.ring()->name(from) + " -> " + ideal.ring()->name(to) +
                       " crosses columns");
    image[from] = to;
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    Monomial h(nv);
    for (std::size_t v = 0; v < nv; ++v) h[image[v]] += g[v];
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

namespace {

RingPtr column_ring(int n, const Field& field) {
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("y_" + std::to_string(j));
  return Ring::make(field, names);
}

}  // namespace

MonomialIdeal collapse_columns(const MonomialIdeal& ideal, const SparsePattern& pattern) {
  const std::size_t nv = ideal.ring()->nvars();
  if (nv != static_cast<std::size_t>(pattern.k() * pattern.n()))
    throw InputError("ideal ring does not match the pattern");
  RingPtr target = column_ring(pattern.n(), ideal.ring()->field());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    Monomial h(static_cast<std::size_t>(pattern.n()));
    for (std::size_t v = 0; v < nv; ++v) h[static_cast<std::size_t>(pattern.cell_of(v).second)] += g[v];
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(target, std::move(gens));
}

MonomialIdeal squarefree_degree_k_ideal(const SparsePattern& pattern, const Field& field) {
  RingPtr target = column_ring(pattern.n(), field);
  std::vector<Monomial> gens;
  for (const auto& mn : minors(pattern, pattern.generic_ring(field))) {
    if (mn.value.is_zero()) continue;
    Monomial h(static_cast<std::size_t>(pattern.n()));
    for (int j : mn.columns) h[static_cast<std::size_t>(j)] = 1;
    gens.push_back(std::move(h));
  }
  if (gens.empty()) throw InputError("every maximal minor vanishes");
  return MonomialIdeal(target, std::move(gens));
}

BettiTable colon_module_betti(const MonomialIdeal& ideal, std::size_t var) {
  const std::size_t nv = ideal.ring()->nvars();
  if (var >= nv) throw InputError("variable index out of range");
  BettiTable b;
  if (ideal.is_zero()) return b;
  MonomialIdeal colon = colon_by_variable(ideal, var);
  Monomial box = ideal.lcm_all();
  Monomial a(nv);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v < nv) {
      for (int e = 0; e <= box[v]; ++e) {
        a[v] = e;
        walk(v + 1);
      }
      a[v] = 0;
      return;
    }
    std::vector<int> dirs;
    for (std::size_t u = 0; u < nv; ++u)
      if (u != var && a[u] > 0) dirs.push_back(static_cast<int>(u));
    std::vector<std::vector<int>> faces;
    for (std::uint32_t s = 0; s < (1u << dirs.size()); ++s) {
      Monomial m = a;
      std::vector<int> f;
      for (std::size_t t = 0; t < dirs.size(); ++t)
        if (s >> t & 1u) {
          m[static_cast<std::size_t>(dirs[t])] -= 1;
          f.push_back(dirs[t]);
        }
      if (colon.contains(m) && !ideal.contains(m)) faces.push_back(std::move(f));
    }
    if (faces.empty()) return;
    auto h = family_homology(faces, ideal.ring()->field());
    for (std::size_t s = 0; s < h.size(); ++s)
      if (h[s] > 0) b.add(static_cast<int>(s), a.degree(), h[s]);
  };
  walk(0);
  return b;
}

std::map<Monomial, long> colon_module_hilbert(const MonomialIdeal& ideal, std::size_t var, int bound) {
  const std::size_t nv = ideal.ring()->nvars();
  if (var >= nv) throw InputError("variable index out of range");
  MonomialIdeal colon = colon_by_variable(ideal, var);
  std::map<Monomial, long> out;
  Monomial a(nv);
  std::function<void(std::size_t, int)> walk = [&](std::size_t v, int room) {
    if (v == nv) {
      if (colon.contains(a) && !ideal.contains(a)) out[a] = 1;
      return;
    }
    for (int e = 0; e <= room; ++e) {
      a[v] = e;
      walk(v + 1, room - e);
    }
    a[v] = 0;
  };
  walk(0, bound);
  return out;
}

}  // namespace enprune
