#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "enprune/complex_io.hpp"
#include "enprune/eagon_northcott.hpp"
#include "enprune/groebner.hpp"
#include "enprune/invariants.hpp"
#include "enprune/monomial_ideal.hpp"
#include "enprune/pruning.hpp"

using namespace enprune;
using nlohmann::json;

namespace {

enum Exit { ok = 0, verification_failed = 1, invalid_input = 2 };

struct Options {
  std::string field = "gf:32003";
  std::string format = "text";
  std::uint64_t seed = 1;
  bool field_given = false;

  Field make_field() const { return Field::parse(field); }
  bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json report_json(const VerificationReport& r) {
  json j{{"compose", r.composes}, {"minimal", r.minimal}, {"exact", r.exact()}, {"bound", r.homology.bound}};
  if (r.compose_failure) j["compose_failure"] = *r.compose_failure;
  if (const auto* p = r.homology.first_nonzero(1)) {
    json f{{"position", p->position}, {"degree", p->total}, {"multidegree", p->degree}, {"dim", p->homology}};
    if (p->witness) {
      json w = json::array();
      for (const auto& x : *p->witness) w.push_back(x.to_string());
      f["witness"] = w;
    }
    j["homology"] = f;
  }
  return j;
}

void print_report(const VerificationReport& r) {
  std::cout << r.summary();
  if (const auto* p = r.homology.first_nonzero(1); p && p->witness) {
    std::cout << "witness:";
    for (const auto& x : *p->witness) std::cout << " " << x.to_string();
    std::cout << "\n";
  }
}

std::string ideal_lines(const MonomialIdeal& I) {
  std::string s;
  for (const auto& g : I.gens()) s += Polynomial::term(I.ring(), g, 1).to_string() + "\n";
  return s;
}

json ideal_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(Polynomial::term(I.ring(), g, 1).to_string());
  return gens;
}

BasedComplex load_with_field(const std::string& path, const Options& opt) {
  auto c = load_complex(path);
  return opt.field_given ? change_field(c, opt.make_field()) : c;
}

int cmd_resolve(const Options& opt, const std::string& path, std::optional<int> bound, bool skip_homology) {
  auto p = SparsePattern::load(path);
  auto res = resolve_sparse_determinantal(p, opt.make_field(), !skip_homology, bound);
  if (opt.json()) {
    json j{{"complex", complex_to_json(res.complex)},
           {"betti", json::parse(res.betti.to_json())},
           {"report", report_json(res.report)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << complex_to_text(res.complex) << "\nBetti table:\n" << res.betti.to_text() << "\n";
    print_report(res.report);
  }
  bool good = res.report.composes && res.report.minimal && (skip_homology || res.report.exact());
  return good ? ok : verification_failed;
}

int cmd_en(const Options& opt, int k, int n) {
  auto c = eagon_northcott(k, n, opt.make_field());
  std::cout << (opt.json() ? complex_to_json_text(c) + "\n" : complex_to_text(c));
  return ok;
}

int cmd_prune(const Options& opt, const std::string& path, const std::string& kill) {
  auto c = load_with_field(path, opt);
  std::vector<std::size_t> zero;
  for (const auto& name : split_names(kill)) {
    auto v = c.ring()->index_of(name);
    if (!v) throw InputError("unknown variable '" + name + "'");
    zero.push_back(*v);
  }
  auto pruned = prune(c, zero);
  std::cout << (opt.json() ? complex_to_json_text(pruned) + "\n" : complex_to_text(pruned));
  return ok;
}

int cmd_initial(const Options& opt, const std::string& path, const std::string& order_spec) {
  auto p = SparsePattern::load(path);
  auto order = TermOrder::parse(order_spec, static_cast<std::size_t>(p.k() * p.n()));
  auto in = initial_ideal(p, order, opt.make_field());
  if (opt.json())
    std::cout << json{{"order", order.to_string()}, {"generators", ideal_json(in)}, {"groebner", true}}.dump(2)
              << "\n";
  else
    std::cout << "# order " << order.to_string() << ", minors certified as a Groebner basis\n" << ideal_lines(in);
  return ok;
}

int cmd_verify(const Options& opt, const std::string& path, std::optional<int> bound) {
  auto c = load_with_field(path, opt);
  auto report = verify_resolution(c, bound);
  if (opt.json())
    std::cout << report_json(report).dump(2) << "\n";
  else
    print_report(report);
  return report.ok() ? ok : verification_failed;
}

int cmd_oracle_betti(const Options& opt, const std::string& path) {
  auto I = MonomialIdeal::load(path, opt.make_field());
  auto b = lcm_betti(I);
  std::cout << (opt.json() ? json::parse(b.to_json()).dump(2) + "\n" : b.to_text());
  return ok;
}

int cmd_primes(const Options& opt, const std::string& path) {
  auto I = MonomialIdeal::load(path, opt.make_field());
  auto primes = minimal_primes(I);
  json list = json::array();
  std::ostringstream text;
  for (const auto& q : primes) {
    json names = json::array();
    text << "(";
    for (std::size_t i = 0; i < q.size(); ++i) {
      names.push_back(I.ring()->name(q[i]));
      text << (i ? ", " : "") << I.ring()->name(q[i]);
    }
    text << ")\n";
    list.push_back(names);
  }
  if (opt.json())
    std::cout << json{{"primes", list}, {"codim", codim(I)}}.dump(2) << "\n";
  else
    std::cout << text.str() << "codim " << codim(I) << "\n";
  return ok;
}

int cmd_info(const Options& opt, const std::string& path) {
  auto p = SparsePattern::load(path);
  auto stats = perimeter_stats(p);
  bool zero = is_ideal_zero(p);
  const int limit = 2 * p.n() + 1;
  if (opt.json()) {
    json j{{"k", p.k()},
           {"n", p.n()},
           {"max_perimeter", stats.max_perimeter},
           {"zero_columns", stats.zero_columns},
           {"ideal_zero", zero}};
    if (stats.rectangle) j["rectangle"] = {{"rows", stats.rectangle->rows}, {"columns", stats.rectangle->columns}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.k() << " x " << p.n() << " pattern, " << p.zero_count() << " zeros\n";
    std::cout << "largest zero rectangle perimeter: " << stats.max_perimeter << "\n";
    std::cout << "zero columns: " << stats.zero_columns << "\n";
    if (zero)
      std::cout << "ideal is zero (perimeter " << stats.max_perimeter << " > " << limit << ")\n";
    else
      std::cout << "ideal is nonzero (perimeter " << stats.max_perimeter << " <= " << limit << ")\n";
  }
  return ok;
}

int cmd_ugb_check(const Options& opt, const std::string& path, std::size_t orders, std::uint64_t seed) {
  auto p = SparsePattern::load(path);
  auto field = opt.make_field();
  std::mt19937_64 rng(seed);
  const std::size_t nv = static_cast<std::size_t>(p.k() * p.n());
  std::vector<TermOrder> sample{TermOrder::lex(), TermOrder::grevlex()};
  std::uniform_int_distribution<long> w(1, 50);
  while (sample.size() < orders) {
    std::vector<long> weights;
    for (std::size_t v = 0; v < nv; ++v) weights.push_back(w(rng));
    sample.push_back(TermOrder::weight(std::move(weights)));
  }
  sample.erase(sample.begin() + static_cast<long>(std::min(orders, sample.size())), sample.end());
  auto mins = nonzero_minors(p, field);
  auto betti = betti_table(pruned_resolution(p, field));
  bool all = true;
  json rows = json::array();
  for (const auto& order : sample) {
    auto check = is_groebner(mins, order);
    bool match = false;
    if (check.ok) match = lcm_betti(lead_ideal(mins, order)) == betti;
    all = all && check.ok && match;
    rows.push_back({{"order", order.to_string()}, {"groebner", check.ok}, {"betti_match", match}});
    if (!opt.json())
      std::cout << (check.ok ? "ok  " : "FAIL") << " groebner, " << (match ? "ok  " : "FAIL") << " betti  "
                << order.to_string() << "\n";
  }
  if (opt.json())
    std::cout << json{{"seed", seed}, {"orders", rows}, {"ok", all}}.dump(2) << "\n";
  else
    std::cout << (all ? "all orders certified" : "certification failed") << "\n";
  return all ? ok : verification_failed;
}

int cmd_diff(const Options& opt, const std::string& a, const std::string& b) {
  auto d = complex_diff(load_with_field(a, opt), load_with_field(b, opt));
  if (opt.json())
    std::cout << json{{"equal", d.equal}, {"reason", d.reason}}.dump(2) << "\n";
  else
    std::cout << (d.equal ? "equal up to signed basis permutation" : "different: " + d.reason) << "\n";
  return d.equal ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions of sparse determinantal ideals by pruning Eagon-Northcott complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  auto* field_opt = app.add_option("--field", opt.field, "rational or gf:<p>")->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampled term orders")->capture_default_str();

  std::string path, path2, kill, order = "grevlex";
  std::optional<int> bound;
  int k = 0, n = 0;
  std::size_t orders = 10;
  std::optional<std::uint64_t> local_seed;
  bool skip_homology = false;

  auto* resolve = app.add_subcommand("resolve", "pruned minimal resolution of a pattern with verification");
  resolve->add_option("pattern", path, ".pat file")->required();
  resolve->add_option("--truncate", bound, "largest total degree for the homology check");
  resolve->add_flag("--no-homology", skip_homology, "skip the truncated homology check");

  auto* en = app.add_subcommand("en", "generic Eagon-Northcott complex");
  en->add_option("k", k)->required();
  en->add_option("n", n)->required();

  auto* prune_cmd = app.add_subcommand("prune", "prune a complex by a set of variables");
  prune_cmd->add_option("complex", path, "complex JSON")->required();
  prune_cmd->add_option("--kill", kill, "comma-separated variable names")->required();

  auto* initial = app.add_subcommand("initial", "initial ideal of the maximal minors");
  initial->add_option("pattern", path)->required();
  initial->add_option("--order", order, "lex, grevlex or weight:w1,...[;lex|;grevlex]")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "compose, minimality and truncated homology of a complex");
  verify->add_option("complex", path)->required();
  verify->add_option("--truncate", bound);

  auto* oracle = app.add_subcommand("oracle-betti", "Betti table of a monomial ideal from its lcm lattice");
  oracle->add_option("ideal", path)->required();

  auto* primes = app.add_subcommand("primes", "minimal primes of a squarefree monomial ideal");
  primes->add_option("ideal", path)->required();

  auto* info = app.add_subcommand("info", "zero-rectangle statistics of a pattern");
  info->add_option("pattern", path)->required();

  auto* ugb = app.add_subcommand("ugb-check", "Groebner certification of the minors under sampled orders");
  ugb->add_option("pattern", path)->required();
  ugb->add_option("--orders", orders)->capture_default_str()->check(CLI::PositiveNumber);
  ugb->add_option("--seed", local_seed);

  auto* diff = app.add_subcommand("diff", "compare two complexes up to signed basis permutation");
  diff->add_option("a", path)->required();
  diff->add_option("b", path2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : invalid_input;
  }
  opt.field_given = field_opt->count() > 0;

  try {
    if (*resolve) return cmd_resolve(opt, path, bound, skip_homology);
    if (*en) return cmd_en(opt, k, n);
    if (*prune_cmd) return cmd_prune(opt, path, kill);
    if (*initial) return cmd_initial(opt, path, order);
    if (*verify) return cmd_verify(opt, path, bound);
    if (*oracle) return cmd_oracle_betti(opt, path);
    if (*primes) return cmd_primes(opt, path);
    if (*info) return cmd_info(opt, path);
    if (*ugb) return cmd_ugb_check(opt, path, orders, local_seed.value_or(opt.seed));
    if (*diff) return cmd_diff(opt, path, path2);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid_input;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return verification_failed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return invalid_input;
  }
  return invalid_input;
}
