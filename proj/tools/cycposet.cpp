// cycposet: construct, verify, audit and enumerate posets with cyclic
// automorphism groups.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycposet/cycposet.hpp"

namespace {

using namespace cycposet;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw DomainError("not an integer: '" + item + "'");
    }
    if (pos != item.size() || v < 0) throw DomainError("not a nonnegative integer: '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

ordered_json cycle_type_json(const CycleType& ct) {
  ordered_json j = ordered_json::array();
  for (std::size_t l : ct.lengths) j.push_back(l);
  return j;
}

ordered_json rational_json(const Rational& r) { return to_string(r); }

void emit_poset(const Poset& p, const std::string& format, bool labels, const std::string& name) {
  if (format == "dot")
    std::cout << poset_to_dot(p, name);
  else
    std::cout << poset_to_json(p, labels).dump() << '\n';
}

// construct --------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> params;
  std::string format = "json";
  bool labels = false;
};

int cmd_construct(const ConstructArgs& a) {
  const auto num = [&](std::size_t i) -> std::uint64_t {
    if (i >= a.params.size()) throw DomainError("construct " + a.kind + ": missing parameter");
    const auto v = parse_list(a.params[i]);
    if (v.size() != 1) throw DomainError("expected a single integer, got '" + a.params[i] + "'");
    return v.front();
  };
  const auto expect = [&](std::size_t k) {
    if (a.params.size() != k)
      throw DomainError("construct " + a.kind + " takes " + std::to_string(k) + " parameter(s)");
  };
  Poset p;
  std::string name = a.kind;
  if (a.kind == "minimal") {
    expect(1);
    const auto n = num(0);
    if (n == 0) throw DomainError("n must be positive");
    p = minimal_poset(n);
    name = "minimal_" + std::to_string(n);
  } else if (a.kind == "prime-power") {
    expect(2);
    p = prime_power_poset(num(0), static_cast<unsigned>(num(1)));
    name = "prime_power_" + a.params[0] + "_" + a.params[1];
  } else if (a.kind == "frucht") {
    expect(1);
    p = frucht_poset(num(0));
    name = "frucht_" + a.params[0];
  } else if (a.kind == "circulant") {
    if (a.params.size() != 1 && a.params.size() != 2)
      throw DomainError("construct circulant takes N and an optional difference set");
    const auto n = num(0);
    const auto s = a.params.size() == 2 ? parse_list(a.params[1]) : standard_difference_set();
    p = circulant_two_level(n, s);
    name = "circulant_" + a.params[0];
  } else if (a.kind == "z12") {
    expect(0);
    p = z12_poset();
  } else {
    throw DomainError("unknown construction '" + a.kind + "'");
  }
  emit_poset(p, a.format, a.labels, name);
  return kOk;
}

// verify -----------------------------------------------------------------

int cmd_verify(const std::string& source, std::uint64_t m, const std::string& format) {
  Poset p;
  if (source == "-") {
    p = poset_from_json(std::cin);
  } else {
    std::ifstream in(source);
    if (!in) throw DomainError("cannot open " + source);
    p = poset_from_json(in);
  }
  const auto g = automorphism_group(p, {.elements = Materialize::none});
  const bool ok = g.cyclic && g.order == BigInt(m);
  ordered_json j;
  j["points"] = p.size();
  j["expected_order"] = m;
  j["order"] = g.order.str();
  j["cyclic"] = g.cyclic;
  j["generator_cycle_type"] =
      g.generator_of_full_order ? cycle_type_json(cycle_type(*g.generator_of_full_order)) : ordered_json(nullptr);
  j["verified"] = ok;
  if (format == "table") {
    std::cout << "points          " << p.size() << '\n'
              << "|Aut|           " << g.order << '\n'
              << "cyclic          " << (g.cyclic ? "yes" : "no") << '\n';
    if (g.generator_of_full_order)
      std::cout << "generator type  " << cycle_type(*g.generator_of_full_order).to_string() << '\n';
    std::cout << "Aut = Z_" << m << "      " << (ok ? "yes" : "no") << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
  return ok ? kOk : kFailed;
}

// audit ------------------------------------------------------------------

int cmd_audit(const std::string& lengths, std::uint64_t n, const std::string& format) {
  const auto ct = CycleType::from_lengths(parse_list(lengths));
  const auto rep = audit_generator(ct, n);
  const auto lem = lemma_constraints(ct, n);
  const bool ok = rep.passed && lem.passed;
  if (format == "table") {
    std::cout << "cycle type " << ct.to_string() << ", n = " << n << '\n';
    std::cout << "  q      sum        branch\n";
    for (const auto& [q, s] : rep.per_prime_power_sums)
      std::cout << "  " << std::left << std::setw(6) << q << ' ' << std::setw(10) << to_string(s) << ' '
                << (rep.branch.count(q) ? to_string(rep.branch.at(q)) : "-") << '\n';
    std::cout << "  constraint       value      bound  ok\n";
    for (const auto& c : rep.constraints)
      std::cout << "  " << std::left << std::setw(16) << c.name << ' ' << std::setw(10) << to_string(c.value) << ' '
                << std::setw(6) << to_string(c.bound) << ' ' << (c.passed ? "yes" : "NO") << '\n';
    for (const auto& c : lem.checks)
      if (c.triggered)
        std::cout << "  lemma " << c.lemma << ": " << (c.passed ? "ok" : "VIOLATED") << " (" << c.description << ")\n";
    std::cout << "lower bound on points: " << rep.lower_bound_points << '\n'
              << (ok ? "passed" : "failed") << '\n';
    return ok ? kOk : kFailed;
  }
  ordered_json j;
  j["cycle_type"] = cycle_type_json(ct);
  j["n"] = n;
  ordered_json sums = ordered_json::object();
  for (const auto& [q, s] : rep.per_prime_power_sums) sums[std::to_string(q)] = rational_json(s);
  j["per_prime_power_sums"] = sums;
  ordered_json branches = ordered_json::object();
  for (const auto& [q, b] : rep.branch) branches[std::to_string(q)] = to_string(b);
  j["branch"] = branches;
  ordered_json cons = ordered_json::array();
  for (const auto& c : rep.constraints)
    cons.push_back({{"name", c.name},
                    {"branch", to_string(c.branch)},
                    {"value", rational_json(c.value)},
                    {"bound", rational_json(c.bound)},
                    {"passed", c.passed}});
  j["constraints"] = cons;
  ordered_json lemmas = ordered_json::array();
  for (const auto& c : lem.checks)
    lemmas.push_back({{"lemma", c.lemma}, {"triggered", c.triggered}, {"passed", c.passed}});
  j["lemmas"] = lemmas;
  j["lower_bound_points"] = rep.lower_bound_points;
  j["passed"] = ok;
  std::cout << j.dump() << '\n';
  return ok ? kOk : kFailed;
}

// enumerate --------------------------------------------------------------

ordered_json record_json(const oracle::EnumerationRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["total"] = r.total;
  ordered_json cyc = ordered_json::object();
  for (const auto& [m, c] : r.with_cyclic_aut) cyc[std::to_string(m)] = c;
  j["with_cyclic_aut"] = cyc;
  return j;
}

struct EnumerateArgs {
  std::size_t n = 0;
  bool count_only = false;
  unsigned threads = 1;
  std::string cache;
  std::size_t limit = oracle::default_enumeration_limit();
};

int cmd_enumerate(const EnumerateArgs& a) {
  oracle::EnumerationOptions opt;
  opt.limit = std::min(a.limit, oracle::kEnumerationHardLimit);
  opt.threads = std::max(1u, a.threads);
  oracle::EnumerationRecord rec;
  rec.n = a.n;
  const auto count = [&](const GroupDescription& g) {
    ++rec.total;
    if (g.cyclic) ++rec.with_cyclic_aut[g.order.convert_to<std::uint64_t>()];
    if (rec.total % 100000 == 0) std::cerr << "  " << rec.total << " classes\n";
  };

  if (!a.cache.empty() && std::ifstream(a.cache).good()) {
    const auto c = oracle::cache::read(a.cache);
    if (c.n != a.n) throw DomainError("cache " + a.cache + " holds n=" + std::to_string(c.n));
    std::cerr << "reading " << c.forms.size() << " classes from " << a.cache << '\n';
    for (const auto& f : c.forms)
      count(automorphism_group(poset_from_canonical_form(f), {.elements = Materialize::none}));
  } else {
    if (a.n > opt.limit)
      throw LimitExceeded("n=" + std::to_string(a.n) + " exceeds the enumeration limit " +
                          std::to_string(opt.limit) + " (raise with --limit or CYCPOSET_ENUM_LIMIT)");
    std::cerr << "enumerating posets on " << a.n << " points with " << opt.threads << " thread(s)\n";
    std::vector<CanonicalForm> forms;
    oracle::enumerate_posets(a.n, [&](const oracle::EnumeratedPoset& e) {
      count(e.group);
      if (!a.cache.empty()) forms.push_back(canonical_form(e.poset));
      return true;
    }, opt);
    if (!a.cache.empty()) {
      std::sort(forms.begin(), forms.end());
      oracle::cache::write(a.cache, a.n, forms);
      std::cerr << "wrote " << forms.size() << " canonical forms to " << a.cache << '\n';
    }
  }
  std::cerr << "done: " << rec.total << " classes\n";
  if (a.count_only)
    std::cout << rec.total << '\n';
  else
    std::cout << record_json(rec).dump() << '\n';
  return kOk;
}

// verify-lemmas ----------------------------------------------------------

ordered_json verification_json(const oracle::LemmaVerification& v) {
  return {{"lemma", v.lemma},
          {"configurations", v.configurations},
          {"valid_posets", v.valid_posets},
          {"counterexamples", v.counterexamples},
          {"failures", v.failures},
          {"passed", v.passed()}};
}

int cmd_verify_lemmas(const std::string& which, std::size_t limit, unsigned threads) {
  ordered_json out = ordered_json::array();
  bool ok = true;
  if (which == "two-orbits" || which == "all")
    for (unsigned p : {3u, 5u, 7u}) {
      std::cerr << "two-orbit configurations for p=" << p << '\n';
      const auto v = oracle::verify_lemma_two_orbits(p);
      ok = ok && v.passed();
      out.push_back(verification_json(v));
    }
  if (which == "z4" || which == "all") {
    std::cerr << "Z_4 configurations\n";
    const auto v = oracle::verify_lemma_z4();
    ok = ok && v.passed();
    out.push_back(verification_json(v));
  }
  if (which == "constraints" || which == "all") {
    std::cerr << "cycle-type constraints on posets up to " << limit << " points\n";
    oracle::EnumerationOptions opt;
    opt.limit = std::max(opt.limit, std::min(limit, oracle::kEnumerationHardLimit));
    opt.threads = std::max(1u, threads);
    const auto v = oracle::verify_lemma_constraints_exhaustive(limit, opt);
    ok = ok && v.passed();
    ordered_json cyc = ordered_json::object();
    for (const auto& [pts, orders] : v.with_cyclic_aut)
      for (const auto& [m, c] : orders) cyc[std::to_string(pts)][std::to_string(m)] = c;
    out.push_back({{"lemma", "cycle_type_constraints"},
                   {"limit", v.limit},
                   {"posets_checked", v.posets_checked},
                   {"cyclic_posets", v.cyclic_posets},
                   {"with_cyclic_aut", cyc},
                   {"violations", v.violations},
                   {"failures", v.failures},
                   {"passed", v.passed()}});
  }
  std::cout << out.dump() << '\n';
  return ok ? kOk : kFailed;
}

// min-points -------------------------------------------------------------

int cmd_min_points(std::uint64_t m, std::size_t limit, unsigned threads) {
  oracle::EnumerationOptions opt;
  opt.limit = std::min(limit, oracle::kEnumerationHardLimit);
  if (limit > opt.limit) throw LimitExceeded("limit above " + std::to_string(oracle::kEnumerationHardLimit));
  opt.threads = std::max(1u, threads);
  const auto k = oracle::min_points_with_cyclic_aut(m, limit, opt);
  ordered_json j;
  j["m"] = m;
  j["limit"] = limit;
  j["min_points"] = k ? ordered_json(*k) : ordered_json(nullptr);
  j["beta"] = beta(m);
  std::cout << j.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Posets with cyclic automorphism groups"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a poset (minimal N | prime-power P R | frucht N | "
                                                    "circulant N [S] | z12)");
  construct->add_option("kind", ca.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"minimal", "prime-power", "frucht", "circulant", "z12"}));
  construct->add_option("params", ca.params, "Construction parameters");
  construct->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  construct->add_flag("--labels", ca.labels, "Include point labels in JSON");

  std::string source = "-";
  std::uint64_t order = 0;
  std::string verify_format = "json";
  auto* verify = app.add_subcommand("verify", "Check that Aut(P) is cyclic of a given order");
  verify->add_option("file", source, "Poset JSON file, '-' for standard input");
  verify->add_option("--order,-m", order, "Expected group order")->required()->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "table"}));

  std::uint64_t beta_n = 0;
  auto* beta_cmd = app.add_subcommand("beta", "Minimum number of points of a poset with Aut = Z_n");
  beta_cmd->add_option("n", beta_n)->required()->check(CLI::PositiveNumber);

  std::string lengths;
  std::uint64_t audit_n = 0;
  std::string audit_format = "json";
  auto* audit = app.add_subcommand("audit", "Evaluate the weight inequalities for a cycle type");
  audit->add_option("cycle_type", lengths, "Comma-separated cycle lengths, e.g. 6,6,4,4")->required();
  audit->add_option("--n", audit_n, "Order of the permutation")->required()->check(CLI::PositiveNumber);
  audit->add_option("--format", audit_format)->check(CLI::IsMember({"json", "table"}));

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate posets up to isomorphism");
  enumerate->add_option("n", ea.n)->required();
  enumerate->add_flag("--count-only", ea.count_only, "Print only the number of classes");
  enumerate->add_option("--threads", ea.threads)->check(CLI::PositiveNumber);
  enumerate->add_option("--cache", ea.cache, "Canonical-form cache file (read if present, else written)");
  enumerate->add_option("--limit", ea.limit, "Largest permitted n");

  std::string which;
  std::size_t lemma_limit = 8;
  unsigned lemma_threads = 1;
  auto* lemmas = app.add_subcommand("verify-lemmas", "Exhaustively check the small-case lemmas");
  lemmas->add_option("which", which)->required()->check(CLI::IsMember({"two-orbits", "z4", "constraints", "all"}));
  lemmas->add_option("--limit", lemma_limit, "Largest poset size for the constraint check");
  lemmas->add_option("--threads", lemma_threads)->check(CLI::PositiveNumber);

  std::uint64_t mp_m = 0;
  std::size_t mp_limit = 8;
  unsigned mp_threads = 1;
  auto* min_points = app.add_subcommand("min-points", "Smallest poset with Aut = Z_m, by enumeration");
  min_points->add_option("m", mp_m)->required()->check(CLI::PositiveNumber);
  min_points->add_option("--limit", mp_limit, "Largest poset size to search");
  min_points->add_option("--threads", mp_threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(source, order, verify_format);
    if (*beta_cmd) {
      std::cout << beta(beta_n) << '\n';
      return kOk;
    }
    if (*audit) return cmd_audit(lengths, audit_n, audit_format);
    if (*enumerate) return cmd_enumerate(ea);
    if (*lemmas) return cmd_verify_lemmas(which, lemma_limit, lemma_threads);
    if (*min_points) return cmd_min_points(mp_m, mp_limit, mp_threads);
  } catch (const cycposet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
