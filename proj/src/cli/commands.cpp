#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelian/bench.hpp"
#include "abelian/cli.hpp"
#include "abelian/equivalence.hpp"
#include "abelian/errors.hpp"
#include "abelian/numutil.hpp"
#include "abelian/oracle.hpp"

namespace abelian::cli {

namespace {

struct Common {
  std::string group;
  std::string x;
  std::string y;
  std::string method = "fast";
  std::string format = "text";
  bool oracle = false;
  std::uint64_t cap = 10'000'000;
  FactorOptions factoring;
};

QuotientMethod method_of(const std::string& name) {
  return name == "snf" ? QuotientMethod::snf : QuotientMethod::fast;
}

GroupElement element_of(const AbelianGroup& g, const std::string& spec) {
  return g.element(parse_element_spec(spec));
}

CanonicalGroupKey key_for(const AbelianGroup& g, const GroupElement& x, const Common& c) {
  if (c.oracle) return oracle::brute_quotient_key(g, x, {c.cap});
  return quotient_key(g, x, method_of(c.method));
}

std::string route_name(const Common& c) { return c.oracle ? "oracle" : c.method; }

int cmd_quotient(const Common& c, std::ostream& out) {
  const AbelianGroup g(parse_group_spec(c.group), c.factoring);
  const GroupElement x = element_of(g, c.x);
  const CanonicalGroupKey key = key_for(g, x, c);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = group_to_json(g);
    j["element"] = format_element_spec(x);
    j["method"] = route_name(c);
    j["quotient"] = key_to_json(key);
    out << j.dump(2) << '\n';
  } else {
    out << render_cyclic_chain(key) << '\n';
    out << "primary: " << render_primary(key) << '\n';
    out << "order: " << key.order().get_str() << '\n';
  }
  return kOk;
}

int cmd_autoeq(const Common& c, std::ostream& out) {
  const AbelianGroup g(parse_group_spec(c.group), c.factoring);
  const GroupElement x = element_of(g, c.x);
  const GroupElement y = element_of(g, c.y);
  const CanonicalGroupKey kx = key_for(g, x, c);
  const CanonicalGroupKey ky = key_for(g, y, c);
  const bool same = c.oracle ? oracle::brute_are_automorphic(g, x, y, {c.cap})
                             : are_automorphic(g, x, y, method_of(c.method));
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = group_to_json(g);
    j["x"] = format_element_spec(x);
    j["y"] = format_element_spec(y);
    j["method"] = route_name(c);
    j["equivalent"] = same;
    j["quotient_x"] = key_to_json(kx);
    j["quotient_y"] = key_to_json(ky);
    out << j.dump(2) << '\n';
  } else {
    out << (same ? "equivalent" : "not equivalent") << '\n';
    out << "G/<x> = " << render_cyclic_chain(kx) << '\n';
    out << "G/<y> = " << render_cyclic_chain(ky) << '\n';
  }
  return same ? kOk : kNotEquivalent;
}

int cmd_orbits(const Common& c, std::ostream& out) {
  const AbelianGroup g(parse_group_spec(c.group), c.factoring);
  if (!c.oracle) {
    const auto orbits = enumerate_orbits(g, {c.cap});
    if (c.format == "json")
      out << orbits_to_json(g, orbits).dump(2) << '\n';
    else
      write_orbit_table(out, g, orbits);
    return kOk;
  }

  const auto orbits = oracle::brute_orbits(g, {c.cap});
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = group_to_json(g);
    auto list = nlohmann::ordered_json::array();
    for (const auto& orbit : orbits) {
      nlohmann::ordered_json entry;
      entry["size"] = std::to_string(orbit.size());
      entry["element_order"] = element_order(g, orbit.front()).get_str();
      entry["quotient"] = key_to_json(oracle::brute_quotient_key(g, orbit.front(), {c.cap}));
      auto members = nlohmann::ordered_json::array();
      for (const auto& x : orbit) members.push_back(format_element_spec(x));
      entry["elements"] = std::move(members);
      list.push_back(std::move(entry));
    }
    j["orbits"] = std::move(list);
    j["orbit_count"] = orbits.size();
    j["total_size"] = g.order().get_str();
    out << j.dump(2) << '\n';
    return kOk;
  }

  std::vector<OrbitRow> rows;
  for (const auto& orbit : orbits) {
    std::string members;
    for (const auto& x : orbit) {
      if (!members.empty()) members += ' ';
      members += "(" + format_element_spec(x) + ")";
    }
    rows.push_back({BigInt(static_cast<unsigned long>(orbit.size())),
                    oracle::brute_quotient_key(g, orbit.front(), {c.cap}), std::move(members)});
  }
  write_orbit_rows(out, g, rows, "elements");
  return kOk;
}

int cmd_factor(const std::string& number, const Common& c, std::ostream& out) {
  std::string digits = number;
  BigInt n;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
      n.set_str(digits, 10) != 0)
    throw ParseError("invalid integer '" + number + "'");
  if (n < 1) throw NonPositiveModulus("factor expects n >= 1");
  const Factorization f = factorize(n, c.factoring);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n.get_str();
    auto factors = nlohmann::ordered_json::object();
    for (const auto& [p, k] : f.factors) factors[p.get_str()] = k;
    j["factors"] = std::move(factors);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << n.get_str() << " = ";
  if (f.factors.empty()) out << '1';
  bool first = true;
  for (const auto& [p, k] : f.factors) {
    if (!first) out << " * ";
    first = false;
    out << p.get_str();
    if (k > 1) out << '^' << k;
  }
  out << '\n';
  return kOk;
}

struct BenchArgs {
  std::string family = "c4";
  unsigned max_rank = 512;
  unsigned min_rank = 4;
  unsigned trials = 5;
  unsigned warmup = 3;
  double min_trial_ms = 5.0;
  std::vector<std::string> methods{"fast", "snf"};
  std::string schedule = "mixed";
  bool model = false;
  unsigned model_step = 1;
};

int cmd_bench(const BenchArgs& b, std::ostream& out, std::ostream& err) {
  if (b.model) {
    bench::write_model_csv(out, b.max_rank, b.model_step);
    const unsigned cross = bench::model_crossover_rank();
    err << "model crossover rank: " << cross << '\n';
    return kOk;
  }

  bench::ScalingOptions opts;
  opts.ranks = b.schedule == "doubling" ? bench::doubling_rank_schedule(b.min_rank, b.max_rank)
                                        : bench::mixed_rank_schedule(b.max_rank);
  opts.methods.clear();
  for (const auto& m : b.methods) opts.methods.push_back(method_of(m));
  opts.trials = b.trials;
  opts.warmup = b.warmup;
  opts.min_trial_ms = b.min_trial_ms;

  const auto rows = bench::run_scaling(opts);
  bench::write_csv(out, rows);
  if (opts.ranks.size() >= 2) {
    for (QuotientMethod m : opts.methods) {
      const auto fit = bench::fit_rows(rows, m);
      err << "fit " << to_string(m) << ": " << fit.coefficient << " * n^" << fit.exponent << '\n';
    }
  }
  if (std::find(opts.methods.begin(), opts.methods.end(), QuotientMethod::snf) != opts.methods.end())
    for (unsigned n : opts.ranks) {
      const auto s = bench::snf_bit_growth(n);
      err << "snf entry bits at rank " << n << ": input " << s.input_bits << ", peak " << s.peak_bits << '\n';
    }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite abelian groups: quotients by cyclic subgroups, automorphic equivalence, orbits"};
  app.require_subcommand(1);

  Common c;
  const std::vector<std::string> methods{"fast", "snf"};
  const std::vector<std::string> formats{"text", "json"};

  auto* quotient = app.add_subcommand("quotient", "Structure of G/<x>");
  quotient->add_option("-g,--group", c.group, "cyclic orders, e.g. 2,4,8,8")->required();
  quotient->add_option("-x", c.x, "residues of x")->required();
  quotient->add_option("--method", c.method)->check(CLI::IsMember(methods));
  quotient->add_flag("--oracle", c.oracle, "use coset counting instead");
  quotient->add_option("--format", c.format)->check(CLI::IsMember(formats));

  auto* autoeq = app.add_subcommand("autoeq", "Is there an automorphism sending x to y?");
  autoeq->add_option("-g,--group", c.group)->required();
  autoeq->add_option("-x", c.x)->required();
  autoeq->add_option("-y", c.y)->required();
  autoeq->add_option("--method", c.method)->check(CLI::IsMember(methods));
  autoeq->add_flag("--oracle", c.oracle, "search Aut(G) exhaustively");
  autoeq->add_option("--format", c.format)->check(CLI::IsMember(formats));

  auto* orbits = app.add_subcommand("orbits", "Automorphism orbits of G");
  orbits->add_option("-g,--group", c.group)->required();
  orbits->add_option("--format", c.format)->check(CLI::IsMember(formats));
  orbits->add_option("--cap", c.cap, "enumeration limit");
  orbits->add_flag("--oracle", c.oracle, "list orbits from the full automorphism group");

  for (auto* sub : {quotient, autoeq, orbits}) {
    sub->add_option("--rho-iterations", c.factoring.rho_iterations, "Pollard rho steps per attempt");
    sub->add_option("--rho-attempts", c.factoring.rho_attempts);
  }

  std::string number;
  auto* factor = app.add_subcommand("factor", "Prime factorization");
  factor->add_option("n", number)->required();
  factor->add_option("--format", c.format)->check(CLI::IsMember(formats));
  factor->add_option("--rho-iterations", c.factoring.rho_iterations, "Pollard rho steps per attempt");
  factor->add_option("--rho-attempts", c.factoring.rho_attempts);

  BenchArgs b;
  auto* bench_cmd = app.add_subcommand("bench", "Time both quotient routes on C4^n");
  bench_cmd->add_option("--family", b.family)->check(CLI::IsMember({"c4"}));
  bench_cmd->add_option("--max-rank", b.max_rank)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min-rank", b.min_rank, "first rank of the doubling schedule")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--trials", b.trials)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--warmup", b.warmup);
  bench_cmd->add_option("--min-trial-ms", b.min_trial_ms);
  bench_cmd->add_option("--methods", b.methods)->delimiter(',')->check(CLI::IsMember(methods));
  bench_cmd->add_option("--schedule", b.schedule)->check(CLI::IsMember({"mixed", "doubling"}));
  bench_cmd->add_flag("--model", b.model, "emit the operation-count model instead of timings");
  bench_cmd->add_option("--model-step", b.model_step)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (quotient->parsed()) return cmd_quotient(c, out);
    if (autoeq->parsed()) return cmd_autoeq(c, out);
    if (orbits->parsed()) return cmd_orbits(c, out);
    if (factor->parsed()) return cmd_factor(number, c, out);
    if (bench_cmd->parsed()) return cmd_bench(b, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NonPositiveModulus& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kArityMismatch;
  } catch (const FactorizationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kFactorizationFailure;
  } catch (const CapacityExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapacityExceeded;
  }
  return kParseError;
}

}  // namespace abelian::cli
