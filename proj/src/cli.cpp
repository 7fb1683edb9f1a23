#include "dirinv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirinv/errors.hpp"
#include "dirinv/factor_sums.hpp"
#include "dirinv/families.hpp"
#include "dirinv/inverse.hpp"
#include "dirinv/random_functions.hpp"
#include "dirinv/report_io.hpp"
#include "dirinv/roots.hpp"
#include "dirinv/zeta.hpp"

namespace dirinv::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ArithmeticFunction read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table file '" + path + "'");
  std::map<std::uint64_t, Rational> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string n_text, value_text, extra;
    if (!(fields >> n_text)) continue;
    if (!(fields >> value_text) || (fields >> extra)) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected 'n value'");
    }
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(n_text, &used);
      if (used != n_text.size() || n == 0) throw std::invalid_argument(n_text);
    } catch (const std::exception&) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": bad index '" + n_text + "'");
    }
    if (!entries.emplace(n, parse_rational(value_text)).second) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": duplicate n = " + n_text);
    }
  }
  const auto one = entries.find(1);
  if (one == entries.end() || one->second != 1) throw UsageError(path + ": the line '1 1' is required");
  const std::uint64_t ceiling = entries.rbegin()->first;
  if (ceiling > 100'000'000) throw UsageError(path + ": indices above 10^8 are not supported");
  std::vector<Rational> values(ceiling + 1);
  for (const auto& [n, v] : entries) values[n] = v;
  return ArithmeticFunction::from_table(path, std::move(values));
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like lo..hi");
  try {
    std::size_t a = 0, b = 0;
    const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
    const std::uint64_t lo = std::stoull(lo_text, &a), hi = std::stoull(hi_text, &b);
    if (a != lo_text.size() || b != hi_text.size()) throw std::invalid_argument(text);
    if (lo < 2 || hi < lo) throw UsageError("range must satisfy 2 <= lo <= hi");
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("range must look like lo..hi, got '" + text + "'");
  }
}

std::string format_double(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string join(std::span<const std::uint64_t> parts, char sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(parts[i]);
  }
  return s;
}

Table exponent_table(const GrowthExponent& g) {
  return {{"equation", "value", "lo", "hi", "boundary"},
          {{g.equation, format_double(g.value), format_double(g.lo), format_double(g.hi), g.boundary ? "true" : "false"}},
          {false, true, true, true, true}};
}

struct Options {
  std::string format = "table";
  bool csv = false;
  bool json = false;

  std::uint64_t n = 0;
  unsigned k = 0;
  bool upto = false;
  std::string set = "all2";
  std::string family;
  std::string table_file;
  std::string method = "recursive";
  std::string equation;
  double tol = 1e-9;
  std::string spec;
  bool random = false;
  std::string range;
  std::uint64_t seed = 0;
  std::size_t sample = 0;
  unsigned threads = 0;
  bool unchecked = false;
};

OutputFormat chosen_format(const Options& o) {
  if (o.csv) return OutputFormat::Csv;
  if (o.json) return OutputFormat::Json;
  return parse_output_format(o.format);
}

int cmd_inverse(const Options& o, std::ostream& out) {
  const ArithmeticFunction f = o.table_file.empty() ? parse_family(o.family).function : read_table_file(o.table_file);
  const std::uint64_t lo = o.upto ? 1 : o.n;
  Table t{{"n", "inverse"}, {}, {true, false}};
  if (o.method == "recursive") {
    const InverseTable inv = inverse_recursive(f, o.n);
    for (std::uint64_t m = lo; m <= o.n; ++m) t.rows.push_back({std::to_string(m), to_string(inv[m])});
  } else {
    for (std::uint64_t m = lo; m <= o.n; ++m) {
      Rational v;
      if (m == 1) {
        v = 1;
      } else if (o.method == "sum") {
        v = inverse_sum_formula(f, m);
      } else {
        v = inverse_multiplicative(f, m);
      }
      t.rows.push_back({std::to_string(m), to_string(v)});
    }
  }
  if (!o.upto && t.columns.size() == 2 && chosen_format(o) == OutputFormat::Table) {
    out << t.rows.front()[1] << '\n';
    return kExitOk;
  }
  write_table(out, t, chosen_format(o));
  return kExitOk;
}

int cmd_h(const Options& o, std::ostream& out) {
  const FactorSet set = FactorSet::parse(o.set);
  Table t{{"n", "H"}, {}, {true, true}};
  if (o.upto) {
    const auto table = ordered_factorization_table(o.n, set);
    for (std::uint64_t m = 1; m <= o.n; ++m) t.rows.push_back({std::to_string(m), std::to_string(table[m])});
  } else {
    const std::uint64_t h = count_ordered_factorizations(o.n, set);
    if (chosen_format(o) == OutputFormat::Table) {
      out << h << '\n';
      return kExitOk;
    }
    t.rows.push_back({std::to_string(o.n), std::to_string(h)});
  }
  write_table(out, t, chosen_format(o));
  return kExitOk;
}

int cmd_hk(const Options& o, std::ostream& out) {
  const std::uint64_t h = count_ordered_factorizations_k(o.n, o.k, FactorSet::parse(o.set));
  if (chosen_format(o) == OutputFormat::Table) {
    out << h << '\n';
    return kExitOk;
  }
  write_table(out, {{"n", "k", "H_k"}, {{std::to_string(o.n), std::to_string(o.k), std::to_string(h)}}, {true, true, true}},
              chosen_format(o));
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const FactorSet set = FactorSet::parse(o.set);
  const std::optional<unsigned> k = o.k ? std::optional<unsigned>(o.k) : std::nullopt;
  const OutputFormat fmt = chosen_format(o);
  bool first = true;
  if (fmt == OutputFormat::Csv) out << "k,factors\n";
  if (fmt == OutputFormat::Json) out << "[";
  for_each_ordered_factorization(o.n, set, k, [&](std::span<const std::uint64_t> tuple) {
    switch (fmt) {
      case OutputFormat::Table:
        out << '(' << join(tuple, ',') << ")\n";
        break;
      case OutputFormat::Csv:
        out << tuple.size() << ',' << join(tuple, ' ') << '\n';
        break;
      case OutputFormat::Json:
        out << (first ? "\n  [" : ",\n  [") << join(tuple, ',') << ']';
        break;
    }
    first = false;
  });
  if (fmt == OutputFormat::Json) out << (first ? "]\n" : "\n]\n");
  return kExitOk;
}

int cmd_dminmax(const Options& o, std::ostream& out) {
  if (o.n < 2 || o.k < 1) throw UsageError("dminmax needs n >= 2 and k >= 1");
  const FactorSumExtrema e = factor_sum_extrema(o.n, o.k);
  Table t{{"quantity", "value"}, {}, {false, false}};
  const auto show = [](const std::optional<std::uint64_t>& v, const char* empty) {
    return v ? std::to_string(*v) : std::string(empty);
  };
  t.rows.push_back({"d_min", show(e.min, "inf")});
  t.rows.push_back({"d_max", show(e.max, "-inf")});
  t.rows.push_back({"k n^(1/k)", format_double(min_factor_sum_lower_bound(o.n, o.k))});
  t.rows.push_back({"e ln n", format_double(min_factor_sum_log_bound(o.n))});
  t.rows.push_back({"2(k-1) + n/2^(k-1)", format_double(max_factor_sum_upper_bound(o.n, o.k))});
  if (e.feasible()) {
    t.rows.push_back({"d_min >= k n^(1/k)", meets_min_power_bound(*e.min, o.n, o.k) ? "yes" : "no"});
    const auto cmp = compare_to_max_bound(*e.max, o.n, o.k);
    t.rows.push_back({"d_max vs bound", cmp < 0 ? "below" : cmp == 0 ? "equal" : "above"});
  }
  write_table(out, t, chosen_format(o));
  return kExitOk;
}

int cmd_rho(const Options& o, std::ostream& out) {
  write_table(out, exponent_table(growth_exponent(FactorSet::parse(o.set))), chosen_format(o));
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  SolveOptions opts;
  opts.tolerance = o.tol;
  opts.eval_tolerance = std::min(opts.eval_tolerance, o.tol / 100);
  const GrowthExponent g = solve(parse_equation(o.equation), opts);
  if (chosen_format(o) == OutputFormat::Table) {
    out << format_double(g.value) << "  [" << format_double(g.lo) << ", " << format_double(g.hi) << "]"
        << (g.boundary ? "  boundary" : "") << '\n';
    return kExitOk;
  }
  write_table(out, exponent_table(g), chosen_format(o));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BoundSpec spec = BoundSpec::parse(o.spec);
  const auto [lo, hi] = parse_range(o.range);
  const ArithmeticFunction f = o.random ? random_function_for(spec, hi, o.seed) : parse_family(o.family).function;
  SweepOptions opts;
  opts.seed = o.seed;
  opts.threads = o.threads;
  opts.check_hypothesis = !o.unchecked;
  if (o.sample) {
    opts.mode = SweepMode::RandomSample;
    opts.sample_size = o.sample;
  }
  const SweepResult result = verify_sweep(spec, f, lo, hi, opts);
  write_sweep(out, result, chosen_format(o));
  return result.summary.failures == 0 ? kExitOk : kExitBoundFailure;
}

int cmd_families(const Options& o, std::ostream& out) {
  Table t{{"name", "parameters", "definition"}, {}, {false, false, false}};
  for (const auto& info : list_families()) t.rows.push_back({info.name, info.parameters, info.definition});
  write_table(out, t, chosen_format(o));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dirichlet inverses, ordered factorizations and growth bounds", "dirinv"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  auto* format = app.add_option("--format", o.format, "table, csv or json")
                     ->check(CLI::IsMember({"table", "csv", "json"}));
  auto* csv = app.add_flag("--csv", o.csv, "same as --format csv");
  auto* json = app.add_flag("--json", o.json, "same as --format json");
  format->excludes(csv)->excludes(json);
  csv->excludes(json);

  auto* inverse = app.add_subcommand("inverse", "exact f^{-1}(n)");
  auto* fam = inverse->add_option("--family", o.family, "builtin family, see 'families'");
  auto* tab = inverse->add_option("--table", o.table_file, "file of 'n value' lines");
  fam->excludes(tab);
  inverse->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  inverse->add_flag("--upto", o.upto, "print 1..n");
  inverse->add_option("--method", o.method)->check(CLI::IsMember({"recursive", "sum", "multiplicative"}));

  auto* h = app.add_subcommand("h", "H(n, P)");
  h->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  h->add_option("--set", o.set, "all2, odd3 or list:a,b,...");
  h->add_flag("--upto", o.upto);

  auto* hk = app.add_subcommand("hk", "H_k(n, P)");
  hk->add_option("--n", o.n)->required()->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  hk->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  hk->add_option("--set", o.set);

  auto* en = app.add_subcommand("enumerate", "ordered factorizations in lexicographic order");
  en->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  en->add_option("--k", o.k)->check(CLI::PositiveNumber);
  en->add_option("--set", o.set);

  auto* dm = app.add_subcommand("dminmax", "extremal factor sums");
  dm->add_option("--n", o.n)->required();
  dm->add_option("--k", o.k)->required();

  auto* rho = app.add_subcommand("rho", "root of zeta_P(s) = 1");
  rho->add_option("--set", o.set)->required();

  auto* sol = app.add_subcommand("solve", "root of a zeta-type equation");
  sol->add_option("--equation", o.equation, "zeta2|odd2|varsigma:C|oddsigma:C|upsilon:A,c|trunclow:N,C|finite:N,C")
      ->required();
  sol->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "compare |f^{-1}(n)| with a bound");
  ver->add_option("--spec", o.spec, "kind:C=..,g=..,A=..,c=..,N=..")->required();
  auto* vfam = ver->add_option("--family", o.family);
  auto* vrand = ver->add_flag("--random", o.random, "seeded random function meeting the hypothesis");
  vfam->excludes(vrand);
  ver->add_option("--range", o.range, "lo..hi")->required();
  ver->add_option("--seed", o.seed);
  ver->add_option("--sample", o.sample, "check this many random n instead of all");
  ver->add_option("--threads", o.threads, "defaults to DIRINV_THREADS");
  ver->add_flag("--unchecked", o.unchecked, "skip the hypothesis check; failures are then expected");

  auto* families = app.add_subcommand("families", "builtin extremal families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (inverse->parsed()) {
      if (o.family.empty() == o.table_file.empty()) throw UsageError("inverse needs exactly one of --family, --table");
      return cmd_inverse(o, out);
    }
    if (h->parsed()) return cmd_h(o, out);
    if (hk->parsed()) return cmd_hk(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (dm->parsed()) return cmd_dminmax(o, out);
    if (rho->parsed()) return cmd_rho(o, out);
    if (sol->parsed()) return cmd_solve(o, out);
    if (ver->parsed()) {
      if (o.family.empty() != o.random) throw UsageError("verify needs exactly one of --family, --random");
      return cmd_verify(o, out);
    }
    if (families->parsed()) return cmd_families(o, out);
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const CountOverflowError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBoundFailure;
  }
  return kExitUsage;
}

}  // namespace dirinv::cli
