// qcdist: evaluate distortion functions, run the inequality suites, emit tables.
//
// Exit codes: 0 all checks pass, 1 an asserted check failed, 2 usage or
// domain error.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "qcdist/qcdist.hpp"

namespace {

using namespace qcdist;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using EvalResult = std::variant<double, Enclosure>;

struct EvalEntry {
  std::string usage;
  std::size_t arity;  // 0: variadic
  std::function<EvalResult(const std::vector<double>&)> fn;
};

Dimension dim_arg(double v) {
  if (v != std::floor(v)) throw domain_error("dimension must be an integer, got " + format_short(v));
  return Dimension(static_cast<int>(v));
}

BallPoint point_arg(const std::vector<double>& a, std::size_t from, std::size_t n) {
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = a[from + i];
  return BallPoint(std::move(v));
}

const std::map<std::string, EvalEntry>& eval_registry() {
  static const std::map<std::string, EvalEntry> reg{
      {"K", {"K r", 1, [](auto& a) -> EvalResult { return complete_K(UnitRadius(a[0]).value()); }}},
      {"E", {"E r", 1, [](auto& a) -> EvalResult { return complete_E(UnitRadius(a[0]).value()); }}},
      {"quadrature_K", {"quadrature_K r", 1, [](auto& a) -> EvalResult { return quadrature_K(a[0]); }}},
      {"agm", {"agm a b", 2, [](auto& a) -> EvalResult { return agm(a[0], a[1]); }}},
      {"mu", {"mu r", 1, [](auto& a) -> EvalResult { return mu(a[0]); }}},
      {"mu_inv", {"mu_inv y", 1, [](auto& a) -> EvalResult { return mu_inv(a[0]); }}},
      {"phi_K", {"phi_K K r", 2, [](auto& a) -> EvalResult { return phi_K(a[0], a[1]); }}},
      {"phi_Kn", {"phi_Kn K n r", 3, [](auto& a) -> EvalResult { return phi_Kn(a[0], dim_arg(a[1]), a[2]); }}},
      {"gamma_2", {"gamma_2 s", 1, [](auto& a) -> EvalResult { return gamma_2(a[0]); }}},
      {"gamma_n", {"gamma_n n s", 2, [](auto& a) -> EvalResult { return gamma_n(dim_arg(a[0]), a[1]); }}},
      {"tau_n", {"tau_n n t", 2, [](auto& a) -> EvalResult { return tau_n(dim_arg(a[0]), a[1]); }}},
      {"eta", {"eta K n t", 3, [](auto& a) -> EvalResult { return eta_Kn(a[0], dim_arg(a[1]), a[2]); }}},
      {"eta_Kn", {"eta_Kn K n t", 3, [](auto& a) -> EvalResult { return eta_Kn(a[0], dim_arg(a[1]), a[2]); }}},
      {"lambda", {"lambda K", 1, [](auto& a) -> EvalResult { return eta_K2(DilatationK(a[0]).value(), 1.0); }}},
      {"c1", {"c1 K", 1, [](auto& a) -> EvalResult { return krzyz_c1(DilatationK(a[0])); }}},
      {"main_bound",
       {"main_bound K n", 2, [](auto& a) -> EvalResult { return main_theorem_bound(DilatationK(a[0]), dim_arg(a[1])); }}},
      {"mycor",
       {"mycor K n", 2,
        [](auto& a) -> EvalResult {
          const MycorBound m = mycor_bound(DilatationK(a[0]), dim_arg(a[1]));
          const auto best = m.best();
          if (best && best->value <= m.chain.value) return best->value;
          return m.chain.value;
        }}},
      {"delta",
       {"delta K n", 2,
        [](auto& a) -> EvalResult {
          return radial_stretch_delta(RadialStretching::from_dilatation(DilatationK(a[0]), dim_arg(a[1])));
        }}},
      {"corollary", {"corollary K x", 2, [](auto& a) -> EvalResult { return corollary_bound(DilatationK(a[0]), a[1]); }}},
      {"rho",
       {"rho x_1..x_n y_1..y_n", 0,
        [](auto& a) -> EvalResult {
          if (a.size() < 4 || a.size() % 2 != 0)
            throw usage_error("rho needs the coordinates of two points of equal dimension n >= 2");
          const std::size_t n = a.size() / 2;
          return hyperbolic_distance(point_arg(a, 0, n), point_arg(a, n, n));
        }}},
  };
  return reg;
}

std::string render(const EvalResult& r) {
  if (const double* v = std::get_if<double>(&r)) return format_short(*v);
  const Enclosure& e = std::get<Enclosure>(r);
  if (e.is_exact()) return format_short(e.lower);
  return format_short(e.lower) + ".." + format_short(e.upper) + " [bound-only]";
}

std::string registry_listing() {
  std::ostringstream os;
  os << "available functions:";
  for (const auto& [name, entry] : eval_registry()) os << "\n  " << entry.usage;
  return os.str();
}

int cmd_eval(const std::string& name, const std::vector<std::string>& raw) {
  const auto& reg = eval_registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw usage_error("unknown function '" + name + "'\n" + registry_listing());
  std::vector<double> args;
  for (const auto& s : raw) args.push_back(detail::parse_double(s, "argument"));
  if (it->second.arity != 0 && args.size() != it->second.arity)
    throw usage_error("usage: eval " + it->second.usage);
  std::cout << render(it->second.fn(args)) << '\n';
  return kExitOk;
}

/// Writes reports as text lines or line-JSON; returns the exit code.
int emit_reports(const std::vector<CheckReport>& reports, bool json, std::ostream& os) {
  const std::size_t failures = count_failures(reports);
  for (const auto& c : reports) {
    if (json) os << to_json(c).dump() << '\n'; else os << to_text(c) << '\n';
  }
  if (!json) {
    const auto asserted = std::count_if(reports.begin(), reports.end(), [](const auto& c) { return c.asserted(); });
    os << "# " << reports.size() << " checks, " << asserted << " asserted, " << failures << " failed\n";
  }
  return failures == 0 ? kExitOk : kExitFail;
}

/// Output stream that is stdout unless a path is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct VerifyArgs {
  std::vector<std::string> suites;
  bool json = false;
  bool list = false;
  std::string K;
  std::string spacing = "linear";
  std::uint64_t seed = SuiteOptions{}.seed;
};

int cmd_verify(const VerifyArgs& v) {
  if (v.list) {
    for (const auto& s : all_suites()) std::cout << s.name << "  " << s.description << '\n';
    return kExitOk;
  }
  SuiteOptions opt;
  opt.seed = v.seed;
  if (!v.K.empty()) opt.K_grid = parse_grid("K", v.K, parse_spacing(v.spacing));
  std::vector<const Suite*> chosen;
  if (v.suites.empty()) {
    for (const auto& s : all_suites()) chosen.push_back(&s);
  } else {
    for (const auto& name : v.suites) {
      const Suite* s = find_suite(name);
      if (!s) {
        std::string known;
        for (const auto& t : all_suites()) known += " " + t.name;
        throw usage_error("unknown suite '" + name + "'; available:" + known);
      }
      chosen.push_back(s);
    }
  }
  std::vector<CheckReport> reports;
  for (const Suite* s : chosen) {
    auto r = s->run(opt);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  return emit_reports(reports, v.json, std::cout);
}

struct TableArgs {
  std::string which;
  std::string K;
  std::string r;
  std::string spacing = "linear";
  int n = 2;
  double m = 3.0;
  std::string format = "csv";
  std::string out;
};

Table table_c1(const GridSpec& g) {
  const auto ks = g.points();
  Table t{{"K", "c1", "c1_lower", "c1_upper"}, {}};
  t.rows = parallel_map(ks.size(), [&](std::size_t i) {
    const KrzyzSandwich s = krzyz_sandwich(DilatationK(ks[i]));
    return std::vector<double>{ks[i], s.value, s.lower, s.upper};
  });
  return t;
}

Table table_bounds(const GridSpec& g, Dimension dim) {
  const auto ks = g.points();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Table t{{"K", "c1", "c1_lower", "c1_upper", "eta_K2_1", "main_bound_n2", "main_bound_lower", "main_bound_upper",
           "mycor_general", "mycor_planar", "mycor_chain", "delta_radial"},
          {}};
  t.rows = parallel_map(ks.size(), [&](std::size_t i) {
    const DilatationK K(ks[i]);
    const KrzyzSandwich s = krzyz_sandwich(K);
    const Enclosure main = main_theorem_bound(K, dim);
    const MycorBound m = mycor_bound(K, dim);
    return std::vector<double>{ks[i],
                               s.value,
                               s.lower,
                               s.upper,
                               eta_K2(ks[i], 1.0),
                               main_theorem_bound(K, Dimension(2)).upper,
                               main.lower,
                               main.upper,
                               m.general ? m.general->value : nan,
                               m.planar ? m.planar->value : nan,
                               m.chain.value,
                               radial_stretch_delta(RadialStretching::from_dilatation(K, dim))};
  });
  return t;
}

Table table_mn(double m, double n) {
  const MNParams p(m, n);
  const IterationTrace tr = iterate_a(p);
  Table t{{"k", "a_k", "p_a_k", "q_a_k"}, {}};
  for (std::size_t k = 0; k < tr.sequence.size(); ++k) {
    const double a = tr.sequence[k];
    t.rows.push_back({static_cast<double>(k), a, p_func(p, a), q_func(p, a)});
  }
  return t;
}

Table table_mu(const GridSpec& g) {
  const auto rs = g.points();
  Table t{{"r", "mu", "mu_complement", "K", "E"}, {}};
  t.rows = parallel_map(rs.size(), [&](std::size_t i) {
    const double r = rs[i];
    return std::vector<double>{r, mu(r), mu(detail::complement(r)), complete_K(r), complete_E(r)};
  });
  return t;
}

Table table_phi(const GridSpec& kg, const GridSpec& rg) {
  std::vector<std::pair<double, double>> pts;
  for (double k : kg.points())
    for (double r : rg.points()) pts.emplace_back(k, r);
  Table t{{"K", "r", "phi_K", "phi_inv_K", "schwarz_bound"}, {}};
  t.rows = parallel_map(pts.size(), [&](std::size_t i) {
    const auto [k, r] = pts[i];
    const double sb = k >= 1.0 ? corollary_bound(DilatationK(k), r) : std::numeric_limits<double>::quiet_NaN();
    return std::vector<double>{k, r, phi_K(k, r), phi_K(1.0 / k, r), sb};
  });
  return t;
}

int cmd_table(const TableArgs& a) {
  if (a.format != "csv" && a.format != "json") throw usage_error("format must be csv or json");
  const Spacing sp = parse_spacing(a.spacing);
  auto grid = [&](const std::string& name, const std::string& text, const char* fallback) {
    return parse_grid(name, text.empty() ? fallback : text, sp);
  };
  Table t;
  if (a.which == "c1") {
    t = table_c1(grid("K", a.K, "1.01:5:50"));
  } else if (a.which == "bounds") {
    t = table_bounds(grid("K", a.K, "1:17:33"), Dimension(a.n));
  } else if (a.which == "mn-lemma") {
    t = table_mn(a.m, a.n);
  } else if (a.which == "mu") {
    t = table_mu(grid("r", a.r, "0.01:0.99:99"));
  } else if (a.which == "phi") {
    t = table_phi(grid("K", a.K, "1:5:5"), grid("r", a.r, "0.05:0.95:19"));
  } else {
    throw usage_error("unknown table '" + a.which + "'; available: c1 bounds mn-lemma mu phi");
  }
  Output out(a.out);
  if (a.format == "csv") t.write_csv(out.stream()); else t.write_json_lines(out.stream());
  return kExitOk;
}

struct MnArgs {
  double m = 3.0;
  double n = 2.0;
  int grid = 10000;
  bool json = false;
};

int cmd_mn(const MnArgs& a) {
  const MNParams p(a.m, a.n);
  const auto reports = mn_lemma_checks(p, a.grid);
  if (!a.json) {
    const IterationTrace tr = iterate_a(p);
    std::cout << "# M = " << format_exact(compute_M(p)) << "\n# terms = " << tr.sequence.size()
              << "\n# limit = " << format_exact(tr.limit_estimate) << "\n# cap = " << format_exact(tr.upper_cap)
              << '\n';
    if (const auto a36 = tr.term(36)) std::cout << "# a36 = " << format_exact(*a36) << '\n';
  }
  return emit_reports(reports, a.json, std::cout);
}

struct ScanArgs {
  std::string K = "1:5:9";
  std::string t = "0.1:1:10";
  std::string r = "0.05:0.95:19";
  bool json = false;
  std::string out;
};

int cmd_scan(const ScanArgs& a) {
  const auto kg = parse_grid("K", a.K).points();
  const auto tg = parse_grid("t", a.t).points();
  const auto rg = parse_grid("r", a.r).points();
  if (kg.front() < 1.0) throw domain_error("K grid must lie in [1, inf)");
  if (!(tg.front() > 0.0 && tg.back() <= 1.0)) throw domain_error("t grid must lie in (0, 1]");
  if (!(rg.front() > 0.0 && rg.back() < 1.0)) throw domain_error("r grid must lie in (0, 1)");
  const auto chunks = parallel_map(kg.size(), [&](std::size_t i) { return averaging_conjecture_scan({kg[i]}, tg, rg); });
  std::vector<CheckReport> reports;
  for (const auto& c : chunks) reports.insert(reports.end(), c.begin(), c.end());

  const CheckReport* worst = nullptr;
  for (const auto& c : reports)
    if (!c.asserted() && (!worst || c.margin < worst->margin)) worst = &c;
  Output out(a.out);
  const int rc = emit_reports(reports, a.json, out.stream());
  // keep line-JSON on stdout parseable; the summary then goes to stderr
  std::ostream& summary = !a.out.empty() ? std::cout : a.json ? std::cerr : out.stream();
  if (worst) {
    summary << "# min exploratory margin " << format_exact(worst->margin);
    for (const auto& [k, v] : worst->params) summary << ' ' << k << '=' << format_short(v);
    summary << '\n';
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distortion bounds for quasiconformal maps with identity boundary values"};
  app.require_subcommand(1);

  std::string eval_name;
  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate one function (run 'eval list' for the registry)");
  eval->add_option("function", eval_name, "Function name")->required();
  eval->add_option("args", eval_args, "Numeric arguments");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run inequality suites; exit 0 iff every asserted check passes");
  verify->add_option("--suite", va.suites, "Suite name (repeatable); default: all");
  verify->add_flag("--json", va.json, "One JSON object per line");
  verify->add_flag("--list", va.list, "List suites and exit");
  verify->add_option("--K", va.K, "Override K grid of the K-sweep suites, start:stop:count");
  verify->add_option("--grid", va.spacing, "Spacing of --K: linear|log")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed for sampled point sets")->capture_default_str();

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Emit a table: c1 | bounds | mn-lemma | mu | phi");
  table->add_option("which", ta.which, "Table name")->required();
  table->add_option("--K", ta.K, "K grid start:stop:count (c1: 1.01:5:50, bounds: 1:17:33, phi: 1:5:5)");
  table->add_option("--r", ta.r, "r grid start:stop:count (mu: 0.01:0.99:99, phi: 0.05:0.95:19)");
  table->add_option("--grid", ta.spacing, "Grid spacing: linear|log")->capture_default_str();
  table->add_option("--n", ta.n, "Dimension (bounds) or lemma parameter n (mn-lemma)")->capture_default_str();
  table->add_option("--m", ta.m, "Lemma parameter m")->capture_default_str();
  table->add_option("--format", ta.format, "csv|json")->capture_default_str();
  table->add_option("--out", ta.out, "Output path; default stdout");

  MnArgs ma;
  auto* mn = app.add_subcommand("mn-lemma", "Solve the (m, n) lemma and check its claims");
  mn->add_option("--m", ma.m, "Parameter m >= 1")->capture_default_str();
  mn->add_option("--n", ma.n, "Parameter n >= 1")->capture_default_str();
  mn->add_option("--grid-size", ma.grid, "Grid size for the interval check")->capture_default_str();
  mn->add_flag("--json", ma.json, "One JSON object per line");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan-conjecture", "Scan the averaging inequality; only t = 1 is asserted");
  scan->add_option("--K", sa.K, "K grid in [1, inf)")->capture_default_str();
  scan->add_option("--t", sa.t, "t grid in (0, 1]")->capture_default_str();
  scan->add_option("--r", sa.r, "r grid in (0, 1)")->capture_default_str();
  scan->add_flag("--json", sa.json, "One JSON object per line");
  scan->add_option("--out", sa.out, "Output path; default stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      if (eval_name == "list") {
        std::cout << registry_listing() << '\n';
        return kExitOk;
      }
      return cmd_eval(eval_name, eval_args);
    }
    if (*verify) return cmd_verify(va);
    if (*table) return cmd_table(ta);
    if (*mn) return cmd_mn(ma);
    if (*scan) return cmd_scan(sa);
  } catch (const qcdist::usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qcdist::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
