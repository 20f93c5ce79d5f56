#include "racahlab/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "racahlab/errors.hpp"
#include "racahlab/expansion.hpp"
#include "racahlab/panels.hpp"
#include "racahlab/report.hpp"
#include "racahlab/suites.hpp"
#include "racahlab/wilson_functions.hpp"

namespace racahlab {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::VerifyAlgebra: return "verify-algebra";
    case Command::VerifyOrthogonality: return "verify-orthogonality";
    case Command::Expand: return "expand";
    case Command::Wilson: return "wilson";
    case Command::WilsonFn: return "wilsonfn";
    case Command::ReportAll: return "report-all";
  }
  return "?";
}

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(std::string("invalid integer for ") + what);
  return v;
}

std::map<std::string, std::string> config_map(const RunConfig& c) {
  std::map<std::string, std::string> m;
  m["seed"] = std::to_string(c.seed);
  m["grid_order"] = std::to_string(c.grid_order);
  if (c.k) m["k"] = c.k->str();
  if (c.w) {
    std::ostringstream os;
    os << format_double(c.w->alpha) << ',' << format_double(c.w->beta) << ',' << format_double(c.w->gamma) << ','
       << format_double(c.w->delta);
    m["abgd"] = os.str();
  }
  if (c.N) m["N"] = std::to_string(*c.N);
  if (c.n) m["n"] = format_double(*c.n);
  if (c.q) m["q"] = std::to_string(*c.q);
  if (c.t) m["t"] = format_double(*c.t);
  return m;
}

std::string render(const Report& r, const RunConfig& c) {
  switch (c.format) {
    case OutputFormat::Json: return to_json(r, c.metadata);
    case OutputFormat::Csv: return to_csv(r);
    case OutputFormat::Text: return to_text(r);
  }
  return {};
}

template <class F>
void timed(Report& r, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Check> cs = f();
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (auto& ch : cs) ch.seconds = dt;
  r.append(cs);
}

void emit(const std::string& text, const RunConfig& c, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + c.output);
  f << text;
}

double eval_value(const RunConfig& c, std::string& label) {
  switch (c.eval_target) {
    case EvalTarget::Wilson: {
      label = "phi";
      double n = *c.n;
      if (n == std::round(n)) return phi_n(static_cast<int>(n), *c.w, *c.t);
      return phi_general(n, *c.w, *c.t).value;
    }
    case EvalTarget::WilsonFunction: label = "wilson_function"; return wilson_function(*c.n, *c.w, *c.t).value;
    case EvalTarget::Psi:
    case EvalTarget::Lambda: {
      BasisIndex idx = BasisIndex::make(*c.N, static_cast<int>(*c.n));
      SpherePoint p = SpherePoint::from_xy(*c.x, *c.y);
      label = c.eval_target == EvalTarget::Psi ? "psi" : "lambda";
      return c.eval_target == EvalTarget::Psi ? psi(idx, *c.k, p) : lambda_basis(idx, *c.k, p);
    }
  }
  return 0;
}

int run_eval(const RunConfig& c, std::ostream& out) {
  std::string label;
  double v = eval_value(c, label);
  std::string text;
  if (c.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "eval";
    j["config"] = config_map(c);
    j["quantity"] = label;
    j["value"] = v;
    text = j.dump(2) + "\n";
  } else if (c.format == OutputFormat::Csv) {
    text = "quantity,value\n" + label + "," + format_double(v) + "\n";
  } else {
    text = format_double(v) + "\n";
  }
  emit(text, c, out);
  return 0;
}

int run_expand(const RunConfig& c, std::ostream& out) {
  QuadratureGrid grid = build_grid(*c.k, c.grid_order);
  auto rows = coefficient_table(*c.N, *c.k, grid);
  double worst = 0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.rel_error));
  Check chk = make_check("expansion.closed_form", "R'^n_q = Xi'(n,N,q) / |Psi'_{N-n,n}|^2", 1e-6, worst,
                         "max over " + std::to_string(rows.size()) + " coefficients");
  std::string text;
  if (c.format == OutputFormat::Csv) {
    text = coefficient_table_csv(rows);
  } else if (c.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "expand";
    j["config"] = config_map(c);
    j["max_rel_error"] = worst;
    j["status"] = to_string(chk.status);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"N", r.N}, {"n", r.n}, {"q", r.q}, {"value", r.value}, {"closed_form", r.closed_form},
                           {"rel_error", r.rel_error}});
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    char buf[160];
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%2d %2d %2d  % .15e  % .15e  %.2e\n", r.N, r.n, r.q, r.value, r.closed_form,
                    r.rel_error);
      os << buf;
    }
    os << to_string(chk.status) << " max rel_error " << format_double(worst) << "\n";
    text = os.str();
  }
  emit(text, c, out);
  return chk.pass() ? 0 : 1;
}

}  // namespace

int resolve_grid_order(std::optional<int> flag, const char* env_value) {
  int v = kDefaultGridOrder;
  if (flag) {
    v = *flag;
  } else if (env_value && *env_value) {
    v = parse_int(env_value, "RACAHLAB_GRID_ORDER");
  }
  if (v < 2 || v > 1000) throw ConfigError("grid order must lie in [2, 1000]");
  return v;
}

std::vector<double> parse_list(const std::string& s, std::size_t expected) {
  std::vector<double> out;
  const char* p = s.data();
  const char* end = p + s.size();
  while (p < end) {
    double v = 0;
    auto [q, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || !std::isfinite(v)) throw ConfigError("invalid number list: " + s);
    out.push_back(v);
    p = q;
    if (p < end) {
      if (*p != ',') throw ConfigError("invalid number list: " + s);
      ++p;
      if (p == end) throw ConfigError("invalid number list: " + s);
    }
  }
  if (out.size() != expected)
    throw ConfigError("expected " + std::to_string(expected) + " comma-separated values, got " + s);
  return out;
}

void validate(const RunConfig& c) {
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw ConfigError(std::string(command_name(c.command)) + ": " + msg);
  };
  if (c.N) need(*c.N >= 0 && *c.N <= 60, "--N must lie in [0, 60]");
  if (c.n) need(std::isfinite(*c.n), "--n must be finite");
  if (c.t) need(std::isfinite(*c.t), "--t must be finite");
  switch (c.command) {
    case Command::Eval:
      if (c.eval_target == EvalTarget::Wilson || c.eval_target == EvalTarget::WilsonFunction) {
        need(c.w.has_value() && c.n.has_value() && c.t.has_value(), "--abgd, --n and --t are required");
        if (c.eval_target == EvalTarget::Wilson) {
          bool integer = *c.n == std::round(*c.n);
          need(!integer || *c.n >= 0, "--n must be nonnegative for the polynomial");
          need(integer || in_convergence_window(*c.w), "non-integer --n needs parameters in the convergence window");
        } else {
          need(in_convergence_window(*c.w), "parameters outside the convergence window");
          need(std::abs(*c.n - std::round(*c.n)) >= kPoleGuard, "--n too close to an integer");
        }
      } else {
        need(c.k.has_value() && c.N.has_value() && c.n.has_value() && c.x.has_value() && c.y.has_value(),
             "--k, --N, --n, --x and --y are required");
        need(*c.n == std::round(*c.n) && *c.n >= 0 && *c.n <= *c.N, "--n must be an integer in [0, N]");
        need(std::abs(*c.x) < 1 && std::abs(*c.y) < 1, "--x and --y must lie in (-1, 1)");
      }
      break;
    case Command::Expand:
      need(c.k.has_value() && c.N.has_value(), "--k and --N are required");
      need(*c.N <= 12, "--N must be at most 12");
      break;
    case Command::VerifyAlgebra:
    case Command::VerifyOrthogonality:
      need(!c.k.has_value() || c.N.has_value(), "--N is required with --k");
      break;
    case Command::Wilson:
      if (c.w) need(in_wilson_sum_window(*c.w), "parameters outside the documented summation window");
      break;
    case Command::WilsonFn:
      if (c.w || c.n || c.t) {
        need(c.w.has_value() && c.n.has_value() && c.t.has_value(), "--abgd, --n and --t go together");
        need(in_convergence_window(*c.w), "parameters outside the convergence window");
        need(*c.t != 0 && std::abs(std::abs(*c.t) - 0.5) > 1e-12, "--t must avoid 0 and +-1/2");
      }
      break;
    case Command::ReportAll: break;
  }
}

int run(const RunConfig& c, std::ostream& out) {
  validate(c);
  if (c.command == Command::Eval) return run_eval(c, out);
  if (c.command == Command::Expand) return run_expand(c, out);
  SuiteOptions o;
  o.seed = c.seed;
  o.grid_order = c.grid_order;
  Report r;
  r.command = command_name(c.command);
  r.config = config_map(c);
  switch (c.command) {
    case Command::VerifyAlgebra:
      if (c.k) {
        timed(r, [&] { return algebra_checks(*c.N, *c.k); });
      } else {
        timed(r, [&] { return suite_closure(o); });
        timed(r, [&] { return suite_casimir(o); });
      }
      break;
    case Command::VerifyOrthogonality:
      if (c.k) {
        timed(r, [&] { return orthogonality_checks(*c.N, *c.k, c.grid_order); });
      } else {
        timed(r, [&] { return suite_expansion(o); });
        timed(r, [&] { return suite_racah(o); });
      }
      break;
    case Command::Wilson:
      if (c.w) {
        timed(r, [&] { return wilson_sum_checks(*c.w); });
      } else {
        timed(r, [&] { return suite_wilson_sum(o); });
      }
      break;
    case Command::WilsonFn:
      if (c.w) {
        timed(r, [&] { return wilson_function_checks(*c.n, *c.w, *c.t); });
      } else {
        timed(r, [&] { return suite_wilson_functions(o); });
      }
      break;
    case Command::ReportAll: r.append(run_all_suites(o)); break;
    default: break;
  }
  emit(render(r, c), c, out);
  return r.all_pass() ? 0 : 1;
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of the generic 2-sphere system and its Racah/Wilson structure"};
  app.require_subcommand(1);

  std::string k_str, abgd_str, format_str, output;
  int N = -1, q = -1;
  double n = 0, t = 0, x = 0, y = 0;
  int grid = 0;
  std::uint64_t seed = kDefaultSeed;
  bool no_metadata = false;
  bool eval_wilson = false, eval_wf = false, eval_psi = false, eval_lambda = false;

  auto common = [&](CLI::App* s) {
    s->add_option("--seed", seed, "seed for random parameter panels");
    s->add_option("--grid-order", grid, "Gauss-Jacobi order per axis (env RACAHLAB_GRID_ORDER)");
    s->add_option("--output,-o", output, "output file (default stdout)");
    s->add_option("--format", format_str, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_flag("--no-metadata", no_metadata, "omit the metadata block from JSON");
  };
  auto* eval = app.add_subcommand("eval", "evaluate a single function value");
  auto* va = app.add_subcommand("verify-algebra", "closure and Casimir identities");
  auto* vo = app.add_subcommand("verify-orthogonality", "interbasis coefficients and Racah orthogonality");
  auto* ex = app.add_subcommand("expand", "interbasis expansion coefficient table");
  auto* wi = app.add_subcommand("wilson", "truncated infinite Wilson orthogonality sum");
  auto* wf = app.add_subcommand("wilsonfn", "Wilson-function residual identities");
  auto* ra = app.add_subcommand("report-all", "every verification suite");
  for (auto* s : {eval, va, vo, ex, wi, wf, ra}) common(s);
  for (auto* s : {eval, va, vo, ex}) {
    s->add_option("--k", k_str, "k1,k2,k3");
    s->add_option("--N", N, "total degree");
  }
  for (auto* s : {eval, wi, wf}) s->add_option("--abgd", abgd_str, "alpha,beta,gamma,delta");
  for (auto* s : {eval, wf}) {
    s->add_option("--n", n, "degree");
    s->add_option("--t", t, "spectral variable");
  }
  eval->add_option("--q", q, "lattice index (unused by the current targets)");
  eval->add_option("--x", x, "x = cos 2 phi");
  eval->add_option("--y", y, "y = cos 2 theta");
  auto* f1 = eval->add_flag("--wilson", eval_wilson, "Phi_n(t)");
  auto* f2 = eval->add_flag("--wilsonfn", eval_wf, "Wilson function");
  auto* f3 = eval->add_flag("--psi", eval_psi, "Psi_{N-n,n}(x,y)");
  auto* f4 = eval->add_flag("--lambda", eval_lambda, "Lambda_{N-n,n}(x,y)");
  f1->excludes(f2)->excludes(f3)->excludes(f4);
  f2->excludes(f3)->excludes(f4);
  f3->excludes(f4);

  auto given = [](CLI::App* s, const std::string& name) {
    const CLI::Option* o = s->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig c;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const std::pair<const char*, Command> table[] = {
        {"eval", Command::Eval},   {"verify-algebra", Command::VerifyAlgebra},
        {"verify-orthogonality", Command::VerifyOrthogonality}, {"expand", Command::Expand},
        {"wilson", Command::Wilson}, {"wilsonfn", Command::WilsonFn}, {"report-all", Command::ReportAll}};
    for (const auto& [s, cmd] : table)
      if (name == s) c.command = cmd;
    c.seed = seed;
    c.output = output;
    c.metadata = !no_metadata;
    c.grid_order = resolve_grid_order(given(sub, "--grid-order") ? std::optional<int>(grid) : std::nullopt,
                                      std::getenv("RACAHLAB_GRID_ORDER"));
    if (given(sub, "--k")) {
      auto v = parse_list(k_str, 3);
      try {
        c.k = Params3::make(v[0], v[1], v[2]);
      } catch (const ParameterError& e) {
        throw ConfigError(e.what());
      }
    }
    if (given(sub, "--abgd")) {
      auto v = parse_list(abgd_str, 4);
      c.w = WilsonParams::make(v[0], v[1], v[2], v[3]);
    }
    if (given(sub, "--N")) c.N = N;
    if (given(sub, "--n")) c.n = n;
    if (given(sub, "--t")) c.t = t;
    if (given(sub, "--q")) c.q = q;
    if (given(sub, "--x")) c.x = x;
    if (given(sub, "--y")) c.y = y;
    if (eval_wf) c.eval_target = EvalTarget::WilsonFunction;
    if (eval_psi) c.eval_target = EvalTarget::Psi;
    if (eval_lambda) c.eval_target = EvalTarget::Lambda;
    if (format_str == "json") c.format = OutputFormat::Json;
    else if (format_str == "csv") c.format = OutputFormat::Csv;
    else if (format_str == "text") c.format = OutputFormat::Text;
    else c.format = c.command == Command::Eval ? OutputFormat::Text : OutputFormat::Json;
    return run(c, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace racahlab
