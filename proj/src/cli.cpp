#include "nullforge/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullforge/catalog.hpp"
#include "nullforge/export.hpp"
#include "nullforge/null_repr.hpp"
#include "nullforge/surfaces.hpp"

namespace nullforge {
namespace {

using nlohmann::json;

struct Options {
  std::string example;
  std::optional<double> p, q, r, s;
  std::string P11, P12, P21, P22, k;
  std::optional<double> xi0, C, tol;
  std::string signature;
  std::string interval, interval2;
  std::string grid;
  std::optional<int> samples;
  std::string out, format;
  std::optional<int> project_drop;
  std::string config_path;
  bool alternative = false;

  json config = json::object();

  void load_config() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config file '" + config_path + "'");
    try {
      in >> config;
    } catch (const json::exception& e) {
      throw ConfigError("invalid config JSON: " + std::string(e.what()));
    }
  }

  // Flags override config fields; config fields override defaults.
  double num(const std::optional<double>& flag, const char* key, double def) const {
    if (flag) return *flag;
    if (config.contains(key)) return config.at(key).get<double>();
    return def;
  }
  std::string str(const std::string& flag, const char* key,
                  const std::string& def) const {
    if (!flag.empty()) return flag;
    if (config.contains(key)) return config.at(key).get<std::string>();
    return def;
  }
};

void add_shared_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--example", o.example, "catalog example name");
  cmd->add_option("--p", o.p);
  cmd->add_option("--q", o.q);
  cmd->add_option("--r", o.r);
  cmd->add_option("--s", o.s);
  cmd->add_option("--P11", o.P11, "DSL expression for P11");
  cmd->add_option("--P12", o.P12, "DSL expression for P12");
  cmd->add_option("--P21", o.P21, "DSL expression for P21");
  cmd->add_option("--P22", o.P22, "DSL expression for P22");
  cmd->add_option("--k", o.k, "DSL expression for the gauge function k");
  cmd->add_option("--xi0", o.xi0, "integration anchor (E31)");
  cmd->add_option("--C", o.C, "integration constant (E31)");
  cmd->add_option("--signature", o.signature)
      ->check(CLI::IsMember({"e42", "e31"}));
  cmd->add_option("--interval", o.interval, "sampling interval A:B");
  cmd->add_option("--interval2", o.interval2, "second sampling interval A:B");
  cmd->add_option("--grid", o.grid, "surface grid NxM");
  cmd->add_option("--samples", o.samples, "curve sample count");
  cmd->add_option("--tol", o.tol, "verification tolerance");
  cmd->add_option("--out", o.out, "output path");
  cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "obj", "json"}));
  cmd->add_option("--project-drop", o.project_drop,
                  "coordinate (1-4) to drop when exporting a 4D surface")
      ->check(CLI::Range(1, 4));
  cmd->add_option("--config", o.config_path, "JSON SceneConfig file");
  cmd->add_flag("--alternative", o.alternative, "use the alternative inverse mode");
}

std::pair<double, double> parse_interval(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("interval must be A:B, got '" + text + "'");
  try {
    double a = std::stod(text.substr(0, colon));
    double b = std::stod(text.substr(colon + 1));
    if (a >= b) throw ConfigError("interval must satisfy A < B");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw ConfigError("invalid interval '" + text + "'");
  }
}

std::pair<int, int> parse_grid(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos)
    throw ConfigError("grid must be NxM, got '" + text + "'");
  try {
    int n = std::stoi(text.substr(0, x));
    int m = std::stoi(text.substr(x + 1));
    if (n < 2 || m < 2) throw ConfigError("grid counts must be >= 2");
    return {n, m};
  } catch (const std::invalid_argument&) {
    throw ConfigError("invalid grid '" + text + "'");
  }
}

Params collect_params(const Options& o, const json& src) {
  Params params;
  if (src.contains("params"))
    for (auto& [key, value] : src.at("params").items())
      params[key] = value.get<double>();
  if (o.p) params["p"] = *o.p;
  if (o.q) params["q"] = *o.q;
  if (o.r) params["r"] = *o.r;
  if (o.s) params["s"] = *o.s;
  return params;
}

struct CurveSource {
  Signature sig = Signature::E42;
  std::optional<ReprData42> d42;
  std::optional<ReprData31> d31;
  std::optional<CurveFn> closed;
  std::pair<double, double> interval{-1.0, 1.0};

  // Catalog curves sample their closed form (valid on any interval);
  // inline DSL data goes through the representation maps.
  CurveEvaluator evaluator(double quad_tol) const {
    if (closed) return make_evaluator(*closed);
    if (d42) return make_evaluator(*d42);
    return make_evaluator(*d31, quad_tol);
  }

  CurveFn symbolic() const {
    if (closed) return *closed;
    if (d42) return forward_e42_symbolic(*d42);
    throw ConfigError("this source has no symbolic curve (E31 DSL data)");
  }
};

// A curve source is either a catalog example or inline DSL data.
// `src` is the JSON object holding config-level fields for this curve.
CurveSource resolve_curve(const Options& o, const json& src,
                          const std::string& example_flag) {
  CurveSource out;
  std::string example = example_flag;
  if (example.empty() && src.contains("example"))
    example = src.at("example").get<std::string>();

  auto field = [&](const std::string& flag, const char* key) {
    if (!flag.empty()) return flag;
    if (src.contains(key)) return src.at(key).get<std::string>();
    return std::string();
  };

  if (!example.empty()) {
    CurveExample ex = build_curve_example(example, collect_params(o, src));
    out.sig = ex.signature;
    out.d42 = ex.data42;
    out.d31 = ex.data31;
    out.closed = ex.closed_form;
    out.interval = ex.default_interval;
    return out;
  }

  std::string sig = o.signature.empty() && src.contains("signature")
                        ? src.at("signature").get<std::string>()
                        : o.signature;
  if (sig.empty()) throw ConfigError("need --example or --signature with P DSL");
  std::string p12 = field(o.P12, "P12"), p21 = field(o.P21, "P21"),
              p22 = field(o.P22, "P22");
  if (p12.empty() || p21.empty() || p22.empty())
    throw ConfigError("DSL curve needs --P12, --P21, --P22");
  if (sig == "e42") {
    std::string p11 = field(o.P11, "P11");
    if (p11.empty()) throw ConfigError("E42 DSL curve needs --P11");
    out.sig = Signature::E42;
    out.d42 = ReprData42{{ScalarFn::parse(p11), ScalarFn::parse(p12)},
                         {ScalarFn::parse(p21), ScalarFn::parse(p22)}};
  } else {
    out.sig = Signature::E31;
    double xi0 = o.num(o.xi0, "xi0", 0.0);
    double C = o.num(o.C, "C", 0.0);
    out.d31 = ReprData31{ScalarFn::parse(p12), ScalarFn::parse(p21),
                         ScalarFn::parse(p22), xi0, C};
  }
  return out;
}

struct SurfaceSource {
  CurveSource g1, g2;
  TranslationSurface surface(double quad_tol) const {
    return make_surface(g1.evaluator(quad_tol), g2.evaluator(quad_tol));
  }
};

SurfaceSource resolve_surface(const Options& o) {
  std::string example = o.example;
  if (example.empty() && o.config.contains("example"))
    example = o.config.at("example").get<std::string>();
  if (!example.empty() && is_surface_example(example)) {
    SurfaceExample ex = build_surface_example(example);
    SurfaceSource s;
    s.g1 = {ex.c1.signature, ex.c1.data42, ex.c1.data31, ex.c1.closed_form,
            ex.c1.default_interval};
    s.g2 = {ex.c2.signature, ex.c2.data42, ex.c2.data31, ex.c2.closed_form,
            ex.c2.default_interval};
    return s;
  }
  if (o.config.contains("gamma1") && o.config.contains("gamma2")) {
    return {resolve_curve(o, o.config.at("gamma1"), ""),
            resolve_curve(o, o.config.at("gamma2"), "")};
  }
  if (!example.empty())
    throw ConfigError("'" + example + "' is not a surface example");
  throw ConfigError("surface needs --example f4|f5 or a config with gamma1/gamma2");
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open '" + out_path + "' for writing");
  f << content;
}

json vector_json(const PEVector& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(v[i]);
  return a;
}

int cmd_curve(Options& o) {
  CurveSource src = resolve_curve(o, o.config, o.example);
  auto [a, b] = o.interval.empty() && !o.config.contains("interval")
                    ? src.interval
                    : parse_interval(o.str(o.interval, "interval", ""));
  int n = static_cast<int>(o.num(o.samples ? std::optional<double>(*o.samples)
                                           : std::nullopt,
                                 "samples", 100));
  if (n < 2) throw ConfigError("need at least 2 samples");
  CurveEvaluator ev = src.evaluator(1e-10);

  std::vector<double> xis;
  std::vector<PEVector> pts;
  for (int i = 0; i < n; ++i) {
    double xi = a + (b - a) * i / (n - 1);
    xis.push_back(xi);
    pts.push_back(ev.position(xi));
  }

  std::string format = o.str(o.format, "format", "csv");
  if (format == "csv") {
    emit(polyline_csv_string(xis, pts), o.str(o.out, "out", ""));
  } else if (format == "json") {
    json out = {{"kind", "curve"},
                {"interval", {a, b}},
                {"samples", n},
                {"xi", xis},
                {"points", json::array()}};
    for (const auto& v : pts) out["points"].push_back(vector_json(v));
    emit(out.dump(2) + "\n", o.str(o.out, "out", ""));
  } else {
    throw ConfigError("curve export supports csv or json, not " + format);
  }
  return kExitOk;
}

int cmd_surface(Options& o) {
  SurfaceSource src = resolve_surface(o);
  auto [a1, b1] = o.interval.empty() && !o.config.contains("interval")
                      ? src.g1.interval
                      : parse_interval(o.str(o.interval, "interval", ""));
  auto [a2, b2] = o.interval2.empty() && !o.config.contains("interval2")
                      ? src.g2.interval
                      : parse_interval(o.str(o.interval2, "interval2", ""));
  auto [n, m] = parse_grid(o.str(o.grid, "grid", "21x21"));
  TranslationSurface surf = src.surface(1e-10);

  std::vector<std::vector<PEVector>> grid(n, std::vector<PEVector>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      grid[i][j] = surf.eval(a1 + (b1 - a1) * i / (n - 1),
                             a2 + (b2 - a2) * j / (m - 1));

  std::optional<int> drop = o.project_drop;
  if (!drop && o.config.contains("project_drop"))
    drop = o.config.at("project_drop").get<int>();

  std::string format = o.str(o.format, "format", "obj");
  if (format == "obj") {
    emit(surface_obj_string(grid, drop), o.str(o.out, "out", ""));
  } else if (format == "json") {
    json out = {{"kind", "surface"},
                {"interval", {a1, b1}},
                {"interval2", {a2, b2}},
                {"grid", {n, m}},
                {"points", json::array()}};
    for (const auto& row : grid) {
      json jrow = json::array();
      for (const auto& v : row) jrow.push_back(vector_json(v));
      out["points"].push_back(jrow);
    }
    emit(out.dump(2) + "\n", o.str(o.out, "out", ""));
  } else {
    throw ConfigError("surface export supports obj or json, not " + format);
  }
  return kExitOk;
}

int cmd_verify(Options& o) {
  double tol = o.num(o.tol, "tol", 1e-8);
  std::string example = o.example;
  if (example.empty() && o.config.contains("example"))
    example = o.config.at("example").get<std::string>();

  if (!example.empty() && is_surface_example(example)) {
    SurfaceSource src = resolve_surface(o);
    auto [n, m] = parse_grid(o.str(o.grid, "grid", "21x21"));
    GridSpec grid{src.g1.interval.first, src.g1.interval.second,
                  src.g2.interval.first, src.g2.interval.second, n, m};
    MinimalityReport rep = verify_minimality(src.surface(1e-10), grid, tol);
    std::cout << "minimality: max |<f_i,f_i>| = " << rep.max_residual
              << " at (xi1,xi2)=(" << rep.worst_xi1 << "," << rep.worst_xi2
              << "), direction " << rep.worst_direction << "\n";
    std::cout << "mixed term f_12: 0 (structural)\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << " (tol " << tol << ")\n";
    return rep.pass ? kExitOk : kExitVerificationFailed;
  }

  CurveSource src = resolve_curve(o, o.config, o.example);
  auto [a, b] = o.interval.empty() && !o.config.contains("interval")
                    ? src.interval
                    : parse_interval(o.str(o.interval, "interval", ""));
  int n = static_cast<int>(o.num(std::nullopt, "samples", 100));
  CurveEvaluator ev = src.evaluator(1e-10);

  double max_null = 0;
  for (int i = 0; i < n; ++i) {
    double xi = a + (b - a) * i / (n - 1);
    PEVector t = ev.derivative(xi);
    max_null = std::max(max_null, std::abs(inner_product(t, t)) /
                                      std::max(1.0, t.euclidean_sq()));
  }
  std::cout << "nullity: max |<beta',beta'>| = " << max_null << "\n";

  bool pass = max_null <= tol;
  if (src.d42) {
    double max_res = 0;
    for (int i = 0; i < n; ++i) {
      double xi = a + (b - a) * i / (n - 1);
      for (int order = 0; order <= 1; ++order) {
        LemmaResiduals res =
            lemma_residuals_detailed(src.d42->p1, src.d42->p2, order, xi);
        max_res = std::max({max_res, std::abs(res.res1) / res.scale1,
                            std::abs(res.res2) / res.scale2});
      }
    }
    std::cout << "phi identities: max scaled residual = " << max_res << "\n";
    pass = pass && max_res <= tol;
  }
  std::cout << (pass ? "PASS" : "FAIL") << " (tol " << tol << ")\n";
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_roundtrip(Options& o) {
  double tol = o.num(o.tol, "tol", 1e-8);
  CurveSource src = resolve_curve(o, o.config, o.example);
  auto [a, b] = o.interval.empty() && !o.config.contains("interval")
                    ? src.interval
                    : parse_interval(o.str(o.interval, "interval", ""));
  int n = static_cast<int>(o.num(std::nullopt, "samples", 20));
  ScalarFn k = o.k.empty() ? ScalarFn::constant(1) : ScalarFn::parse(o.k);

  CurveFn beta = src.symbolic();
  double max_dev = 0;
  if (beta.signature == Signature::E42) {
    InverseMode mode = o.alternative ? InverseMode::Alternative : InverseMode::Standard;
    ReprData42 data = inverse_e42(beta, k, mode);
    for (int i = 0; i < n; ++i) {
      double xi = a + (b - a) * i / (n - 1);
      PEVector orig = beta.position(xi);
      PEVector rec = forward_e42(data, xi);
      max_dev = std::max(max_dev, std::sqrt((rec - orig).euclidean_sq()));
    }
  } else {
    if (o.alternative)
      throw ConfigError("the alternative inverse mode applies to E42 curves");
    double xi0 = o.num(o.xi0, "xi0", 0.5 * (a + b));
    ReprData31 data = assemble_e31(inverse_e31(beta, k), beta, xi0);
    for (int i = 0; i < n; ++i) {
      double xi = a + (b - a) * i / (n - 1);
      PEVector orig = beta.position(xi);
      PEVector rec = forward_e31(data, xi);
      max_dev = std::max(max_dev, std::sqrt((rec - orig).euclidean_sq()));
    }
  }
  std::cout << "roundtrip: max |forward(inverse(beta)) - beta| = " << max_dev
            << "\n";
  bool pass = max_dev <= tol;
  std::cout << (pass ? "PASS" : "FAIL") << " (tol " << tol << ")\n";
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_examples() {
  for (const auto& name : list_examples())
    std::cout << name << "  -  " << describe_example(name) << "\n";
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"null curves and minimal timelike surfaces in E42 / E31"};
  app.require_subcommand(1);
  Options o;
  CLI::App* curve = app.add_subcommand("curve", "sample a null curve");
  CLI::App* surface = app.add_subcommand("surface", "sample a translation surface");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* roundtrip = app.add_subcommand("roundtrip", "inverse-then-forward report");
  CLI::App* examples = app.add_subcommand("examples", "list catalog examples");
  for (CLI::App* cmd : {curve, surface, verify, roundtrip})
    add_shared_flags(cmd, o);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;  // help is not an error
  }

  try {
    o.load_config();
    if (curve->parsed()) return cmd_curve(o);
    if (surface->parsed()) return cmd_surface(o);
    if (verify->parsed()) return cmd_verify(o);
    if (roundtrip->parsed()) return cmd_roundtrip(o);
    if (examples->parsed()) return cmd_examples();
    return kExitUsage;
  } catch (const ConstraintError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateWronskianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalDegeneracy;
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalDegeneracy;
  } catch (const EvalDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalDegeneracy;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nullforge
