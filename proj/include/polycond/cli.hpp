#ifndef POLYCOND_CLI_HPP
#define POLYCOND_CLI_HPP

// Command-line front end. Exit status: 0 success, 1 runtime or I/O failure,
// 2 argument error, 3 insufficient precision.

#include "polycond/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace polycond {

namespace cli_detail {

inline std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep))
    out.push_back(item);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

inline double parse_double(const std::string& s, const char* what)
{
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError(std::string("bad number '") + s + "' in " + what);
  }
}

inline std::vector<double> parse_levels(const std::string& s)
{
  std::vector<double> levels;
  for (const auto& item : split(s, ','))
    levels.push_back(parse_double(item, "--levels"));
  if (levels.empty())
    throw ArgumentError("--levels: empty list");
  std::sort(levels.begin(), levels.end(), std::greater<>());
  return levels;
}

inline std::vector<std::size_t> parse_degrees(const std::string& s)
{
  std::vector<std::size_t> degrees;
  for (const auto& item : split(s, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ArgumentError("--degrees: bad degree '" + item + "'");
    degrees.push_back(std::stoul(item));
  }
  if (degrees.empty())
    throw ArgumentError("--degrees: empty list");
  return degrees;
}

inline std::pair<std::size_t, std::size_t> parse_grid(const std::string& s)
{
  auto parts = split(s, 'x');
  if (parts.size() == 1)
    parts.push_back(parts[0]);
  if (parts.size() != 2)
    throw ArgumentError("--grid: expected <nx>x<ny>");
  for (const auto& p : parts) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw ArgumentError("--grid: expected <nx>x<ny>");
  }
  return {std::stoul(parts[0]), std::stoul(parts[1])};
}

inline Region parse_region(const std::string& s)
{
  auto parts = split(s, ',');
  if (parts.size() != 4)
    throw ArgumentError("--region: expected re0,re1,im0,im1");
  Region r{parse_double(parts[0], "--region"), parse_double(parts[1], "--region"),
           parse_double(parts[2], "--region"), parse_double(parts[3], "--region")};
  if (!(r.re_min < r.re_max) || !(r.im_min < r.im_max))
    throw ArgumentError("--region: need re0 < re1 and im0 < im1");
  return r;
}

inline std::pair<Rational, Rational> parse_pair(const std::string& s, const char* what)
{
  auto parts = split(s, ',');
  if (parts.size() != 2)
    throw ArgumentError(std::string(what) + ": expected two comma-separated numbers");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

struct Globals {
  unsigned precision = 0;
  std::size_t samples = kDefaultSamples;
  std::string grid;
  std::string levels;
  std::string region;
  std::string out;
  std::string format;
  std::string degrees;
};

inline ScenarioReport condition_report(const NamedPolynomial& np, const std::string& x_text,
                                       const std::string& interval, std::size_t samples)
{
  ScenarioReport report;
  report.name = "condition-" + np.name;
  if (!x_text.empty()) {
    Rational x = parse_rational(x_text);
    Rational b = condition_B(np.poly, x);
    Rational fx = eval(np.poly, x);
    Rational dfx = derivative_eval(np.poly, x);
    double xd = to_double(x);
    report.curves.push_back(ConditionCurve{"B", {xd}, {log10_abs_or_neg_inf(b)}});
    report.summary["log10_B"] = log10_abs_or_neg_inf(b);
    report.summary["log10_abs_p"] = log10_abs_or_neg_inf(fx);
    if (fx != 0) {
      double c = log10_abs_or_neg_inf(evaluation_condition_C(fx, dfx, x));
      report.curves.push_back(ConditionCurve{"C", {xd}, {c}});
      report.summary["log10_C"] = c;
    }
    return report;
  }
  Rational lo = np.lo;
  Rational hi = np.hi;
  if (!interval.empty())
    std::tie(lo, hi) = parse_pair(interval, "--interval");
  report.curves.push_back(condition_curve(np.poly, lo, hi, samples, "B"));
  detail::summarize(report, report.curves.back(), "", "B", "x");
  return report;
}

inline ScenarioReport witness_report(const NamedPolynomial& np, const std::string& z_text, unsigned digits)
{
  auto [re, im] = parse_pair(z_text, "--z");
  PrecisionScope scope(digits);
  auto q = to_bigfloat(np.poly, digits);
  Complex<BigFloat> z(to_bigfloat(re, digits), to_bigfloat(im, digits));
  auto w = WeightVector<BigFloat>::relative(q);
  auto dc = witness_perturbation(q, z, w);
  BigFloat b = weighted_condition(q, z, w);
  BigFloat ind = indicator(q, z, w);
  BigFloat residual = perturbed_residual(q, z, dc) / b;

  ScenarioReport report;
  report.name = "witness-" + np.name;
  ConditionCurve ratios{"|dc_k|/w_k", {}, {}};
  double max_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < dc.size(); ++k) {
    if (w.w[k] == 0)
      continue;
    double r = log10_abs_or_neg_inf(BigFloat(magnitude(dc[k]) / w.w[k]));
    ratios.abscissae.push_back(static_cast<double>(k));
    ratios.values_log10.push_back(r);
    max_ratio = std::max(max_ratio, r);
  }
  report.curves.push_back(std::move(ratios));
  report.summary["digits"] = digits;
  report.summary["log10_indicator"] = log10_abs_or_neg_inf(ind);
  report.summary["log10_residual"] = log10_abs_or_neg_inf(residual);
  report.summary["log10_max_ratio"] = max_ratio;
  return report;
}

} // namespace cli_detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Conditioning of polynomials in monomial, Lagrange and Bernstein bases", "polycond"};
  app.require_subcommand(1);
  app.fallthrough();
  cli_detail::Globals g;
  app.add_option("--precision", g.precision, "working precision in decimal digits")
      ->check(CLI::Range(10u, 100000u));
  app.add_option("--samples", g.samples, "sample points per curve")->check(CLI::Range(2u, 10000000u));
  app.add_option("--grid", g.grid, "pseudozero grid <nx>x<ny>");
  app.add_option("--levels", g.levels, "comma-separated eps levels");
  app.add_option("--region", g.region, "pseudozero region re0,re1,im0,im1");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "csv | svg | json")->check(CLI::IsMember({"csv", "svg", "json"}));
  app.add_option("--degrees", g.degrees, "comma-separated degrees");

  auto* runge_equi = app.add_subcommand("runge-equi", "Runge interpolant on equispaced nodes, exact");
  auto* runge_cheb = app.add_subcommand("runge-cheb", "Runge interpolant on Chebyshev extreme nodes");

  std::size_t wn = 20;
  auto* wilkinson = app.add_subcommand("wilkinson", "Wilkinson polynomial prod (x - k)");
  wilkinson->add_option("--n", wn, "degree")->check(CLI::Range(2u, 1000u));

  std::size_t sn = 20;
  std::string target = "symmetric";
  auto* scaled = app.add_subcommand("wilkinson-scaled", "Wilkinson roots rescaled to an interval");
  scaled->add_option("--n", sn, "degree")->check(CLI::Range(2u, 1000u));
  scaled->add_option("--target", target, "symmetric | zero-two | zero-one")
      ->check(CLI::IsMember({"symmetric", "zero-two", "zero-one"}));

  std::size_t second_n = 20;
  auto* second = app.add_subcommand("second", "C_N and S_N in monomial and Lagrange bases");
  second->add_option("--n", second_n, "degree")->check(CLI::Range(2u, 400u));

  std::string pz_poly = "wilkinson20";
  auto* pseudo = app.add_subcommand("pseudozeros", "weighted pseudozero contours");
  pseudo->add_option("--poly", pz_poly, "wilkinsonN | cN | sN");

  std::string cond_poly = "wilkinson20";
  std::string cond_x;
  std::string cond_interval;
  auto* condition = app.add_subcommand("condition", "B(x) for a named polynomial");
  condition->add_option("--poly", cond_poly, "wilkinsonN | cN | sN");
  condition->add_option("--x", cond_x, "single point (rational or decimal)");
  condition->add_option("--interval", cond_interval, "sampling interval a,b");

  std::string wit_poly = "wilkinson20";
  std::string wit_z;
  auto* witness = app.add_subcommand("witness", "explicit perturbation making z a zero");
  witness->add_option("--poly", wit_poly, "wilkinsonN | cN | sN");
  witness->add_option("--z", wit_z, "point re,im")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  struct DigitsGuard {
    unsigned saved = config().digits;
    ~DigitsGuard() { config().digits = saved; }
  } guard;
  try {
    if (g.precision)
      config().digits = g.precision;
    const unsigned digits = default_digits();

    RenderSpec spec;
    bool field_output = pseudo->parsed();
    spec.format = parse_format(g.format.empty() ? (field_output ? "svg" : "csv") : g.format);
    spec.output = g.out;

    auto degrees = g.degrees.empty() ? fibonacci_degrees() : cli_detail::parse_degrees(g.degrees);
    std::optional<std::pair<std::size_t, std::size_t>> grid;
    if (!g.grid.empty())
      grid = cli_detail::parse_grid(g.grid);
    std::vector<double> levels;
    if (!g.levels.empty())
      levels = cli_detail::parse_levels(g.levels);
    std::optional<Region> region;
    if (!g.region.empty())
      region = cli_detail::parse_region(g.region);

    ScenarioReport report;
    if (runge_equi->parsed()) {
      report = runge_equispaced(degrees, g.samples);
    } else if (runge_cheb->parsed()) {
      report = runge_chebyshev(degrees, g.samples, digits);
    } else if (wilkinson->parsed()) {
      report = wilkinson_first(wn, g.samples);
    } else if (scaled->parsed()) {
      report = wilkinson_scaled(sn, parse_scaled_target(target), g.samples);
    } else if (second->parsed()) {
      SecondOptions opts;
      opts.n = second_n;
      opts.samples = g.samples;
      opts.grid = grid ? grid->first : kDefaultGrid;
      opts.digits = g.precision;
      report = wilkinson_second(opts);
    } else if (pseudo->parsed()) {
      auto np = named_polynomial(pz_poly);
      auto [nx, ny] = grid.value_or(std::pair{kDefaultGrid, kDefaultGrid});
      report = pseudozeros_scenario(np, nx, ny, levels, region, g.precision);
    } else if (condition->parsed()) {
      report = cli_detail::condition_report(named_polynomial(cond_poly), cond_x, cond_interval, g.samples);
    } else if (witness->parsed()) {
      report = cli_detail::witness_report(named_polynomial(wit_poly), wit_z, digits);
    }

    std::string text = emit(report, spec);
    if (spec.output.empty())
      out << text;
    else
      write_text(spec.output, text);
    return 0;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return 3;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace polycond

#endif // POLYCOND_CLI_HPP
