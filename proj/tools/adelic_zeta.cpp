// adelic-zeta: command-line front end for the adelic_zeta library.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adelic/analytic.hpp"
#include "adelic/errors.hpp"
#include "adelic/ffcurves.hpp"
#include "adelic/gammafactor.hpp"
#include "adelic/kernels.hpp"
#include "adelic/measure2d.hpp"
#include "adelic/model_io.hpp"
#include "adelic/special.hpp"
#include "adelic/surface.hpp"
#include "adelic/zeta2d.hpp"

namespace {

using namespace adelic;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitUsage = 64;

const std::vector<std::string> kCommands = {"zeta-curve", "zeta-surface", "conductor", "integral", "gamma-q",
                                            "tate",       "boundary",     "meanper",   "poisson-check", "measure"};

struct Options {
  std::string model;
  std::string s_text = "3";
  long pmax = 0;
  int degmax = 0;
  std::string out = "table";
  double tol = 1e-6;
  std::uint64_t seed = 0;
  // command specific
  long q = 2;
  long genus = 0;
  std::string P_text;
  std::optional<long> trace;
  long g = 2, r1 = 1, r2 = 0;
  long d = 0, i = 0, j = 0;
  std::string xi_p1 = "truncated";
  std::string x_text;
  double lo = 0.125, hi = 8.0;
  int points = 33;
  double c = 3.0;
};

// A command's result: ordered scalar fields plus an optional table.
struct Report {
  std::vector<std::pair<std::string, Json>> fields;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  bool tolerance_failed = false;

  void set(const std::string& k, Json v) { fields.emplace_back(k, std::move(v)); }
};

Json num(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string text_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt_double(v.get<double>());
  if (v.is_object() && v.contains("re")) {
    const double im = v["im"].get<double>();
    return fmt_double(v["re"].get<double>()) + (im < 0 ? " - " : " + ") + fmt_double(std::abs(im)) + "i";
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void render(const Report& r, const std::string& mode) {
  if (mode == "json") {
    Json j = Json::object();
    for (const auto& [k, v] : r.fields) j[k] = v;
    if (!r.columns.empty()) {
      Json rows = Json::array();
      for (const auto& row : r.rows) {
        Json o = Json::object();
        for (std::size_t c = 0; c < r.columns.size(); ++c) o[r.columns[c]] = row[c];
        rows.push_back(o);
      }
      j["rows"] = rows;
    }
    write_json(std::cout, j);
    return;
  }
  if (mode == "csv") {
    if (r.columns.empty()) {
      std::cout << "key,value\n";
      for (const auto& [k, v] : r.fields) std::cout << csv_escape(k) << "," << csv_escape(text_of(v)) << "\n";
      return;
    }
    for (std::size_t c = 0; c < r.columns.size(); ++c) std::cout << (c ? "," : "") << csv_escape(r.columns[c]);
    std::cout << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << csv_escape(text_of(row[c]));
      std::cout << "\n";
    }
    return;
  }
  std::size_t width = 0;
  for (const auto& f : r.fields) width = std::max(width, f.first.size());
  for (const auto& [k, v] : r.fields) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << text_of(v) << "\n";
  if (r.columns.empty()) return;
  std::vector<std::size_t> w(r.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < r.columns.size(); ++c) w[c] = r.columns[c].size();
  for (const auto& row : r.rows) {
    cells.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      cells.back().push_back(text_of(row[c]));
      w[c] = std::max(w[c], cells.back().back().size());
    }
  }
  if (!r.fields.empty()) std::cout << "\n";
  for (std::size_t c = 0; c < r.columns.size(); ++c) std::cout << std::left << std::setw(static_cast<int>(w[c]) + 2) << r.columns[c];
  std::cout << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) std::cout << std::left << std::setw(static_cast<int>(w[c]) + 2) << row[c];
    std::cout << "\n";
  }
}

cplx parse_s(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re = text.substr(0, comma);
    const double a = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(text);
    double b = 0.0;
    if (comma != std::string::npos) {
      const std::string im = text.substr(comma + 1);
      b = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(text);
    }
    return {a, b};
  } catch (const std::logic_error&) {
    throw ValidationError("--s expects RE or RE,IM, got '" + text + "'");
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("expected a comma separated integer list, got '" + text + "'");
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw ValidationError("expected a comma separated number list, got '" + text + "'");
    }
  }
  return out;
}

CurveFF curve_from(const Options& o) {
  if (!o.P_text.empty())
    return CurveFF::make(o.q, static_cast<int>(o.genus), parse_int_list(o.P_text),
                         o.genus == 0 ? CurveFamily::projective_line
                                      : (o.genus == 1 ? CurveFamily::elliptic : CurveFamily::generic));
  if (o.genus == 0) return CurveFF::projective_line(o.q);
  if (o.genus == 1 && o.trace) return CurveFF::elliptic(o.q, *o.trace);
  throw ValidationError("genus > 0 needs --P (or --trace for genus 1)");
}

SurfaceModel model_from(const Options& o) {
  if (o.model.empty()) throw ValidationError("--model is required");
  return load_model_file(o.model);
}

Report cmd_zeta_curve(const Options& o) {
  const CurveFF c = curve_from(o);
  const cplx s = parse_s(o.s_text);
  Report r;
  auto cf = zeta_closed_form(c);
  r.set("q", c.q);
  r.set("genus", c.g);
  r.set("closed_form", cf.Z.to_string());
  r.set("functional_equation", cf.certificate);
  r.set("Z", num(zeta_value(c, s)));
  if (o.degmax > 0) {
    const cplx e = euler_truncated(c, s, o.degmax);
    r.set("euler_truncated", num(e));
    r.set("euler_rel_diff", std::abs(e / zeta_value(c, s) - 1.0));
    if (std::abs(e / zeta_value(c, s) - 1.0) > o.tol) r.tolerance_failed = true;
  }
  const int n = std::max(o.degmax, 5);
  auto N = point_counts(c, n);
  auto a = closed_point_counts(c, n);
  r.columns = {"n", "N_n", "a_n"};
  for (int k = 1; k <= n; ++k) r.rows.push_back({k, to_string(N[k - 1]), to_string(a[k - 1])});
  return r;
}

Report cmd_zeta_surface(const Options& o) {
  const SurfaceModel m = model_from(o);
  const cplx s = parse_s(o.s_text);
  const long P = o.pmax > 0 ? o.pmax : m.p_max;
  Report r;
  auto t = surface_zeta(m, s, P);
  r.set("s", num(s));
  r.set("P_max", P);
  r.set("primes_used", t.primes_used);
  r.set("zeta_truncated", num(t.value));
  r.set("rel_error_estimate", t.rel_error_estimate);
  if (m.zeta_source == ZetaSource::p1_closed_form) {
    const cplx exact = surface_zeta_value(m, s);
    r.set("zeta_closed_form", num(exact));
    r.set("rel_diff", std::abs(t.value / exact - 1.0));
  }
  return r;
}

Report cmd_conductor(const Options& o) {
  const SurfaceModel m = model_from(o);
  Report r;
  r.set("conductor", to_string(conductor(m)));
  r.columns = {"p", "good", "n_p"};
  for (const auto& fd : m.fibres)
    if (!fd.good) r.rows.push_back({fd.p, fd.good, fd.node_weight()});
  return r;
}

Report cmd_integral(const Options& o) {
  const SurfaceModel m = model_from(o);
  const cplx s = parse_s(o.s_text);
  AssembleOptions opt;
  opt.P_max = o.pmax > 0 ? o.pmax : m.p_max;
  opt.xi_p1 = o.xi_p1 == "full" ? XiP1Mode::full : XiP1Mode::truncated;
  Report r;
  const cplx assembled = assemble_zeta2(m, s, opt);
  r.set("s", num(s));
  r.set("P_max", opt.P_max);
  r.set("xi_p1", o.xi_p1);
  r.set("assembled", num(assembled));
  // Only the truncated completion matches the completed zeta exactly.
  if (opt.P_max == m.p_max && opt.xi_p1 == XiP1Mode::truncated) {
    const cplx z = completed_Z(m, s);
    r.set("completed_Z_squared", num(z * z));
    const double dev = std::abs(assembled / (z * z) - 1.0);
    r.set("rel_diff", dev);
    if (dev > o.tol) r.tolerance_failed = true;
  }
  r.columns = {"p", "good", "fibre_weight", "renorm_weight", "net_weight", "cancellation_ok", "combined"};
  bool all_ok = true;
  for (const auto& row : factor_table(m, opt.P_max)) {
    all_ok = all_ok && row.cancellation_ok;
    r.rows.push_back({row.p, row.good, row.fibre_weight, row.renorm_weight, row.net_weight, row.cancellation_ok,
                      row.combined.to_string()});
  }
  r.set("cancellation_ok", all_ok);
  if (!all_ok) r.tolerance_failed = true;
  return r;
}

Report cmd_gamma_q(const Options& o) {
  if (o.g < 0 || o.r1 < 0 || o.r2 < 0 || o.r1 + o.r2 < 1) throw ValidationError("need g >= 0, r1, r2 >= 0, r1 + r2 >= 1");
  Report r;
  const QFactor Q = compute_Q(o.g, o.r1, o.r2);
  r.set("gamma_surface", gamma_surface(o.g, o.r1, o.r2).to_string());
  r.set("gamma_p1", gamma_p1(o.r1, o.r2).to_string());
  r.set("Q", Q.as_product().to_string());
  r.set("c", to_string(Q.c));
  r.set("pi_power", to_string(Q.pi_pow));
  r.set("m", Q.m);
  r.set("symmetry_sign", check_Q_symmetry(Q));
  r.set("m_alt_section", (o.r1 + o.r2) * (o.g - 1));
  r.set("m_alt_intro", -Q.m);
  return r;
}

Report cmd_tate(const Options& o) {
  const cplx s = parse_s(o.s_text);
  const TateDecomposition t = tate_decompose(s);
  Report r;
  r.set("s", num(s));
  r.set("eta", num(t.eta));
  r.set("eta_hat", num(t.eta_hat));
  r.set("omega", num(t.omega));
  r.set("sum", num(t.eta + t.eta_hat + t.omega));
  r.set("xi", num(t.xi));
  r.set("residual", t.residual);
  if (t.residual > o.tol) r.tolerance_failed = true;
  return r;
}

MellinOptions mellin_opts(const Options& o) {
  MellinOptions mo;
  mo.c = o.c;
  return mo;
}

std::vector<double> grid_from(const Options& o) {
  if (!o.x_text.empty()) {
    auto xs = parse_double_list(o.x_text);
    for (double x : xs)
      if (!(x > 0)) throw DomainError("grid points must be positive");
    return xs;
  }
  if (!(o.lo > 0) || !(o.hi > o.lo) || o.points < 2) throw ValidationError("bad grid bounds");
  return log_grid(o.lo, o.hi, o.points);
}

Report cmd_boundary(const Options& o) {
  const SurfaceModel m = model_from(o);
  if (o.c <= 2.0) throw DomainError("contour abscissa must satisfy c > 2");
  BoundaryFunction B([&m](cplx s) { return completed_Z(m, s); }, mellin_opts(o));
  const auto xs = grid_from(o);
  std::vector<double> inv(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) inv[k] = 1.0 / xs[k];
  const auto h = B.h(xs);
  const auto hinv = B.h(inv);
  const auto f = B.inverse().eval(xs);
  Report r;
  r.set("c", o.c);
  r.set("T", B.inverse().height());
  r.set("nodes", static_cast<long>(B.inverse().nodes()));
  r.set("truncation_warning", B.inverse().truncation_warning());
  r.columns = {"x", "f", "h", "frak_h", "antisymmetry"};
  double worst = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double res = std::abs(h[k] + hinv[k] / xs[k]);
    worst = std::max(worst, res);
    r.rows.push_back({xs[k], f[k], h[k], h[k] / std::sqrt(xs[k]), res});
  }
  r.set("antisymmetry_max", worst);
  if (worst > o.tol) r.tolerance_failed = true;
  return r;
}

Report cmd_meanper(const Options& o) {
  const SurfaceModel m = model_from(o);
  BoundaryFunction B([&m](cplx s) { return completed_Z(m, s); }, mellin_opts(o));
  const auto rep = meanper_diagnostic([&B](const std::vector<double>& xs) { return B.h(xs); }, grid_from(o));
  Report r;
  r.set("antisymmetry_max", rep.antisymmetry_max);
  r.set("growth_slope", rep.growth_slope);
  r.set("growth_intercept", rep.growth_intercept);
  r.set("note", rep.note);
  r.columns = {"index", "singular_value"};
  for (std::size_t k = 0; k < rep.singular_values.size(); ++k) r.rows.push_back({static_cast<long>(k), rep.singular_values[k]});
  return r;
}

Report cmd_poisson_check(const Options& o) {
  const CurveFF c = curve_from(o);
  Report r;
  r.columns = {"deg", "principal", "i", "l_D", "l_K_minus_D", "lhs", "rhs", "equal"};
  bool all = true;
  for (long deg = -6; deg <= 6; ++deg) {
    for (bool principal : {false, true}) {
      if (principal && (deg != 0 || c.g != 1)) continue;
      for (long i = -2; i <= 2; ++i) {
        auto rep = summation_check(c, DivisorFF{deg, principal}, i);
        all = all && rep.equal;
        r.rows.push_back({deg, principal, i, rep.l_D, rep.l_KD, rep.lhs.to_string(), rep.rhs.to_string(), rep.equal});
      }
    }
  }
  r.set("all_equal", all);
  if (!all) r.tolerance_failed = true;
  return r;
}

Report cmd_measure(const Options& o) {
  const auto F = Local2DField::eqchar(o.q, o.d);
  Report r;
  r.set("q", o.q);
  r.set("d", o.d);
  r.set("box", "t2^" + std::to_string(o.i) + " t1^" + std::to_string(o.j) + " O_F");
  r.set("measure", box_measure(F, o.i, o.j).to_string());
  r.set("unit_coset_additive", measure_additive(MeasSet::unit_coset(F, o.i, o.j)).to_string());
  r.set("unit_coset_multiplicative", measure_multiplicative(MeasSet::unit_coset(F, o.i, o.j)).to_string());
  SimpleFunction f;
  f.add(LaurentValue(Rat(1)), MeasSet::box(F, o.i, o.j));
  const auto once = fourier_box(f);
  const auto twice = fourier_box(once);
  r.columns = {"i", "j", "fourier_coefficient"};
  for (const auto& [ij, v] : box_expansion(once)) r.rows.push_back({ij.first, ij.second, v.to_string()});
  r.set("fourier_involution", box_expansion(twice) == box_expansion(f));
  return r;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "surface description (JSON)");
  sub->add_option("--s", o.s_text, "complex argument RE[,IM]");
  sub->add_option("--pmax", o.pmax, "prime bound (default: model p_max)");
  sub->add_option("--degmax", o.degmax, "closed-point degree bound");
  sub->add_option("--out", o.out, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--tol", o.tol, "tolerance for self-checks (exit 3 when exceeded)");
  sub->add_option("--seed", o.seed, "seed for randomized replay");
}

void print_usage(std::ostream& os) {
  os << "usage: adelic-zeta <command> [options]\ncommands:";
  for (const auto& c : kCommands) os << " " << c;
  os << "\nrun 'adelic-zeta <command> --help' for command options\n";
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2 || std::find(kCommands.begin(), kCommands.end(), std::string(argv[1])) == kCommands.end()) {
    if (argc >= 2 && (std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h")) {
      print_usage(std::cout);
      return kExitOk;
    }
    if (argc >= 2) std::cerr << "unknown command '" << argv[1] << "'\n";
    print_usage(std::cerr);
    return kExitUsage;
  }

  Options o;
  CLI::App app{"adelic-zeta: zeta functions and zeta integrals of arithmetic surfaces"};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : kCommands) {
    subs[name] = app.add_subcommand(name);
    add_common(subs[name], o);
  }
  for (const char* name : {"zeta-curve", "poisson-check"}) {
    subs[name]->add_option("--q", o.q, "field size");
    subs[name]->add_option("--genus", o.genus, "curve genus");
    subs[name]->add_option("--P", o.P_text, "zeta numerator coefficients, constant term first");
    subs[name]->add_option("--trace", o.trace, "Frobenius trace (genus 1)");
  }
  for (const char* name : {"boundary", "meanper"}) {
    subs[name]->add_option("--c", o.c, "contour abscissa");
    subs[name]->add_option("--x", o.x_text, "comma separated sample points");
    subs[name]->add_option("--lo", o.lo, "log-grid lower end");
    subs[name]->add_option("--hi", o.hi, "log-grid upper end");
    subs[name]->add_option("--points", o.points, "log-grid size");
  }
  subs["gamma-q"]->add_option("--g", o.g, "genus");
  subs["gamma-q"]->add_option("--r1", o.r1, "real places");
  subs["gamma-q"]->add_option("--r2", o.r2, "complex places");
  subs["integral"]->add_option("--xi-p1", o.xi_p1, "P^1 completion: truncated Euler product or full xi(s)xi(s-1)")
      ->check(CLI::IsMember({"truncated", "full"}));
  subs["measure"]->add_option("--q", o.q, "residue field size");
  subs["measure"]->add_option("--d", o.d, "conductor exponent of the character");
  subs["measure"]->add_option("--i", o.i, "t2 exponent");
  subs["measure"]->add_option("--j", o.j, "t1 exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const std::string cmd = argv[1];
  try {
    Report r;
    if (cmd == "zeta-curve") r = cmd_zeta_curve(o);
    else if (cmd == "zeta-surface") r = cmd_zeta_surface(o);
    else if (cmd == "conductor") r = cmd_conductor(o);
    else if (cmd == "integral") r = cmd_integral(o);
    else if (cmd == "gamma-q") r = cmd_gamma_q(o);
    else if (cmd == "tate") r = cmd_tate(o);
    else if (cmd == "boundary") r = cmd_boundary(o);
    else if (cmd == "meanper") r = cmd_meanper(o);
    else if (cmd == "poisson-check") r = cmd_poisson_check(o);
    else r = cmd_measure(o);
    render(r, o.out);
    if (r.tolerance_failed) {
      std::cerr << "tolerance check failed (--tol " << o.tol << ")\n";
      return kExitTolerance;
    }
    return kExitOk;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConventionError& e) {
    std::cerr << "convention error: " << e.what() << "\n";
    return kExitValidation;
  }
}
