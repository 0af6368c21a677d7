#pragma once

// Command-line front end. Needs CLI11.hpp and json.hpp on the include path.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psb/render.hpp"

namespace psb::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, parse_error = 2, engine_error = 3, size_cap_error = 4 };

struct JobSpec {
  std::string command;  // sb | psbmod | stratify | hs-strat | hs-at | bounds
  std::vector<std::string> xnames, ynames;
  std::string order = "";   // empty: per-command default
  std::string matrix = "";  // rows separated by ';', entries by ','
  std::string engine = "";  // empty: per-command default
  std::string variant = "exp2";
  std::string format = "text";
  std::int64_t r_max = 8;
  std::size_t workers = 1;
  bool shift = false;
  std::vector<std::string> polynomials;
  std::vector<std::string> q_generators;
  std::vector<std::string> point;
  std::int64_t n = 0, d = 0;

  RingPtr xring() const;
  RingPtr yring() const { return make_ring(ynames, ynames.empty() ? MonomialOrder::empty() : MonomialOrder::deglex(ynames.size())); }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& p : out) {
    const auto b = p.find_first_not_of(" \t\r\n");
    const auto e = p.find_last_not_of(" \t\r\n");
    p = b == std::string::npos ? "" : p.substr(b, e - b + 1);
  }
  std::erase_if(out, [](const std::string& p) { return p.empty(); });
  return out;
}

inline MonomialOrder named_order(const std::string& name, std::size_t n) {
  if (n == 0) return MonomialOrder::empty();
  if (name == "valuation") return MonomialOrder::valuation_compatible(n);
  if (name == "deglex") return MonomialOrder::deglex(n);
  if (name == "lex") return MonomialOrder::lex(n);
  if (name == "degrevlex") return MonomialOrder::degrevlex(n);
  throw InputError("unknown order '" + name + "' (valuation, deglex, lex, degrevlex)");
}

inline MonomialOrder matrix_order(const std::string& text, std::size_t n) {
  std::vector<MonomialOrder::Row> rows;
  for (const auto& r : split(text, ';')) {
    MonomialOrder::Row row;
    for (const auto& e : split(r, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != e.size()) throw InputError("bad order matrix entry '" + e + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  MonomialOrder o(std::move(rows));
  if (o.nvars() != n) throw InputError("order matrix has " + std::to_string(o.nvars()) + " columns, need " + std::to_string(n));
  return o;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::string all, line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    all += line + ",";
  }
  return all;
}

}  // namespace detail

inline RingPtr JobSpec::xring() const {
  const std::string def = command == "sb" ? "deglex" : "valuation";
  const std::size_t n = xnames.size();
  return make_ring(xnames, matrix.empty() ? detail::named_order(order.empty() ? def : order, n)
                                          : detail::matrix_order(matrix, n));
}

/// Generators as parameter polynomials: f(x+y) with --shift, otherwise parsed
/// in the joint ring of variables and parameters.
inline std::vector<ParamPolynomial> param_generators(const JobSpec& job) {
  const auto xr = job.xring(), yr = job.yring();
  std::vector<ParamPolynomial> G;
  if (job.shift) {
    for (const auto& s : job.polynomials)
      for (const auto& f : parse_polynomial_list(s, xr)) G.push_back(taylor_shift(f, yr));
    return G;
  }
  const auto J = psb::detail::joint_ring(xr, yr);
  for (const auto& s : job.polynomials)
    for (const auto& f : parse_polynomial_list(s, J)) G.push_back(ParamPolynomial::from_joint(f, xr, yr));
  return G;
}

inline std::vector<Polynomial> x_generators(const JobSpec& job) {
  const auto xr = job.xring();
  std::vector<Polynomial> F;
  for (const auto& s : job.polynomials)
    for (auto& f : parse_polynomial_list(s, xr)) F.push_back(std::move(f));
  return F;
}

inline ParamIdeal q_ideal(const JobSpec& job) {
  const auto yr = job.yring();
  std::vector<Polynomial> q;
  for (const auto& s : job.q_generators)
    for (auto& f : parse_polynomial_list(s, yr)) q.push_back(std::move(f));
  return ParamIdeal(yr, std::move(q));
}

inline Engine engine_of(const JobSpec& job) {
  const std::string e = job.engine.empty() ? (job.command == "hs-strat" ? "modified" : "mora") : job.engine;
  return e == "modified" ? Engine::modified : Engine::mora;
}

/// Parses argv (without the program name) into a validated job. Throws
/// CLI::Error for usage problems and psb::Error for bad polynomials or orders.
inline JobSpec parse_job(std::vector<std::string> args, std::ostream& help_out = std::cout) {
  JobSpec job;
  CLI::App app{"Pseudo standard bases, parametric stratification and Hilbert-Samuel strata over Q", "psb"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults (command-line flags take precedence)");

  std::size_t nx = 0, ny = 0;
  std::string vars, params, file, point, q;
  app.add_option("-n,--nvars", nx, "number of variables x1..xn")->capture_default_str();
  app.add_option("--vars", vars, "comma-separated variable names (instead of -n)");
  app.add_option("-m,--nparams", ny, "number of parameters y1..ym (default n with --shift)");
  app.add_option("--params", params, "comma-separated parameter names (instead of -m)");
  auto* order = app.add_option("--order", job.order, "valuation | deglex | lex | degrevlex");
  auto* matrix = app.add_option("--matrix", job.matrix, "order matrix, rows separated by ';'");
  order->excludes(matrix);
  app.add_option("--engine", job.engine, "pseudo standard basis engine")
      ->check(CLI::IsMember({"mora", "modified"}));
  app.add_option("--variant", job.variant, "stratification variant")->check(CLI::IsMember({"exp1", "exp2"}));
  app.add_option("--format", job.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--r-max", job.r_max, "largest r in HS value tables")->check(CLI::NonNegativeNumber);
  app.add_option("--workers", job.workers, "parallel branch workers")->check(CLI::PositiveNumber);
  app.add_option("--file", file, "read generators from a file (one or more per line, '#' comments)");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("polynomials", job.polynomials, "generators (each argument may be a comma-separated list)");
    return s;
  };
  sub("sb", "standard basis of <F> in Q[x]");
  auto* psbmod = sub("psbmod", "pseudo standard basis modulo a parameter ideal");
  psbmod->add_option("--q", q, "comma-separated generators of the parameter ideal Q");
  psbmod->add_flag("--shift", job.shift, "use f(x+y) with parameters y1..yn");
  auto* strat = sub("stratify", "stratify the parameter space");
  strat->add_flag("--shift", job.shift, "use f(x+y) with parameters y1..yn");
  sub("hs-strat", "stratify affine space by the local Hilbert-Samuel function");
  auto* at = sub("hs-at", "Hilbert-Samuel values at one rational point");
  at->add_option("--point", point, "coordinates, e.g. --point 0,1/2")->required();
  auto* bounds = app.add_subcommand("bounds", "degree bound D(n,d) and stratification counts");
  bounds->fallthrough();
  bounds->add_option("-d,--degree", job.d, "degree bound of the input")->required()->check(CLI::PositiveNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    throw;
  }
  job.command = app.get_subcommands().front()->get_name();

  if (job.command == "bounds") {
    if (nx == 0) throw CLI::ValidationError("bounds", "-n must be at least 1");
    job.n = static_cast<std::int64_t>(nx);
    return job;
  }
  if (!q.empty()) job.q_generators.push_back(q);
  job.point = detail::split(point, ',');
  if (!file.empty()) job.polynomials.push_back(detail::read_file(file));
  if (!vars.empty() && nx != 0) throw CLI::ValidationError("--vars", "conflicts with -n");
  job.xnames = vars.empty() ? indexed_names("x", nx) : detail::split(vars, ',');
  if (job.xnames.empty()) throw CLI::ValidationError("-n", "declare the variables with -n or --vars");
  if (!params.empty() && ny != 0) throw CLI::ValidationError("--params", "conflicts with -m");
  if (job.shift && ny == 0 && params.empty()) ny = job.xnames.size();
  job.ynames = params.empty() ? indexed_names("y", ny) : detail::split(params, ',');
  if (job.shift && job.ynames.size() != job.xnames.size())
    throw CLI::ValidationError("--shift", "needs as many parameters as variables");
  if (job.polynomials.empty()) throw CLI::ValidationError("polynomials", "no generators given");
  const bool parametric = job.command == "psbmod" || job.command == "stratify";
  if (!parametric && !job.ynames.empty()) throw CLI::ValidationError("--params", "only psbmod and stratify take parameters");

  // validate everything that can be parsed up front
  job.xring();
  if (parametric) {
    param_generators(job);
    q_ideal(job);
  } else {
    x_generators(job);
  }
  if (job.command == "hs-at" && job.point.size() != job.xnames.size())
    throw CLI::ValidationError("--point", "needs " + std::to_string(job.xnames.size()) + " coordinates");
  return job;
}

namespace detail {

inline Json exps_json(const std::vector<ExponentVector>& es) {
  Json a = Json::array();
  for (const auto& e : es) a.push_back(std::vector<std::int64_t>(e.begin(), e.end()));
  return a;
}

inline Json strings(const std::vector<Polynomial>& ps, const std::vector<std::string>* names = nullptr) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(names ? to_string_as(p, *names) : to_string(p));
  return a;
}

inline Json stratum_json(const Stratum& s, const std::vector<std::string>* names = nullptr) {
  Json b = Json::array();
  for (const auto& g : s.basis) b.push_back(to_string(g));
  return {{"staircase_generators", exps_json(s.staircase.generators())},
          {"Q_generators", strings(s.Q.groebner(), names)},
          {"h_factors", strings(s.h_factors, names)},
          {"basis", b}};
}

inline Json numerical_json(const NumericalPolynomial& P) {
  Json c = Json::array();
  for (const auto& q : P.coeffs) c.push_back(q.get_str());
  return {{"coefficients", c}, {"stability_threshold", P.stability_threshold}};
}

}  // namespace detail

/// Executes a validated job; output goes to `out`, warnings to `err`.
inline int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const bool json = job.format == "json";

  if (job.command == "bounds") {
    const auto D = degree_bound_exact(job.n, job.d);
    const auto b = hs_count_bounds(job.n, job.d, true);
    if (json) {
      Json j{{"n", job.n}, {"d", job.d}, {"D", D.get_str()}, {"degree_bound", degree_bound(job.n, job.d).get_str()},
             {"hp_count", b.hp_count.get_str()}, {"hf_count", b.hf_count ? Json(b.hf_count->get_str()) : Json()}};
      out << j.dump(2) << '\n';
    } else {
      out << "D=" << D.get_str();
      if (D.get_den() != 1) out << " (floor " << degree_bound(job.n, job.d).get_str() << ")";
      out << "\nhp_count=" << b.hp_count.get_str() << '\n';
      if (b.hf_count) out << "hf_count=" << b.hf_count->get_str() << '\n';
    }
    if (!b.hf_count) {
      err << "psb: hf_count product length exceeds the cap " << hf_product_cap() << " (set PSB_HF_CAP)\n";
      return size_cap_error;
    }
    return ok;
  }

  if (job.command == "sb") {
    const auto F = x_generators(job);
    const auto B = F.front().ring()->order.is_global() ? groebner_basis(F) : standard_basis(F);
    if (json) out << Json{{"basis", detail::strings(B)}}.dump(2) << '\n';
    else
      for (const auto& g : B) out << to_string(g) << '\n';
    return ok;
  }

  if (job.command == "psbmod") {
    const auto G = param_generators(job);
    const auto Q = q_ideal(job);
    const auto P = pseudo_standard_basis(G, Q, engine_of(job));
    if (json) {
      Json b = Json::array();
      for (std::size_t i = 0; i < P.basis.size(); ++i)
        b.push_back({{"polynomial", to_string(P.basis[i])},
                     {"exp", std::vector<std::int64_t>(P.exps[i].begin(), P.exps[i].end())},
                     {"lc", to_string(P.lcs[i])}});
      out << Json{{"basis", b}, {"H", detail::strings(P.H)}}.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < P.basis.size(); ++i)
        out << P.exps[i].to_string() << "  lc=" << to_string(P.lcs[i]) << "  " << to_string(P.basis[i]) << '\n';
      std::vector<std::string> h;
      for (const auto& c : P.H) h.push_back(to_string(c));
      out << "H=[" << psb::detail::join(h) << "]\n";
    }
    return ok;
  }

  if (job.command == "stratify") {
    StratifyOptions o;
    o.engine = engine_of(job);
    o.variant = job.variant == "exp1" ? Variant::exp1 : Variant::exp2;
    o.workers = job.workers;
    const auto R = stratify(param_generators(job), job.yring(), o);
    if (json) {
      Json s = Json::array();
      for (const auto& st : R.strata) s.push_back(detail::stratum_json(st));
      out << Json{{"strata", s}, {"vanishing_ideal", detail::strings(R.vanishing_ideal.groebner())}}.dump(2) << '\n';
    } else {
      out << strata_text(R.strata, job.yring()->names);
      std::vector<std::string> I;
      for (const auto& g : R.vanishing_ideal.groebner()) I.push_back(to_string(g));
      out << "vanishing ideal: <" << psb::detail::join(I) << ">\n";
    }
    return ok;
  }

  if (job.command == "hs-strat") {
    HSOptions o;
    o.engine = engine_of(job);
    o.variant = job.variant == "exp1" ? Variant::exp1 : Variant::exp2;
    o.workers = job.workers;
    o.r_max = job.r_max;
    const auto R = hs_stratify(x_generators(job), o);
    if (json) {
      Json s = Json::array();
      for (const auto& h : R.strata) {
        Json regions = Json::array(), stairs = Json::array();
        for (const auto& r : h.regions) regions.push_back(detail::stratum_json(r, &R.xring->names));
        for (const auto& e : h.staircases) stairs.push_back(detail::exps_json(e.generators()));
        s.push_back({{"staircase_generators", detail::exps_json(h.staircase().generators())},
                     {"staircases", stairs},
                     {"regions", regions},
                     {"hs_values", h.hs_values},
                     {"hs_polynomial", detail::numerical_json(h.hs_polynomial)}});
      }
      out << Json{{"strata", s}}.dump(2) << '\n';
    } else {
      out << strata_text(R);
      for (const auto& h : R.strata) {
        out << "\nstaircase";
        for (const auto& e : h.staircases) out << ' ' << e.to_string();
        out << "\n  HSf(0.." << job.r_max << "):";
        for (auto v : h.hs_values) out << ' ' << v;
        out << "\n  HSp(r) = " << to_string(h.hs_polynomial) << " for r >= " << h.hs_polynomial.stability_threshold
            << '\n';
        for (const auto& r : h.regions) out << "  region " << stratum_line(r, R.xring->names) << '\n';
      }
    }
    return ok;
  }

  // hs-at
  const auto F = x_generators(job);
  std::vector<Rational> x0;
  for (const auto& c : job.point) {
    try {
      Rational q(c);
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      x0.push_back(q);
    } catch (const std::invalid_argument&) {
      throw InputError("bad coordinate '" + c + "'");
    }
  }
  const auto E = staircase_at_point(F, x0);
  const auto v = hs_values(E, job.r_max);
  if (json) {
    out << Json{{"staircase_generators", detail::exps_json(E.generators())}, {"hs_values", v}}.dump(2) << '\n';
  } else {
    out << "staircase " << E.to_string() << "\nHSf(0.." << job.r_max << "):";
    for (auto x : v) out << ' ' << x;
    out << '\n';
  }
  return ok;
}

/// Whole command line to exit code: 0 success, 2 usage or parse error,
/// 3 engine error, 4 size cap exceeded.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    const JobSpec job = parse_job(std::move(args), out);
    return run_job(job, out, err);
  } catch (const CLI::Success&) {
    // --help
    return ok;
  } catch (const CLI::Error& e) {
    err << "psb: " << e.what() << '\n';
    return parse_error;
  } catch (const ParseError& e) {
    err << "psb: parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const InputError& e) {
    err << "psb: " << e.what() << '\n';
    return parse_error;
  } catch (const DimensionError& e) {
    err << "psb: " << e.what() << '\n';
    return parse_error;
  } catch (const SizeCapError& e) {
    err << "psb: size cap: " << e.what() << '\n';
    return size_cap_error;
  } catch (const Error& e) {
    err << "psb: engine error: " << e.what() << '\n';
    return engine_error;
  }
}

}  // namespace psb::cli
