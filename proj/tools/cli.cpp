#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gtmod/approx.hpp"
#include "gtmod/errors.hpp"
#include "gtmod/harness.hpp"
#include "gtmod/io.hpp"
#include "gtmod/modulus.hpp"
#include "gtmod/translation.hpp"

namespace gtmod::cli {

namespace {

struct Common {
  std::string p = "2";
  double alpha = 1.0;
  std::string function = "abs";
  int n_max = 16;
  int t_grid = 33;
  int quad_size = 0;
  std::string out_dir;
  std::string format = "csv";
  std::uint64_t seed = 1;
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return kInfinity;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad --p value: " + s);
  return v;
}

template <class T>
std::vector<T> parse_list(const std::string& s) {
  std::vector<T> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::stringstream conv(item);
    T v{};
    if (!(conv >> v) || !conv.eof()) throw std::invalid_argument("bad list entry: " + item);
    out.push_back(v);
  }
  return out;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--p", c.p, "integrability exponent (number or 'inf')");
  sub->add_option("--alpha", c.alpha, "weight exponent in (1-x^2)^alpha");
  sub->add_option("--function", c.function,
                  "one|x|x2|abs|signpow15|abs_shift|randpoly:<d>|c0,c1,...");
  sub->add_option("--n-max", c.n_max, "largest degree bound / n");
  sub->add_option("--t-grid", c.t_grid, "points in the modulus t-grid (odd)");
  sub->add_option("--quad-size", c.quad_size, "translation quadrature size (0 = default)");
  sub->add_option("--out", c.out_dir, "output directory (default: stdout)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", c.seed, "seed for random polynomials");
}

void emit(const Common& c, const std::string& stem, const std::string& body, std::ostream& out) {
  if (c.out_dir.empty()) {
    out << body;
    if (!body.empty() && body.back() != '\n') out << '\n';
    return;
  }
  std::filesystem::create_directories(c.out_dir);
  const auto path = std::filesystem::path(c.out_dir) / (stem + "." + c.format);
  std::ofstream file(path);
  file << body;
  if (!body.empty() && body.back() != '\n') file << '\n';
  if (!file) throw std::runtime_error("cannot write " + path.string());
}

ExperimentOptions experiment_options(const Common& c) {
  ExperimentOptions o;
  o.modulus.t_grid = c.t_grid;
  o.modulus.quad_size = c.quad_size;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised translation, modulus of smoothness and weighted best approximation", "gtmod"};
  app.require_subcommand(1);
  Common c;

  auto* lemma = app.add_subcommand("verify-lemma1", "check the five translation-operator properties");
  double prefactor_scale = 1.0;
  add_common(lemma, c);
  lemma->add_option("--prefactor-scale", prefactor_scale, "diagnostic fault injection");

  auto* converse = app.add_subcommand("converse-table", "omega(f,1/n) n^2 / sum nu E_nu");
  std::string n_list = "4,8,16,32,64";
  add_common(converse, c);
  converse->add_option("--n-list", n_list, "ascending comma separated n values");

  auto* dyadic = app.add_subcommand("dyadic", "dyadic block decomposition checks");
  int dyadic_n = 16;
  add_common(dyadic, c);
  dyadic->add_option("--n", dyadic_n, "n >= 2");

  auto* classfit = app.add_subcommand("class-fit", "fit exponents of E_n and omega(f, 1/n)");
  std::optional<double> lambda;
  add_common(classfit, c);
  classfit->add_option("--lambda", lambda, "hypothesised exponent in (0, 2)");

  auto* calib = app.add_subcommand("calibrate-multiplier", "identify the multiplier closed form");
  add_common(calib, c);

  auto* approx = app.add_subcommand("best-approx", "E_1 .. E_{n-max}");
  add_common(approx, c);

  auto* modulus = app.add_subcommand("modulus", "omega(f, delta) over a list of deltas");
  std::string deltas = "0.0625,0.125,0.25,0.5";
  add_common(modulus, c);
  modulus->add_option("--deltas", deltas, "positive ascending comma separated deltas");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  const bool json = c.format == "json";
  try {
    const WeightedSpace space{parse_p(c.p), c.alpha};

    if (*lemma) {
      Lemma1Options o;
      o.n_max = c.n_max;
      o.seed = c.seed;
      o.prefactor_scale = prefactor_scale;
      const auto rep = verify_lemma1(o);
      emit(c, "lemma1", json ? to_json(rep).dump(2) : lemma1_csv(rep), out);
      return rep.all_passed() ? kExitOk : kExitPropertyFailure;
    }

    if (*calib) {
      const int n_max = std::min(c.n_max, 8);
      const auto cal = calibrate_multiplier(default_multiplier_candidates(), n_max,
                                            default_calibration_grid());
      std::string body;
      if (json) {
        body = to_json(cal).dump(2);
      } else {
        std::ostringstream s;
        s << "candidate,max_residual,matches\n";
        for (const auto& row : cal.table) {
          s << '"' << row.candidate.label() << "\"," << row.max_residual << ','
            << (row.matches ? "true" : "false") << '\n';
        }
        body = s.str();
      }
      emit(c, "calibration", body, out);
      return cal.multiplier.validated ? kExitOk : kExitPropertyFailure;
    }

    const auto f = make_test_function(c.function, c.seed);

    if (*approx) {
      const auto seq = best_approx_sequence(f, c.n_max, space);
      std::string body;
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : seq.results) j.push_back(to_json(r));
        body = nlohmann::json{{"results", j}, {"monotonicity_violations", seq.monotonicity_violations}}.dump(2);
      } else {
        body = sequence_csv(seq);
      }
      emit(c, "best_approx", body, out);
      bool ok = seq.monotonicity_violations.empty();
      for (const auto& r : seq.results) ok = ok && r.converged;
      return ok ? kExitOk : kExitPropertyFailure;
    }

    if (*modulus) {
      ModulusOptions o;
      o.t_grid = c.t_grid;
      o.quad_size = c.quad_size;
      const auto curve = modulus_curve(f, parse_list<double>(deltas), space, o);
      std::string body;
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : curve.reports) j.push_back(to_json(r));
        body = nlohmann::json{{"reports", j}, {"monotonicity_violations", curve.monotonicity_violations}}.dump(2);
      } else {
        body = modulus_csv(curve.reports);
      }
      emit(c, "modulus", body, out);
      return curve.monotonicity_violations.empty() ? kExitOk : kExitPropertyFailure;
    }

    if (*converse) {
      const auto rows = converse_table(f, parse_list<int>(n_list), space, experiment_options(c));
      const auto bound = ratio_boundedness(rows);
      std::string body;
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        body = nlohmann::json{{"rows", j},
                              {"max_over_median", bound.max_over_median},
                              {"monotone_growth", bound.monotone_growth}}
                   .dump(2);
      } else {
        body = converse_csv(rows);
      }
      emit(c, "converse_table", body, out);
      return bound.max_over_median <= 10.0 && !bound.monotone_growth ? kExitOk : kExitPropertyFailure;
    }

    if (*dyadic) {
      const auto d = dyadic_bound(f, dyadic_n, space);
      std::string body;
      if (json) {
        body = to_json(d).dump(2);
      } else {
        std::ostringstream s;
        s << "k,E_2k,Q_norm\n";
        for (std::size_t k = 0; k < d.block_norms.size(); ++k) {
          s << k << ',' << d.e_dyadic[k] << ',' << d.block_norms[k] << '\n';
        }
        body = s.str();
      }
      emit(c, "dyadic", body, out);
      return d.all_hold() ? kExitOk : kExitPropertyFailure;
    }

    if (*classfit) {
      const auto fit = class_fit(f, space, c.n_max, lambda, experiment_options(c));
      std::string body;
      if (json) {
        body = to_json(fit).dump(2);
      } else {
        std::ostringstream s;
        s << "approx_exponent,modulus_exponent,difference,degenerate\n"
          << fit.approx_exponent << ',' << fit.modulus_exponent << ',' << fit.difference << ','
          << (fit.degenerate ? "true" : "false") << '\n';
        body = s.str();
      }
      emit(c, "class_fit", body, out);
      return kExitOk;
    }
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  return kExitUsage;
}

}  // namespace gtmod::cli
