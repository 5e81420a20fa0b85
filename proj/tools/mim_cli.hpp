#pragma once

// Command-line front end. Exit codes: 0 success, 2 invalid input, 3 degenerate math
// (no finite threshold, no crossing in range).

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mim/mim.hpp"

namespace mim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitDegenerate = 3;

using Json = nlohmann::ordered_json;

inline std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (auto field : split_fields(text)) out.push_back(parse_number(field));
  return out;
}

struct Range {
  double lo;
  double hi;
  double step;
};

inline Range parse_range(const std::string& text) {
  const auto parts = split_fields(text, ':');
  if (parts.size() != 3) throw Error(ErrorCode::OutOfRange, "range must be a:b:step, got '" + text + "'");
  Range r{parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
  if (!(r.lo < r.hi) || !(r.step > 0.0)) throw Error(ErrorCode::OutOfRange, "range needs a < b and step > 0");
  return r;
}

inline Json table_to_json(const SweepTable& table) {
  Json meta = Json::object();
  for (const auto& [k, v] : table.meta()) meta[k] = v;
  return Json{{"meta", meta}, {"columns", table.columns()}, {"rows", table.rows()}};
}

struct Options {
  std::string dist;
  bool normalize = false;
  double omega = 0.0;
  double alpha = 2.0;
  std::string range;
  std::string out;
  std::string format = "csv";
  std::string rule = "theorem1";
  double search_max = 100.0;
  double lower = 0.0;
  double upper = 0.0;
  double omega0 = 0.5;
  double mu0 = 0.0;
  double mu1 = 0.0;
  double sigma = 1.0;
  std::string priors;
  std::string means;
  std::string sigmas;
  std::size_t minority = 0;
  std::size_t points = 101;
  std::string grid = "log";
  std::string which;
};

class Runner {
public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Message importance measure toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_dist = [&](CLI::App* sub) {
      sub->add_option("--dist", o.dist, "comma-separated probabilities")->required();
      sub->add_flag("--normalize", o.normalize, "rescale the probabilities to sum to 1");
    };
    auto add_output = [&](CLI::App* sub) {
      sub->add_option("--out", o.out, "output path (default: standard output)");
      sub->add_option("--format", o.format, "table format")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* eval = app.add_subcommand("eval", "MIM and reference entropies of one distribution");
    add_dist(eval);
    eval->add_option("--omega", o.omega, "importance coefficient")->required();
    eval->add_option("--alpha", o.alpha, "Renyi order");
    add_output(eval);

    auto* sweep_w = app.add_subcommand("sweep-omega", "MIM versus the importance coefficient");
    add_dist(sweep_w);
    sweep_w->add_option("--range", o.range, "omega_min:omega_max:step")->required();
    add_output(sweep_w);

    auto* sweep_p_cmd = app.add_subcommand("sweep-p", "binary MIM versus the minority mass p0");
    sweep_p_cmd->add_option("--omega", o.omega, "importance coefficient")->required();
    sweep_p_cmd->add_option("--range", o.range, "p_min:p_max:step")->required();
    add_output(sweep_p_cmd);

    auto* select = app.add_subcommand("select-omega", "importance coefficient threshold");
    add_dist(select);
    select->add_option("--rule", o.rule, "threshold rule")->check(CLI::IsMember({"theorem1", "theorem3", "crossing"}));
    select->add_option("--search-max", o.search_max, "upper end of the crossing search");
    add_output(select);

    auto* prior = app.add_subcommand("estimate-prior", "minority prior from probability bounds");
    prior->add_option("--lower", o.lower, "lower bound on the minority prior")->required();
    prior->add_option("--upper", o.upper, "upper bound on the minority prior")->required();
    add_output(prior);

    auto* chernoff = app.add_subcommand("chernoff", "Bayes error and its Chernoff bound");
    chernoff->add_option("--omega0", o.omega0, "minority prior (binary case)");
    chernoff->add_option("--mu0", o.mu0, "minority mean (binary case)");
    chernoff->add_option("--mu1", o.mu1, "majority mean (binary case)");
    chernoff->add_option("--sigma", o.sigma, "shared sigma (binary case)");
    chernoff->add_option("--priors", o.priors, "class priors, comma-separated (M-ary case)");
    chernoff->add_option("--means", o.means, "class means (M-ary case)");
    chernoff->add_option("--sigmas", o.sigmas, "class sigmas (M-ary case)");
    chernoff->add_option("--minority", o.minority, "index of the minority class (M-ary case)");
    add_output(chernoff);

    auto* compare = app.add_subcommand("compare-worstcase", "worst-case versus estimated prior decision error");
    compare->add_option("--lower", o.lower, "lower bound on the minority prior")->required();
    compare->add_option("--upper", o.upper, "upper bound on the minority prior")->required();
    compare->add_option("--mu0", o.mu0, "minority mean")->required();
    compare->add_option("--mu1", o.mu1, "majority mean")->required();
    compare->add_option("--sigma", o.sigma, "shared sigma");
    compare->add_option("--points", o.points, "number of true-prior grid points");
    compare->add_option("--grid", o.grid, "grid spacing")->check(CLI::IsMember({"log", "linear"}));
    add_output(compare);

    auto* fig = app.add_subcommand("fig", "figure presets");
    fig->add_option("--which", o.which, "figure")->required()->check(CLI::IsMember({"1a", "1b", "3"}));
    add_output(fig);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitInvalid;
    }

    try {
      if (eval->parsed()) return cmd_eval(o);
      if (sweep_w->parsed()) return cmd_sweep_omega(o);
      if (sweep_p_cmd->parsed()) return cmd_sweep_p(o);
      if (select->parsed()) return cmd_select_omega(o);
      if (prior->parsed()) return cmd_estimate_prior(o);
      if (chernoff->parsed()) return cmd_chernoff(o);
      if (compare->parsed()) return cmd_compare_worstcase(o);
      if (fig->parsed()) return cmd_fig(o);
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return e.is_degenerate() ? kExitDegenerate : kExitInvalid;
    } catch (const std::ios_base::failure& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitInvalid;
    }
    return kExitInvalid;
  }

private:
  Distribution distribution(const Options& o) const {
    return make_distribution(parse_list(o.dist), o.normalize ? Normalize::on : Normalize::off);
  }

  int emit(const Options& o, const std::string& body) {
    if (o.out.empty()) {
      out_ << body;
      return kExitOk;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err_ << "error: cannot open " << o.out << '\n';
      return kExitInvalid;
    }
    file << body;
    return kExitOk;
  }

  int emit_json(const Options& o, const Json& j) { return emit(o, j.dump(2) + "\n"); }

  int emit_table(const Options& o, const SweepTable& table) {
    if (o.format == "json") return emit_json(o, table_to_json(table));
    return emit(o, to_csv(table));
  }

  int cmd_eval(const Options& o) {
    const Distribution d = distribution(o);
    const ImportanceCoefficient w{o.omega};
    Json j;
    j["n"] = d.size();
    j["omega"] = w.value();
    j["mim"] = mim(d, w);
    j["shannon"] = shannon(d);
    j["renyi_order"] = o.alpha;
    j["renyi"] = renyi(d, RenyiOrder{o.alpha});
    j["lower_bound"] = mim_lower_bound(d, w);
    j["asymptote"] = mim_asymptote(d, w);
    j["mim_uniform"] = mim(uniform(d.size()), w);
    return emit_json(o, j);
  }

  int cmd_sweep_omega(const Options& o) {
    const Range r = parse_range(o.range);
    return emit_table(o, sweep_omega(distribution(o), r.lo, r.hi, r.step));
  }

  int cmd_sweep_p(const Options& o) {
    const Range r = parse_range(o.range);
    return emit_table(o, sweep_p(ImportanceCoefficient{o.omega}, r.lo, r.hi, r.step));
  }

  int cmd_select_omega(const Options& o) {
    const Distribution d = distribution(o);
    Json j;
    if (o.rule == "crossing") {
      const auto w = crossing_coefficient(d, o.search_max);
      j["threshold"] = w.value();
      j["rule"] = to_string(w.provenance());
      j["search_max"] = o.search_max;
      return emit_json(o, j);
    }
    const ThresholdReport report = o.rule == "theorem3" ? theorem3_threshold(d) : theorem1_threshold(d);
    j["threshold"] = report.threshold;
    j["witness"] = report.witness_prob;
    j["rule"] = to_string(report.rule);
    j["binary_extension"] = report.binary_extension;
    return emit_json(o, j);
  }

  int cmd_estimate_prior(const Options& o) {
    const PriorBounds b{o.lower, o.upper};
    const double p_hat = estimate_prior(b);
    // the degenerate interval has no balancing ratio; report its limit 1/p
    const ImportanceCoefficient w = b.degenerate() ? ImportanceCoefficient{1.0 / p_hat, Provenance::balancing}
                                                   : select_omega(b);
    Json j;
    j["lower"] = b.lower();
    j["upper"] = b.upper();
    j["omega"] = w.value();
    j["p_hat"] = p_hat;
    j["residual"] = balanced_importance_residual(b, w);
    return emit_json(o, j);
  }

  int cmd_chernoff(const Options& o) {
    Json j;
    if (!o.priors.empty()) {
      const auto priors = parse_list(o.priors);
      const auto means = parse_list(o.means);
      const auto sigmas = o.sigmas.empty() ? std::vector<double>(means.size(), o.sigma) : parse_list(o.sigmas);
      if (means.size() != priors.size() || sigmas.size() != priors.size()) {
        throw Error(ErrorCode::ModelMismatch, "--priors, --means and --sigmas need equal lengths");
      }
      std::vector<GaussianHypothesis> hyps;
      for (std::size_t k = 0; k < means.size(); ++k) hyps.emplace_back(means[k], sigmas[k]);
      const HypothesisEnsemble e(priors, std::move(hyps), o.minority);
      const MaryBound bound = mary_error_bound_detail(e);
      j["classes"] = e.size();
      j["minority"] = e.minority_index();
      j["alpha"] = bound.alpha;
      j["bound"] = bound.bound;
      j["oracle"] = mary_error_oracle(e);
      return emit_json(o, j);
    }
    const GaussianHypothesis h0{o.mu0, o.sigma};
    const GaussianHypothesis h1{o.mu1, o.sigma};
    const ChernoffResult result = chernoff_gaussian(o.omega0, h0, h1);
    j["omega0"] = o.omega0;
    j["beta"] = result.beta;
    j["alpha"] = result.exponent.alpha;
    j["clamped"] = result.exponent.clamped;
    j["k"] = k_alpha(result.exponent.alpha, o.omega0, result.beta);
    j["bound"] = result.bound;
    j["oracle"] = bayes_error_oracle_binary(o.omega0, h0, h1);
    return emit_json(o, j);
  }

  int cmd_compare_worstcase(const Options& o) {
    const PriorBounds b{o.lower, o.upper};
    SweepTable table = compare_worstcase(b, GaussianHypothesis{o.mu0, o.sigma}, GaussianHypothesis{o.mu1, o.sigma},
                                         o.points, o.grid == "linear" ? GridSpacing::linear : GridSpacing::log);
    const ExcessError excess = mean_excess_error(table);
    table.set_meta("mean_excess_worstcase", format_number(excess.worstcase));
    table.set_meta("mean_excess_mim", format_number(excess.mim));
    return emit_table(o, table);
  }

  int cmd_fig(const Options& o) {
    if (o.which == "1a") return emit_table(o, figure_1a());
    if (o.which == "1b") return emit_table(o, figure_1b());
    return emit_table(o, figure_3());
  }

  std::ostream& out_;
  std::ostream& err_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace mim::cli
