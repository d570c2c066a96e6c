#include "vbs/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "vbs/closed_form.hpp"
#include "vbs/errors.hpp"
#include "vbs/oracle.hpp"
#include "vbs/report.hpp"
#include "vbs/vbs_states.hpp"
#include "vbs/verify.hpp"

namespace vbs::cli {

namespace {

constexpr double kDefaultVerifyTolerance = 1e-10;

struct RunConfig {
  std::string n_list = "2";
  std::string boundary = "open";
  std::string chain_list;
  std::string block_list;
  std::vector<std::string> alphas;
  std::string format = "csv";
  std::string out_path;
  std::string log_base = "e";
  bool verify = false;
  double tolerance = kDefaultVerifyTolerance;
  std::size_t budget_amps = kDefaultAmplitudeBudget;
  std::size_t budget_matrix = kDefaultMatrixBudget;
  std::string m_list = "0";
  std::vector<std::string> only;
  std::optional<int> max_chain;
};

// A row plus the closed-form spectrum it came from, before formatting.
struct SweepPoint {
  int n;
  int chain;  // -1 for open chains
  int block;
};

std::size_t default_amplitude_budget() {
  if (const char* env = std::getenv(kBudgetEnvVar)) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultAmplitudeBudget;
}

Boundary parse_boundary(const std::string& text) {
  if (text == "open") return Boundary::open;
  if (text == "periodic") return Boundary::periodic;
  throw DomainError("boundary must be 'open' or 'periodic', got '" + text + "'");
}

std::vector<SweepPoint> sweep(const RunConfig& config) {
  const Boundary boundary = parse_boundary(config.boundary);
  if (config.block_list.empty()) throw DomainError("--block is required");
  const std::vector<int> ns = parse_int_list(config.n_list);
  const std::vector<int> blocks = parse_int_list(config.block_list);
  std::vector<int> chains;
  if (!config.chain_list.empty()) chains = parse_int_list(config.chain_list);

  for (int n : ns) require_qudit_dimension(n);
  for (int block : blocks) {
    if (block < 1) throw DomainError("block length must be >= 1");
  }

  std::vector<SweepPoint> points;
  if (boundary == Boundary::open) {
    if (chains.size() > 1) throw DomainError("open chains take at most one --chain value (the oracle chain length)");
    for (int n : ns)
      for (int block : blocks) {
        if (!chains.empty() && chains.front() < block) {
          throw DomainError("--chain " + std::to_string(chains.front()) + " is shorter than block " + std::to_string(block));
        }
        points.push_back({n, -1, block});
      }
    return points;
  }
  if (chains.empty()) throw DomainError("periodic chains need --chain");
  for (int n : ns)
    for (int chain : chains) {
      if (chain < 2) throw DomainError("periodic chain needs N >= 2");
      for (int block : blocks) {
        if (block > chain) {
          throw DomainError("block " + std::to_string(block) + " longer than chain " + std::to_string(chain));
        }
        points.push_back({n, chain, block});
      }
    }
  return points;
}

std::vector<Complex> parse_alphas(const std::vector<std::string>& raw) {
  std::vector<Complex> alphas;
  for (const std::string& entry : raw) {
    std::stringstream ss(entry);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const Complex alpha = parse_alpha(item);
      if (!(alpha.real() > 0.0)) throw DomainError("alpha '" + item + "' needs a positive real part");
      if (alpha == Complex{1.0, 0.0}) throw DomainError("alpha = 1 is the von Neumann entropy; use S");
      alphas.push_back(alpha);
    }
  }
  return alphas;
}

double log_base_for(const std::string& base, int n) {
  if (base == "e") return std::exp(1.0);
  if (base == "2") return 2.0;
  if (base == "n") return n;
  throw DomainError("--log-base must be e, 2 or n");
}

double rescale(double nats, const RunConfig& config, int n) {
  return config.log_base == "e" ? nats : entropy_in_base(nats, log_base_for(config.log_base, n));
}

Complex rescale(Complex nats, const RunConfig& config, int n) {
  return {rescale(nats.real(), config, n), rescale(nats.imag(), config, n)};
}

struct ClosedForm {
  double singlet;
  double adjoint;
  std::vector<double> eigenvalues;
  double entropy;
};

ClosedForm closed_form_at(const SweepPoint& p) {
  if (p.chain < 0) {
    const OpenSpectrum s = lambda_open(p.n, p.block);
    return {s.singlet, s.adjoint, s.eigenvalues(), entropy_open(p.n, p.block)};
  }
  const PeriodicSpectrum s = lambda_periodic(p.n, p.chain, p.block);
  return {s.singlet, s.adjoint, s.eigenvalues(), entropy_periodic(p.n, p.chain, p.block)};
}

RenyiValue closed_renyi_at(const SweepPoint& p, Complex alpha) {
  if (alpha.imag() == 0.0) {
    const double value =
        p.chain < 0 ? renyi_open(p.n, p.block, alpha.real()) : renyi_periodic(p.n, p.chain, p.block, alpha.real());
    return {Complex{value, 0.0}, false};
  }
  return p.chain < 0 ? renyi_open(p.n, p.block, alpha) : renyi_periodic(p.n, p.chain, p.block, alpha);
}

SpectrumReport oracle_at(const SweepPoint& p, const RunConfig& config) {
  const std::vector<int> chains = config.chain_list.empty() ? std::vector<int>{} : parse_int_list(config.chain_list);
  const ChainSpec spec = p.chain < 0 ? ChainSpec{p.n, chains.empty() ? p.block : chains.front(), Boundary::open}
                                     : ChainSpec{p.n, p.chain, Boundary::periodic};
  const PureState state = vbs_state(spec, config.budget_amps);
  return schmidt_spectrum(state, {0, static_cast<std::size_t>(p.block)}, config.budget_matrix);
}

std::string render_rows(const std::vector<ResultRow>& rows, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json array = nlohmann::json::array();
    for (const ResultRow& row : rows) array.push_back(to_json(row));
    out << array.dump(2) << '\n';
  } else {
    out << csv_header() << '\n';
    for (const ResultRow& row : rows) out << to_csv(row) << '\n';
  }
  return out.str();
}

std::vector<ResultRow> spectrum_rows(const RunConfig& config, bool with_entropies, std::ostream& err) {
  const std::vector<SweepPoint> points = sweep(config);
  const std::vector<Complex> alphas = with_entropies ? parse_alphas(config.alphas) : std::vector<Complex>{};
  for (const SweepPoint& p : points) log_base_for(config.log_base, p.n);

  if (config.verify) {
    // Fail on budgets before any numerics run.
    const std::vector<int> chains = config.chain_list.empty() ? std::vector<int>{} : parse_int_list(config.chain_list);
    for (const SweepPoint& p : points) {
      const ChainSpec spec = p.chain < 0 ? ChainSpec{p.n, chains.empty() ? p.block : chains.front(), Boundary::open}
                                         : ChainSpec{p.n, p.chain, Boundary::periodic};
      require_feasible(spec, config.budget_amps);
    }
  }

  std::vector<ResultRow> rows;
  for (const SweepPoint& p : points) {
    const ClosedForm cf = closed_form_at(p);
    ResultRow base;
    base.n = p.n;
    base.chain = p.chain;
    base.block = p.block;
    base.boundary = config.boundary;
    base.lambda_singlet = cf.singlet;
    base.lambda_adjoint = cf.adjoint;
    base.entropy = rescale(cf.entropy, config, p.n);

    std::optional<SpectrumReport> oracle;
    double deviation = 0.0;
    if (config.verify) {
      oracle = oracle_at(p, config);
      deviation = spectrum_distance(oracle->eigenvalues, cf.eigenvalues);
      if (with_entropies) deviation = std::max(deviation, std::abs(oracle->von_neumann - cf.entropy));
    }

    auto finish = [&](ResultRow row, double extra_dev) {
      if (config.verify) {
        const double dev = std::max(deviation, extra_dev);
        row.max_dev = dev;
        row.verified = dev < config.tolerance;
      }
      rows.push_back(std::move(row));
    };

    if (alphas.empty()) {
      finish(base, 0.0);
      continue;
    }
    for (const Complex alpha : alphas) {
      ResultRow row = base;
      row.alpha = alpha;
      const RenyiValue value = closed_renyi_at(p, alpha);
      double extra = 0.0;
      if (value.branch_point) {
        err << "note: alpha=" << format_alpha(alpha) << " is a Renyi branch point at n=" << p.n << " L=" << p.block
            << "; S_alpha left empty\n";
      } else {
        row.renyi = rescale(value.value, config, p.n);
        if (oracle) {
          const RenyiValue exact = alpha.imag() == 0.0 ? RenyiValue{Complex{renyi(*oracle, alpha.real()), 0.0}, false}
                                                        : renyi(*oracle, alpha);
          extra = exact.branch_point ? 0.0 : std::abs(exact.value - value.value);
        }
      }
      finish(std::move(row), extra);
    }
  }
  return rows;
}

std::string branch_point_table(const RunConfig& config) {
  if (config.block_list.empty()) throw DomainError("--block is required");
  const std::vector<int> ns = parse_int_list(config.n_list);
  const std::vector<int> blocks = parse_int_list(config.block_list);
  const std::vector<int> ms = parse_int_list(config.m_list);

  nlohmann::json array = nlohmann::json::array();
  std::ostringstream csv;
  csv << "n,L,m,sign,alpha_re,alpha_im,residual,even_L\n";
  for (int n : ns) {
    for (int block : blocks) {
      for (const BranchPoint& bp : branch_points(n, block, ms.front(), ms.back())) {
        if (std::find(ms.begin(), ms.end(), bp.m) == ms.end()) continue;
        csv << n << ',' << block << ',' << bp.m << ',' << (bp.sign > 0 ? "+" : "-") << ','
            << format_double(bp.alpha.real()) << ',' << format_double(bp.alpha.imag()) << ','
            << format_double(bp.residual) << ',' << (bp.even_block ? "true" : "false") << '\n';
        array.push_back({{"n", n},
                         {"L", block},
                         {"m", bp.m},
                         {"sign", bp.sign},
                         {"alpha_re", bp.alpha.real()},
                         {"alpha_im", bp.alpha.imag()},
                         {"residual", bp.residual},
                         {"even_L", bp.even_block}});
      }
    }
  }
  return config.format == "json" ? array.dump(2) + "\n" : csv.str();
}

struct VerifyOutput {
  std::string text;
  bool passed;
};

VerifyOutput verify_report(const RunConfig& config) {
  VerifyOptions options;
  if (!config.n_list.empty()) options.n_values = parse_int_list(config.n_list);
  options.max_chain = config.max_chain;
  for (const std::string& entry : config.only) {
    std::stringstream ss(entry);
    std::string item;
    while (std::getline(ss, item, ',')) options.only.push_back(item);
  }
  options.amplitude_budget = config.budget_amps;
  options.matrix_budget = config.budget_matrix;

  const std::vector<CheckResult> results = run_verification(options);
  const nlohmann::json summary = verification_summary(results);
  const bool passed = summary.at("passed").get<bool>();
  if (config.format == "json") return {summary.dump(2) + "\n", passed};

  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name << std::right
        << " max_dev=" << std::setprecision(6) << r.max_deviation << " tol=" << r.tolerance << " points=" << r.points;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
  }
  out << (passed ? "all checks passed" : "verification FAILED") << '\n';
  return {out.str(), passed};
}

void emit(const std::string& text, const RunConfig& config, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + config.out_path + "'");
  file << text;
}

void add_common(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--out", config.out_path, "Write results to this file instead of stdout");
  cmd->add_option("--budget-amps", config.budget_amps, "Maximum number of state amplitudes");
  cmd->add_option("--budget-matrix", config.budget_matrix, "Maximum dense matrix dimension");
}

void add_sweep(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--n", config.n_list, "Qudit dimension(s): 3, 2..4 or 2,3");
  cmd->add_option("--boundary", config.boundary, "open or periodic")->check(CLI::IsMember({"open", "periodic"}));
  cmd->add_option("--chain", config.chain_list, "Chain length(s) N (periodic); oracle chain length (open)");
  cmd->add_option("--block", config.block_list, "Block length(s) L")->required();
  cmd->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--verify", config.verify, "Cross-check against the brute-force oracle");
  cmd->add_option("--tol", config.tolerance, "Oracle agreement tolerance for --verify");
  add_common(cmd, config);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.budget_amps = default_amplitude_budget();

  CLI::App app{"Entanglement spectra of SU(n) valence-bond-solid chains"};
  app.require_subcommand(1);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Block reduced-density-matrix eigenvalues");
  add_sweep(spectrum, config);

  CLI::App* entropy = app.add_subcommand("entropy", "Von Neumann and Renyi entropies of a block");
  add_sweep(entropy, config);
  entropy->add_option("--alpha", config.alphas, "Renyi index: real or a+bi (repeatable, comma-separated)");
  entropy->add_option("--log-base", config.log_base, "Display base: e, 2 or n")->check(CLI::IsMember({"e", "2", "n"}));

  CLI::App* verify = app.add_subcommand("verify", "Run the closed-form versus oracle verification grid");
  verify->add_option("--n", config.n_list, "Restrict the grid to these qudit dimensions");
  verify->add_option("--chain", config.max_chain, "Cap every chain length at this value");
  verify->add_option("--only", config.only, "Run only these checks (repeatable, comma-separated)");
  verify->add_option("--format", config.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_common(verify, config);

  CLI::App* branch = app.add_subcommand("branch-points", "Complex-alpha branch points of the Renyi entropy");
  branch->add_option("--n", config.n_list, "Qudit dimension(s)");
  branch->add_option("--block", config.block_list, "Block length(s) L >= 2")->required();
  branch->add_option("--m", config.m_list, "Branch integers, e.g. 0..2");
  branch->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(branch, config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (verify->parsed()) {
      if (config.format == "csv") config.format = "text";
      if (!verify->count("--n")) config.n_list.clear();
      const VerifyOutput result = verify_report(config);
      emit(result.text, config, out);
      return result.passed ? kSuccess : kVerificationFailed;
    }
    if (branch->parsed()) {
      emit(branch_point_table(config), config, out);
      return kSuccess;
    }
    const bool with_entropies = entropy->parsed();
    const std::vector<ResultRow> rows = spectrum_rows(config, with_entropies, err);
    emit(render_rows(rows, config.format), config, out);
    if (config.verify) {
      for (const ResultRow& row : rows) {
        if (row.verified && !*row.verified) {
          err << "verification failed for n=" << row.n << " L=" << row.block << '\n';
          return kVerificationFailed;
        }
      }
    }
    return kSuccess;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return kBudgetError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace vbs::cli
