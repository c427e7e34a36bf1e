#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "specfc/criticality.hpp"
#include "specfc/extremal.hpp"
#include "specfc/graph6.hpp"
#include "specfc/spectral.hpp"
#include "specfc/verify.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

double binomial_guess(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

struct AnalyzeArgs {
  std::string input = "-";
  int k = -1;
  std::string format = "plain";
  int tutte_cap = specfc::kTutteExhaustiveCap;
};

int run_analyze(const AnalyzeArgs& args) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (args.input != "-") {
    file.open(args.input);
    if (!file) {
      std::cerr << "analyze: cannot open " << args.input << "\n";
      return kExitUsage;
    }
    in = &file;
  }

  std::cout << std::setprecision(12);
  std::string line;
  long long line_no = 0;
  long long warnings = 0;
  long long index = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    specfc::Graph g;
    try {
      g = specfc::parse_graph6(line);
    } catch (const specfc::Graph6Error& e) {
      ++warnings;
      std::cerr << "analyze: line " << line_no << ": " << e.what() << "\n";
      continue;
    }
    ++index;

    std::ostringstream rec;
    rec << std::setprecision(12);
    rec << "n=" << g.order() << " m=" << g.edge_count();
    if (g.order() > 0) {
      const double rho = specfc::largest_eigenvalue(specfc::adjacency_matrix(g)).value;
      const double q = specfc::largest_eigenvalue(specfc::signless_laplacian(g)).value;
      rec << " min_degree=" << specfc::min_degree(g)
          << " connected=" << (specfc::is_connected(g) ? 1 : 0) << " rho=" << rho
          << " q=" << q;
    } else {
      rec << " min_degree=- connected=1 rho=0 q=0";
    }

    if (args.k >= 0) {
      rec << " k=" << args.k;
      if (args.k > g.order()) {
        rec << " kfc_matching=error(k>n) kfc_tutte=error(k>n)";
      } else {
        specfc::CriticalityCertificate shown;
        bool have_witness = false;
        if (binomial_guess(g.order(), args.k) <= 2e5 && g.order() <= 24) {
          const auto cert = specfc::is_kfc_matching(g, args.k);
          rec << " kfc_matching=" << (cert.verdict ? "true" : "false");
          if (!cert.verdict) {
            shown = cert;
            have_witness = true;
          }
        } else {
          rec << " kfc_matching=uncomputed(order)";
        }
        if (g.order() <= args.tutte_cap) {
          const auto cert = specfc::is_kfc_tutte(g, args.k);
          rec << " kfc_tutte=" << (cert.verdict ? "true" : "false");
          if (!cert.verdict) {
            shown = cert;
            have_witness = true;
          }
        } else {
          rec << " kfc_tutte=uncomputed(order)";
        }
        if (have_witness) {
          rec << " witness_kind="
              << (shown.witness_kind == specfc::WitnessKind::parity
                      ? "parity"
                      : shown.witness_kind == specfc::WitnessKind::matching ? "matching"
                                                                            : "tutte");
          if (shown.witness_kind != specfc::WitnessKind::parity)
            rec << " witness=" << specfc::to_string(shown.witness);
        }
      }
    }

    if (args.format == "record") {
      std::cout << "graph " << index << "\n";
      std::istringstream fields(rec.str());
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        std::cout << "  " << field.substr(0, eq) << " " << field.substr(eq + 1) << "\n";
      }
    } else {
      std::cout << rec.str() << "\n";
    }
  }
  if (warnings > 0) std::cerr << "analyze: " << warnings << " parse warning(s)\n";
  return 0;
}

struct ThresholdArgs {
  int n = 0, delta = 0, k = 0;
  std::string which = "both";
  double tol = 1e-7;
  std::string format = "plain";
};

int run_threshold(const ThresholdArgs& args) {
  const specfc::ThresholdReport r =
      specfc::thresholds({args.n, args.delta, args.k}, args.tol);
  if (args.format == "record") {
    std::cout << specfc::to_text(r) << "\n";
    return 0;
  }
  std::cout << std::setprecision(15);
  std::cout << "n=" << args.n << " delta=" << args.delta << " k=" << args.k << "\n";
  if (args.which != "q")
    std::cout << "rho_root=" << r.rho_root << " rho_quotient=" << r.rho_quotient
              << " rho_dense=" << r.rho_dense << "\n";
  if (args.which != "rho")
    std::cout << "q_root=" << r.q_root << " q_quotient=" << r.q_quotient
              << " q_dense=" << r.q_dense << "\n";
  std::cout << "max_discrepancy=" << r.max_discrepancy << "\n";
  return 0;
}

struct ExtremalArgs {
  int n = 0, delta = 0, k = 0;
};

int run_extremal(const ExtremalArgs& args) {
  std::cout << specfc::emit_graph6(specfc::build_H({args.n, args.delta, args.k})) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string theorem;
  std::string lemma;
  bool sharpness = false;

  int n = 0;
  std::string delta = "1";
  int k = 0;
  std::string corpus = "random";
  int count = 1000;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string file;
  bool connected = false;
  bool relaxed = false;
  int jobs = 1;
  double slack = 1e-9;
  double tol = 1e-7;
  int n_extra = 8;
  int trials = 500;
  int k_min = 0;
  double margin = 1e-9;
  double rand_margin = 1e-10;
  std::string h2_bound = "standard";
  std::string format = "plain";
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int run_verify(const VerifyArgs& args) {
  const int modes = (!args.theorem.empty() ? 1 : 0) + (!args.lemma.empty() ? 1 : 0) +
                    (args.sharpness ? 1 : 0);
  if (modes != 1) {
    std::cerr << "verify: exactly one of --theorem, --lemma, --sharpness is required\n";
    return kExitUsage;
  }

  if (args.sharpness) {
    const auto [dlo, dhi] = parse_range(args.delta);
    if (dlo != dhi) throw std::invalid_argument("verify: --sharpness needs a single delta");
    const specfc::ExtremalParams p{args.n, dlo, args.k};
    const auto rep = specfc::verify_sharpness_report(p, args.tol);
    std::cout << "sharpness n=" << p.n << " delta=" << p.delta << " k=" << p.k << "\n"
              << "attains_rho=" << (rep.attains_rho ? "true" : "false") << "\n"
              << "attains_q=" << (rep.attains_q ? "true" : "false") << "\n"
              << "tutte_refutes=" << (rep.refuted_by_tutte ? "true" : "false")
              << " witness=" << specfc::to_string(rep.witness)
              << " out_copy=" << (rep.witness_is_out_copy ? "true" : "false") << "\n"
              << "RESULT: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? 0 : kExitViolation;
  }

  if (!args.lemma.empty()) {
    const specfc::LemmaCheck which = specfc::lemma_check_from_name(args.lemma);
    specfc::LemmaGridOptions options;
    std::tie(options.delta_min, options.delta_max) = parse_range(args.delta);
    options.n_extra = args.n_extra;
    options.trials = args.trials;
    options.k_min = args.k_min;
    options.seed = args.seed;
    options.margin = args.margin;
    options.rand_margin = args.rand_margin;
    if (args.h2_bound == "shifted")
      options.h2_bound = specfc::H2Bound::shifted;
    else if (args.h2_bound != "standard")
      throw std::invalid_argument("verify: --h2-bound must be standard or shifted");
    const specfc::GridReport rep = specfc::verify_lemma_grid(which, options);
    std::cout << "lemma=" << specfc::to_string(which) << " delta=" << options.delta_min << ".."
              << options.delta_max << " n_extra=" << options.n_extra
              << " trials=" << options.trials << " seed=" << options.seed << "\n"
              << "cases=" << rep.cases << "\n"
              << "violations=" << rep.violations.size() << "\n";
    for (const std::string& v : rep.violations) std::cout << "violation: " << v << "\n";
    std::cout << "RESULT: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? 0 : kExitViolation;
  }

  // theorem mode
  specfc::SpectralKind which;
  if (args.theorem == "rho")
    which = specfc::SpectralKind::rho;
  else if (args.theorem == "q")
    which = specfc::SpectralKind::q;
  else
    throw std::invalid_argument("verify: --theorem must be rho or q");

  const auto [dlo, dhi] = parse_range(args.delta);
  if (dlo != dhi) throw std::invalid_argument("verify: --theorem needs a single delta");
  const specfc::ExtremalParams p{args.n, dlo, args.k};

  specfc::CorpusSpec corpus;
  corpus.n = args.n;
  corpus.min_degree = dlo;
  corpus.require_connected = args.connected;
  if (args.corpus == "random") {
    corpus.source = specfc::CorpusSpec::Source::random;
    corpus.edge_prob = args.p;
    corpus.count = args.count;
    corpus.seed = args.seed;
  } else if (args.corpus == "exhaustive") {
    corpus.source = specfc::CorpusSpec::Source::exhaustive;
  } else if (args.corpus == "file") {
    corpus.source = specfc::CorpusSpec::Source::graph6_file;
    corpus.path = args.file;
    if (args.file.empty()) throw std::invalid_argument("verify: --corpus file needs --file");
  } else {
    throw std::invalid_argument("verify: --corpus must be random, exhaustive, or file");
  }

  specfc::VerifyOptions options;
  options.relaxed = args.relaxed;
  options.jobs = args.jobs;
  options.slack = args.slack;
  if (args.format == "record") {
    std::cout << std::setprecision(12);
    options.record = [](long long index, const specfc::Graph& g, double value,
                        const char* klass) {
      std::cout << "graph " << index << ": " << specfc::emit_graph6(g) << " value=" << value
                << " class=" << klass << "\n";
    };
  }

  const specfc::VerificationReport rep = specfc::verify_theorem(corpus, p, which, options);
  std::cout << "corpus=" << args.corpus;
  if (args.corpus == "random")
    std::cout << " count=" << args.count << " p=" << args.p << " seed=" << args.seed;
  if (args.corpus == "file") std::cout << " file=" << args.file;
  std::cout << " relaxed=" << (args.relaxed ? "true" : "false") << "\n";
  std::cout << specfc::to_text(rep) << "\n";
  for (const std::string& g6 : rep.counterexamples) std::cout << g6 << "\n";
  const bool pass = rep.counterexamples.empty();
  std::cout << "RESULT: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral thresholds and factor-criticality for graphs of fixed minimum degree"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "per-graph statistics (and criticality verdicts) for graph6 input");
  analyze->add_option("input", analyze_args.input, "graph6 file, or - for stdin")
      ->capture_default_str();
  analyze->add_option("--k", analyze_args.k, "also decide k-factor-criticality for this k");
  analyze->add_option("--format", analyze_args.format, "plain | record")
      ->check(CLI::IsMember({"plain", "record"}))
      ->capture_default_str();
  analyze->add_option("--tutte-cap", analyze_args.tutte_cap,
                      "largest order for the exhaustive odd-component decider")
      ->capture_default_str();

  ThresholdArgs threshold_args;
  CLI::App* threshold = app.add_subcommand(
      "threshold", "triple-checked spectral thresholds of the extremal graph");
  threshold->add_option("n", threshold_args.n, "graph order")->required();
  threshold->add_option("delta", threshold_args.delta, "minimum degree")->required();
  threshold->add_option("k", threshold_args.k, "criticality parameter")->required();
  threshold->add_option("which", threshold_args.which, "rho | q | both")
      ->check(CLI::IsMember({"rho", "q", "both"}))
      ->capture_default_str();
  threshold->add_option("--tol", threshold_args.tol, "cross-route consistency tolerance")
      ->capture_default_str();
  threshold->add_option("--format", threshold_args.format, "plain | record")
      ->check(CLI::IsMember({"plain", "record"}))
      ->capture_default_str();

  ExtremalArgs extremal_args;
  CLI::App* extremal = app.add_subcommand("extremal", "emit the extremal graph as graph6");
  extremal->add_option("n", extremal_args.n, "graph order")->required();
  extremal->add_option("delta", extremal_args.delta, "minimum degree")->required();
  extremal->add_option("k", extremal_args.k, "criticality parameter")->required();

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "falsification searches, sharpness checks, and property grids");
  verify->add_option("--theorem", verify_args.theorem, "rho | q: corpus falsification search");
  verify->add_option("--lemma", verify_args.lemma,
                     "h1 | h2 | h3 | SP | GE | inequit: property suite");
  verify->add_flag("--sharpness", verify_args.sharpness,
                   "check tightness of both bounds at (n, delta, k)");
  verify->add_option("--n", verify_args.n, "graph order");
  verify->add_option("--delta", verify_args.delta,
                     "minimum degree (single value, or a..b range for --lemma)")
      ->capture_default_str();
  verify->add_option("--k", verify_args.k, "criticality parameter")->capture_default_str();
  verify->add_option("--corpus", verify_args.corpus, "random | exhaustive | file")
      ->capture_default_str();
  verify->add_option("--count", verify_args.count, "random corpus size")->capture_default_str();
  verify->add_option("--p", verify_args.p, "random corpus edge probability")
      ->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "random seed")->capture_default_str();
  verify->add_option("--file", verify_args.file, "graph6 corpus path");
  verify->add_flag("--connected", verify_args.connected, "restrict corpus to connected graphs");
  verify->add_flag("--relaxed", verify_args.relaxed,
                   "drop the lower bound on n (exploratory mode)");
  verify->add_option("--jobs", verify_args.jobs, "corpus verification threads")
      ->capture_default_str();
  verify->add_option("--slack", verify_args.slack, "threshold comparison slack")
      ->capture_default_str();
  verify->add_option("--tol", verify_args.tol, "sharpness equality tolerance")
      ->capture_default_str();
  verify->add_option("--n-extra", verify_args.n_extra, "grid height above each lower bound")
      ->capture_default_str();
  verify->add_option("--trials", verify_args.trials, "randomized trials per suite")
      ->capture_default_str();
  verify->add_option("--k-min", verify_args.k_min,
                     "lower bound for k in the h-family grids")
      ->capture_default_str();
  verify->add_option("--margin", verify_args.margin, "required strict gap on grid inequalities")
      ->capture_default_str();
  verify->add_option("--rand-margin", verify_args.rand_margin,
                     "required strict gap on randomized monotonicity")
      ->capture_default_str();
  verify->add_option("--h2-bound", verify_args.h2_bound,
                     "standard | shifted lower bound for the h2 grid")
      ->check(CLI::IsMember({"standard", "shifted"}))
      ->capture_default_str();
  verify->add_option("--format", verify_args.format, "plain | record")
      ->check(CLI::IsMember({"plain", "record"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
    if (app.got_subcommand(threshold)) return run_threshold(threshold_args);
    if (app.got_subcommand(extremal)) return run_extremal(extremal_args);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
  } catch (const specfc::InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "see '" << (argc > 0 ? argv[0] : "specfc") << " <subcommand> --help'\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
