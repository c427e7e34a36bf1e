#include "specfc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "specfc/criticality.hpp"
#include "specfc/graph6.hpp"
#include "specfc/spectral.hpp"

namespace specfc {

namespace {

constexpr int kExhaustiveOrderCap = 7;
constexpr std::size_t kVerifyChunk = 8192;

long long stream_corpus(const CorpusSpec& spec, const std::function<void(Graph&&)>& sink) {
  const auto passes = [&spec](const Graph& g) {
    if (spec.min_degree && (g.order() == 0 || min_degree(g) != *spec.min_degree)) return false;
    if (spec.require_connected && !is_connected(g)) return false;
    return true;
  };

  long long emitted = 0;
  switch (spec.source) {
    case CorpusSpec::Source::exhaustive: {
      if (spec.n < 1 || spec.n > kExhaustiveOrderCap)
        throw std::invalid_argument("generate_corpus: exhaustive mode needs 1 <= n <= 7");
      const int n = spec.n;
      std::vector<std::pair<int, int>> all_pairs;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
      const int bits = static_cast<int>(all_pairs.size());
      std::vector<int> degree(n);
      std::vector<std::pair<int, int>> edges;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::fill(degree.begin(), degree.end(), 0);
        edges.clear();
        for (int b = 0; b < bits; ++b)
          if ((mask >> b) & 1) {
            edges.push_back(all_pairs[b]);
            ++degree[all_pairs[b].first];
            ++degree[all_pairs[b].second];
          }
        if (spec.min_degree &&
            *std::min_element(degree.begin(), degree.end()) != *spec.min_degree)
          continue;
        Graph g(n, edges);
        if (spec.require_connected && !is_connected(g)) continue;
        sink(std::move(g));
        ++emitted;
      }
      break;
    }
    case CorpusSpec::Source::graph6_file: {
      std::ifstream in(spec.path);
      if (!in) throw std::runtime_error("generate_corpus: cannot open " + spec.path);
      std::string line;
      long long line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
          g = parse_graph6(line);
        } catch (const Graph6Error& e) {
          throw std::runtime_error("generate_corpus: " + spec.path + " line " +
                                   std::to_string(line_no) + ": " + e.what());
        }
        if (!passes(g)) continue;
        sink(std::move(g));
        ++emitted;
      }
      break;
    }
    case CorpusSpec::Source::random: {
      if (spec.n < 1) throw std::invalid_argument("generate_corpus: n must be positive");
      if (spec.count < 0) throw std::invalid_argument("generate_corpus: negative count");
      Rng rng(spec.seed);
      long long attempts = 0;
      const long long attempt_cap = std::max<long long>(10000, 2000LL * spec.count);
      while (emitted < spec.count) {
        if (++attempts > attempt_cap)
          throw std::runtime_error(
              "generate_corpus: rejection sampling budget exhausted (filter too strict?)");
        Graph g = random_graph(spec.n, spec.edge_prob, rng);
        if (!passes(g)) continue;
        sink(std::move(g));
        ++emitted;
      }
      break;
    }
  }
  return emitted;
}

void require_theorem_hypotheses(const ExtremalParams& p, SpectralKind which, bool relaxed) {
  if (p.delta < 1) throw std::invalid_argument("verify_theorem: delta must be positive");
  if (p.k < 0 || p.k >= p.delta)
    throw std::invalid_argument("verify_theorem: k must lie in [0, delta)");
  if ((p.n - p.k) % 2 != 0)
    throw std::invalid_argument("verify_theorem: k and n must have the same parity");
  if (p.n <= 2 * p.delta - p.k + 1)
    throw std::invalid_argument("verify_theorem: n too small for the extremal graph");
  if (!relaxed) {
    if (which == SpectralKind::rho && p.n < 4 * p.delta + 3)
      throw std::invalid_argument("verify_theorem: hypothesis n >= 4*delta + 3 violated");
    if (which == SpectralKind::q && p.n < 9 * p.delta - 2 * p.k + 12)
      throw std::invalid_argument("verify_theorem: hypothesis n >= 9*delta - 2k + 12 violated");
  }
}

struct PartialCounts {
  long long tested = 0, above = 0, critical = 0, extremal = 0;
  std::vector<std::pair<std::size_t, std::string>> counterexamples;
};

PartialCounts verify_range(const std::vector<Graph>& corpus, std::size_t begin, std::size_t end,
                           const ExtremalParams& p, SpectralKind which, double threshold,
                           const VerifyOptions& options, long long index_base) {
  const int alpha = which == SpectralKind::rho ? 0 : 1;
  PartialCounts out;
  for (std::size_t i = begin; i < end; ++i) {
    const Graph& g = corpus[i];
    const long long index = index_base + static_cast<long long>(i);
    if (g.order() != p.n || min_degree(g) != p.delta) {
      if (options.record) options.record(index, g, 0.0, "skipped");
      continue;
    }
    ++out.tested;
    const double value = largest_eigenvalue(alpha_matrix(g, alpha)).value;
    if (value < threshold - options.slack) {
      if (options.record) options.record(index, g, value, "below");
      continue;
    }
    ++out.above;
    const char* klass;
    if (is_kfc_matching(g, p.k).verdict) {
      ++out.critical;
      klass = "critical";
    } else if (recognize_extremal(g, p)) {
      ++out.extremal;
      klass = "extremal";
    } else {
      out.counterexamples.emplace_back(i, emit_graph6(g));
      klass = "counterexample";
    }
    if (options.record) options.record(index, g, value, klass);
  }
  return out;
}

}  // namespace

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
  std::vector<Graph> out;
  stream_corpus(spec, [&out](Graph&& g) { out.push_back(std::move(g)); });
  return out;
}

Graph random_graph(int n, double p, Rng& rng) {
  if (n < 0) throw std::invalid_argument("random_graph: negative order");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_graph: rejection budget exhausted");
}

static VerificationReport verify_theorem_impl(const std::vector<Graph>& corpus,
                                              const ExtremalParams& p, SpectralKind which,
                                              const VerifyOptions& options,
                                              long long index_base) {
  require_theorem_hypotheses(p, which, options.relaxed);
  const ThresholdReport tr = thresholds(p);

  VerificationReport report;
  report.params = p;
  report.which = which;
  report.threshold_used = which == SpectralKind::rho ? tr.rho_dense : tr.q_dense;

  const std::size_t jobs = options.record ? 1 : std::max(1, options.jobs);
  std::vector<PartialCounts> parts(jobs);
  if (jobs == 1 || corpus.size() < 2 * jobs) {
    parts[0] = verify_range(corpus, 0, corpus.size(), p, which, report.threshold_used, options,
                            index_base);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    const std::size_t step = (corpus.size() + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t begin = j * step;
      const std::size_t end = std::min(corpus.size(), begin + step);
      workers.emplace_back([&, j, begin, end] {
        try {
          parts[j] = verify_range(corpus, begin, end, p, which, report.threshold_used, options,
                                  0);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const PartialCounts& part : parts) {
    report.graphs_tested += part.tested;
    report.above_threshold += part.above;
    report.critical_above += part.critical;
    report.extremal_hits += part.extremal;
    for (const auto& [idx, g6] : part.counterexamples) report.counterexamples.push_back(g6);
  }
  return report;
}

VerificationReport verify_theorem(const std::vector<Graph>& corpus, const ExtremalParams& p,
                                  SpectralKind which, const VerifyOptions& options) {
  return verify_theorem_impl(corpus, p, which, options, 0);
}

VerificationReport verify_theorem(const CorpusSpec& corpus, const ExtremalParams& p,
                                  SpectralKind which, const VerifyOptions& options) {
  require_theorem_hypotheses(p, which, options.relaxed);

  VerificationReport total;
  bool first = true;
  long long consumed = 0;
  std::vector<Graph> chunk;
  chunk.reserve(kVerifyChunk);
  const auto flush = [&] {
    if (chunk.empty() && !first) return;
    VerificationReport part =
        verify_theorem_impl(chunk, p, which, options, consumed);
    consumed += static_cast<long long>(chunk.size());
    if (first) {
      total = std::move(part);
      first = false;
    } else {
      total.graphs_tested += part.graphs_tested;
      total.above_threshold += part.above_threshold;
      total.critical_above += part.critical_above;
      total.extremal_hits += part.extremal_hits;
      for (auto& g6 : part.counterexamples) total.counterexamples.push_back(std::move(g6));
    }
    chunk.clear();
  };

  stream_corpus(corpus, [&](Graph&& g) {
    chunk.push_back(std::move(g));
    if (chunk.size() >= kVerifyChunk) flush();
  });
  flush();
  return total;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << std::setprecision(15);
  out << "theorem=" << (r.which == SpectralKind::rho ? "rho" : "q") << " n=" << r.params.n
      << " delta=" << r.params.delta << " k=" << r.params.k << "\n"
      << "threshold_used=" << r.threshold_used << "\n"
      << "graphs_tested=" << r.graphs_tested << "\n"
      << "above_threshold=" << r.above_threshold << "\n"
      << "critical_above=" << r.critical_above << "\n"
      << "extremal_hits=" << r.extremal_hits << "\n"
      << "counterexamples=" << r.counterexamples.size();
  return out.str();
}

SharpnessReport verify_sharpness_report(const ExtremalParams& p, double tol) {
  if ((p.n - p.k) % 2 != 0)
    throw std::invalid_argument("verify_sharpness: k and n must have the same parity");
  const ThresholdReport tr = thresholds(p);

  SharpnessReport out;
  out.attains_rho = std::abs(tr.rho_dense - tr.rho_root) <= tol;
  out.attains_q = std::abs(tr.q_dense - tr.q_root) <= tol;

  const Graph h = build_H(p);
  // No set smaller than the join clique can violate the odd-component
  // condition, so capping the search depth at delta still finds the first
  // witness while keeping large orders tractable.
  const CriticalityCertificate cert = is_kfc_tutte(h, p.k, p.delta);
  out.witness = cert.witness;
  if (!cert.verdict && cert.witness_kind == WitnessKind::tutte) {
    const int o = odd_components(remove_vertices(h, cert.witness));
    out.refuted_by_tutte = o > cert.witness.size() - p.k;
    out.witness_is_out_copy = cert.witness == VertexSet::range(0, p.delta) &&
                              o == p.delta - p.k + 2;
  }
  return out;
}

bool verify_sharpness(const ExtremalParams& p, double tol) {
  return verify_sharpness_report(p, tol).passed();
}

namespace {

std::string describe(const ExtremalParams& p, int s) {
  std::ostringstream out;
  out << "n=" << p.n << " delta=" << p.delta << " k=" << p.k << " s=" << s;
  return out.str();
}

// Spectral value of a three-part join family member, computed by the
// equitable 3x3 quotient and cross-checked against a dense solve.
double family_value(const Graph& g, const std::vector<VertexSet>& parts, int alpha,
                    GridReport& report, const std::string& where) {
  const QuotientMatrix qm = quotient_matrix(g, parts, alpha);
  if (!qm.equitable) {
    report.violations.push_back(where + ": partition unexpectedly not equitable");
    return 0.0;
  }
  const double via_quotient = largest_real_eigenvalue(qm.entries);
  const double via_dense = largest_eigenvalue(alpha_matrix(g, alpha)).value;
  if (std::abs(via_quotient - via_dense) > 1e-7)
    report.violations.push_back(where + ": quotient/dense routes disagree");
  return via_quotient;
}

void run_h1_or_h3(GridReport& report, const LemmaGridOptions& opt, SpectralKind which) {
  const int alpha = which == SpectralKind::rho ? 0 : 1;
  for (int delta = std::max(1, opt.delta_min); delta <= opt.delta_max; ++delta) {
    for (int k = std::max(0, opt.k_min); k < delta; ++k) {
      const int bound =
          which == SpectralKind::rho ? 4 * delta + 3 : 9 * delta - 2 * k + 12;
      for (int n = bound; n <= bound + opt.n_extra; ++n) {
        const ExtremalParams p{n, delta, k};
        const CubicPoly extremal_poly = which == SpectralKind::rho ? f_poly(p) : g_poly(p);
        const double extremal_value = largest_real_root(extremal_poly);
        const double extremal_check =
            family_value(build_H(p), extremal_partition(p), alpha, report,
                         "extremal " + describe(p, delta));
        if (std::abs(extremal_value - extremal_check) > 1e-7)
          report.violations.push_back("extremal " + describe(p, delta) +
                                      ": cubic root disagrees with quotient");
        for (int s = std::max(delta + 1, k); 2 * s <= n + k - 2; ++s) {
          const ExtremalParams ps{n, s, k};
          const CubicPoly split_poly = which == SpectralKind::rho ? f_poly(ps) : g_poly(ps);
          const double split_value = largest_real_root(split_poly);
          const double split_check = family_value(build_Hs(n, s, k), hs_partition(n, s, k),
                                                  alpha, report, "split " + describe(p, s));
          if (std::abs(split_value - split_check) > 1e-7)
            report.violations.push_back("split " + describe(p, s) +
                                        ": cubic root disagrees with quotient");
          ++report.cases;
          if (!(split_value < extremal_value - opt.margin)) {
            std::ostringstream msg;
            msg << std::setprecision(15) << describe(p, s) << ": split value " << split_value
                << " not below extremal value " << extremal_value;
            report.violations.push_back(msg.str());
            report.grid_violations.push_back(
                {n, delta, k, s, alpha, split_value, extremal_value});
          }
        }
      }
    }
  }
}

void run_h2(GridReport& report, const LemmaGridOptions& opt) {
  for (int delta = std::max(2, opt.delta_min); delta <= opt.delta_max; ++delta) {
    for (int k = std::max(0, opt.k_min); k < delta; ++k) {
      for (int s = std::max(1, k); s < delta; ++s) {
        const int base = opt.h2_bound == H2Bound::standard ? s : delta;
        const int bound = std::max(base + (s - k + 2) * (delta - s + 1), 2 * delta - k + 2);
        for (int n = bound; n <= bound + opt.n_extra; ++n) {
          const ExtremalParams p{n, delta, k};
          const Graph hp = build_Hprime(n, delta, s, k);
          const auto parts = hprime_partition(n, delta, s, k);
          for (int alpha = 0; alpha <= 1; ++alpha) {
            const CubicPoly poly = alpha == 0 ? f_poly(p) : g_poly(p);
            const double extremal_value = largest_real_root(poly);
            const double clustered_value =
                family_value(hp, parts, alpha, report, "clustered " + describe(p, s));
            ++report.cases;
            if (!(clustered_value < extremal_value - opt.margin)) {
              std::ostringstream msg;
              msg << std::setprecision(15) << describe(p, s) << " alpha=" << alpha
                  << ": clustered value " << clustered_value << " not below extremal value "
                  << extremal_value;
              report.violations.push_back(msg.str());
              report.grid_violations.push_back(
                  {n, delta, k, s, alpha, clustered_value, extremal_value});
            }
          }
        }
      }
    }
  }
}

void run_sp(GridReport& report, const LemmaGridOptions& opt) {
  Rng rng(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int s = rng.between(1, 4);
    const int t = rng.between(2, 4);
    std::vector<int> sizes(t);
    for (int& x : sizes) x = rng.between(1, 5);
    std::sort(sizes.begin(), sizes.end());

    Graph inner = complete(sizes[0]);
    for (int i = 1; i < t; ++i) inner = disjoint_union(inner, complete(sizes[i]));
    const Graph g = join(complete(s), inner);

    for (int alpha = 0; alpha <= 1; ++alpha) {
      const SpectralResult pv = perron_vector(g, alpha);
      std::vector<double> copy_value(t);
      int offset = s;
      bool symmetric = true;
      for (int i = 0; i < t; ++i) {
        const int size = sizes[i];
        double lo = pv.vector(offset), hi = pv.vector(offset);
        for (int v = offset; v < offset + size; ++v) {
          lo = std::min(lo, pv.vector(v));
          hi = std::max(hi, pv.vector(v));
        }
        if (hi - lo > 1e-8) symmetric = false;
        copy_value[i] = 0.5 * (lo + hi);
        offset += size;
      }
      ++report.cases;
      if (!symmetric) {
        report.violations.push_back("trial " + std::to_string(trial) +
                                    ": entries differ inside an inner clique, graph " +
                                    emit_graph6(g));
        continue;
      }
      for (int i = 0; i + 1 < t; ++i)
        if (copy_value[i] > copy_value[i + 1] + opt.rand_margin) {
          std::ostringstream msg;
          msg << "trial " << trial << " alpha=" << alpha << ": entry of clique " << i
              << " exceeds that of clique " << i + 1 << ", graph " << emit_graph6(g);
          report.violations.push_back(msg.str());
        }
    }
  }
}

void run_ge(GridReport& report, const LemmaGridOptions& opt) {
  Rng rng(opt.seed);
  long long attempts = 0;
  const long long attempt_cap = 400LL * opt.trials + 10000;
  long long executed = 0;
  while (executed < opt.trials && attempts < attempt_cap) {
    ++attempts;
    const int n = rng.between(4, 12);
    const double p = 0.25 + 0.5 * rng.uniform();
    const Graph g = random_connected_graph(n, p, rng);
    const int alpha = rng.below(2);

    const SpectralResult pv = perron_vector(g, alpha);
    int u = rng.below(n);
    int v = rng.below(n);
    if (u == v) continue;
    if (pv.vector(u) < pv.vector(v)) std::swap(u, v);

    std::vector<int> candidates;
    for (int w : g.neighbors(v))
      if (w != u && !g.has_edge(u, w)) candidates.push_back(w);
    if (candidates.empty()) continue;

    std::vector<int> moved;
    for (int w : candidates)
      if (rng.bernoulli(0.5)) moved.push_back(w);
    if (moved.empty()) moved.push_back(candidates[rng.below(static_cast<int>(candidates.size()))]);

    const Graph g2 = rotate_edges(g, v, u, VertexSet(moved));
    if (!is_connected(g2)) continue;  // outside the hypothesis

    const double before = pv.value;
    const double after = largest_eigenvalue(alpha_matrix(g2, alpha)).value;
    ++executed;
    ++report.cases;
    if (!(after > before + opt.rand_margin)) {
      std::ostringstream msg;
      msg << std::setprecision(15) << "trial " << executed << " alpha=" << alpha
          << ": rotation onto the larger-entry vertex did not raise the value (" << before
          << " -> " << after << "), graph " << emit_graph6(g) << " u=" << u << " v=" << v;
      report.violations.push_back(msg.str());
    }
  }
  if (executed < opt.trials)
    report.violations.push_back("could not execute the requested number of trials");
}

void run_inequit(GridReport& report, const LemmaGridOptions& opt) {
  Rng rng(opt.seed);
  long long attempts = 0;
  const long long attempt_cap = 400LL * opt.trials + 10000;
  long long executed = 0;
  while (executed < opt.trials && attempts < attempt_cap) {
    ++attempts;
    const int n = rng.between(4, 10);
    const double p = 0.3 + 0.4 * rng.uniform();
    const Graph g = random_connected_graph(n, p, rng);

    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
    if (non_edges.empty()) continue;

    const auto [u, v] = non_edges[rng.below(static_cast<int>(non_edges.size()))];
    const Graph g2 = add_edge(g, u, v);
    ++executed;
    for (int alpha = 0; alpha <= 1; ++alpha) {
      const double before = largest_eigenvalue(alpha_matrix(g, alpha)).value;
      const double after = largest_eigenvalue(alpha_matrix(g2, alpha)).value;
      ++report.cases;
      if (!(after > before + opt.rand_margin)) {
        std::ostringstream msg;
        msg << std::setprecision(15) << "trial " << executed << " alpha=" << alpha
            << ": adding edge (" << u << "," << v << ") did not raise the value (" << before
            << " -> " << after << "), graph " << emit_graph6(g);
        report.violations.push_back(msg.str());
      }
    }
  }
  if (executed < opt.trials)
    report.violations.push_back("could not execute the requested number of trials");
}

}  // namespace

GridReport verify_lemma_grid(LemmaCheck which, const LemmaGridOptions& options) {
  GridReport report;
  report.check = to_string(which);
  switch (which) {
    case LemmaCheck::h1:
      run_h1_or_h3(report, options, SpectralKind::rho);
      break;
    case LemmaCheck::h2:
      run_h2(report, options);
      break;
    case LemmaCheck::h3:
      run_h1_or_h3(report, options, SpectralKind::q);
      break;
    case LemmaCheck::sp:
      run_sp(report, options);
      break;
    case LemmaCheck::ge:
      run_ge(report, options);
      break;
    case LemmaCheck::inequit:
      run_inequit(report, options);
      break;
  }
  return report;
}

LemmaCheck lemma_check_from_name(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "h1") return LemmaCheck::h1;
  if (lower == "h2") return LemmaCheck::h2;
  if (lower == "h3") return LemmaCheck::h3;
  if (lower == "sp") return LemmaCheck::sp;
  if (lower == "ge") return LemmaCheck::ge;
  if (lower == "inequit") return LemmaCheck::inequit;
  throw std::invalid_argument("unknown lemma check: " + name);
}

std::string to_string(LemmaCheck which) {
  switch (which) {
    case LemmaCheck::h1: return "h1";
    case LemmaCheck::h2: return "h2";
    case LemmaCheck::h3: return "h3";
    case LemmaCheck::sp: return "SP";
    case LemmaCheck::ge: return "GE";
    case LemmaCheck::inequit: return "inequit";
  }
  return "?";
}

}  // namespace specfc
