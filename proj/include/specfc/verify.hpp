#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specfc/extremal.hpp"
#include "specfc/graph.hpp"
#include "specfc/rng.hpp"

namespace specfc {

enum class SpectralKind { rho, q };

/// A reproducible graph corpus: exhaustive labeled enumeration (n <= 7),
/// a graph6 file, or seeded G(n, p) sampling, each filtered by an optional
/// exact minimum degree and an optional connectivity requirement.
struct CorpusSpec {
  enum class Source { exhaustive, graph6_file, random };

  Source source = Source::random;
  int n = 0;
  std::optional<int> min_degree;  // exact, matching the definition of G(n, delta)
  bool require_connected = false;
  // random source only
  double edge_prob = 0.5;
  int count = 0;
  std::uint64_t seed = 1;
  // graph6_file source only
  std::string path;
};

/// Materializes the corpus. Deterministic for a fixed spec (rejection
/// sampling draws from a single seeded stream). Throws on an unreadable
/// graph6 stream, exhaustive n > 7, or a filter that rejects everything.
std::vector<Graph> generate_corpus(const CorpusSpec& spec);

/// G(n, p) with edges drawn independently in fixed (row-major) order.
Graph random_graph(int n, double p, Rng& rng);
/// Rejection-sampled connected G(n, p).
Graph random_connected_graph(int n, double p, Rng& rng);

struct VerifyOptions {
  bool relaxed = false;   // drop the theorem's lower bound on n
  int jobs = 1;           // corpus parallelism; merge order is input order
  double slack = 1e-9;    // threshold comparison: spectral value >= threshold - slack
  // Per-graph record sink, called in corpus order with the spectral value and
  // one of "skipped", "below", "critical", "extremal", "counterexample".
  // Setting it forces single-threaded verification.
  std::function<void(long long index, const Graph&, double value, const char* klass)> record;
};

/// Outcome of a falsification run: every corpus graph of order n with minimum
/// degree exactly delta whose spectral value reaches the threshold must be
/// k-factor-critical or recognized as the extremal graph.
struct VerificationReport {
  ExtremalParams params;
  SpectralKind which = SpectralKind::rho;
  long long graphs_tested = 0;
  long long above_threshold = 0;
  long long critical_above = 0;
  long long extremal_hits = 0;
  std::vector<std::string> counterexamples;  // graph6, in corpus order
  double threshold_used = 0.0;
};

VerificationReport verify_theorem(const std::vector<Graph>& corpus, const ExtremalParams& p,
                                  SpectralKind which, const VerifyOptions& options = {});
VerificationReport verify_theorem(const CorpusSpec& corpus, const ExtremalParams& p,
                                  SpectralKind which, const VerifyOptions& options = {});

std::string to_text(const VerificationReport& r);

struct SharpnessReport {
  bool attains_rho = false;      // dense rho of the graph matches the cubic root
  bool attains_q = false;
  bool refuted_by_tutte = false; // certificate is false with a valid witness
  bool witness_is_out_copy = false;
  VertexSet witness;

  bool passed() const {
    return attains_rho && attains_q && refuted_by_tutte && witness_is_out_copy;
  }
};

/// Checks tightness of both bounds at p: the extremal graph attains its own
/// thresholds (within tol) yet fails k-factor-criticality, with the join
/// clique as the Tutte witness. Requires k congruent to n mod 2.
SharpnessReport verify_sharpness_report(const ExtremalParams& p, double tol = 1e-7);
bool verify_sharpness(const ExtremalParams& p, double tol = 1e-7);

/// Property suites behind `verify --lemma`. The h-family checks run
/// exhaustive integer grids; sp/ge/inequit run seeded randomized trials.
///   h1      rho threshold of the split family K_s v ((s-k+1)K_1 u K_...)
///           stays below the extremal one for every s > delta
///   h2      both thresholds of the clustered family (inner cliques blown up
///           to K_{delta-s+1}) stay below the extremal ones for s < delta
///   h3      q analogue of h1
///   sp      Perron entries over inner cliques are ordered by clique size
///   ge      moving edges toward a vertex with a no-smaller Perron entry
///           raises the spectral value (connected results only)
///   inequit adding any edge to a connected graph raises rho and q
enum class LemmaCheck { h1, h2, h3, sp, ge, inequit };

/// Which lower bound on n the h2 grid starts from (the family's own bound,
/// or the larger delta-shifted variant).
enum class H2Bound { standard, shifted };

struct LemmaGridOptions {
  int delta_min = 1;
  int delta_max = 3;
  int k_min = 0;              // h-family grids run k in [k_min, delta)
  int n_extra = 8;            // grid extends from each lower bound to bound + n_extra
  int trials = 500;           // randomized suites
  std::uint64_t seed = 1;
  double margin = 1e-9;       // required strict gap on grid inequalities
  double rand_margin = 1e-10; // required strict gap on randomized monotonicity
  H2Bound h2_bound = H2Bound::standard;
};

/// A grid tuple whose inequality check failed, with both computed values.
struct GridCase {
  int n = 0, delta = 0, k = 0, s = 0, alpha = 0;
  double family_value = 0.0;
  double extremal_value = 0.0;

  bool operator==(const GridCase&) const = default;
};

struct GridReport {
  std::string check;
  long long cases = 0;
  std::vector<std::string> violations;
  std::vector<GridCase> grid_violations;  // structured form, h-family grids only

  bool passed() const { return violations.empty(); }
};

GridReport verify_lemma_grid(LemmaCheck which, const LemmaGridOptions& options = {});

LemmaCheck lemma_check_from_name(const std::string& name);
std::string to_string(LemmaCheck which);

}  // namespace specfc
