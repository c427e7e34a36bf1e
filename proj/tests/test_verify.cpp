#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>

#include "specfc/criticality.hpp"
#include "specfc/graph6.hpp"
#include "specfc/spectral.hpp"
#include "specfc/verify.hpp"

using namespace specfc;

TEST_CASE("exhaustive corpus counts match an independent enumeration") {
  // all 64 labeled graphs on 4 vertices, min degree exactly 1, counted by hand
  // over the edge-mask encoding
  const std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  int expected = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    int degree[4] = {0, 0, 0, 0};
    for (std::size_t b = 0; b < 6; ++b)
      if ((mask >> b) & 1) {
        ++degree[pairs[b].first];
        ++degree[pairs[b].second];
      }
    const int lowest = *std::min_element(degree, degree + 4);
    if (lowest == 1) ++expected;
  }
  CHECK(expected == 31);

  CorpusSpec spec;
  spec.source = CorpusSpec::Source::exhaustive;
  spec.n = 4;
  spec.min_degree = 1;
  CHECK(static_cast<int>(generate_corpus(spec).size()) == expected);

  spec.min_degree.reset();
  CHECK(generate_corpus(spec).size() == 64);

  spec.n = 8;
  CHECK_THROWS_AS(generate_corpus(spec), std::invalid_argument);
}

TEST_CASE("connectivity filter matches an independent union-find count") {
  // connected labeled graphs on 4 vertices, counted without the library's
  // component machinery
  const std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  int expected = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    int parent[4] = {0, 1, 2, 3};
    const auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (std::size_t b = 0; b < 6; ++b)
      if ((mask >> b) & 1) parent[find(pairs[b].first)] = find(pairs[b].second);
    int roots = 0;
    for (int v = 0; v < 4; ++v)
      if (find(v) == v) ++roots;
    if (roots == 1) ++expected;
  }
  CHECK(expected == 38);

  CorpusSpec spec;
  spec.source = CorpusSpec::Source::exhaustive;
  spec.n = 4;
  spec.require_connected = true;
  CHECK(static_cast<int>(generate_corpus(spec).size()) == expected);
}

TEST_CASE("exhaustive n = 7 stream reaches the full mask space") {
  // only K_7 has minimum degree 6
  CorpusSpec spec;
  spec.source = CorpusSpec::Source::exhaustive;
  spec.n = 7;
  spec.min_degree = 6;
  const std::vector<Graph> got = generate_corpus(spec);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == complete(7));
}

TEST_CASE("random corpus is deterministic and honors the filter") {
  CorpusSpec spec;
  spec.source = CorpusSpec::Source::random;
  spec.n = 12;
  spec.edge_prob = 0.5;
  spec.count = 50;
  spec.seed = 7;
  spec.min_degree = 3;

  const std::vector<Graph> a = generate_corpus(spec);
  const std::vector<Graph> b = generate_corpus(spec);
  REQUIRE(a.size() == 50);
  REQUIRE(b.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(min_degree(a[i]) == 3);
  }

  spec.seed = 8;
  const std::vector<Graph> c = generate_corpus(spec);
  bool all_same = true;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == a[i])) all_same = false;
  CHECK(!all_same);

  spec.min_degree = 11;  // only K_12 qualifies; p = 0.5 will never produce it
  spec.count = 1;
  CHECK_THROWS_AS(generate_corpus(spec), std::runtime_error);
}

TEST_CASE("graph6 file corpus") {
  const std::string path = "corpus_test_tmp.g6";
  {
    std::ofstream out(path);
    out << emit_graph6(complete(5)) << "\n" << emit_graph6(complete(4)) << "\n";
  }
  CorpusSpec spec;
  spec.source = CorpusSpec::Source::graph6_file;
  spec.path = path;
  spec.min_degree = 4;
  const std::vector<Graph> got = generate_corpus(spec);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == complete(5));

  {
    std::ofstream out(path);
    out << "not graph6 at all!!!\n";
  }
  CHECK_THROWS_AS(generate_corpus(spec), std::runtime_error);
  std::remove(path.c_str());

  spec.path = "definitely_missing_file.g6";
  CHECK_THROWS_AS(generate_corpus(spec), std::runtime_error);
}

TEST_CASE("verify_theorem classifies the extremal graph as a sharp hit") {
  const ExtremalParams p{8, 1, 0};
  const VerificationReport r = verify_theorem({build_H(p)}, p, SpectralKind::rho);
  CHECK(r.graphs_tested == 1);
  CHECK(r.above_threshold == 1);
  CHECK(r.extremal_hits == 1);
  CHECK(r.critical_above == 0);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("verify_theorem counts a critical graph above the threshold") {
  // K_7 plus a pendant: minimum degree exactly 1, spectral radius well above
  // the threshold, and it has a perfect matching
  const ExtremalParams p{8, 1, 0};
  const Graph g = add_edge(disjoint_union(complete(7), complete(1)), 0, 7);
  REQUIRE(min_degree(g) == 1);
  const VerificationReport r = verify_theorem({g}, p, SpectralKind::rho);
  CHECK(r.graphs_tested == 1);
  CHECK(r.above_threshold == 1);
  CHECK(r.critical_above == 1);
  CHECK(r.counterexamples.empty());

  // graphs outside G(n, delta) are skipped entirely (exact-degree filter)
  const VerificationReport skip = verify_theorem({complete(8)}, p, SpectralKind::rho);
  CHECK(skip.graphs_tested == 0);
  CHECK(skip.above_threshold == 0);
}

TEST_CASE("verify_theorem hypotheses and relaxed mode") {
  CHECK_THROWS_AS(verify_theorem(std::vector<Graph>{}, {8, 2, 0}, SpectralKind::rho),
                  std::invalid_argument);  // n < 4*delta + 3
  CHECK_NOTHROW(verify_theorem(std::vector<Graph>{}, {8, 2, 0}, SpectralKind::rho,
                               VerifyOptions{.relaxed = true}));
  CHECK_THROWS_AS(verify_theorem(std::vector<Graph>{}, {9, 1, 0}, SpectralKind::rho),
                  std::invalid_argument);  // parity
  CHECK_THROWS_AS(verify_theorem(std::vector<Graph>{}, {11, 1, 1}, SpectralKind::rho),
                  std::invalid_argument);  // k >= delta
  CHECK_THROWS_AS(verify_theorem(std::vector<Graph>{}, {12, 1, 0}, SpectralKind::q),
                  std::invalid_argument);  // n < 9*delta - 2k + 12
}

TEST_CASE("verify_theorem report identity and determinism across jobs") {
  CorpusSpec corpus;
  corpus.source = CorpusSpec::Source::random;
  corpus.n = 8;
  corpus.min_degree = 1;
  corpus.edge_prob = 0.55;
  corpus.count = 400;
  corpus.seed = 3;

  const ExtremalParams p{8, 1, 0};
  const VerificationReport serial = verify_theorem(corpus, p, SpectralKind::rho);
  CHECK(serial.graphs_tested == 400);
  CHECK(serial.above_threshold ==
        serial.critical_above + serial.extremal_hits +
            static_cast<long long>(serial.counterexamples.size()));

  VerifyOptions parallel;
  parallel.jobs = 4;
  const VerificationReport threaded = verify_theorem(corpus, p, SpectralKind::rho, parallel);
  CHECK(to_text(serial) == to_text(threaded));
  CHECK(serial.counterexamples == threaded.counterexamples);

  // counterexamples, if any ever appear, must reproduce when re-checked
  for (const std::string& g6 : serial.counterexamples) {
    const Graph g = parse_graph6(g6);
    const double value = largest_eigenvalue(adjacency_matrix(g)).value;
    CHECK(value >= serial.threshold_used - 1e-9);
    CHECK(!is_kfc_matching(g, p.k).verdict);
    CHECK(!recognize_extremal(g, p));
  }
}

TEST_CASE("relaxed falsification search over an exhaustive small corpus") {
  CorpusSpec corpus;
  corpus.source = CorpusSpec::Source::exhaustive;
  corpus.n = 6;
  corpus.min_degree = 1;

  const ExtremalParams p{6, 1, 0};
  const VerificationReport r =
      verify_theorem(corpus, p, SpectralKind::rho, VerifyOptions{.relaxed = true});
  CHECK(r.graphs_tested > 0);
  CHECK(r.above_threshold ==
        r.critical_above + r.extremal_hits + static_cast<long long>(r.counterexamples.size()));
  for (const std::string& g6 : r.counterexamples) {
    const Graph g = parse_graph6(g6);
    CHECK(largest_eigenvalue(adjacency_matrix(g)).value >= r.threshold_used - 1e-9);
    CHECK(!is_kfc_matching(g, p.k).verdict);
    CHECK(!recognize_extremal(g, p));
  }
}

TEST_CASE("sharpness") {
  CHECK(verify_sharpness({8, 1, 0}));
  CHECK(verify_sharpness({12, 2, 0}));
  CHECK(verify_sharpness({9, 2, 1}));

  const SharpnessReport rep = verify_sharpness_report({8, 1, 0});
  CHECK(rep.witness == VertexSet::range(0, 1));
  CHECK_THROWS_AS(verify_sharpness({9, 1, 0}), std::invalid_argument);  // parity
}

TEST_CASE("lemma grids pass on reduced ranges (outside the known h1 defect)") {
  LemmaGridOptions small;
  small.delta_max = 2;
  small.n_extra = 4;
  small.trials = 60;
  small.seed = 5;

  for (const LemmaCheck which :
       {LemmaCheck::h2, LemmaCheck::h3, LemmaCheck::sp, LemmaCheck::ge, LemmaCheck::inequit}) {
    const GridReport rep = verify_lemma_grid(which, small);
    INFO(to_string(which));
    for (const std::string& v : rep.violations) INFO(v);
    CHECK(rep.violations.empty());
    CHECK(rep.cases > 0);
  }

  // the shifted h2 bound also holds (it only raises the grid floor)
  LemmaGridOptions shifted = small;
  shifted.h2_bound = H2Bound::shifted;
  CHECK(verify_lemma_grid(LemmaCheck::h2, shifted).violations.empty());
}

TEST_CASE("the h1 grid reports exactly the confirmed inequality failures") {
  // Frozen from an independent dense-solver enumeration: on the default grid
  // (delta <= 3, n up to bound + 8) the split-family bound fails at exactly
  // three tuples, all with k = 0 and s = (n + k - 2) / 2.
  LemmaGridOptions options;  // defaults: delta 1..3, n_extra 8
  const GridReport rep = verify_lemma_grid(LemmaCheck::h1, options);
  REQUIRE(rep.grid_violations.size() == 3);
  CHECK(rep.violations.size() == rep.grid_violations.size());

  const auto tuple_of = [](const GridCase& c) {
    return std::array<int, 4>{c.n, c.delta, c.k, c.s};
  };
  CHECK(tuple_of(rep.grid_violations[0]) == std::array<int, 4>{12, 2, 0, 5});
  CHECK(tuple_of(rep.grid_violations[1]) == std::array<int, 4>{15, 3, 0, 6});
  CHECK(tuple_of(rep.grid_violations[2]) == std::array<int, 4>{16, 3, 0, 7});

  // each reported failure reproduces on a fresh dense solve
  for (const GridCase& c : rep.grid_violations) {
    CHECK(c.alpha == 0);
    CHECK(c.s == (c.n + c.k - 2) / 2);  // always at the top of the s range
    const double split = largest_eigenvalue(adjacency_matrix(build_Hs(c.n, c.s, c.k))).value;
    const double extremal =
        largest_eigenvalue(adjacency_matrix(build_H({c.n, c.delta, c.k}))).value;
    CHECK(split == doctest::Approx(c.family_value).epsilon(1e-9));
    CHECK(extremal == doctest::Approx(c.extremal_value).epsilon(1e-9));
    CHECK(split > extremal);
  }

  // restricted to k >= 1 (the literal hypothesis) this grid is clean
  LemmaGridOptions positive = options;
  positive.k_min = 1;
  const GridReport rep2 = verify_lemma_grid(LemmaCheck::h1, positive);
  CHECK(rep2.violations.empty());
  CHECK(rep2.cases > 0);
}

TEST_CASE("lemma check names") {
  CHECK(lemma_check_from_name("h1") == LemmaCheck::h1);
  CHECK(lemma_check_from_name("SP") == LemmaCheck::sp);
  CHECK(lemma_check_from_name("ge") == LemmaCheck::ge);
  CHECK(lemma_check_from_name("inequit") == LemmaCheck::inequit);
  CHECK_THROWS_AS(lemma_check_from_name("h9"), std::invalid_argument);
  CHECK(to_string(LemmaCheck::sp) == "SP");
}
