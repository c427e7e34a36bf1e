#include <doctest.h>

#include "specfc/graph6.hpp"
#include "specfc/rng.hpp"
#include "specfc/verify.hpp"

using namespace specfc;

TEST_CASE("hand-encoded anchors") {
  CHECK(emit_graph6(complete(1)) == "@");
  CHECK(emit_graph6(complete(2)) == "A_");
  CHECK(emit_graph6(copies(2, complete(1))) == "A?");
  CHECK(emit_graph6(complete(5)) == "D~{");
  CHECK(emit_graph6(Graph{}) == "?");
}

TEST_CASE("parse round-trips and accepts the optional prefix") {
  CHECK(parse_graph6(emit_graph6(complete(5))) == complete(5));
  CHECK(parse_graph6(">>graph6<<@") == complete(1));
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("distinct parse errors") {
  const auto kind_of = [](const char* text) {
    try {
      parse_graph6(text);
    } catch (const Graph6Error& e) {
      return e.kind();
    }
    FAIL("expected a parse error");
    return Graph6Error::Kind::malformed_header;
  };
  CHECK(kind_of("") == Graph6Error::Kind::malformed_header);
  CHECK(kind_of("\x1f") == Graph6Error::Kind::malformed_header);  // header below range
  CHECK(kind_of("~??") == Graph6Error::Kind::malformed_header);   // incomplete long header
  CHECK(kind_of("~??@??") == Graph6Error::Kind::malformed_header);  // non-canonical long form
  CHECK(kind_of("D~") == Graph6Error::Kind::truncated);
  CHECK(kind_of("D~{{") == Graph6Error::Kind::trailing_garbage);
  CHECK(kind_of("AO") == Graph6Error::Kind::trailing_garbage);  // nonzero padding bits
  CHECK(kind_of("B\x20") == Graph6Error::Kind::invalid_byte);
}

TEST_CASE("exhaustive labeled round-trip up to n = 5") {
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1) edges.push_back(pairs[b]);
      const Graph g(n, edges);
      const std::string text = emit_graph6(g);
      CHECK(parse_graph6(text) == g);
      CHECK(emit_graph6(parse_graph6(text)) == text);
    }
  }
}

TEST_CASE("random round-trip for 6 <= n <= 8") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng.between(6, 8), rng.uniform(), rng);
    const std::string text = emit_graph6(g);
    CHECK(parse_graph6(text) == g);
    CHECK(emit_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("long-form header round-trip for n > 62") {
  Rng rng(5);
  const Graph g = random_graph(70, 0.1, rng);
  const std::string text = emit_graph6(g);
  CHECK(text.size() == 4 + (static_cast<std::size_t>(70 * 69 / 2) + 5) / 6);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}
