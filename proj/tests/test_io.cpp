#include "doctest.h"

#include <cmath>
#include <sstream>

#include "hyperspec/enumeration.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"

using namespace hyperspec;

TEST_SUITE("io") {

TEST_CASE("uhg round trip preserves the class") {
  for (int k = 2; k <= 4; ++k) {
    for (int m = 3; m <= 4; ++m) {
      const int n = 1 + (k - 1) * m;
      for (const Hypergraph& g : {loose_path(n, k), hyperstar(n, k), broom(n, k, 3),
                                  double_broom(n, k, 1)}) {
        std::stringstream buf;
        write_uhg(buf, g);
        const Hypergraph back = read_uhg(buf);
        CHECK(back.n == g.n);
        CHECK(back.edges == g.edges);
        CHECK(back.k == g.k);
        CHECK(canonical_form(back) == canonical_form(g));
      }
    }
  }
}

TEST_CASE("uhg text form") {
  std::stringstream buf;
  write_uhg(buf, loose_path(5, 3));
  CHECK(buf.str() == "3 5 2\n0 1 2\n2 3 4\n");

  std::stringstream commented("# a loose path\n3 5 2\n0 1 2\n# middle comment\n2 3 4\n");
  const Hypergraph g = read_uhg(commented);
  CHECK(g.edges == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});

  std::stringstream lone("3 1 0\n");
  const Hypergraph single = read_uhg(lone);
  CHECK(single.n == 1);
  CHECK(single.k == 3);
}

TEST_CASE("uhg parser reports the offending line") {
  const auto fails_with = [](const std::string& text, const std::string& needle) {
    std::stringstream in(text);
    try {
      read_uhg(in);
      return false;
    } catch (const ParseError& ex) {
      return std::string(ex.what()).find(needle) != std::string::npos;
    }
  };
  CHECK(fails_with("", "header"));
  CHECK(fails_with("3 5\n", "line 1"));
  CHECK(fails_with("3 5 2\n0 1 2\n", "line 2"));           // missing edge line
  CHECK(fails_with("3 5 1\n0 x 2\n", "line 2"));           // bad token
  CHECK(fails_with("3 5 1\n0 1\n", "line 2"));             // wrong arity
  CHECK(fails_with("2 5 1\n0 1\n0 1\n", "line 3"));        // trailing content
  CHECK(fails_with("3 5 1\n0 1 7\n", "edge"));             // out of range
  CHECK(fails_with("0 5 2\n0 1\n2 3\n", "header"));        // k=0 with edges
}

TEST_CASE("json mirror") {
  const Hypergraph g = loose_path(5, 3);
  const std::string text = hypergraph_to_json(g);
  CHECK(text == R"({"n":5,"edges":[[0,1,2],[2,3,4]]})");
  const Hypergraph back = hypergraph_from_json(text);
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
  CHECK_THROWS_AS(hypergraph_from_json("{"), ParseError);
  CHECK_THROWS_AS(hypergraph_from_json("[1,2]"), ParseError);
}

TEST_CASE("fmt_double carries 17 significant digits") {
  CHECK(fmt_double(1.0) == "1");
  CHECK(fmt_double(0.1) == "0.10000000000000001");
  // 17 significant digits round-trip exactly
  for (double v : {(5.0 + std::sqrt(41.0)) / 2.0, 1.0 + std::sqrt(3.0), 1e-12, 3.0}) {
    CHECK(std::stod(fmt_double(v)) == v);
  }
  CHECK(fmt_double((5.0 + std::sqrt(41.0)) / 2.0).size() == 18);  // 17 digits + dot
}

TEST_CASE("distance csv") {
  const DistanceMatrix d = distance_matrix(loose_path(3, 2));
  CHECK(to_csv(d) == "0,1,2\n1,0,1\n2,1,0\n");
}

TEST_CASE("spectral result json") {
  SpectralResult r;
  r.rho = 2.0;
  r.perron = {0.5, 0.5};
  r.residual = 1e-12;
  r.iterations = 4;
  CHECK(to_json(r) ==
        R"({"rho":2,"perron":[0.5,0.5],"residual":9.9999999999999998e-13,"iterations":4})");
}

}  // TEST_SUITE
