#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "hyperspec/enumeration.hpp"
#include "hyperspec/families.hpp"
#include "oracles.hpp"

using namespace hyperspec;

namespace {

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng() % (i + 1)]);
  }
  return perm;
}

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("canonical_form is permutation invariant") {
  std::mt19937_64 rng(29);
  for (const Hypergraph& g : {loose_path(7, 3), hyperstar(7, 3), double_broom(9, 3, 1),
                              build(4, {{0, 1, 2}, {0, 1, 3}})}) {
    const CanonicalForm code = canonical_form(g);
    for (int trial = 0; trial < 100; ++trial) {
      CHECK(canonical_form(oracles::permute(g, random_permutation(g.n, rng))) == code);
    }
  }

  CHECK(canonical_form(loose_path(7, 3)) != canonical_form(hyperstar(7, 3)));
  CHECK(canonical_form(build(3, {{0, 1, 2}})) == canonical_form(build(3, {{2, 1, 0}})));
}

TEST_CASE("from_canonical reproduces the class") {
  const Hypergraph g = f_graph(9, 3);
  const CanonicalForm code = canonical_form(g);
  CHECK(are_isomorphic(from_canonical(code), g));
  CHECK(canonical_form(from_canonical(code)) == code);
}

TEST_CASE("are_isomorphic agrees with the exhaustive-permutation oracle") {
  std::vector<Hypergraph> zoo{
      loose_path(7, 3),   hyperstar(7, 3),          loose_path(5, 2),
      hyperstar(5, 2),    double_broom(6, 2, 1),    build(4, {{0, 1, 2}, {0, 1, 3}}),
      build(4, {{0, 1, 2}, {1, 2, 3}}),             build(6, {{0, 1, 2}, {3, 4, 5}}),
      build(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}),  build(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}})};
  std::mt19937_64 rng(31);
  for (size_t i = 0; i < zoo.size(); ++i) {
    for (size_t j = 0; j < zoo.size(); ++j) {
      CHECK(are_isomorphic(zoo[i], zoo[j]) ==
            oracles::isomorphic_by_permutations(zoo[i], zoo[j]));
    }
    const Hypergraph shuffled = oracles::permute(zoo[i], random_permutation(zoo[i].n, rng));
    CHECK(are_isomorphic(zoo[i], shuffled));
    CHECK(oracles::isomorphic_by_permutations(zoo[i], shuffled));
  }
}

TEST_CASE("named isomorphisms") {
  CHECK(are_isomorphic(broom(9, 3, 2), loose_path(9, 3)));
  CHECK(are_isomorphic(double_broom(7, 3, 1), loose_path(7, 3)));
  CHECK(oracles::isomorphic_by_permutations(double_broom(7, 3, 1), loose_path(7, 3)));
  CHECK(!are_isomorphic(loose_path(9, 3), f_graph(9, 3)));
}

TEST_CASE("automorphism_orbits") {
  const auto star = automorphism_orbits(hyperstar(9, 3));
  REQUIRE(star.orbits.size() == 2);
  CHECK(star.orbits[0] == std::vector<int>{0});
  CHECK(star.orbits[1].size() == 8);

  CHECK(automorphism_orbits(build(4, {{0, 1, 2, 3}})).orbits.size() == 1);

  // a != b: centers, the two leaf classes, and the bridge vertices
  const Hypergraph d = double_broom(13, 3, 2);  // a=2, b=3
  const auto orbits = automorphism_orbits(d);
  REQUIRE(orbits.orbits.size() == 5);
  std::multiset<size_t> sizes;
  for (const auto& orbit : orbits.orbits) sizes.insert(orbit.size());
  CHECK(sizes == std::multiset<size_t>{1, 1, 1, 4, 6});  // u, v, w_1, a-leaves, b-leaves

  // a == b gains the star-swapping symmetry
  const auto symmetric = automorphism_orbits(double_broom(11, 3, 2));  // a=b=2
  std::multiset<size_t> sym_sizes;
  for (const auto& orbit : symmetric.orbits) sym_sizes.insert(orbit.size());
  CHECK(sym_sizes == std::multiset<size_t>{2, 8, 1});

  // spider with pendant paths of lengths 1, 2, 3: trivial group
  Hypergraph spider = build(1, {}, 2);
  spider = attach_pendant_path(spider, 0, 1);
  spider = attach_pendant_path(spider, 0, 2);
  spider = attach_pendant_path(spider, 0, 3);
  const auto trivial = automorphism_orbits(spider);
  CHECK(trivial.orbits.size() == static_cast<size_t>(spider.n));
}

TEST_CASE("generate_hypertrees counts") {
  CHECK(generate_hypertrees(2, 3).size() == 2);
  CHECK(generate_hypertrees(3, 3).size() == 2);
  CHECK(generate_hypertrees(2, 5).size() == 6);
  CHECK(generate_hypertrees(2, 0).size() == 1);
  CHECK_THROWS_AS(generate_hypertrees(3, 12), EnumerationTooLarge);
}

TEST_CASE("generated hypertrees are sound") {
  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 4; ++m) {
      const auto classes = generate_hypertrees(k, m);
      std::set<CanonicalForm> codes;
      for (const auto& t : classes) {
        CHECK(is_hypertree(t));
        CHECK(t.n == 1 + (k - 1) * m);
        for (size_t i = 0; i < t.edges.size(); ++i) {
          for (size_t j = i + 1; j < t.edges.size(); ++j) {
            Edge common;
            std::set_intersection(t.edges[i].begin(), t.edges[i].end(),
                                  t.edges[j].begin(), t.edges[j].end(),
                                  std::back_inserter(common));
            CHECK(common.size() <= 1);
          }
        }
        CHECK(codes.insert(canonical_form(t)).second);  // pairwise nonisomorphic
      }
    }
  }
}

TEST_CASE("generation matches brute force") {
  for (const auto& [k, max_m] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}}) {
    for (int m = 1; m <= max_m; ++m) {
      const auto generated = generate_hypertrees(k, m);
      const auto brute = oracles::brute_force_hypertrees(k, m);
      REQUIRE(generated.size() == brute.size());
      std::set<CanonicalForm> lhs, rhs;
      for (const auto& g : generated) lhs.insert(canonical_form(g));
      for (const auto& g : brute) rhs.insert(canonical_form(g));
      CHECK(lhs == rhs);
    }
  }
}

}  // TEST_SUITE
