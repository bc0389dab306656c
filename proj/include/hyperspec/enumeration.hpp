#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct EnumerationTooLarge : Error { using Error::Error; };

/// Total-order key for an isomorphism class: the sorted edge list of the
/// hypergraph relabeled by its canonical vertex permutation. Equal codes
/// iff isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<Edge> edges;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string str() const;
};

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // sorted by smallest member
};

CanonicalForm canonical_form(const Hypergraph& g);

/// Canonical representative of the class (k recomputed from edge sizes).
Hypergraph from_canonical(const CanonicalForm& c);

bool are_isomorphic(const Hypergraph& g, const Hypergraph& h);

/// Vertex orbits of the full automorphism group.
OrbitPartition automorphism_orbits(const Hypergraph& g);

/// True when (k, m) is inside the documented desk-scale budget.
bool enumeration_feasible(int k, int m);

/// One representative per isomorphism class of k-uniform hypertrees with m
/// edges, generated by pendant-edge attachment and deduplicated by canonical
/// form; sorted by canonical code.
std::vector<Hypergraph> generate_hypertrees(int k, int m);

namespace detail {

/// Canonical form of a vertex-colored hypergraph; colors constrain the
/// permutation and are part of the code.
struct ColoredCode {
  CanonicalForm form;
  std::vector<int> colors;

  auto operator<=>(const ColoredCode&) const = default;
};

ColoredCode canonical_colored(const Hypergraph& g, const std::vector<int>& colors);

}  // namespace detail

}  // namespace hyperspec
