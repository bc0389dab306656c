#pragma once

#include <iosfwd>
#include <string>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

struct ParseError : Error { using Error::Error; };

// .uhg text format: first content line `k n m`, then m lines of k
// space-separated 0-based vertex indices; `#` starts a comment line.
// A 0 in the k slot is accepted only for edgeless hypergraphs.

Hypergraph read_uhg(std::istream& in);
Hypergraph read_uhg_file(const std::string& path);

void write_uhg(std::ostream& out, const Hypergraph& g);
void write_uhg_file(const std::string& path, const Hypergraph& g);

/// {"n": int, "edges": [[int,...],...]}
Hypergraph hypergraph_from_json(const std::string& text);
std::string hypergraph_to_json(const Hypergraph& g);

/// 17 significant digits, the precision used by every json/csv emitter.
std::string fmt_double(double v);

/// {"rho":..,"perron":[..],"residual":..,"iterations":..}
std::string to_json(const SpectralResult& r);

/// One row per vertex, comma-separated hop counts.
std::string to_csv(const DistanceMatrix& d);

}  // namespace hyperspec
