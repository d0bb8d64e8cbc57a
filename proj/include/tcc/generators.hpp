#ifndef TCC_GENERATORS_HPP
#define TCC_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "tcc/graph.hpp"

namespace tcc {

Graph complete(Vertex n);
Graph cycle(Vertex n);
Graph path(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph petersen();

// Paley graph on a prime q with q = 1 (mod 4): vertices 0..q-1, edge uv
// iff u - v is a nonzero quadratic residue mod q. Strongly regular with
// parameters (q, (q-1)/2, (q-5)/4, (q-1)/4).
Graph paley(std::int64_t q);

// G(n, p) with a pinned generator so identical (n, p, seed) triples
// reproduce the identical graph on every platform: std::mt19937_64
// seeded with `seed`, one draw per pair (u, v) with u ascending then v
// ascending, mapped to [0, 1) as (x >> 11) * 2^-53, edge kept iff the
// draw is < p.
Graph erdos_renyi(Vertex n, double p, std::uint64_t seed);

// Parses "complete:4", "cycle:5", "path:3", "bipartite:2,3",
// "petersen", "paley:13", "er:10,0.5,42".
Graph from_family_spec(const std::string& spec);

}  // namespace tcc

#endif
