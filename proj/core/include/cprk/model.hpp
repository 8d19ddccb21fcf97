#pragma once

#include <optional>

#include "cprk/types.hpp"

namespace cprk {

/// Throws std::invalid_argument unless m >= 1 and n >= 1.
void validate_spec(const CompleteBipartiteSpec& spec);

/// Throws std::invalid_argument unless the profile has equally many pink and
/// black arcs, at least one pair, and only non-negative entries.
void validate_profile(const ArcProfile& profile);

/// As above, and additionally requires arc sums equal to spec.m and spec.n.
void validate_profile(const CompleteBipartiteSpec& spec, const ArcProfile& profile);

/// Throws std::invalid_argument on loops, duplicate edges, out-of-range
/// endpoints, or a partition that does not label every vertex.
void validate_graph(const GraphSpec& graph);

/// K_{m,n} with pink vertices 0..m-1 (part label 0) and black vertices
/// m..m+n-1 (part label 1).
GraphSpec complete_bipartite(std::int64_t m, std::int64_t n);

/// The two vertex classes of a labeled complete bipartite graph, or nullopt
/// if the graph is not complete bipartite under its partition.  The class of
/// vertex 0 comes first.
struct BipartiteClasses {
  std::vector<std::int32_t> first;
  std::vector<std::int32_t> second;
};
std::optional<BipartiteClasses> complete_bipartite_classes(const GraphSpec& graph);

/// The alternating drawing M1 N1 ... Mk Nk for the given profile, with
/// ascending vertex ids inside each arc.  Crossing counts of K_{m,n} never
/// depend on the within-arc order, only on arc membership.
CircularDrawing profile_to_drawing(const CompleteBipartiteSpec& spec, const ArcProfile& profile);

/// Least representative of the profile's symmetry class: the lexicographic
/// minimum over all rotations of the (pink, black) arc pairs and all
/// rotations of the reflected pattern.  Reflecting the circle reverses the
/// arc sequence; re-reading it pink-first gives pink' = (m_1, m_k, ..., m_2)
/// and black' = (n_k, n_{k-1}, ..., n_1).
ArcProfile canonical_profile(const ArcProfile& profile);

}  // namespace cprk
