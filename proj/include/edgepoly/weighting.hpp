#ifndef EDGEPOLY_WEIGHTING_HPP
#define EDGEPOLY_WEIGHTING_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "edgepoly/graph.hpp"

namespace edgepoly {

// A hyperplane sum a_i x_i = 0 with a_i in {-1,0,1} assigns vertex i the
// weight a_i. An edge {i,j} gets the signature {a_i, a_j} and the sign of
// a_i + a_j; it is positive, negative or zero accordingly. The weighting
// separates the edge polytope when there is at least one positive and one
// negative edge and every (positive, negative) pair is cycle-compatible.
// Two normal forms of separating weightings exist:
//   type I  - no zero weights (positive edges {1,1}, negative {-1,-1});
//   type II - some zero weight and no {1,1} or {-1,-1} edge (positive edges
//             {1,0}, negative {-1,0}; {1,-1} edges are zero and permitted).

using Weight = std::int8_t;

/// Weight vector in vertex order; entry v-1 belongs to vertex v.
using Weighting = std::vector<Weight>;

enum class Pattern { TypeI, TypeII };

std::string pattern_name(Pattern p);  // "I" or "II"

struct EdgeSign {
  Edge edge;
  int sign;            // -1, 0, +1
  Weight sig_lo, sig_hi;  // the signature {a_u, a_v}, sorted
};

/// Per-edge sign and signature under a. Throws on length mismatch or weights
/// outside {-1,0,1}.
std::vector<EdgeSign> edge_signs(const Graph& g, const Weighting& a);

/// Full diagnostic result of testing one weighting on a connected graph.
struct SeparationCheck {
  bool general_valid = false;           // >=1 positive, >=1 negative, all pairs compatible
  std::optional<Pattern> pattern;       // set only when general_valid and the pattern matches
  std::vector<Edge> positive, negative, zero;
  bool has_zero_weight = false;
  bool has_unit_signature_pair = false; // some edge has signature {1,1} or {-1,-1}
  std::optional<std::pair<Edge, Edge>> incompatible_pair;  // first failing (positive, negative) pair
};

/// Requires g connected (use component_reduce for disconnected graphs).
SeparationCheck check_separating(const Graph& g, const Weighting& a);

/// The matched pattern, or nullopt when a does not separate in pattern I or II.
std::optional<Pattern> is_separating(const Graph& g, const Weighting& a);

/// A validated separating weighting with its sign decomposition of E(G).
struct Certificate {
  Weighting weights;
  Pattern pattern;
  std::vector<Edge> positive, negative, zero;
};

/// Builds the certificate for a patterned separating weighting; throws
/// InputError if a is not one.
Certificate make_certificate(const Graph& g, const Weighting& a);

/// Throws InputError unless c's weights are a patterned separating weighting
/// of g whose pattern and sign decomposition are exactly c's.
void validate_certificate(const Graph& g, const Certificate& c);

namespace detail {

/// Classification core shared by check_separating, the searches and the
/// brute-force oracle. Assumes a is well-formed; uses the precomputed table.
struct Classified {
  bool general_valid;
  std::optional<Pattern> pattern;
};
Classified classify(const Graph& g, const CompatibilityTable& compat, const Weighting& a,
                    std::vector<int>& pos_scratch, std::vector<int>& neg_scratch);

void validate_weighting(const Graph& g, const Weighting& a);

}  // namespace detail

}  // namespace edgepoly

#endif  // EDGEPOLY_WEIGHTING_HPP
