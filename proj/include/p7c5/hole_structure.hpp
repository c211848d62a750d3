#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "p7c5/graph.hpp"

namespace p7c5 {

// All index arithmetic on the seven hole positions goes through this one
// helper: any integer is folded into {1..7}.
inline int hole_index(int i) { return (i - 1) % 7 + ((i - 1) % 7 < 0 ? 7 : 0) + 1; }

using HoleTuple = std::array<int, 7>; // v1..v7 in cyclic order

// Partition of V minus the hole by exact hole-neighborhood templates
// (positions mod 7, 1-indexed):
//   a[i]    <-> {i, i+2}            b[i] <-> {i, i+2, i+3}
//   bbar[i] <-> {i, i+1, i+3}       d[i] <-> {i, i+2, i+3, i+5}
//   inner   <-> all seven           far  <-> no hole neighbors
// Vertices matching no template land in `spill`; the class of graphs this
// partition was built for never produces any.
struct HoleAttachment {
    HoleTuple hole;
    std::array<VertexSet, 8> a, b, bbar, d; // index 1..7; slot 0 unused
    VertexSet inner;                        // complete to the hole
    VertexSet far;                          // anticomplete to the hole
    VertexSet spill;

    VertexSet a_union() const;
    VertexSet b_union() const;
    VertexSet bbar_union() const;
    VertexSet d_union() const;
};

// Same machinery for the three-template variant:
//   x[i] <-> {i, i+2}    y[i] <-> {i, i+1, i+2}    center <-> all seven
struct XYZAttachment {
    HoleTuple hole;
    std::array<VertexSet, 8> x, y;
    VertexSet center;
    VertexSet far;
    VertexSet spill;
};

struct MViolation {
    int property_id;          // 1..26
    std::vector<int> witness; // vertices exhibiting the violation
    std::string detail;

    std::string to_line() const; // "M<k>: v v v"
};

// First induced 7-cycle in deterministic DFS order, as a cyclic tuple.
std::optional<HoleTuple> find_seven_hole(const Graph& g);

// Every induced 7-hole, one representative per vertex set (cyclic order and
// direction are normalized away).
std::vector<HoleTuple> enumerate_seven_holes(const Graph& g);

// hole must be an induced C7 of g; throws input_error otherwise.
HoleAttachment compute_attachments(const Graph& g, const HoleTuple& hole);
XYZAttachment compute_xyz(const Graph& g, const HoleTuple& hole);

// Evaluates the 26 structural properties of the attachment partition and
// returns every violation found (empty for the graph class the partition
// is designed for).  Property 26 is conditional on the graph having no
// comparable pair; pass that fact in, or use the convenience overload that
// computes it.
std::vector<MViolation> check_m_properties(const Graph& g, const HoleAttachment& att,
                                           bool graph_has_comparable_pair);
std::vector<MViolation> check_m_properties(const Graph& g, const HoleAttachment& att);

struct CenterAnticenter {
    VertexSet centers;
    VertexSet anticenters;
};

// Vertices outside H complete / anticomplete to H.
CenterAnticenter find_center_anticenter(const Graph& g, const VertexSet& h);

} // namespace p7c5
