#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/rational.hpp"
#include "strata/signature.hpp"

namespace strata {

// Dual graph of a stable curve.  Vertices carry a genus and the marked
// points lying on that component; edges are unordered vertex pairs and may
// be self-loops.
struct DualGraph {
    struct Vertex {
        int genus = 0;
        std::vector<int> markings;  // 1-based marking labels
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;

    int total_genus() const;  // sum of vertex genera + first Betti number
    bool connected() const;
    bool is_tree() const;
};

// Exact complex number with rational real/imaginary parts.
struct ComplexQ {
    Rational re, im;
    bool operator==(const ComplexQ&) const = default;
    ComplexQ operator+(const ComplexQ& o) const { return {re + o.re, im + o.im}; }
    bool zero() const { return re == 0 && im == 0; }
};

// An edge end is (edge index, end 0/1); end 0 belongs to edges[e].first.
using EdgeEnd = std::pair<int, int>;

struct TwistedConfig {
    DualGraph graph;
    std::map<int, int> marking_order;           // marking -> order k_i
    std::vector<std::pair<int, int>> edge_orders;  // per edge: (order at end 0, at end 1)
    std::map<int, Rational> level;              // vertex -> level
    std::set<int> zeroed;                       // zeroed marked poles
    std::map<EdgeEnd, ComplexQ> residue;        // missing entries are 0

    int order_at(const EdgeEnd& q) const;
    int end_vertex(const EdgeEnd& q) const;
};

// Checks axioms (1)-(5) of a twisted canonical divisor plus level/order
// compatibility; returns a human-readable entry per violated condition.
std::vector<std::string> validate_twisted(const TwistedConfig& cfg);

struct GrcFailure {
    Rational level;
    std::vector<int> component;  // vertices of the offending component Y
    ComplexQ sum;
};

struct GrcResult {
    bool ok = true;
    std::vector<int> bad_horizontal_edges;   // residues not opposite
    std::vector<int> bad_zeroed_markings;    // zeroed marking is not a higher-order pole
    std::vector<GrcFailure> failing;         // condition on levels/components
};

GrcResult zr_grc_check(const TwistedConfig& cfg);

// Solves the linear residue constraints (opposite residues on horizontal
// edges, residue theorem per component, zero-residue GRC sums) over the
// rationals, requiring nonzero residues at simple-pole positions.  This is a
// necessary condition for smoothability only; achievability per component is
// not checked.
struct ResidueSolution {
    bool exists = false;
    std::map<EdgeEnd, Rational> edge_end;
    std::map<int, Rational> marking;  // residues at non-zeroed marked poles
};

ResidueSolution solve_residues(const TwistedConfig& cfg);

// Theorem-style membership test on compact-type curves: true iff every
// component signature avoids order -1 and is a non-empty zero-residue
// stratum.
bool compact_type_second_kind(const Signature& sig, const DualGraph& tree,
                              const std::map<int, int>& marking_order,
                              const std::vector<std::pair<int, int>>& edge_orders);

// Codimension bookkeeping for genus-0 boundary restrictions: returns
// sum_i (poles(kappa_i) - 1) and checks it equals poles(kappa) - 1.
int restriction_codim(const Signature& sig, const std::vector<Signature>& components);

}  // namespace strata
