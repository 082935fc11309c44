#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/error.hpp"
#include "strata/rational.hpp"
#include "strata/signature.hpp"

namespace strata {

// Subsets of markings {1,...,n} as bitmasks; bit (j-1) encodes marking j.
using Mask = std::uint32_t;

Mask full_mask(int n);
int mask_size(Mask S);
std::vector<int> mask_elements(Mask S);
Mask mask_from_elements(const std::vector<int>& elems);

// Boundary divisor delta_{i:S} on Mbar_{g,n}; (i,S) ~ (g-i, S^c).
// Canonical representative: smaller i first; for 2i = g, the side with
// marking 1 in S.
struct BoundaryIndex {
    int i = 0;
    Mask S = 0;

    bool operator<(const BoundaryIndex& o) const {
        if (i != o.i) return i < o.i;
        return S < o.S;
    }
    bool operator==(const BoundaryIndex& o) const { return i == o.i && S == o.S; }
};

BoundaryIndex canonical_boundary(int g, int n, int i, Mask S);
bool boundary_index_valid(int g, int n, int i, Mask S);
std::vector<BoundaryIndex> all_boundary_indices(int g, int n);

// Element of Pic(Mbar_{g,n}) tensor Q in the standard generators
// lambda, psi_1..psi_n, delta_0 (irreducible), delta_{i:S}.
struct DivisorClass {
    int g = 0;
    int n = 0;
    Rational lambda;
    std::vector<Rational> psi;        // size n, 1-based marking j at psi[j-1]
    Rational delta_irr;
    std::map<BoundaryIndex, Rational> delta;

    explicit DivisorClass(int g_ = 0, int n_ = 1) : g(g_), n(n_), psi(n_, Rational(0)) {}

    Rational& coeff(const BoundaryIndex& b) { return delta[b]; }
    Rational get(const BoundaryIndex& b) const;
    void add_delta(int i, Mask S, const Rational& c);
    void prune();

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Rational& c) const;
    bool operator==(const DivisorClass& o) const;

    std::string to_text() const;
    std::string to_latex() const;
};

// Zero-residue stratum divisor class of Theorem I (no simple poles).
// d = (d_1,...,d_n) with -1 not in d, m = #{d_i <= -2} >= 1,
// sum d_i = g - m, g + m - 2 >= 0.
DivisorClass formula_ZRdivI(int g, const std::vector<int>& d);

// Theorem II variant: k = #{d_i = -1} >= 2 simple poles among the marked
// points, sum d_i = g - m - 1.
DivisorClass formula_ZRdivII(int g, const std::vector<int>& d);

// Edge-labelled complete graph on the markings; absent pairs carry 0.
struct EdgeLabeledGraph {
    int n = 0;
    std::map<std::pair<int, int>, Rational> e;  // keys (i,j) with i<j

    Rational label(int i, int j) const;
    Rational vertex_weight(int i) const;            // e(i) = sum_j e(i~j)
    Rational cut_weight(Mask S) const;              // e(S) over edges crossing S
};

// D(Gamma) = sum_i e(i) psi_i - sum_{1 in S} e(S) delta_{0:S}; trivial in
// Pic(Mbar_{0,n}).
DivisorClass keel_graph_class(const EdgeLabeledGraph& gamma);

// sum f(i) psi_i - sum_{1 in S} f(S) delta_{0:S} with f(S) = |sum_{i in S} f_i|/2.
DivisorClass dcor_class(const std::vector<int>& f);

// Rewrite into the canonical reduced form modulo the known relations in
// Pic(Mbar_{g,n}) (Keel in genus 0, lambda/delta relations in genus 1, 2).
DivisorClass normal_form(const DivisorClass& D);
bool equals_mod_relations(const DivisorClass& A, const DivisorClass& B);

// Effective boundary expression for 2*Z - (graph terms) in genus 0;
// nullopt when the normalisation constant N vanishes.
std::optional<DivisorClass> boundary_effective_witness(const std::vector<int>& d);

// Pullback along the gluing map Mbar_{g-h,n} -> Mbar_{g,n} attaching a
// fixed genus-h tail at the first marking.
DivisorClass pullback_glue(const DivisorClass& D, int h);

// Restriction of a zero-residue divisor class to a boundary divisor
// delta_{i:S}: the two induced signatures (possibly flagged empty).
struct RestrictionPiece {
    std::vector<int> kappa;
    int g = 0;
    bool empty = false;  // the induced stratum is forced empty
};
struct RestrictionResult {
    RestrictionPiece side_S;
    RestrictionPiece side_Sc;
};
RestrictionResult zr_restriction(const std::vector<int>& d, Mask S);

// Report (do not repair) coefficients for which the displayed formula is
// not invariant under (i,S) -> (g-i,S^c).
std::vector<std::string> complement_consistency_report(int g, const std::vector<int>& d,
                                                       bool theorem_two);

}  // namespace strata
