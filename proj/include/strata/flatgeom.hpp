#pragma once

#include <map>
#include <random>
#include <vector>

#include "strata/error.hpp"
#include "strata/signature.hpp"

namespace strata {

// Zippered-rectangle chart data for a stratum of meromorphic differentials.
// Variables are 1-based; nplus/nminus are the breakpoint sequences n^+_0..,
// dvec = (0 = d_0 < d_1 < ... < d_r = d); pole i has order d_i - d_{i-1} + 1.
struct ChartData {
    int n = 0;
    std::vector<int> nplus;   // size d + splus + 1, starts 0, ends n
    std::vector<int> nminus;  // size d + sminus + 1
    std::vector<int> pit;     // top permutation of {1..n}
    std::vector<int> pib;     // bottom permutation
    std::vector<int> dvec;
    int splus = 0;
    int sminus = 0;

    int d() const { return dvec.back(); }
    int r() const { return (int)dvec.size() - 1; }
    int simple_poles() const { return splus + sminus; }
    int pole_order(int i) const;  // 1-based non-simple pole index
};

void validate_chart(const ChartData& c);

// n = 2g + |kappa| - 2 saddle-connection coordinates
int coordinate_count(int g, const std::vector<int>& kappa);

// Integer residue tally (the 1/2(pi)i scalar is dropped).
struct ResidueForm {
    std::map<int, int> coeff;  // variable -> coefficient

    bool zero() const { return coeff.empty(); }
};

// Poles are indexed 1..r (non-simple), then r+1..r+splus (C^+ simple),
// then r+splus+1..r+splus+sminus (C^- simple).
ResidueForm residue_form(const ChartData& c, int pole);

// Rank over Q of the non-simple-pole residue forms.
int zero_residue_rank(const ChartData& c);

// Random valid (connected) chart for property testing; r_max bounds the
// number of non-simple poles, with_simple adds >= 2 simple poles.
ChartData random_chart(std::mt19937& rng, int r_max, bool with_simple);

}  // namespace strata
