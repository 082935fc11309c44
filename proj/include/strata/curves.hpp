#pragma once

#include <array>
#include <string>
#include <vector>

#include "strata/picard.hpp"

namespace strata {

// One-dimensional boundary stratum of Mbar_{0,n}: a partition of the
// markings into four nonempty blocks.
struct FCurve {
    int n = 0;
    std::array<Mask, 4> blocks{};

    std::string to_text() const;
};

std::vector<FCurve> enumerate_fcurves(int n);

// Intersection number c . F via the boundary-only normal form of c.
Rational pair_fcurve(const DivisorClass& c, const FCurve& F);

struct FnefResult {
    bool ok = true;
    std::vector<FCurve> violations;
};

FnefResult is_fnef(const DivisorClass& c);

// Test curve B_i: first n-1 points fixed in general position, point i moving.
// B_i.psi_i = n-3, B_i.psi_j = 1, B_i.delta_{0:{i,j}} = 1, all else 0.
Rational pair_test_curve_last_point(const DivisorClass& c, int i);

// Test curve B_{p,q}: a rational tail carrying {p,q} attached at a moving
// point. psi_j = 1 off the tail, delta_{0:{p,q}} = 4-n, delta_{0:{p,q,j}} = 1.
Rational pair_test_curve_tail(const DivisorClass& c, int p, int q);

// Nef certificate for Z^n of a second-kind genus 0 signature, following the
// boundary-restriction induction with F-nef leaves at n <= 7.
struct NefCert {
    std::vector<int> d;
    std::string status;  // "fnef-leaf", "boundary-recursion", "memo"
    std::vector<NefCert> children;
};

NefCert nef_certificate(const std::vector<int>& d);

}  // namespace strata
