#pragma once

#include <string>
#include <vector>

#include "strata/error.hpp"
#include "strata/rational.hpp"
#include "strata/signature.hpp"

namespace strata {

// Permutations are 1-based image tables: p[i-1] is the image of i.
using Perm = std::vector<int>;

Perm perm_from_cycles(int d, const std::vector<std::vector<int>>& cycles);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a first, then b
Perm perm_inverse(const Perm& p);
std::vector<int> cycle_type(const Perm& p);  // lengths sorted descending
std::string perm_to_cycles(const Perm& p);

struct MonodromyTuple {
    int d = 0;
    std::vector<Perm> perms;

    bool operator==(const MonodromyTuple&) const = default;
    bool operator<(const MonodromyTuple& o) const { return perms < o.perms; }
};

// Composition convention: the leftmost permutation acts first.
void validate_tuple(const MonodromyTuple& t);
int tuple_genus(const MonodromyTuple& t);

// (tau_i, tau_{i+1}) -> (tau_i tau_{i+1} tau_i^{-1}, tau_i); i is 1-based.
MonodromyTuple braid_move(const MonodromyTuple& t, int i, bool inverse = false);

RamificationProfile tuple_profile(const MonodromyTuple& t);

// All validated tuples realizing any ordering of the profile multiset.
// Guarded: d <= 6 and at most 10 branch points.
std::vector<MonodromyTuple> enumerate_tuples(int d, const RamificationProfile& profile);

// Lexicographically minimal simultaneous conjugate of the tuple.
MonodromyTuple canonical_form(const MonodromyTuple& t);

Int hurwitz_number(int d, const RamificationProfile& profile);

struct OrbitResult {
    Int tuple_count = 0;
    Int class_count = 0;
    std::vector<Int> orbit_sizes;  // classes per braid orbit, descending

    int orbit_count() const { return (int)orbit_sizes.size(); }
};

// Braid orbits on conjugacy classes; results are cached on disk under
// cache_dir (or $STRATA_CACHE) when provided.
OrbitResult braid_orbits(int d, const RamificationProfile& profile, const std::string& cache_dir = "");

struct ReferenceExample {
    std::string name;
    MonodromyTuple tuple;
    int claimed_degree = 0;
    int claimed_genus = 0;
    int support = 0;  // letters actually moved or listed
    bool degree_discrepancy = false;
    bool valid = false;
    int computed_genus = -1;
    HypothesisVerdict verdict = HypothesisVerdict::NotCovered;
};

std::vector<ReferenceExample> reference_examples();

}  // namespace strata
