#pragma once

#include <string>
#include <vector>

#include "strata/error.hpp"

namespace strata {

// Orders of zeros and poles of a differential; negative entries are poles.
// Entries sum to 2g-2.
struct Signature {
    int g = 0;
    std::vector<int> entries;

    int non_simple_poles() const;  // m: entries <= -2
    int simple_poles() const;      // k: entries == -1
    int poles() const;             // all negative entries
    std::vector<int> pole_orders() const;  // p_i = -k_i for k_i <= -2
    std::vector<int> zero_orders() const;  // k_i >= 1
};

Signature validate_signature(int g, const std::vector<int>& entries);

// Prop: H_Z(kappa) is empty iff exactly one simple pole, or g=0 with no
// simple poles and some zero order >= sum(p_j - 1).
bool zero_residue_empty(const Signature& sig);

// Unordered multiset of partitions of d recording cycle types over the
// branch points of a cover.
struct RamificationProfile {
    int degree = 0;
    // Each partition sorted descending, padded with 1's to sum to degree.
    std::vector<std::vector<int>> parts;

    int simple_transpositions() const;  // parts of shape (2,1,...,1)
    int non_pure_count() const;         // parts with >= 2 entries != 1
};

bool is_pure(const std::vector<int>& partition);

// Branched-cover profile attached to a signature with s >= 1 non-simple
// poles and no simple poles: special fibre (p_1-1,...,p_s-1), then one
// partition (a_i+1, 1,...) per zero. Degree d = sum(p_i - 1).
std::pair<RamificationProfile, int> profile_from_signature(const Signature& sig);

int genus_from_profile(const RamificationProfile& profile);

enum class HypothesisVerdict { GeneralGenusApplies, GenusZeroApplies, NotCovered };

HypothesisVerdict theorem_hypothesis(const RamificationProfile& profile, int g);

const char* verdict_name(HypothesisVerdict v);

std::vector<int> parse_kappa(const std::string& csv);

}  // namespace strata
