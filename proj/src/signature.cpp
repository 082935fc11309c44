#include "strata/signature.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace strata {

int Signature::non_simple_poles() const {
    return (int)std::count_if(entries.begin(), entries.end(), [](int k) { return k <= -2; });
}

int Signature::simple_poles() const {
    return (int)std::count(entries.begin(), entries.end(), -1);
}

int Signature::poles() const {
    return (int)std::count_if(entries.begin(), entries.end(), [](int k) { return k < 0; });
}

std::vector<int> Signature::pole_orders() const {
    std::vector<int> p;
    for (int k : entries)
        if (k <= -2) p.push_back(-k);
    return p;
}

std::vector<int> Signature::zero_orders() const {
    std::vector<int> z;
    for (int k : entries)
        if (k >= 1) z.push_back(k);
    return z;
}

Signature validate_signature(int g, const std::vector<int>& entries) {
    if (g < 0) throw Error(Errc::NegativeGenus, "genus must be nonnegative");
    if (entries.empty()) throw Error(Errc::SignatureShapeError, "empty signature");
    for (int k : entries)
        if (k == 0) throw Error(Errc::SignatureShapeError, "zero entry in signature");
    long long sum = std::accumulate(entries.begin(), entries.end(), 0LL);
    if (sum != 2LL * g - 2)
        throw Error(Errc::SumMismatch, "signature entries must sum to 2g-2");
    return Signature{g, entries};
}

bool zero_residue_empty(const Signature& sig) {
    int k = sig.simple_poles();
    if (k == 1) return true;
    if (sig.g == 0 && k == 0) {
        auto p = sig.pole_orders();
        long long bound = 0;
        for (int pi : p) bound += pi - 1;
        for (int z : sig.zero_orders())
            if (z >= bound) return true;
    }
    return false;
}

int RamificationProfile::simple_transpositions() const {
    int c = 0;
    for (const auto& part : parts) {
        bool simple = !part.empty() && part[0] == 2;
        for (size_t i = 1; simple && i < part.size(); ++i)
            if (part[i] != 1) simple = false;
        if (simple) ++c;
    }
    return c;
}

int RamificationProfile::non_pure_count() const {
    return (int)std::count_if(parts.begin(), parts.end(),
                              [](const std::vector<int>& p) { return !is_pure(p); });
}

bool is_pure(const std::vector<int>& partition) {
    int big = (int)std::count_if(partition.begin(), partition.end(), [](int e) { return e != 1; });
    return big <= 1;
}

static std::vector<int> padded_part(std::vector<int> part, int d) {
    long long sum = std::accumulate(part.begin(), part.end(), 0LL);
    if (sum > d) throw Error(Errc::DegreeTooSmall, "partition entry exceeds degree");
    while (sum < d) {
        part.push_back(1);
        ++sum;
    }
    std::sort(part.rbegin(), part.rend());
    return part;
}

std::pair<RamificationProfile, int> profile_from_signature(const Signature& sig) {
    if (sig.simple_poles() > 0)
        throw Error(Errc::SimplePolePresent, "profile requires a signature without simple poles");
    auto poles = sig.pole_orders();
    if (poles.empty())
        throw Error(Errc::SignatureShapeError, "profile requires at least one pole");
    int d = 0;
    for (int p : poles) d += p - 1;
    RamificationProfile prof;
    prof.degree = d;
    std::vector<int> fibre;
    for (int p : poles) fibre.push_back(p - 1);
    prof.parts.push_back(padded_part(fibre, d));
    for (int a : sig.zero_orders()) {
        if (a + 1 > d)
            throw Error(Errc::DegreeTooSmall, "zero order too large for degree");
        prof.parts.push_back(padded_part({a + 1}, d));
    }
    return {prof, d};
}

int genus_from_profile(const RamificationProfile& profile) {
    // Riemann-Hurwitz: 2 - 2g = 2d - sum over parts of (entry - 1).
    long long ram = 0;
    for (const auto& part : profile.parts) {
        long long sum = 0;
        for (int e : part) {
            if (e < 1) throw Error(Errc::ShapeError, "partition entries must be positive");
            sum += e;
            ram += e - 1;
        }
        if (sum != profile.degree)
            throw Error(Errc::SumMismatch, "partition does not sum to the degree");
    }
    // 2 - 2g = 2d - ram over the base P^1.
    long long num = 2 - 2LL * profile.degree + ram;
    if (num % 2 != 0) throw Error(Errc::NonIntegralGenus, "profile gives non-integral genus");
    long long g = num / 2;
    if (g < 0) throw Error(Errc::NegativeGenus, "profile gives negative genus");
    return (int)g;
}

HypothesisVerdict theorem_hypothesis(const RamificationProfile& profile, int g) {
    if (profile.non_pure_count() > 1) return HypothesisVerdict::NotCovered;
    int simple = profile.simple_transpositions();
    int d = profile.degree;
    if (g == 0 && simple >= d - 3) return HypothesisVerdict::GenusZeroApplies;
    if (simple >= 3 * g + d - 1) return HypothesisVerdict::GeneralGenusApplies;
    return HypothesisVerdict::NotCovered;
}

const char* verdict_name(HypothesisVerdict v) {
    switch (v) {
        case HypothesisVerdict::GeneralGenusApplies: return "GeneralGenusApplies";
        case HypothesisVerdict::GenusZeroApplies: return "GenusZeroApplies";
        case HypothesisVerdict::NotCovered: return "NotCovered";
    }
    return "Unknown";
}

std::vector<int> parse_kappa(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw Error(Errc::InvalidInput, "empty kappa list");
    return out;
}

}  // namespace strata
