#include "strata/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace strata {

namespace {

void check_perm(const Perm& p, int d) {
    if ((int)p.size() != d) throw Error(Errc::InvalidInput, "permutation has wrong degree");
    std::vector<bool> seen(d + 1, false);
    for (int v : p) {
        if (v < 1 || v > d || seen[v]) throw Error(Errc::InvalidInput, "not a permutation");
        seen[v] = true;
    }
}

Perm identity_perm(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm conjugate(const Perm& g, const Perm& t) {
    // x -> g(t(g^{-1}(x)))
    const int d = (int)t.size();
    Perm out(d);
    for (int x = 1; x <= d; ++x) out[g[x - 1] - 1] = g[t[x - 1] - 1];
    return out;
}

bool tuple_transitive(const MonodromyTuple& t) {
    std::vector<int> parent(t.d);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& p : t.perms)
        for (int x = 1; x <= t.d; ++x) parent[find(x - 1)] = find(p[x - 1] - 1);
    for (int x = 1; x < t.d; ++x)
        if (find(x) != find(0)) return false;
    return true;
}

std::vector<std::vector<int>> normalized_profile_parts(int d, const RamificationProfile& profile) {
    std::vector<std::vector<int>> parts;
    for (auto part : profile.parts) {
        int sum = 0;
        for (int x : part) {
            if (x < 1) throw Error(Errc::InvalidInput, "partition entries must be positive");
            sum += x;
        }
        if (sum > d) throw Error(Errc::InvalidInput, "partition exceeds the degree");
        while (sum < d) {
            part.push_back(1);
            ++sum;
        }
        std::sort(part.rbegin(), part.rend());
        parts.push_back(std::move(part));
    }
    return parts;
}

void check_instance_guard(int d, size_t s) {
    if (d < 1 || d > 6) throw Error(Errc::InstanceTooLarge, "degree guard is d <= 6");
    if (s < 1 || s > 10) throw Error(Errc::InstanceTooLarge, "branch point guard is s <= 10");
}

}  // namespace

Perm perm_from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity_perm(d);
    for (auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > d) throw Error(Errc::IndexOutOfRange, "cycle entry out of range");
            p[from - 1] = to;
        }
    }
    check_perm(p, d);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i] - 1];
    return out;
}

Perm perm_inverse(const Perm& p) {
    Perm out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = (int)i + 1;
    return out;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size() + 1, false);
    std::vector<int> type;
    for (int x = 1; x <= (int)p.size(); ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        do {
            seen[y] = true;
            y = p[y - 1];
            ++len;
        } while (y != x);
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string perm_to_cycles(const Perm& p) {
    std::vector<bool> seen(p.size() + 1, false);
    std::ostringstream os;
    bool any = false;
    for (int x = 1; x <= (int)p.size(); ++x) {
        if (seen[x] || p[x - 1] == x) continue;
        any = true;
        os << "(";
        int y = x;
        bool first = true;
        do {
            if (!first) os << " ";
            first = false;
            os << y;
            seen[y] = true;
            y = p[y - 1];
        } while (y != x);
        os << ")";
    }
    return any ? os.str() : "id";
}

void validate_tuple(const MonodromyTuple& t) {
    if (t.d < 1 || t.perms.empty()) throw Error(Errc::InvalidInput, "empty monodromy tuple");
    for (auto& p : t.perms) check_perm(p, t.d);
    Perm prod = identity_perm(t.d);
    for (auto& p : t.perms) prod = perm_compose(prod, p);
    if (prod != identity_perm(t.d))
        throw Error(Errc::ProductNotIdentity, "tuple product is " + perm_to_cycles(prod));
    if (!tuple_transitive(t)) throw Error(Errc::NotTransitive, "generated subgroup is not transitive");
}

int tuple_genus(const MonodromyTuple& t) {
    int ram = 0;
    for (auto& p : t.perms) {
        check_perm(p, t.d);
        ram += t.d - (int)cycle_type(p).size();
    }
    int chi = 2 * t.d - ram;  // 2 - 2g
    if (chi % 2 != 0) throw Error(Errc::NonIntegralGenus, "Riemann-Hurwitz genus is not an integer");
    if (chi > 2) throw Error(Errc::NegativeGenus, "Riemann-Hurwitz genus is negative");
    return (2 - chi) / 2;
}

MonodromyTuple braid_move(const MonodromyTuple& t, int i, bool inverse) {
    if (i < 1 || i >= (int)t.perms.size()) throw Error(Errc::IndexOutOfRange, "braid move position out of range");
    MonodromyTuple out = t;
    const Perm &a = t.perms[i - 1], &b = t.perms[i];
    if (!inverse) {
        out.perms[i - 1] = perm_compose(perm_compose(a, b), perm_inverse(a));
        out.perms[i] = a;
    } else {
        out.perms[i - 1] = b;
        out.perms[i] = perm_compose(perm_compose(perm_inverse(b), a), b);
    }
    return out;
}

RamificationProfile tuple_profile(const MonodromyTuple& t) {
    RamificationProfile prof;
    prof.degree = t.d;
    for (auto& p : t.perms) prof.parts.push_back(cycle_type(p));
    return prof;
}

std::vector<MonodromyTuple> enumerate_tuples(int d, const RamificationProfile& profile) {
    check_instance_guard(d, profile.parts.size());
    auto parts = normalized_profile_parts(d, profile);
    const int s = (int)parts.size();

    std::map<std::vector<int>, std::vector<Perm>> by_type;
    Perm p = identity_perm(d);
    do {
        by_type[cycle_type(p)].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, int> remaining;
    for (auto& part : parts) {
        if (!by_type.count(part)) return {};
        remaining[part]++;
    }

    std::vector<MonodromyTuple> out;
    MonodromyTuple cur;
    cur.d = d;
    std::function<void(int, const Perm&)> dfs = [&](int slot, const Perm& prod) {
        if (slot == s - 1) {
            Perm last = perm_inverse(prod);
            auto type = cycle_type(last);
            auto it = remaining.find(type);
            if (it == remaining.end() || it->second == 0) return;
            cur.perms.push_back(last);
            if (tuple_transitive(cur)) out.push_back(cur);
            cur.perms.pop_back();
            return;
        }
        for (auto& [type, count] : remaining) {
            if (count == 0) continue;
            --count;
            for (auto& q : by_type[type]) {
                cur.perms.push_back(q);
                dfs(slot + 1, perm_compose(prod, q));
                cur.perms.pop_back();
            }
            ++count;
        }
    };
    dfs(0, identity_perm(d));
    std::sort(out.begin(), out.end());
    return out;
}

MonodromyTuple canonical_form(const MonodromyTuple& t) {
    MonodromyTuple best = t;
    Perm g = identity_perm(t.d);
    do {
        MonodromyTuple cand;
        cand.d = t.d;
        for (auto& p : t.perms) cand.perms.push_back(conjugate(g, p));
        if (cand < best) best = cand;
    } while (std::next_permutation(g.begin(), g.end()));
    return best;
}

namespace {

std::set<MonodromyTuple> conjugacy_classes(const std::vector<MonodromyTuple>& tuples) {
    std::set<MonodromyTuple> classes;
    for (auto& t : tuples) classes.insert(canonical_form(t));
    return classes;
}

std::string profile_key(int d, const RamificationProfile& profile) {
    auto parts = normalized_profile_parts(d, profile);
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    os << "d=" << d << ";conv=leftfirst-v1;profile=";
    for (auto& part : parts) {
        os << "[";
        for (size_t i = 0; i < part.size(); ++i) os << (i ? "," : "") << part[i];
        os << "]";
    }
    return os.str();
}

std::string fnv1a_hex(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string cache_directory(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("STRATA_CACHE")) return env;
    return "";
}

std::optional<OrbitResult> cache_read(const std::filesystem::path& file, const std::string& key) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        OrbitResult r;
        r.tuple_count = Int(j.at("tuples").get<std::string>());
        r.class_count = Int(j.at("classes").get<std::string>());
        for (auto& x : j.at("orbit_sizes")) r.orbit_sizes.push_back(Int(x.get<std::string>()));
        return r;
    } catch (...) {
        return std::nullopt;
    }
}

void cache_write(const std::filesystem::path& file, const std::string& key, const OrbitResult& r) {
    nlohmann::json j;
    j["key"] = key;
    j["tuples"] = r.tuple_count.str();
    j["classes"] = r.class_count.str();
    j["orbit_sizes"] = nlohmann::json::array();
    for (auto& x : r.orbit_sizes) j["orbit_sizes"].push_back(x.str());
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream out(file);
    if (out) out << j.dump(2) << "\n";
}

}  // namespace

Int hurwitz_number(int d, const RamificationProfile& profile) {
    return (Int)conjugacy_classes(enumerate_tuples(d, profile)).size();
}

OrbitResult braid_orbits(int d, const RamificationProfile& profile, const std::string& cache_dir) {
    const std::string key = profile_key(d, profile);
    const std::string dir = cache_directory(cache_dir);
    std::filesystem::path file;
    if (!dir.empty()) {
        file = std::filesystem::path(dir) / ("orbits-" + fnv1a_hex(key) + ".json");
        if (auto hit = cache_read(file, key)) return *hit;
    }

    auto tuples = enumerate_tuples(d, profile);
    auto class_set = conjugacy_classes(tuples);
    std::vector<MonodromyTuple> classes(class_set.begin(), class_set.end());
    std::map<MonodromyTuple, int> index;
    for (int i = 0; i < (int)classes.size(); ++i) index[classes[i]] = i;

    std::vector<int> parent(classes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < (int)classes.size(); ++i) {
        for (int pos = 1; pos < (int)classes[i].perms.size(); ++pos) {
            for (bool inv : {false, true}) {
                auto moved = canonical_form(braid_move(classes[i], pos, inv));
                parent[find(i)] = find(index.at(moved));
            }
        }
    }
    std::map<int, Int> sizes;
    for (int i = 0; i < (int)classes.size(); ++i) sizes[find(i)] += 1;

    OrbitResult r;
    r.tuple_count = (Int)tuples.size();
    r.class_count = (Int)classes.size();
    for (auto& [_, sz] : sizes) r.orbit_sizes.push_back(sz);
    std::sort(r.orbit_sizes.rbegin(), r.orbit_sizes.rend());

    if (!file.empty()) cache_write(file, key, r);
    return r;
}

std::vector<ReferenceExample> reference_examples() {
    std::vector<ReferenceExample> out;

    ReferenceExample ex8;
    ex8.name = "genus-one-degree-discrepancy";
    ex8.tuple.d = 6;  // the listed permutations move the letter 6
    ex8.tuple.perms = {
        perm_from_cycles(6, {{1, 2}, {3, 4}}), perm_from_cycles(6, {{4, 5, 6}}),
        perm_from_cycles(6, {{1, 2}}),         perm_from_cycles(6, {{1, 3}}),
        perm_from_cycles(6, {{1, 3}}),         perm_from_cycles(6, {{1, 4}}),
        perm_from_cycles(6, {{1, 4}}),         perm_from_cycles(6, {{3, 5}}),
        perm_from_cycles(6, {{4, 5}}),         perm_from_cycles(6, {{5, 6}})};
    ex8.claimed_degree = 5;
    ex8.claimed_genus = 1;
    ex8.support = 6;
    ex8.degree_discrepancy = true;

    ReferenceExample ex9;
    ex9.name = "genus-zero-degree-five";
    ex9.tuple.d = 5;
    ex9.tuple.perms = {perm_from_cycles(5, {{1, 2}, {3, 4}}), perm_from_cycles(5, {{1, 3, 5}}),
                       perm_from_cycles(5, {{1, 3, 2}}), perm_from_cycles(5, {{3, 4}}),
                       perm_from_cycles(5, {{4, 5}})};
    ex9.claimed_degree = 5;
    ex9.claimed_genus = 0;
    ex9.support = 5;
    ex9.degree_discrepancy = false;

    for (ReferenceExample* ex : {&ex8, &ex9}) {
        try {
            validate_tuple(ex->tuple);
            ex->valid = true;
        } catch (const Error&) {
            ex->valid = false;
        }
        ex->computed_genus = tuple_genus(ex->tuple);
        ex->verdict = theorem_hypothesis(tuple_profile(ex->tuple), ex->computed_genus);
        out.push_back(*ex);
    }
    return out;
}

}  // namespace strata
