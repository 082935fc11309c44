#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <numeric>

#include "strata/hurwitz.hpp"

using namespace strata;

namespace {

RamificationProfile simple_profile(int d, int count) {
    RamificationProfile p;
    p.degree = d;
    for (int i = 0; i < count; ++i) p.parts.push_back({2});
    return p;
}

std::vector<std::vector<int>> type_multiset(const MonodromyTuple& t) {
    std::vector<std::vector<int>> types;
    for (auto& p : t.perms) types.push_back(cycle_type(p));
    std::sort(types.begin(), types.end());
    return types;
}

Perm tuple_product(const MonodromyTuple& t) {
    Perm prod(t.d);
    std::iota(prod.begin(), prod.end(), 1);
    for (auto& p : t.perms) prod = perm_compose(prod, p);
    return prod;
}

}  // namespace

TEST_CASE("composition convention golden value") {
    // Leftmost factor acts first: (12) then (13) sends 1->2, 2->3, 3->1.
    Perm a = perm_from_cycles(3, {{1, 2}});
    Perm b = perm_from_cycles(3, {{1, 3}});
    CHECK(perm_compose(a, b) == perm_from_cycles(3, {{1, 2, 3}}));
    CHECK(perm_inverse(perm_from_cycles(3, {{1, 2, 3}})) == perm_from_cycles(3, {{1, 3, 2}}));
    CHECK(cycle_type(perm_from_cycles(4, {{1, 2}, {3, 4}})) == std::vector<int>{2, 2});
}

TEST_CASE("tuple validation") {
    MonodromyTuple ok{2, {perm_from_cycles(2, {{1, 2}}), perm_from_cycles(2, {{1, 2}})}};
    CHECK_NOTHROW(validate_tuple(ok));
    CHECK(tuple_genus(ok) == 0);

    MonodromyTuple bad{3, {perm_from_cycles(3, {{1, 2}}), perm_from_cycles(3, {{1, 3}})}};
    CHECK_THROWS_AS(validate_tuple(bad), Error);
    try {
        validate_tuple(bad);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ProductNotIdentity);
    }

    MonodromyTuple intrans{3, {perm_from_cycles(3, {{1, 2}}), perm_from_cycles(3, {{1, 2}})}};
    try {
        validate_tuple(intrans);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotTransitive);
    }
}

TEST_CASE("braid moves preserve the structural invariants") {
    auto examples = reference_examples();
    for (auto& ex : examples) {
        if (!ex.valid) continue;
        for (int i = 1; i < (int)ex.tuple.perms.size(); ++i) {
            auto moved = braid_move(ex.tuple, i);
            CHECK(braid_move(moved, i, true) == ex.tuple);
            CHECK(tuple_product(moved) == tuple_product(ex.tuple));
            CHECK(type_multiset(moved) == type_multiset(ex.tuple));
            CHECK_NOTHROW(validate_tuple(moved));
            CHECK(tuple_genus(moved) == tuple_genus(ex.tuple));
        }
    }
    CHECK_THROWS_AS((void)braid_move(examples[0].tuple, 0), Error);
    CHECK_THROWS_AS((void)braid_move(examples[0].tuple, 10), Error);
}

TEST_CASE("reference example fixtures") {
    auto examples = reference_examples();
    REQUIRE(examples.size() == 2);

    auto& ex8 = examples[0];
    CHECK(ex8.degree_discrepancy);  // listed degree 5, but the tuple moves 6 letters
    CHECK(ex8.claimed_degree == 5);
    CHECK(ex8.support == 6);
    CHECK(ex8.valid);  // on the 6-letter support
    CHECK(ex8.computed_genus == 1);
    CHECK(ex8.verdict == HypothesisVerdict::GeneralGenusApplies);

    auto& ex9 = examples[1];
    CHECK_FALSE(ex9.degree_discrepancy);
    CHECK(ex9.valid);
    CHECK(ex9.computed_genus == 0);
    CHECK(ex9.verdict == HypothesisVerdict::GenusZeroApplies);
    CHECK(tuple_profile(ex9.tuple).non_pure_count() == 1);
}

TEST_CASE("tuple enumeration at desk scale") {
    CHECK(enumerate_tuples(2, simple_profile(2, 2)).size() == 1);
    CHECK(enumerate_tuples(2, simple_profile(2, 3)).empty());  // odd product
    CHECK(enumerate_tuples(3, simple_profile(3, 4)).size() == 24);
    CHECK_THROWS_AS((void)enumerate_tuples(7, simple_profile(7, 2)), Error);
    CHECK_THROWS_AS((void)enumerate_tuples(3, simple_profile(3, 11)), Error);
}

TEST_CASE("canonical form is idempotent and conjugation-invariant") {
    auto tuples = enumerate_tuples(3, simple_profile(3, 4));
    for (auto& t : tuples) {
        auto c = canonical_form(t);
        CHECK(canonical_form(c) == c);
    }
}

TEST_CASE("hurwitz numbers") {
    CHECK(hurwitz_number(2, simple_profile(2, 2)) == 1);
    CHECK(hurwitz_number(2, simple_profile(2, 4)) == 1);
    CHECK(hurwitz_number(3, simple_profile(3, 4)) == 4);
}

TEST_CASE("braid orbits: Clebsch connectivity at small degree") {
    auto r3 = braid_orbits(3, simple_profile(3, 4));
    CHECK(r3.class_count == 4);
    CHECK(r3.orbit_count() == 1);
    CHECK(r3.orbit_sizes == std::vector<Int>{4});

    auto r2 = braid_orbits(2, simple_profile(2, 4));
    CHECK(r2.orbit_count() == 1);

    auto r4 = braid_orbits(4, simple_profile(4, 6));
    CHECK(r4.orbit_count() == 1);
    CHECK(r4.class_count >= 1);
    CHECK(r4.class_count == hurwitz_number(4, simple_profile(4, 6)));
}

TEST_CASE("orbit results round-trip through the on-disk cache") {
    auto dir = std::filesystem::temp_directory_path() / "strata-orbit-cache-test";
    std::filesystem::remove_all(dir);
    auto first = braid_orbits(3, simple_profile(3, 4), dir.string());
    bool wrote = !std::filesystem::is_empty(dir);
    auto second = braid_orbits(3, simple_profile(3, 4), dir.string());
    CHECK(wrote);
    CHECK(first.class_count == second.class_count);
    CHECK(first.orbit_sizes == second.orbit_sizes);
    CHECK(first.tuple_count == second.tuple_count);
    std::filesystem::remove_all(dir);
}
