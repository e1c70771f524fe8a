#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "paper_data.hpp"

#include "skyline/classify.hpp"
#include "skyline/demazure.hpp"
#include "skyline/derivation.hpp"
#include "skyline/operators.hpp"
#include "skyline/verify.hpp"

using namespace skyline;

TEST_CASE("first ascent") {
    CHECK(first_ascent(Composition({1, 3, 0, 2})) == 1);
    CHECK(first_ascent(Composition({3, 2, 1})) == std::nullopt);
    CHECK(first_ascent(Composition({4, 2, 6, 0, 4})) == 2);
    CHECK(first_ascent(Composition({0, 0, 1})) == 2);
}

TEST_CASE("derived fillings of the drawn example") {
    Composition alpha = testdata::figure8_alpha();
    Filling source = testdata::figure8_source();
    REQUIRE(validate_filling(source).ok);

    // m = 2 free entries 2 in row 2 of the source
    CHECK(classify(source, 2).count_in_row(2, 2, EntryKind::Free, source) == 2);

    DerivedFamily family = derived_fillings(source, alpha);
    CHECK(family.ascent_row == 2);
    CHECK(family.members == testdata::figure8_members());

    // read right-to-left: every member inverts to (source, k)
    for (int k = 0; k < 3; ++k) {
        auto [recovered, index] = inverse_derived(family.members[k], alpha);
        CHECK(recovered == source);
        CHECK(index == k);
    }
}

TEST_CASE("derived fillings of (0,1)") {
    Composition alpha({0, 1});
    Filling source = testdata::make({{1}, {}});
    DerivedFamily family = derived_fillings(source, alpha);
    REQUIRE(family.members.size() == 2);  // m = 1: the lone 1 in row 1 is free
    CHECK(family.members[0] == testdata::make({{}, {1}}));
    CHECK(family.members[1] == testdata::make({{}, {2}}));

    std::set<Filling> everything(family.members.begin(), family.members.end());
    auto enumerated = enumerate_ssf(alpha);
    CHECK(everything == std::set<Filling>(enumerated.begin(), enumerated.end()));
}

TEST_CASE("derived fillings reject bad input") {
    CHECK_THROWS_AS(derived_fillings(testdata::make({{1}, {}}), Composition({1, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(derived_fillings(testdata::make({{1}, {}}), Composition({0, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(inverse_derived(testdata::make({{1, 1}}), Composition({2})),
                    std::invalid_argument);
}

TEST_CASE("derived families partition the target set") {
    for (const Composition& alpha : compositions_up_to(3, 3)) {
        auto ascent = first_ascent(alpha);
        if (!ascent) continue;
        const int r = *ascent;
        auto target = enumerate_ssf(alpha);
        std::set<Filling> target_set(target.begin(), target.end());
        std::set<Filling> covered;
        for (const Filling& source : enumerate_ssf(alpha.with_swapped_parts(r))) {
            DerivedFamily family = derived_fillings(source, alpha);
            int m = classify(source, r).count_in_row(r, r, EntryKind::Free, source);
            CHECK(static_cast<int>(family.members.size()) == m + 1);
            for (const Filling& member : family.members) {
                CHECK(target_set.count(member) == 1);
                CHECK(covered.insert(member).second);  // disjointness
                CHECK(weight(member).total_degree() == alpha.box_count());
            }
        }
        CHECK(covered == target_set);

        for (const Filling& f : target) {
            auto [source, k] = inverse_derived(f, alpha);
            CHECK(derived_fillings(source, alpha).members.at(k) == f);
        }
    }
}

TEST_CASE("inductive generation reproduces the enumeration") {
    for (const Composition& alpha : compositions_up_to(3, 3))
        CHECK(generate_ssf_inductively(alpha) == enumerate_ssf(alpha));
    CHECK(generate_ssf_inductively(Composition({1, 3, 0, 2})) ==
          enumerate_ssf(Composition({1, 3, 0, 2})));
}

TEST_CASE("pi compatibility reports") {
    for (const auto& parts : std::vector<std::vector<int>>{{1, 3, 0, 2}, {0, 1}}) {
        VerificationReport report = verify_pi_identity(Composition(parts));
        CHECK(report.all_pass());
        CHECK(report.checks.size() == 3);
    }
    CHECK_THROWS_AS(verify_pi_identity(Composition({2, 1})), std::invalid_argument);

    // smallest nontrivial case by hand: pi_1(x1) = x1 + x2
    CHECK(pi(key_combinatorial(Composition({1, 0})), 1) ==
          polynomial_from_text("x1 + x2", 2));

    for (const Composition& alpha : compositions_up_to(3, 2))
        if (first_ascent(alpha)) CHECK(verify_pi_identity(alpha).all_pass());
}

TEST_CASE("orbit weight sums telescope over derived families") {
    for (const Composition& alpha : compositions_up_to(3, 3)) {
        auto ascent = first_ascent(alpha);
        if (!ascent) continue;
        const int r = *ascent;
        const int n = alpha.num_rows();
        for (const Filling& source : enumerate_ssf(alpha.with_swapped_parts(r))) {
            Filling image = phi_row(source, r);
            int m = classify(source, r).count_in_row(r, r, EntryKind::Free, source);

            Polynomial orbit = Polynomial::monomial(weight(source));
            orbit.add_term(weight(image), 1);
            // x^F' + x^Phi = x_r^m * f with f symmetric
            Polynomial f(n);
            for (const auto& [e, c] : orbit.terms()) {
                REQUIRE(e.exponent(r) >= m);
                ExponentVector reduced = e;
                reduced.add_to_exponent(r, -m);
                f.add_term(reduced, c);
            }
            CHECK(swap_vars(f, r) == f);

            // (x_r^m + ... + x_{r+1}^m) * f equals the two family sums
            Polynomial h(n);
            for (int k = 0; k <= m; ++k) {
                ExponentVector e(n);
                e.set_exponent(r, m - k);
                e.set_exponent(r + 1, k);
                h.add_term(e, 1);
            }
            Polynomial families(n);
            for (const Filling& member : derived_fillings(source, alpha).members)
                families.add_term(weight(member), 1);
            for (const Filling& member : derived_fillings(image, alpha).members)
                families.add_term(weight(member), 1);
            CHECK(h * f == families);
        }
    }
}

TEST_CASE("classical row move comparison") {
    // |SSF((0,1,2))| equals the tableau count of shape (2,1) in 3 letters
    CHECK(enumerate_ssf(Composition({0, 1, 2})).size() == 8);
    CHECK(oracle::count_ssyt({2, 1}, 3) == 8);

    for (const auto& parts :
         std::vector<std::vector<int>>{{0, 1, 2}, {2, 2, 2}, {0, 2}, {1, 2, 3}}) {
        Composition alpha(parts);
        for (int t = 1; t < alpha.num_rows(); ++t)
            for (int r = t + 1; r <= alpha.num_rows(); ++r)
                CHECK(bender_knuth_check(alpha, r, t).all_pass());
    }
    CHECK_THROWS_AS(bender_knuth_check(Composition({2, 1}), 2, 1),
                    std::invalid_argument);
}

TEST_CASE("verification sweep machinery") {
    CHECK(compositions_up_to(4, 3).size() == 340);
    CHECK(compositions_up_to(1, 1).size() == 2);
    for (const auto& parts :
         std::vector<std::vector<int>>{{1, 3, 0, 2}, {0, 2}, {2, 1}, {0, 1, 2}}) {
        VerificationReport report = verify_composition(Composition(parts));
        for (const auto& check : report.checks) {
            INFO(check.name);
            CHECK(check.pass);
        }
    }
}
