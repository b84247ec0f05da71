#include "doctest.h"

#include "test_stats.hpp"

// Reference values from scipy.stats.chi2.

TEST_CASE("chi-square survival function") {
    CHECK(teststat::chi2_sf(27.0, 13) == doctest::Approx(0.012441094516010873).epsilon(1e-9));
    CHECK(teststat::chi2_sf(27.68824961045705, 13) == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(teststat::chi2_sf(180.7009486120207, 139) == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(teststat::chi2_sf(15.08627246938899, 5) == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(teststat::chi2_sf(0.0, 10) == doctest::Approx(1.0));
}

TEST_CASE("total variation") {
    CHECK(teststat::total_variation({0.5, 0.5}, {0.5, 0.5}) == doctest::Approx(0.0));
    CHECK(teststat::total_variation({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
    CHECK(teststat::total_variation({0.7, 0.3}, {0.5, 0.5}) == doctest::Approx(0.2));
}
