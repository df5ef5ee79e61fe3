#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "tracesim/rng.hpp"

using namespace tracesim;

TEST_CASE("derive_seed separates purposes and indices", "[rng]") {
    const std::uint64_t base = 42;
    REQUIRE(derive_seed(base, "a") == derive_seed(base, "a"));
    REQUIRE(derive_seed(base, "a") != derive_seed(base, "b"));
    REQUIRE(derive_seed(base, "a", 0) != derive_seed(base, "a", 1));
    REQUIRE(derive_seed(base, "a", 7) != derive_seed(base + 1, "a", 7));

    // Labels used across the library must not collide on a common base.
    const char* labels[] = {"usp",     "usp-tie",     "rsp-pair",  "placement", "exploration",
                            "explore", "sweep-point", "cmp-random", "cmp-lowbc", "er",
                            "degrees", "matching"};
    std::set<std::uint64_t> seen;
    for (const char* l : labels) seen.insert(derive_seed(base, l));
    REQUIRE(seen.size() == std::size(labels));
}

TEST_CASE("uniform_index stays in range and is unbiased", "[rng]") {
    Rng rng = make_rng(1);
    REQUIRE_THROWS_AS(uniform_index(rng, 0), std::invalid_argument);

    const std::uint64_t n = 10;
    std::vector<std::size_t> counts(n, 0);
    const std::size_t draws = 100000;
    for (std::size_t i = 0; i < draws; ++i) {
        const auto x = uniform_index(rng, n);
        REQUIRE(x < n);
        ++counts[x];
    }
    const double expected = static_cast<double>(draws) / static_cast<double>(n);
    double chi2 = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    REQUIRE(chi2 < th::chi2_crit_01(n - 1));
}

TEST_CASE("uniform_real01 lies strictly inside (0,1)", "[rng]") {
    Rng rng = make_rng(2);
    double sum = 0.0;
    const std::size_t draws = 100000;
    for (std::size_t i = 0; i < draws; ++i) {
        const double x = uniform_real01(rng);
        REQUIRE(x > 0.0);
        REQUIRE(x < 1.0);
        sum += x;
    }
    // 4 standard errors of the mean of U(0,1).
    const double se = 1.0 / std::sqrt(12.0 * static_cast<double>(draws));
    REQUIRE(std::abs(sum / static_cast<double>(draws) - 0.5) < 4.0 * se);
}

TEST_CASE("rng streams are reproducible", "[rng]") {
    Rng a = make_rng(derive_seed(9, "stream"));
    Rng b = make_rng(derive_seed(9, "stream"));
    for (int i = 0; i < 100; ++i) REQUIRE(a() == b());
}

TEST_CASE("sample_distinct draws k distinct in-range values", "[rng]") {
    Rng rng = make_rng(3);
    REQUIRE_THROWS_AS(sample_distinct(rng, 5, 6), std::invalid_argument);

    const auto picks = sample_distinct(rng, 100, 30);
    REQUIRE(picks.size() == 30);
    std::set<std::uint32_t> uniq(picks.begin(), picks.end());
    REQUIRE(uniq.size() == 30);
    for (auto v : picks) REQUIRE(v < 100);

    // k = n gives a permutation.
    const auto perm = sample_distinct(rng, 8, 8);
    std::set<std::uint32_t> all(perm.begin(), perm.end());
    REQUIRE(all.size() == 8);

    // The first element is uniform over [0, n).
    std::vector<std::size_t> first(10, 0);
    for (int i = 0; i < 100000; ++i) ++first[sample_distinct(rng, 10, 2)[0]];
    double chi2 = 0.0;
    for (auto c : first) {
        const double d = static_cast<double>(c) - 10000.0;
        chi2 += d * d / 10000.0;
    }
    REQUIRE(chi2 < th::chi2_crit_01(9));
}

TEST_CASE("shuffle permutes without losing elements", "[rng]") {
    Rng rng = make_rng(4);
    std::vector<int> v{1, 2, 3, 4, 5, 6, 7};
    auto sorted = v;
    shuffle(v, rng);
    std::sort(v.begin(), v.end());
    REQUIRE(v == sorted);
}

TEST_CASE("bernoulli respects degenerate probabilities", "[rng]") {
    Rng rng = make_rng(5);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE_FALSE(bernoulli(rng, 0.0));
        REQUIRE(bernoulli(rng, 1.0));
    }
}
