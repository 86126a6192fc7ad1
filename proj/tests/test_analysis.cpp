#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fairgather/analysis.hpp"
#include "fairgather/codec.hpp"
#include "support.hpp"

using namespace fairgather;

TEST_CASE("phi")
{
    CHECK(phi(0) == 1.0);
    CHECK(phi(1) == 1.0);
    CHECK(phi(2) == 2.0);
    CHECK(phi(16) == 128.0);
    CHECK(phi(3) == doctest::Approx(3 * std::log2(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(phi(-1), Error);

    double prev = 1.0;
    for (double x = 1.0; x < 5000.0; x += 0.37) {
        const double v = phi(x);
        REQUIRE(v == doctest::Approx(fairgather::testing::phi_product(x)).epsilon(1e-12));
        REQUIRE(v >= prev - 1e-9);
        prev = v;
    }
}

TEST_CASE("log_star")
{
    CHECK(log_star(1) == 0);
    CHECK(log_star(0.5) == 0);
    CHECK(log_star(2) == 1);
    CHECK(log_star(3) == 2);
    CHECK(log_star(4) == 2);
    CHECK(log_star(5) == 3);
    CHECK(log_star(16) == 3);
    CHECK(log_star(17) == 4);
    CHECK(log_star(65536) == 4);
    CHECK(log_star(65537) == 5);
    CHECK_THROWS_AS(log_star(0), Error);
}

TEST_CASE("elias_period_bound")
{
    struct Row {
        std::uint64_t c;
        double bound;
    };
    for (auto [c, bound] : {Row{1, 2}, Row{2, 8}, Row{4, 64}}) {
        const auto b = elias_period_bound(c);
        CHECK(b.upper_bound == doctest::Approx(bound));
        CHECK(std::ldexp(1.0, static_cast<int>(rho(c))) == doctest::Approx(bound));
    }
    const auto b3 = elias_period_bound(3);
    CHECK(b3.log_star == 2);
    CHECK(b3.upper_bound >= b3.phi_value);
    CHECK(b3.phi_value >= 1.0);
    CHECK_THROWS_AS(elias_period_bound(0), Error);
}

TEST_CASE("budget_check")
{
    const std::vector<std::uint64_t> quarter{2, 8, 8};
    const std::vector<std::uint64_t> over{2, 2, 2};
    const std::vector<std::uint64_t> exact{2, 4, 4};
    CHECK(budget_check(quarter));
    CHECK_FALSE(budget_check(over));
    CHECK(budget_check(std::span<const std::uint64_t>{}));
    CHECK(budget_check(exact));
}

TEST_CASE("Kraft sums of the omega code stay within budget")
{
    std::vector<std::uint64_t> periods;
    double sum = 0.0;
    for (std::uint64_t c = 1; c <= 4096; ++c) {
        periods.push_back(std::uint64_t{1} << rho(c));
        sum += std::ldexp(1.0, -static_cast<int>(rho(c)));
        REQUIRE(sum <= 1.0 + kBudgetSlack);
    }
    CHECK(budget_check(periods));
}
