#include "fairgather/analysis.hpp"

#include <cmath>
#include <string>

namespace fairgather {

double phi(double x)
{
    if (std::isnan(x) || x < 0.0) throw Error("phi: argument must be >= 0");
    double product = 1.0;
    while (x > 1.0) {
        product *= x;
        x = std::log2(x);
    }
    return product;
}

unsigned log_star(double x)
{
    if (std::isnan(x) || x <= 0.0) throw Error("log_star: argument must be > 0");
    unsigned count = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++count;
    }
    return count;
}

PeriodBound elias_period_bound(std::uint64_t c)
{
    if (c == 0) throw Error("elias_period_bound: color must be >= 1");
    const auto x = static_cast<double>(c);
    PeriodBound b{c, phi(x), log_star(x), 0.0};
    b.upper_bound = std::ldexp(b.phi_value, static_cast<int>(b.log_star) + 1);
    return b;
}

bool budget_check(std::span<const std::uint64_t> periods)
{
    double sum = 0.0;
    for (auto p : periods) {
        if (p == 0) throw Error("budget_check: periods must be >= 1");
        sum += 1.0 / static_cast<double>(p);
    }
    return sum <= 1.0 + kBudgetSlack;
}

}  // namespace fairgather
