#pragma once

#include <cstdint>
#include <span>

#include "fairgather/graph.hpp"

namespace fairgather {

/// phi(x) = 1 for x <= 1, x * phi(log2 x) otherwise; evaluated over the reals.
double phi(double x);

/// Number of log2 applications needed to bring x down to <= 1. Requires x > 0.
unsigned log_star(double x);

struct PeriodBound {
    std::uint64_t color;
    double phi_value;
    unsigned log_star;
    double upper_bound;  // 2^(1 + log_star) * phi_value
};

/// Upper bound on the period a node of color c gets from the Elias schedule.
PeriodBound elias_period_bound(std::uint64_t c);

inline constexpr double kBudgetSlack = 1e-9;

/// True iff sum(1 / period) <= 1 + kBudgetSlack, i.e. the periods could all be
/// served by a schedule that never makes two of them happy on the same holiday.
bool budget_check(std::span<const std::uint64_t> periods);

}  // namespace fairgather
