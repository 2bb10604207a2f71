#include "bandit/metrics.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace bandit {
namespace {

// Least-squares fit of y = a + b*x, returning the sum of squared residuals.
double fit_sse(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    const double b = denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
    const double a = (sy - b * sx) / n;
    double sse = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (a + b * x[i]);
        sse += r * r;
    }
    return sse;
}

}  // namespace

ClairvoyantOptimum clairvoyant(const PowerGrid& grid, const WirelessLink& link,
                               const std::vector<double>& thresholds) {
    const std::vector<double> levels = power_levels(grid);
    std::vector<double> rates;
    rates.reserve(levels.size());
    for (double level : levels) {
        rates.push_back(throughput(link, level));
    }
    ClairvoyantOptimum result;
    result.optimal_arm.reserve(thresholds.size());
    result.optimal_reward.reserve(thresholds.size());
    for (double threshold : thresholds) {
        // Rates increase with the level, so the best feasible arm is the
        // highest level not exceeding the threshold.  When even the lowest
        // level exceeds it, fall back to that minimum-cost arm.
        int best = 0;
        for (int a = static_cast<int>(levels.size()) - 1; a >= 0; --a) {
            if (levels[static_cast<std::size_t>(a)] <= threshold) {
                best = a;
                break;
            }
        }
        result.optimal_arm.push_back(best);
        result.optimal_reward.push_back(rates[static_cast<std::size_t>(best)]);
    }
    return result;
}

MetricCurves compute_curves(const std::vector<RoundRecord>& trace,
                            const ClairvoyantOptimum& oracle, double lambda) {
    if (oracle.optimal_reward.size() != trace.size() ||
        oracle.optimal_arm.size() != trace.size()) {
        throw std::invalid_argument("compute_curves: oracle covers " +
                                    std::to_string(oracle.optimal_reward.size()) +
                                    " rounds, trace has " + std::to_string(trace.size()));
    }
    MetricCurves curves;
    curves.cumulative_violations.reserve(trace.size());
    curves.overall_objective.reserve(trace.size());
    curves.absolute_regret.reserve(trace.size());
    double violations = 0;
    double reward_sum = 0;
    double gap_sum = 0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        violations += trace[i].violated ? 1.0 : 0.0;
        reward_sum += trace[i].reward;
        gap_sum += oracle.optimal_reward[i] - trace[i].reward;
        curves.cumulative_violations.push_back(violations);
        curves.overall_objective.push_back(reward_sum - lambda * violations);
        curves.absolute_regret.push_back(std::abs(gap_sum));
    }
    curves.final_violation_rate =
        trace.empty() ? 0.0 : violations / static_cast<double>(trace.size());
    return curves;
}

AggregateCurves aggregate(const std::vector<MetricCurves>& runs) {
    if (runs.empty()) {
        throw std::invalid_argument("aggregate: no runs given");
    }
    const std::size_t len = runs.front().cumulative_violations.size();
    for (const MetricCurves& run : runs) {
        if (run.cumulative_violations.size() != len || run.overall_objective.size() != len ||
            run.absolute_regret.size() != len) {
            throw std::invalid_argument("aggregate: runs have mismatched lengths");
        }
    }
    const double n = static_cast<double>(runs.size());
    AggregateCurves out;
    out.mean.cumulative_violations.assign(len, 0.0);
    out.mean.overall_objective.assign(len, 0.0);
    out.mean.absolute_regret.assign(len, 0.0);
    out.stddev = out.mean;

    auto curve_of = [](const MetricCurves& run, int which) -> const std::vector<double>& {
        switch (which) {
            case 0: return run.cumulative_violations;
            case 1: return run.overall_objective;
            default: return run.absolute_regret;
        }
    };
    auto curve_in = [](MetricCurves& agg, int which) -> std::vector<double>& {
        switch (which) {
            case 0: return agg.cumulative_violations;
            case 1: return agg.overall_objective;
            default: return agg.absolute_regret;
        }
    };
    for (int which = 0; which < 3; ++which) {
        std::vector<double>& mean = curve_in(out.mean, which);
        std::vector<double>& stddev = curve_in(out.stddev, which);
        for (const MetricCurves& run : runs) {
            const std::vector<double>& y = curve_of(run, which);
            for (std::size_t i = 0; i < len; ++i) mean[i] += y[i];
        }
        for (std::size_t i = 0; i < len; ++i) mean[i] /= n;
        if (runs.size() > 1) {
            for (const MetricCurves& run : runs) {
                const std::vector<double>& y = curve_of(run, which);
                for (std::size_t i = 0; i < len; ++i) {
                    const double d = y[i] - mean[i];
                    stddev[i] += d * d;
                }
            }
            for (std::size_t i = 0; i < len; ++i) {
                stddev[i] = std::sqrt(stddev[i] / (n - 1.0));
            }
        }
    }
    double rate_mean = 0;
    for (const MetricCurves& run : runs) rate_mean += run.final_violation_rate;
    rate_mean /= n;
    double rate_var = 0;
    if (runs.size() > 1) {
        for (const MetricCurves& run : runs) {
            const double d = run.final_violation_rate - rate_mean;
            rate_var += d * d;
        }
        rate_var /= n - 1.0;
    }
    out.mean.final_violation_rate = rate_mean;
    out.stddev.final_violation_rate = std::sqrt(rate_var);
    return out;
}

GrowthFit log_growth_check(const std::vector<double>& cumulative_violations,
                           long budget_horizon) {
    if (cumulative_violations.empty()) {
        throw std::invalid_argument("log_growth_check: empty curve");
    }
    GrowthFit fit{};
    const long horizon = static_cast<long>(cumulative_violations.size());

    // Sublinearity fallback: the second half adds less than the first half held.
    const std::size_t half = static_cast<std::size_t>(std::max(1L, horizon / 2));
    const double v_half = cumulative_violations[half - 1];
    const double v_full = cumulative_violations.back();
    fit.sublinear = v_full == 0.0 || (v_full - v_half) < v_half;

    // Compare a linear and a logarithmic growth model over the rounds where
    // the budget has fully decayed.  Two free parameters each, so demand at
    // least three points.
    std::vector<double> lin_x, log_x, y;
    for (long t = budget_horizon + 1; t <= horizon; ++t) {
        lin_x.push_back(static_cast<double>(t));
        log_x.push_back(std::log(static_cast<double>(t)));
        y.push_back(cumulative_violations[static_cast<std::size_t>(t - 1)]);
    }
    if (y.size() < 3) {
        fit.has_fit_region = false;
        fit.linear_sse = 0;
        fit.log_sse = 0;
        fit.log_model_wins = false;
        return fit;
    }
    fit.has_fit_region = true;
    fit.linear_sse = fit_sse(lin_x, y);
    fit.log_sse = fit_sse(log_x, y);
    fit.log_model_wins = fit.log_sse < fit.linear_sse;
    return fit;
}

}  // namespace bandit
