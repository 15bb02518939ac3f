#ifndef PPRANK_ESTIMATORS_HPP
#define PPRANK_ESTIMATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pprank/contingency.hpp"

namespace pprank {

/// Nonnegative cell probabilities summing to 1 over the cross-product of the
/// axes. Same row-major layout as ContingencyTable.
struct JointDistribution {
    std::vector<Axis> axes;
    std::vector<double> probs;

    std::size_t cell_count() const { return probs.size(); }

    void validate() const {
        if (probs.size() != detail::checked_cell_count(axes))
            throw std::invalid_argument("cell count does not match axis cardinalities");
        double total = 0.0;
        for (double p : probs) {
            if (!(p >= 0.0)) throw std::invalid_argument("negative or NaN cell probability");
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("cell probabilities do not sum to 1");
    }

    static JointDistribution create(std::vector<Axis> axes, std::vector<double> probs) {
        JointDistribution d{std::move(axes), std::move(probs)};
        d.validate();
        return d;
    }
};

enum class Estimator { ml, shrinkage };

/// Intensity and target of one shrinkage estimate. The target is always the
/// uniform cell probability 1/K.
struct ShrinkageReport {
    double lambda = 0.0;
    double target = 0.0;
    std::int64_t n = 0;
};

/// Plug-in maximum likelihood estimate: each cell probability is count / n.
inline JointDistribution ml_estimate(const ContingencyTable& table) {
    table.validate();
    JointDistribution dist;
    dist.axes = table.axes;
    dist.probs.resize(table.counts.size());
    const double n = static_cast<double>(table.n);
    for (std::size_t k = 0; k < table.counts.size(); ++k)
        dist.probs[k] = static_cast<double>(table.counts[k]) / n;
    return dist;
}

/// James-Stein-type shrinkage of the cell frequencies toward the uniform
/// distribution over all K cells of the full joint table:
///
///   lambda* = (1 - sum_k theta_k^2) / ((n - 1) * sum_k (1/K - theta_k)^2)
///
/// clipped to [0,1], with theta_k = count_k / n. A zero denominator or n = 1
/// yields lambda* = 1 (the maximum likelihood estimate equals the target, or
/// a single observation carries no usable frequency information). Returned
/// probabilities are lambda/K + (1 - lambda) * theta_k.
inline std::pair<JointDistribution, ShrinkageReport> shrinkage_estimate(
    const ContingencyTable& table) {
    table.validate();
    const std::size_t cells = table.counts.size();
    if (cells < 2) throw std::invalid_argument("shrinkage target degenerate: table has K < 2");

    const double n = static_cast<double>(table.n);
    const double target = 1.0 / static_cast<double>(cells);

    double sum_sq = 0.0;
    double sum_dev_sq = 0.0;
    for (std::int64_t c : table.counts) {
        const double theta = static_cast<double>(c) / n;
        sum_sq += theta * theta;
        const double dev = target - theta;
        sum_dev_sq += dev * dev;
    }

    double lambda = 1.0;
    const double denom = (n - 1.0) * sum_dev_sq;
    if (table.n > 1 && denom > 0.0)
        lambda = std::clamp((1.0 - sum_sq) / denom, 0.0, 1.0);

    JointDistribution dist;
    dist.axes = table.axes;
    dist.probs.resize(cells);
    for (std::size_t k = 0; k < cells; ++k) {
        const double theta = static_cast<double>(table.counts[k]) / n;
        dist.probs[k] = lambda * target + (1.0 - lambda) * theta;
    }
    return {std::move(dist), ShrinkageReport{lambda, target, table.n}};
}

inline JointDistribution estimate(const ContingencyTable& table, Estimator estimator) {
    if (estimator == Estimator::ml) return ml_estimate(table);
    return shrinkage_estimate(table).first;
}

}  // namespace pprank

#endif  // PPRANK_ESTIMATORS_HPP
