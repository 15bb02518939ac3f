#ifndef PPRANK_INFORMATION_HPP
#define PPRANK_INFORMATION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pprank/estimators.hpp"

namespace pprank {

/// Sums a distribution down to the requested axis positions. The output axes
/// follow the order of `keep`.
inline JointDistribution marginal(const JointDistribution& dist,
                                  std::span<const std::size_t> keep) {
    dist.validate();
    if (keep.empty()) throw std::invalid_argument("marginal needs at least one axis");
    std::vector<bool> used(dist.axes.size(), false);
    for (std::size_t pos : keep) {
        if (pos >= dist.axes.size()) throw std::invalid_argument("axis position out of range");
        if (used[pos]) throw std::invalid_argument("axis position repeated");
        used[pos] = true;
    }

    JointDistribution out;
    out.axes.reserve(keep.size());
    for (std::size_t pos : keep) out.axes.push_back(dist.axes[pos]);
    out.probs.assign(detail::checked_cell_count(out.axes), 0.0);

    const std::size_t rank = dist.axes.size();
    std::vector<int> code(rank, 0);
    for (std::size_t flat = 0; flat < dist.probs.size(); ++flat) {
        std::size_t target = 0;
        for (std::size_t m = 0; m < keep.size(); ++m)
            target = target * static_cast<std::size_t>(out.axes[m].cardinality) +
                     static_cast<std::size_t>(code[keep[m]]);
        out.probs[target] += dist.probs[flat];

        for (std::size_t ax = rank; ax-- > 0;) {
            if (++code[ax] < dist.axes[ax].cardinality) break;
            code[ax] = 0;
        }
    }
    return out;
}

/// Shannon entropy -sum p log p in nats, with the 0 log 0 = 0 convention.
inline double entropy(const JointDistribution& dist) {
    dist.validate();
    double h = 0.0;
    for (double p : dist.probs)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

namespace detail {

// Shared plug-in core for I(A;B) and I(A;B|C) over axis-position groups.
//
// All axes outside the groups are marginalized out first. The reduced table
// is iterated in the distribution's own axis order no matter how the group
// arguments are split, so swapping A and B reproduces the identical sequence
// of floating point operations and the results agree bit for bit.
inline double grouped_information(const JointDistribution& dist,
                                  std::span<const std::size_t> group_a,
                                  std::span<const std::size_t> group_b,
                                  std::span<const std::size_t> group_c) {
    dist.validate();
    if (group_a.empty() || group_b.empty())
        throw std::invalid_argument("information groups A and B must be nonempty");

    // 0 = A, 1 = B, 2 = C
    std::vector<int> membership(dist.axes.size(), -1);
    auto mark = [&](std::span<const std::size_t> group, int tag) {
        for (std::size_t pos : group) {
            if (pos >= dist.axes.size())
                throw std::invalid_argument("axis position out of range");
            if (membership[pos] != -1) throw std::invalid_argument("axis groups overlap");
            membership[pos] = tag;
        }
    };
    mark(group_a, 0);
    mark(group_b, 1);
    mark(group_c, 2);

    std::vector<std::size_t> kept;
    for (std::size_t pos = 0; pos < dist.axes.size(); ++pos)
        if (membership[pos] != -1) kept.push_back(pos);

    const JointDistribution reduced = marginal(dist, kept);

    std::size_t a_cells = 1, b_cells = 1, c_cells = 1;
    for (std::size_t m = 0; m < kept.size(); ++m) {
        const auto card = static_cast<std::size_t>(reduced.axes[m].cardinality);
        switch (membership[kept[m]]) {
            case 0: a_cells *= card; break;
            case 1: b_cells *= card; break;
            default: c_cells *= card; break;
        }
    }

    const bool conditioned = !group_c.empty();
    std::vector<double> pa_c(a_cells * c_cells, 0.0);
    std::vector<double> pb_c(b_cells * c_cells, 0.0);
    std::vector<double> pc(conditioned ? c_cells : 0, 0.0);

    // Projection of each reduced cell onto the A, B and C subspaces.
    std::vector<std::size_t> a_idx(reduced.probs.size());
    std::vector<std::size_t> b_idx(reduced.probs.size());
    std::vector<std::size_t> c_idx(reduced.probs.size());
    {
        std::vector<int> code(kept.size(), 0);
        for (std::size_t flat = 0; flat < reduced.probs.size(); ++flat) {
            std::size_t ai = 0, bi = 0, ci = 0;
            for (std::size_t m = 0; m < kept.size(); ++m) {
                const auto card = static_cast<std::size_t>(reduced.axes[m].cardinality);
                const auto value = static_cast<std::size_t>(code[m]);
                switch (membership[kept[m]]) {
                    case 0: ai = ai * card + value; break;
                    case 1: bi = bi * card + value; break;
                    default: ci = ci * card + value; break;
                }
            }
            a_idx[flat] = ai;
            b_idx[flat] = bi;
            c_idx[flat] = ci;
            const double p = reduced.probs[flat];
            pa_c[ai * c_cells + ci] += p;
            pb_c[bi * c_cells + ci] += p;
            if (conditioned) pc[ci] += p;

            for (std::size_t m = kept.size(); m-- > 0;) {
                if (++code[m] < reduced.axes[m].cardinality) break;
                code[m] = 0;
            }
        }
    }

    double total = 0.0;
    for (std::size_t flat = 0; flat < reduced.probs.size(); ++flat) {
        const double p = reduced.probs[flat];
        if (p <= 0.0) continue;  // empty cells (and empty strata) contribute 0
        const double pa = pa_c[a_idx[flat] * c_cells + c_idx[flat]];
        const double pb = pb_c[b_idx[flat] * c_cells + c_idx[flat]];
        if (conditioned)
            total += p * std::log(p * pc[c_idx[flat]] / (pa * pb));
        else
            total += p * std::log(p / (pa * pb));
    }
    return total;
}

}  // namespace detail

/// Plug-in mutual information I(A;B) in nats between two disjoint groups of
/// axes; any remaining axes are marginalized out first.
inline double mutual_information(const JointDistribution& dist,
                                 std::span<const std::size_t> group_a,
                                 std::span<const std::size_t> group_b) {
    return detail::grouped_information(dist, group_a, group_b, {});
}

/// Plug-in conditional mutual information I(A;B|C) in nats. Strata with
/// p(c) = 0 contribute exactly 0. An empty C reduces to mutual information.
inline double conditional_mutual_information(const JointDistribution& dist,
                                             std::span<const std::size_t> group_a,
                                             std::span<const std::size_t> group_b,
                                             std::span<const std::size_t> group_c) {
    return detail::grouped_information(dist, group_a, group_b, group_c);
}

inline double mutual_information(const JointDistribution& dist,
                                 std::initializer_list<std::size_t> group_a,
                                 std::initializer_list<std::size_t> group_b) {
    return mutual_information(dist, std::span<const std::size_t>(group_a.begin(), group_a.size()),
                              std::span<const std::size_t>(group_b.begin(), group_b.size()));
}

inline double conditional_mutual_information(const JointDistribution& dist,
                                             std::initializer_list<std::size_t> group_a,
                                             std::initializer_list<std::size_t> group_b,
                                             std::initializer_list<std::size_t> group_c) {
    return conditional_mutual_information(
        dist, std::span<const std::size_t>(group_a.begin(), group_a.size()),
        std::span<const std::size_t>(group_b.begin(), group_b.size()),
        std::span<const std::size_t>(group_c.begin(), group_c.size()));
}

}  // namespace pprank

#endif  // PPRANK_INFORMATION_HPP
