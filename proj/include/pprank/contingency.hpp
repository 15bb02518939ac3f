#ifndef PPRANK_CONTINGENCY_HPP
#define PPRANK_CONTINGENCY_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "pprank/dataset.hpp"

namespace pprank {

struct Axis {
    Variable id;
    int cardinality = 1;
};

/// Dense table of nonnegative integer cell counts over the cross-product of
/// its axes. Cells are laid out row-major: the last axis varies fastest.
struct ContingencyTable {
    std::vector<Axis> axes;
    std::vector<std::int64_t> counts;
    std::int64_t n = 0;

    std::size_t cell_count() const { return counts.size(); }

    void validate() const {
        std::size_t k = 1;
        for (const Axis& a : axes) {
            if (a.cardinality < 1) throw std::invalid_argument("axis cardinality must be >= 1");
            k *= static_cast<std::size_t>(a.cardinality);
        }
        if (counts.size() != k)
            throw std::invalid_argument("cell count does not match axis cardinalities");
        std::int64_t total = 0;
        for (std::int64_t c : counts) {
            if (c < 0) throw std::invalid_argument("negative cell count");
            total += c;
        }
        if (total != n) throw std::invalid_argument("table total does not match n");
        if (n < 1) throw std::invalid_argument("table total must be >= 1");
    }
};

namespace detail {

inline std::size_t checked_cell_count(std::span<const Axis> axes) {
    std::size_t k = 1;
    for (const Axis& a : axes) {
        if (a.cardinality < 1) throw std::invalid_argument("axis cardinality must be >= 1");
        const auto card = static_cast<std::size_t>(a.cardinality);
        if (k > std::numeric_limits<std::size_t>::max() / card)
            throw std::overflow_error("contingency table cell count overflows");
        k *= card;
    }
    return k;
}

}  // namespace detail

/// Counts subjects over the cross-product of the requested variables.
/// Axis order matches the request. Throws on an empty dataset, an empty
/// variable list, an unknown variable id, or a code outside its cardinality.
inline ContingencyTable build_contingency(const TrialDataset& data,
                                          std::span<const Variable> variables) {
    if (data.n() == 0) throw std::invalid_argument("dataset is empty");
    if (variables.empty()) throw std::invalid_argument("no variables requested");

    const std::size_t n = data.n();
    ContingencyTable table;
    table.axes.reserve(variables.size());

    // Resolve each variable to its column and cardinality up front.
    std::vector<const std::vector<int>*> feature_cols(variables.size(), nullptr);
    for (std::size_t m = 0; m < variables.size(); ++m) {
        const Variable v = variables[m];
        int card = 2;
        if (v.kind == Variable::Kind::feature) {
            if (v.index < 1 || v.index > data.p())
                throw std::invalid_argument("unknown variable x" + std::to_string(v.index));
            const auto& col = data.features[static_cast<std::size_t>(v.index - 1)];
            if (col.size() != n)
                throw std::invalid_argument("column " + v.name() + " length does not match y");
            feature_cols[m] = &col;
            card = data.cardinalities[static_cast<std::size_t>(v.index - 1)];
        } else if (data.t.size() != n) {
            throw std::invalid_argument("t column length does not match y");
        }
        table.axes.push_back({v, card});
    }

    table.counts.assign(detail::checked_cell_count(table.axes), 0);
    table.n = static_cast<std::int64_t>(n);

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t flat = 0;
        for (std::size_t m = 0; m < variables.size(); ++m) {
            int code;
            switch (variables[m].kind) {
                case Variable::Kind::outcome: code = data.y[i]; break;
                case Variable::Kind::treatment: code = data.t[i]; break;
                default: code = (*feature_cols[m])[i]; break;
            }
            if (code < 0 || code >= table.axes[m].cardinality)
                throw std::invalid_argument("code of " + variables[m].name() +
                                            " outside declared cardinality");
            flat = flat * static_cast<std::size_t>(table.axes[m].cardinality) +
                   static_cast<std::size_t>(code);
        }
        ++table.counts[flat];
    }
    return table;
}

inline ContingencyTable build_contingency(const TrialDataset& data,
                                          std::initializer_list<Variable> variables) {
    return build_contingency(data, std::span<const Variable>(variables.begin(), variables.size()));
}

}  // namespace pprank

#endif  // PPRANK_CONTINGENCY_HPP
