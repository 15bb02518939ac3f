#ifndef PPRANK_DATASET_HPP
#define PPRANK_DATASET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pprank {

/// Identifies one column of a two-arm trial dataset: the binary outcome Y,
/// the binary treatment indicator T, or a categorical feature X_j.
/// Feature indices are 1-based throughout the public API.
struct Variable {
    enum class Kind : std::uint8_t { outcome, treatment, feature };

    Kind kind = Kind::outcome;
    int index = 0;  // 1-based feature index; 0 for outcome/treatment

    static constexpr Variable y() { return {Kind::outcome, 0}; }
    static constexpr Variable t() { return {Kind::treatment, 0}; }
    static constexpr Variable x(int j) { return {Kind::feature, j}; }

    friend constexpr bool operator==(const Variable&, const Variable&) = default;

    std::string name() const {
        switch (kind) {
            case Kind::outcome: return "y";
            case Kind::treatment: return "t";
            default: return "x" + std::to_string(index);
        }
    }
};

/// Per-subject trial data: binary outcome y, binary treatment arm t, and p
/// categorical feature columns with declared cardinalities. Feature column
/// j-1 holds the codes of X_j; codes are 0-based in [0, cardinality).
struct TrialDataset {
    std::vector<std::uint8_t> y;
    std::vector<std::uint8_t> t;
    std::vector<std::vector<int>> features;  // features[j-1][i] = code of X_j for subject i
    std::vector<int> cardinalities;

    std::size_t n() const { return y.size(); }
    int p() const { return static_cast<int>(features.size()); }

    bool has_both_arms() const {
        bool seen0 = false, seen1 = false;
        for (std::uint8_t v : t) (v ? seen1 : seen0) = true;
        return seen0 && seen1;
    }

    /// Checks all column lengths, the 0/1 domain of y and t, and that every
    /// feature code lies inside its declared cardinality.
    void validate() const {
        if (y.empty()) throw std::invalid_argument("dataset is empty");
        if (t.size() != y.size())
            throw std::invalid_argument("t column length does not match y");
        if (features.size() != cardinalities.size())
            throw std::invalid_argument("feature count does not match cardinality count");
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] > 1) throw std::invalid_argument("y is not binary");
            if (t[i] > 1) throw std::invalid_argument("t is not binary");
        }
        for (std::size_t j = 0; j < features.size(); ++j) {
            if (cardinalities[j] < 1)
                throw std::invalid_argument("cardinality of x" + std::to_string(j + 1) +
                                            " must be >= 1");
            if (features[j].size() != y.size())
                throw std::invalid_argument("column x" + std::to_string(j + 1) +
                                            " length does not match y");
            for (int code : features[j]) {
                if (code < 0 || code >= cardinalities[j])
                    throw std::invalid_argument("feature code outside declared cardinality in x" +
                                                std::to_string(j + 1));
            }
        }
    }
};

}  // namespace pprank

#endif  // PPRANK_DATASET_HPP
