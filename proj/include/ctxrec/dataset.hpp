#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctxrec/errors.hpp"

namespace ctxrec {

/// The reserved null condition present in every dimension at index 0.
inline constexpr int kNaCondition = 0;
inline constexpr const char* kNaLabel = "na";

std::string fold_case(const std::string& s);

/// Context dimensions and their condition vocabularies. Condition labels are
/// case-folded before interning; `na` is always condition index 0.
class ContextSchema {
public:
    int add_dimension(const std::string& name);
    int add_condition(int dim, const std::string& label);

    int dimension_count() const { return static_cast<int>(dims_.size()); }
    const std::string& dimension_name(int dim) const { return dims_[dim].name; }
    int condition_count(int dim) const { return static_cast<int>(dims_[dim].conditions.size()); }
    const std::string& condition_label(int dim, int cond) const {
        return dims_[dim].conditions[cond];
    }

    /// -1 when absent. Both lookups are case-insensitive.
    int find_dimension(const std::string& name) const;
    int find_condition(int dim, const std::string& label) const;

    /// Condition count over all dimensions, not counting the reserved na.
    int total_conditions() const;

    bool operator==(const ContextSchema& other) const;

private:
    struct Dimension {
        std::string name;
        std::vector<std::string> conditions;  // index 0 = na
        std::unordered_map<std::string, int> index;
    };
    std::vector<Dimension> dims_;
    std::unordered_map<std::string, int> dim_index_;  // case-folded name -> dim
};

/// One condition index per schema dimension. The all-na situation is c0.
struct ContextSituation {
    std::vector<int> conditions;

    ContextSituation() = default;
    explicit ContextSituation(std::vector<int> conds) : conditions(std::move(conds)) {}

    static ContextSituation all_na(int dimension_count) {
        return ContextSituation(std::vector<int>(dimension_count, kNaCondition));
    }

    int size() const { return static_cast<int>(conditions.size()); }
    int operator[](int dim) const { return conditions[dim]; }

    bool is_all_na() const {
        for (int c : conditions)
            if (c != kNaCondition) return false;
        return true;
    }

    bool operator==(const ContextSituation&) const = default;
    auto operator<=>(const ContextSituation&) const = default;
};

struct ContextSituationHash {
    std::size_t operator()(const ContextSituation& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int c : s.conditions) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct ContextualRating {
    int user = -1;
    int item = -1;
    double rating = 0.0;
    ContextSituation context;

    bool operator==(const ContextualRating&) const = default;
};

/// Stable label interning; equal labels map to equal indices within a parse.
class Vocabulary {
public:
    int intern(const std::string& label);
    int find(const std::string& label) const;
    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int index) const { return labels_[index]; }
    bool operator==(const Vocabulary& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

struct RatingScale {
    double min = 1.0;
    double max = 5.0;
    bool contains(double r) const { return r >= min && r <= max; }
    bool operator==(const RatingScale&) const = default;
};

/// Immutable after construction; safe to share read-only across workers.
struct Dataset {
    ContextSchema schema;
    Vocabulary users;
    Vocabulary items;
    RatingScale scale;
    std::vector<ContextualRating> ratings;

    int user_count() const { return users.size(); }
    int item_count() const { return items.size(); }
    std::size_t size() const { return ratings.size(); }

    bool operator==(const Dataset&) const = default;
};

struct DatasetSplit {
    Dataset train;
    Dataset test;
};

/// Deterministic k-fold split: rating indices are shuffled by `seed` and cut
/// into k near-equal folds; fold i is test, the rest train. Throws
/// std::invalid_argument when k < 2 or k exceeds the rating count.
std::vector<DatasetSplit> kfold_split(const Dataset& dataset, int k, std::uint64_t seed);

}  // namespace ctxrec
