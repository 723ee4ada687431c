#include "ctxrec/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ctxrec/rng.hpp"

namespace ctxrec {

std::string fold_case(const std::string& s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

int ContextSchema::add_dimension(const std::string& name) {
    const std::string key = fold_case(name);
    if (dim_index_.count(key))
        throw std::invalid_argument("duplicate context dimension: " + name);
    Dimension d;
    d.name = name;
    d.conditions.push_back(kNaLabel);
    d.index.emplace(kNaLabel, kNaCondition);
    dims_.push_back(std::move(d));
    int idx = static_cast<int>(dims_.size()) - 1;
    dim_index_.emplace(key, idx);
    return idx;
}

int ContextSchema::add_condition(int dim, const std::string& label) {
    Dimension& d = dims_.at(dim);
    const std::string key = fold_case(label);
    auto it = d.index.find(key);
    if (it != d.index.end()) return it->second;
    d.conditions.push_back(key);
    int idx = static_cast<int>(d.conditions.size()) - 1;
    d.index.emplace(key, idx);
    return idx;
}

int ContextSchema::find_dimension(const std::string& name) const {
    auto it = dim_index_.find(fold_case(name));
    return it == dim_index_.end() ? -1 : it->second;
}

int ContextSchema::find_condition(int dim, const std::string& label) const {
    const Dimension& d = dims_.at(dim);
    auto it = d.index.find(fold_case(label));
    return it == d.index.end() ? -1 : it->second;
}

int ContextSchema::total_conditions() const {
    int n = 0;
    for (const Dimension& d : dims_) n += static_cast<int>(d.conditions.size()) - 1;
    return n;
}

bool ContextSchema::operator==(const ContextSchema& other) const {
    if (dims_.size() != other.dims_.size()) return false;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i].name != other.dims_[i].name) return false;
        if (dims_[i].conditions != other.dims_[i].conditions) return false;
    }
    return true;
}

int Vocabulary::intern(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    labels_.push_back(label);
    int idx = static_cast<int>(labels_.size()) - 1;
    index_.emplace(label, idx);
    return idx;
}

int Vocabulary::find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

std::vector<DatasetSplit> kfold_split(const Dataset& dataset, int k, std::uint64_t seed) {
    const std::size_t n = dataset.ratings.size();
    if (k < 2) throw std::invalid_argument("kfold_split: k must be at least 2");
    if (static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("kfold_split: k exceeds the rating count");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    std::vector<int> fold_of(n);
    std::size_t pos = 0;
    for (int f = 0; f < k; ++f) {
        std::size_t fold_size = n / static_cast<std::size_t>(k) +
                                (static_cast<std::size_t>(f) < n % static_cast<std::size_t>(k) ? 1 : 0);
        for (std::size_t j = 0; j < fold_size; ++j) fold_of[order[pos++]] = f;
    }

    std::vector<DatasetSplit> splits(k);
    for (int f = 0; f < k; ++f) {
        splits[f].train.schema = dataset.schema;
        splits[f].train.users = dataset.users;
        splits[f].train.items = dataset.items;
        splits[f].train.scale = dataset.scale;
        splits[f].test = splits[f].train;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (int f = 0; f < k; ++f) {
            (fold_of[i] == f ? splits[f].test : splits[f].train).ratings.push_back(dataset.ratings[i]);
        }
    }
    return splits;
}

}  // namespace ctxrec
