#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "vpg/errors.hpp"

namespace vpg {

// Sorted list of distinct labels from [n].
using Subset = std::vector<int>;

// All k-subsets of [n] = {1..n} in lexicographic order.
inline std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::string subset_label(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

inline bool is_subset_label(std::string_view label) {
    return label.size() >= 2 && label.front() == '{' && label.back() == '}';
}

inline Subset parse_subset_label(std::string_view label) {
    if (!is_subset_label(label)) throw ParseError("not a subset label: " + std::string(label));
    Subset out;
    std::string body(label.substr(1, label.size() - 2));
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        try {
            out.push_back(std::stoi(body.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw ParseError("bad subset label: " + std::string(label));
        }
        pos = comma + 1;
    }
    if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end())
        throw ParseError("subset label not sorted/distinct: " + std::string(label));
    return out;
}

inline std::size_t intersection_size(const Subset& a, const Subset& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++c;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return c;
}

}  // namespace vpg
