#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ventropy {

enum class NormMode { Euclid, Max };

/// Element of N_0^d indexing product basis functions and multiplier values.
/// Euclidean norm comparisons go through the exact integer squared norm.
struct MultiIndex {
    std::vector<std::uint64_t> components;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::uint64_t> c) : components(std::move(c)) {}

    std::size_t dim() const { return components.size(); }

    std::uint64_t norm_sq() const {
        std::uint64_t q = 0;
        for (auto c : components) q += c * c;
        return q;
    }
    double norm() const;
    std::uint64_t max_norm() const {
        std::uint64_t m = 0;
        for (auto c : components) m = c > m ? c : m;
        return m;
    }

    /// "k1,k2,...,kd" (the JSON map key format).
    std::string key() const;
    static MultiIndex parse_key(const std::string& key);

    bool operator==(const MultiIndex& o) const { return components == o.components; }
    bool operator<(const MultiIndex& o) const { return components < o.components; }
};

/// Within-layer order: nondecreasing Euclidean norm, ties lexicographic.
inline bool layer_order(const MultiIndex& a, const MultiIndex& b) {
    const std::uint64_t qa = a.norm_sq(), qb = b.norm_sq();
    if (qa != qb) return qa < qb;
    return a.components < b.components;
}

/// Exact predicate q <= R^2 for integer q and double R (no floating ties).
bool exact_le_sq(std::uint64_t q, double R);

/// |k| <= R (Euclid, exact squared comparison) or |k|_* <= R (Max).
bool norm_le(const MultiIndex& k, double R, NormMode mode);

} // namespace ventropy
