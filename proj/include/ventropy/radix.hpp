#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ventropy {

/// Generating sequence (s_j) of the group G = prod Z_{s_j}, stored as a finite
/// pattern repeated periodically. Every entry is >= 2.
class RadixSequence {
  public:
    explicit RadixSequence(std::vector<std::uint32_t> pattern);

    /// Parse the CLI grammar: comma-separated integers >= 2, e.g. "3" or "2,3".
    static RadixSequence parse(const std::string& text);

    std::uint32_t s(std::size_t k) const { return pattern_[k % pattern_.size()]; }

    /// Partial product P(k) = s_0 * ... * s_{k-1}, P(0) = 1. Exact; throws
    /// std::overflow_error if the product exceeds 64 bits.
    std::uint64_t P(std::size_t k) const;

    const std::vector<std::uint32_t>& pattern() const { return pattern_; }
    std::string to_string() const;

    bool operator==(const RadixSequence& o) const { return pattern_ == o.pattern_; }

  private:
    std::vector<std::uint32_t> pattern_;
};

enum class ParityClass { K, L, M };

char parity_label(ParityClass c);

/// Mixed-radix expansion n = sum n_k P_k with 0 <= n_k < s_k. Canonical: the
/// last stored entry is nonzero unless the value is zero (empty entry list).
struct Digits {
    std::vector<std::uint32_t> entries;

    std::size_t size() const { return entries.size(); }
    std::uint32_t at(std::size_t k) const { return k < entries.size() ? entries[k] : 0; }
    void canonicalize();

    bool operator==(const Digits& o) const { return entries == o.entries; }
};

/// Point of G with finitely many nonzero coordinates, 0 <= x_k < s_k.
struct GroupPoint {
    std::vector<std::uint32_t> entries;

    std::uint32_t at(std::size_t k) const { return k < entries.size() ? entries[k] : 0; }

    /// Rational image |x| = sum x_k / P_{k+1} in [0, 1); display only.
    double real_image(const RadixSequence& radix) const;
};

Digits digits_of(std::uint64_t n, const RadixSequence& radix);

/// Inverse of digits_of; throws std::overflow_error past 2^64-1.
std::uint64_t value(const Digits& digits, const RadixSequence& radix);

/// Digit-wise modular sum/difference; exact on digit vectors of any length.
Digits oplus(const Digits& a, const Digits& b, const RadixSequence& radix);
Digits ominus(const Digits& a, const Digits& b, const RadixSequence& radix);

std::uint64_t oplus(std::uint64_t n, std::uint64_t m, const RadixSequence& radix);
std::uint64_t ominus(std::uint64_t n, std::uint64_t m, const RadixSequence& radix);

/// 0 (-) n, the group inverse.
std::uint64_t neg(std::uint64_t n, const RadixSequence& radix);

enum class ClassifyMethod {
    Direct,    // compare n with (-)n
    FastRule,  // recurse on the leading digit: n_r < s_r/2 => K, > => L, = => strip and repeat
};

ParityClass classify(std::uint64_t n, const RadixSequence& radix,
                     ClassifyMethod method = ClassifyMethod::FastRule);

} // namespace ventropy
