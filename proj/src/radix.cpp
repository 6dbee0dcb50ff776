#include "ventropy/radix.hpp"

#include <sstream>
#include <stdexcept>

#include "ventropy/errors.hpp"

namespace ventropy {

RadixSequence::RadixSequence(std::vector<std::uint32_t> pattern) : pattern_(std::move(pattern)) {
    if (pattern_.empty()) throw input_error("radix pattern must be nonempty");
    for (auto s : pattern_)
        if (s < 2) throw input_error("radix pattern entries must be >= 2");
}

RadixSequence RadixSequence::parse(const std::string& text) {
    std::vector<std::uint32_t> pattern;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw input_error("bad radix pattern entry: '" + item + "'");
        }
        if (pos != item.size() || v < 2 || v > 0x7fffffffUL)
            throw input_error("bad radix pattern entry: '" + item + "'");
        pattern.push_back(static_cast<std::uint32_t>(v));
    }
    return RadixSequence(std::move(pattern));
}

std::uint64_t RadixSequence::P(std::size_t k) const {
    std::uint64_t p = 1;
    for (std::size_t j = 0; j < k; ++j)
        if (__builtin_mul_overflow(p, static_cast<std::uint64_t>(s(j)), &p))
            throw std::overflow_error("radix partial product exceeds 64 bits");
    return p;
}

std::string RadixSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(pattern_[i]);
    }
    return out;
}

char parity_label(ParityClass c) {
    switch (c) {
        case ParityClass::K: return 'K';
        case ParityClass::L: return 'L';
        default: return 'M';
    }
}

void Digits::canonicalize() {
    while (!entries.empty() && entries.back() == 0) entries.pop_back();
}

double GroupPoint::real_image(const RadixSequence& radix) const {
    double x = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        scale /= static_cast<double>(radix.s(k));
        x += static_cast<double>(entries[k]) * scale;
    }
    return x;
}

Digits digits_of(std::uint64_t n, const RadixSequence& radix) {
    Digits d;
    for (std::size_t k = 0; n != 0; ++k) {
        const std::uint64_t s = radix.s(k);
        d.entries.push_back(static_cast<std::uint32_t>(n % s));
        n /= s;
    }
    return d;
}

std::uint64_t value(const Digits& digits, const RadixSequence& radix) {
    std::uint64_t acc = 0, p = 1;
    for (std::size_t k = 0; k < digits.entries.size(); ++k) {
        if (k > 0 && __builtin_mul_overflow(p, static_cast<std::uint64_t>(radix.s(k - 1)), &p))
            throw std::overflow_error("digit value exceeds 64 bits");
        std::uint64_t term;
        if (__builtin_mul_overflow(static_cast<std::uint64_t>(digits.entries[k]), p, &term) ||
            __builtin_add_overflow(acc, term, &acc))
            throw std::overflow_error("digit value exceeds 64 bits");
    }
    return acc;
}

Digits oplus(const Digits& a, const Digits& b, const RadixSequence& radix) {
    Digits r;
    const std::size_t len = std::max(a.size(), b.size());
    r.entries.resize(len);
    for (std::size_t k = 0; k < len; ++k)
        r.entries[k] = (a.at(k) + b.at(k)) % radix.s(k);
    r.canonicalize();
    return r;
}

Digits ominus(const Digits& a, const Digits& b, const RadixSequence& radix) {
    Digits r;
    const std::size_t len = std::max(a.size(), b.size());
    r.entries.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
        const std::uint32_t s = radix.s(k);
        r.entries[k] = (a.at(k) + s - b.at(k)) % s;
    }
    r.canonicalize();
    return r;
}

std::uint64_t oplus(std::uint64_t n, std::uint64_t m, const RadixSequence& radix) {
    return value(oplus(digits_of(n, radix), digits_of(m, radix), radix), radix);
}

std::uint64_t ominus(std::uint64_t n, std::uint64_t m, const RadixSequence& radix) {
    return value(ominus(digits_of(n, radix), digits_of(m, radix), radix), radix);
}

std::uint64_t neg(std::uint64_t n, const RadixSequence& radix) { return ominus(0, n, radix); }

namespace {

ParityClass classify_fast(const Digits& d, const RadixSequence& radix) {
    std::size_t r = d.size();
    while (r > 0) {
        const std::uint32_t nr = d.entries[r - 1];
        const std::uint32_t sr = radix.s(r - 1);
        if (nr == 0) { --r; continue; }  // non-canonical prefix view
        if (2 * nr < sr) return ParityClass::K;
        if (2 * nr > sr) return ParityClass::L;
        --r;  // n_r == s_r/2: the class of n equals the class of n - n_r P_r
    }
    return ParityClass::M;
}

} // namespace

ParityClass classify(std::uint64_t n, const RadixSequence& radix, ClassifyMethod method) {
    if (method == ClassifyMethod::FastRule) return classify_fast(digits_of(n, radix), radix);
    const std::uint64_t nn = neg(n, radix);
    if (n < nn) return ParityClass::K;
    if (n > nn) return ParityClass::L;
    return ParityClass::M;
}

} // namespace ventropy
