#include "ventropy/multi_index.hpp"

#include <cmath>
#include <sstream>

#include "ventropy/errors.hpp"

namespace ventropy {

double MultiIndex::norm() const {
    return std::sqrt(static_cast<double>(norm_sq()));
}

std::string MultiIndex::key() const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(components[i]);
    }
    return out;
}

bool exact_le_sq(std::uint64_t q, double R) {
    if (R <= 0) return q == 0 && R == 0;
    int e = 0;
    const double fr = std::frexp(R, &e);
    const auto m = static_cast<unsigned __int128>(fr * 9007199254740992.0);  // fr * 2^53
    const unsigned __int128 m2 = m * m;
    const int shift = 2 * (e - 53);
    const auto uq = static_cast<unsigned __int128>(q);
    if (shift >= 0) {
        if (shift >= 128) return true;
        if (shift > 0 && (m2 >> (128 - shift)) != 0) return true;
        return uq <= (m2 << shift);
    }
    const int lsh = -shift;
    if (q == 0) return true;
    if (lsh >= 128 || (uq >> (128 - lsh)) != 0) return false;
    return (uq << lsh) <= m2;
}

bool norm_le(const MultiIndex& k, double R, NormMode mode) {
    if (mode == NormMode::Max) return static_cast<double>(k.max_norm()) <= R;
    return exact_le_sq(k.norm_sq(), R);
}

MultiIndex MultiIndex::parse_key(const std::string& key) {
    MultiIndex m;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            throw input_error("bad multi-index key: '" + key + "'");
        }
        if (pos != item.size()) throw input_error("bad multi-index key: '" + key + "'");
        m.components.push_back(v);
    }
    if (m.components.empty()) throw input_error("empty multi-index key");
    return m;
}

} // namespace ventropy
