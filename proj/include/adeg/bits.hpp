#ifndef ADEG_BITS_HPP
#define ADEG_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adeg {

// Point encoding: a point of {-1,1}^n is a mask whose bit i (LSB = variable 1)
// is set iff x_{i+1} = -1. TRUE is -1, so the Hamming weight |x| is popcount.
// In files a point is the bitstring with character i = '1' iff bit i set.

inline int weight(uint64_t mask) { return std::popcount(mask); }

inline int bit_value(uint64_t mask, int i) { return (mask >> i) & 1 ? -1 : +1; }

inline std::string mask_to_bits(uint64_t mask, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) s[static_cast<size_t>(i)] = '1';
    return s;
}

inline uint64_t bits_to_mask(const std::string& s) {
    if (s.size() > 63) throw std::invalid_argument("bits_to_mask: more than 63 variables");
    uint64_t m = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            m |= uint64_t(1) << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bits_to_mask: bad character in '" + s + "'");
    }
    return m;
}

// All subset masks of [n] with exactly k bits, ascending (Gosper).
inline std::vector<uint64_t> masks_of_weight(int n, int k) {
    std::vector<uint64_t> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    uint64_t v = (uint64_t(1) << k) - 1;
    const uint64_t limit = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n);
    while (n == 64 ? true : v < limit) {
        out.push_back(v);
        uint64_t t = v | (v - 1);
        uint64_t next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        if (next <= v) break;
        v = next;
    }
    return out;
}

// Subset masks of [n] with at most d bits, ordered by (weight, value).
inline std::vector<uint64_t> masks_up_to_weight(int n, int d) {
    std::vector<uint64_t> out;
    for (int k = 0; k <= d && k <= n; ++k) {
        auto layer = masks_of_weight(n, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace adeg

#endif
