#ifndef ADEG_SYMPROFILE_HPP
#define ADEG_SYMPROFILE_HPP

#include <vector>

#include "adeg/poly.hpp"
#include "adeg/rational.hpp"

namespace adeg {

// Exact-rational function on {0,...,k}, used for layer profiles of symmetric
// dual witnesses and for Minsky-Papert symmetrizations.
struct SymmetricProfile {
    int k = 0;
    std::vector<Rat> values;  // size k+1
    bool normalized = false;

    SymmetricProfile() = default;
    SymmetricProfile(int k_, std::vector<Rat> v) : k(k_), values(std::move(v)) {}

    const Rat& at(int t) const { return values.at(static_cast<size_t>(t)); }

    Rat l1() const;
    SymmetricProfile normalized_copy() const;  // throws on the zero profile

    // sum_t w(t) * t^j
    Rat power_moment(int j) const;

    // w(0) - sum_{t>=1} w(t)
    Rat or_correlation() const;

    // Non-negative sign parts: first = max(w,0), second = max(-w,0).
    std::pair<SymmetricProfile, SymmetricProfile> sign_split() const;
};

// q(t) = average of p over the Hamming layer |x| = t.
SymmetricProfile minsky_papert_symmetrize(const MultilinearPolynomial& p);

// True iff the k+1 equally spaced values are interpolated by a univariate
// polynomial of degree <= d (forward differences of order d+1 all vanish).
bool profile_fits_degree(const SymmetricProfile& q, int d);

// Least such degree.
int profile_degree(const SymmetricProfile& q);

}  // namespace adeg

#endif
