#ifndef ADEG_WITNESS_HPP
#define ADEG_WITNESS_HPP

#include <cstdint>
#include <map>

#include "adeg/boolfn.hpp"
#include "adeg/poly.hpp"
#include "adeg/rational.hpp"

namespace adeg {

// Signed rational measure on (a subset of) the hypercube. Zero entries are
// not stored; the support is whatever carries a nonzero value.
class DualWitness {
public:
    DualWitness() = default;
    explicit DualWitness(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<uint64_t, Rat>& entries() const { return vals_; }
    bool is_zero() const { return vals_.empty(); }

    void set(uint64_t x, const Rat& v);
    Rat at(uint64_t x) const;  // 0 off support

    Rat l1() const;
    DualWitness normalized() const;  // throws on zero witness
    DualWitness& operator*=(const Rat& s);
    DualWitness& operator-=(const DualWitness& other);

    // <psi, f> over the intersection of supports (off-domain points of f
    // contribute nothing, matching the correlation convention).
    Rat correlation(const BooleanFunction& f) const;
    Rat inner(const MultilinearPolynomial& p) const;
    Rat inner_monomial(uint64_t S) const;

    // Exact check: orthogonal to every monomial of degree < d.
    bool orthogonal_below(int d) const;
    // Largest d <= cap such that orthogonal_below(d) holds.
    int pure_high_degree(int cap) const;

    int max_support_weight() const;  // -1 for the zero witness
    Rat layer_mass(int t) const;     // sum of |psi| over |x| = t

private:
    int n_ = 0;
    std::map<uint64_t, Rat> vals_;
};

}  // namespace adeg

#endif
