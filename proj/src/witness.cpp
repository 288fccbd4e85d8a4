#include "adeg/witness.hpp"

#include <stdexcept>

namespace adeg {

void DualWitness::set(uint64_t x, const Rat& v) {
    if (n_ < 64 && (x >> n_) != 0)
        throw std::invalid_argument("DualWitness::set: point outside the cube");
    if (v == 0)
        vals_.erase(x);
    else
        vals_[x] = v;
}

Rat DualWitness::at(uint64_t x) const {
    auto it = vals_.find(x);
    return it == vals_.end() ? Rat(0) : it->second;
}

Rat DualWitness::l1() const {
    Rat s = 0;
    for (const auto& [x, v] : vals_) s += rat_abs(v);
    return s;
}

DualWitness DualWitness::normalized() const {
    Rat norm = l1();
    if (norm == 0) throw std::domain_error("DualWitness: cannot normalize zero witness");
    DualWitness out = *this;
    for (auto& [x, v] : out.vals_) v /= norm;
    return out;
}

DualWitness& DualWitness::operator*=(const Rat& s) {
    if (s == 0) {
        vals_.clear();
        return *this;
    }
    for (auto& [x, v] : vals_) v *= s;
    return *this;
}

DualWitness& DualWitness::operator-=(const DualWitness& other) {
    if (other.n_ != n_) throw std::invalid_argument("DualWitness: arity mismatch");
    for (const auto& [x, v] : other.vals_) set(x, at(x) - v);
    return *this;
}

Rat DualWitness::correlation(const BooleanFunction& f) const {
    Rat s = 0;
    for (const auto& [x, v] : vals_) {
        if (!f.in_domain(x)) continue;
        if (f.value(x) == 1)
            s += v;
        else
            s -= v;
    }
    return s;
}

Rat DualWitness::inner(const MultilinearPolynomial& p) const {
    Rat s = 0;
    for (const auto& [x, v] : vals_) s += v * p.eval(x);
    return s;
}

Rat DualWitness::inner_monomial(uint64_t S) const {
    Rat s = 0;
    for (const auto& [x, v] : vals_) {
        if (chi(S, x) == 1)
            s += v;
        else
            s -= v;
    }
    return s;
}

bool DualWitness::orthogonal_below(int d) const {
    for (int j = 0; j < d; ++j)
        for (uint64_t S : masks_of_weight(n_, j))
            if (inner_monomial(S) != 0) return false;
    return true;
}

// First degree carrying a correlated monomial, i.e. the exact pure high
// degree. If every degree up to min(cap, n) is orthogonal the result is
// min(cap, n) + 1, a certified lower bound only.
int DualWitness::pure_high_degree(int cap) const {
    const int hi = std::min(cap, n_);
    for (int j = 0; j <= hi; ++j)
        for (uint64_t S : masks_of_weight(n_, j))
            if (inner_monomial(S) != 0) return j;
    return hi + 1;
}

int DualWitness::max_support_weight() const {
    int w = -1;
    for (const auto& [x, v] : vals_) w = std::max(w, weight(x));
    return w;
}

Rat DualWitness::layer_mass(int t) const {
    Rat s = 0;
    for (const auto& [x, v] : vals_)
        if (weight(x) == t) s += rat_abs(v);
    return s;
}

}  // namespace adeg
