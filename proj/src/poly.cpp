#include "adeg/poly.hpp"

#include <stdexcept>
#include <vector>

namespace adeg {

void MultilinearPolynomial::set(uint64_t S, const Rat& c) {
    if (n_ < 64 && (S >> n_) != 0)
        throw std::invalid_argument("MultilinearPolynomial::set: monomial outside arity");
    if (c == 0)
        coef_.erase(S);
    else
        coef_[S] = c;
}

Rat MultilinearPolynomial::coefficient(uint64_t S) const {
    auto it = coef_.find(S);
    return it == coef_.end() ? Rat(0) : it->second;
}

int MultilinearPolynomial::degree() const {
    int d = 0;
    for (const auto& [S, c] : coef_) d = std::max(d, weight(S));
    return d;
}

Rat MultilinearPolynomial::eval(uint64_t x) const {
    Rat acc = 0;
    for (const auto& [S, c] : coef_) {
        if (chi(S, x) == 1)
            acc += c;
        else
            acc -= c;
    }
    return acc;
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& other) {
    if (other.n_ != n_) throw std::invalid_argument("MultilinearPolynomial: arity mismatch");
    for (const auto& [S, c] : other.coef_) set(S, coefficient(S) + c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator*=(const Rat& s) {
    if (s == 0) {
        coef_.clear();
        return *this;
    }
    for (auto& [S, c] : coef_) c *= s;
    return *this;
}

MultilinearPolynomial MultilinearPolynomial::from_values(
    int n, const std::function<Rat(uint64_t)>& val) {
    if (n < 0 || n > 24)
        throw std::invalid_argument("MultilinearPolynomial::from_values: arity out of range");
    const uint64_t size = uint64_t(1) << n;
    std::vector<Rat> a(size);
    for (uint64_t x = 0; x < size; ++x) a[x] = val(x);
    // In-place WHT in the (-1)^{|S & x|} character basis.
    for (int i = 0; i < n; ++i) {
        const uint64_t bit = uint64_t(1) << i;
        for (uint64_t x = 0; x < size; ++x) {
            if (x & bit) continue;
            Rat u = a[x], v = a[x | bit];
            a[x] = u + v;
            a[x | bit] = u - v;
        }
    }
    MultilinearPolynomial p(n);
    const Rat inv = Rat(1) / Rat(Int(size));
    for (uint64_t S = 0; S < size; ++S) {
        if (a[S] != 0) p.coef_[S] = a[S] * inv;
    }
    return p;
}

}  // namespace adeg
