#ifndef ADEG_POLY_HPP
#define ADEG_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>

#include "adeg/bits.hpp"
#include "adeg/rational.hpp"

namespace adeg {

// chi_S(x) = prod_{i in S} x_i; with the -1-bit encoding this is
// (-1)^{|S & x|}.
inline int chi(uint64_t S, uint64_t x) { return weight(S & x) % 2 == 0 ? +1 : -1; }

// Multilinear polynomial over the +/-1 cube, coefficients indexed by subset
// mask. Zero coefficients are not stored.
class MultilinearPolynomial {
public:
    MultilinearPolynomial() = default;
    explicit MultilinearPolynomial(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<uint64_t, Rat>& coefficients() const { return coef_; }

    void set(uint64_t S, const Rat& c);
    Rat coefficient(uint64_t S) const;
    int degree() const;  // max |S| with nonzero coefficient; 0 for the zero polynomial
    bool is_zero() const { return coef_.empty(); }

    Rat eval(uint64_t x) const;

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& other);
    MultilinearPolynomial& operator*=(const Rat& s);

    // Unique multilinear interpolation of a full table of values (2^n points)
    // via the Walsh-Hadamard transform.
    static MultilinearPolynomial from_values(int n, const std::function<Rat(uint64_t)>& val);

private:
    int n_ = 0;
    std::map<uint64_t, Rat> coef_;
};

}  // namespace adeg

#endif
