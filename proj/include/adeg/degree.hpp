#ifndef ADEG_DEGREE_HPP
#define ADEG_DEGREE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adeg/boolfn.hpp"
#include "adeg/lp.hpp"
#include "adeg/poly.hpp"
#include "adeg/witness.hpp"

namespace adeg {

struct LpFailure : std::runtime_error {
    explicit LpFailure(LpStatus st, const std::string& what)
        : std::runtime_error(what), status(st) {}
    LpStatus status;
};

// Least worst-case error of a degree-<= d fit over the domain of f, with an
// attaining polynomial. Off-domain points are unconstrained.
struct EpsOptResult {
    Rat eps;
    MultilinearPolynomial poly;
};
EpsOptResult eps_opt(const BooleanFunction& f, int d);

// Least d with eps_opt(f, d) <= eps, by ascending search; the ladder keeps
// every eps_opt value visited. For eps >= 1 the answer is 0 by convention.
struct AdegResult {
    int degree = 0;
    std::vector<Rat> ladder;  // ladder[i] = eps_opt(f, i) for i = 0..degree
};
AdegResult approx_degree(const BooleanFunction& f, const Rat& eps);

// Best dual witness at pure high degree >= d: maximizes <psi, f> subject to
// ||psi||_1 = 1 and orthogonality to every monomial of degree < d. By strong
// duality the optimal correlation equals eps_opt(f, d-1). The returned
// witness has unit norm whenever a nonzero witness of that pure high degree
// exists on the domain; otherwise it is the zero witness.
struct DualOptResult {
    Rat correlation;
    DualWitness witness;
    int claimed_phd = 0;
};
DualOptResult dual_witness(const BooleanFunction& f, int d);

// Same with psi(x) >= 0 enforced on f^{-1}(+1).
DualOptResult one_sided_dual_witness(const BooleanFunction& f, int d);

// Generic witness feasibility/minimization: pin values at points, force
// orthogonality to monomials, optionally force signs, and minimize the l1
// mass over a region. Throws LpFailure on infeasibility.
struct WitnessLp {
    int n = 0;
    std::vector<uint64_t> points;                     // variable support
    std::vector<std::pair<uint64_t, Rat>> pinned;     // psi(x) = v (x need not be in points)
    std::vector<uint64_t> orthogonal_monomials;       // <psi, chi_S> = 0
    std::vector<uint64_t> nonnegative_points;         // psi(x) >= 0
    std::vector<uint64_t> l1_objective_region;        // minimize sum |psi| here
};
DualWitness min_l1_witness(const WitnessLp& spec);

// Both optima of the degree-d program with the strong-duality equality.
struct LpCertificate {
    int degree_bound = 0;   // d: primal fits with degree <= d, dual has phd >= d+1
    Rat primal_eps;
    MultilinearPolynomial primal_poly;
    Rat dual_correlation;
    DualWitness witness;
    bool strong_duality = false;  // primal_eps == dual_correlation, exactly
};
LpCertificate certify_degree(const BooleanFunction& f, int d);

// Deterministic monomial basis of degree <= d over n variables.
std::vector<uint64_t> monomial_basis(int n, int d);

}  // namespace adeg

#endif
