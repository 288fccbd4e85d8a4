#ifndef ADEG_DUALCRAFT_HPP
#define ADEG_DUALCRAFT_HPP

#include <optional>
#include <string>
#include <vector>

#include "adeg/boolfn.hpp"
#include "adeg/degree.hpp"
#include "adeg/symprofile.hpp"
#include "adeg/witness.hpp"

namespace adeg {

// sign(0) = -1 throughout the dual algebra.
inline int sign_of(const Rat& v) { return v > 0 ? +1 : -1; }

// (Psi * psi)(x_1..x_M) = 2^M Psi(..., sign(psi(x_i)), ...) prod |psi(x_i)|.
// The result lives on M*m variables and its support is supp(psi)^M.
DualWitness dual_block_compose(const DualWitness& outer, const DualWitness& inner,
                               size_t support_cap = size_t(1) << 22);

// Decaying symmetric profile on {0..k} supported on {1,2} u {c i^2}:
//   w(t) = ((-1)^{t+(k-m)} / k!) C(k,t) prod_{r in [k]_0 \ T} (t - r),
// with m = floor(sqrt(k/c)). Returned unnormalized; callers usually want
// .normalized_copy(). Requires k >= c.
SymmetricProfile omega_profile(int k, int c = 25);

// Support layers {1,2} u {c i^2 : 0 <= i <= m} of omega.
std::vector<int> omega_support(int k, int c = 25);

// Dual witness for OR_N on the weight-<= k slice: psi(x) = w(|x|)/C(N,|x|)
// with w the normalized omega profile. Requires 25 <= k <= N (for c = 25).
DualWitness or_dual_witness_capped(int N, int k, int c = 25);

// Orthogonality of a layer-symmetric witness to every monomial of degree
// < d, checked through layer sums (exact, no point enumeration):
// sum_t w(t)/C(N,t) * K_s(t) with K the layer character sum.
bool symmetric_witness_orthogonal_below(const SymmetricProfile& w, int N, int d);

// Amplifying dual witness for AND_M: the LP-optimal witness with unit norm,
// <Psi, 1_M> = 0, Psi >= 0 on AND_M^{-1}(+1), maximal correlation with AND_M,
// tie-broken by maximal mass at 1^M (the vertex supported on the two
// constant sign patterns). Its amplification conclusions are certified per
// composed instance, not assumed.
DualWitness and_amplifier(int M);

// One certified amplification instance: given f and a one-sided psi with
// <psi,f> >= 1/3 and unit norm, composes Psi * psi and reports the exact
// correlation with AND_M o f next to the 1 - (2/3)^M target.
struct AmplifyInstance {
    int M = 0;
    Rat correlation;       // <Psi * psi, AND_M o f>
    Rat target;            // 1 - (2/3)^M
    bool meets_target = false;
    bool unit_norm = false;
    DualWitness composed;
};
AmplifyInstance certify_amplification(int M, const BooleanFunction& f, const DualWitness& psi);

// zeta = phi * Psi * psi with each certified/reported property attached.
struct ZetaReport {
    DualWitness zeta;
    bool unit_norm = false;
    int certified_phd = 0;            // exact pure high degree (exhaustive)
    Rat correlation;                  // with G, when a G is supplied
    bool correlation_checked = false;
    bool associativity_ok = false;    // (phi*Psi)*psi == phi*(Psi*psi)
};
ZetaReport build_zeta(const DualWitness& phi, const DualWitness& Psi, const DualWitness& psi,
                      const BooleanFunction* G = nullptr);

// Exact mass of Phi * psi_w above the weight cap, where psi_w is the layer
// witness w(|x|)/C(B,|x|) on B-variable blocks; computed by convolving the
// per-block layer distributions split by sign, one convolution per support
// point of Phi.
Rat mass_outside_cap(const DualWitness& Phi, const SymmetricProfile& w, int block_arity, int cap);

// Exact DP value of sum over t-vectors with t_1+..+t_R > cap of
// prod eta_i(t_i), for nonnegative profiles eta_i on {0..k}, compared
// against 2^{-R} (2*cap*R)^{-2R/k}. The comparison is exact: both sides are
// raised to the k-th power. Profiles must satisfy sum eta_i <= 1/2 and
// eta_i(r) <= 5/(r+1)^2.
struct TailBoundReport {
    bool holds = false;
    Rat lhs;
    std::string rhs_expr;
    double rhs_approx = 0.0;
};
TailBoundReport tail_product_bound(int k, int R, const std::vector<SymmetricProfile>& etas,
                                   int cap);

// DP helper shared with the report: sum_{sum t_i > cap} prod eta_i(t_i).
Rat profile_tail_mass(const std::vector<SymmetricProfile>& etas, int cap);

// Single-point erasure witness phi_y for |y| > D: phi_y(y) = 1, zero on
// every other point of weight > D, orthogonal to all monomials of degree
// < D, realized with minimal l1 mass below the weight cutoff (so the mass
// bound 2^D C(|y|, D) holds whenever any witness satisfying it exists).
DualWitness eraser_witness(uint64_t y, int D, int m);

// nu = sum_{|y| > cap} zeta(y) phi_y: matches zeta above the cap, orthogonal
// below degree D.
DualWitness correction_witness(const DualWitness& zeta, int cap, int D);

// zetahat = (zeta - nu) / ||zeta - nu||_1; throws if zeta == nu.
DualWitness apply_correction(const DualWitness& zeta, const DualWitness& nu);

// Parameter schedule derived from (n, d): k = floor((n/d)^(1/3))^2,
// D = sqrt(k)/5 * d, R = 10 n ceil(log2 n), N = ceil(c2 R ceil(log2 R)^2),
// m = R N. c2 is a certified rational upper bound for 160*C*e where
// C = sum 1/(s log^2 2s) <= 2.
struct AmplificationParams {
    long n = 0;
    long d = 0;
    long k = 0;
    Rat D;        // may be fractional; pure-high-degree claims use ceil
    long R = 0;
    Int N;
    Int m;
    Rat c1;       // 1/5
    Rat c2;

    static AmplificationParams from(long n, long d);
    long min_int_phd() const;  // smallest integer degree threshold matching D
};

// Exact numeric lemmas used by the mass analysis.
bool binomial_bound_holds(long n, long k);            // C(n,k) <= (e_up n / k)^k
Rat inv_square_partial_sum(long m, long M);           // sum_{r=m}^{M} 1/r^2
bool alternating_binomial_vanishes(int k, int j);     // sum_t (-1)^t C(k,t) t^j == 0 for j < k

// Rational upper bound on e used everywhere a bound needs it.
Rat euler_upper_bound();

}  // namespace adeg

#endif
