#ifndef ADEG_REDUCTION_HPP
#define ADEG_REDUCTION_HPP

#include <map>
#include <memory>
#include <vector>

#include "adeg/boolfn.hpp"
#include "adeg/poly.hpp"
#include "adeg/rational.hpp"

namespace adeg {

// --- The four intermediate functions -------------------------------------

// G^{<=N}: (F_R o OR_N) restricted to Hamming weight <= N. Block for range
// item i in [R] occupies variables [(i-1)N, iN).
BooleanFunction restrict_promise(const BooleanFunction& F, int N);

// All lists s in [R]_0^N, lexicographic.
std::vector<std::vector<int>> all_lists(int N, int R);

// All histograms z in [N]_0^{R+1} with sum z = N, lexicographic.
std::vector<std::vector<int>> all_histograms(int N, int R);

// The evaluation-table property G^prop on domain {Y(s)}: value map plus the
// underlying explicit-domain function over (R+1)*N variables.
struct PropertyFunction {
    int N = 0;
    int R = 0;
    BooleanFunction fn;  // Explicit domain D_{N,R}
};
PropertyFunction g_prop(const BooleanFunction& F, int N);

// The symmetrized property on histograms, in the indicator form
// F_R(I_{>0}(z_1), ..., I_{>0}(z_R)); occurrences of item 0 are ignored.
struct SymmetrizedProperty {
    int N = 0;
    int R = 0;
    std::map<std::vector<int>, int> values;
    int value(const std::vector<int>& z) const { return values.at(z); }
};
SymmetrizedProperty g_tilde(const BooleanFunction& F, int N);

// --- Symmetrization and the q-transform ----------------------------------

struct FitFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial in the R+1 histogram variables, exponent vector -> coefficient.
struct ZPoly {
    int vars = 0;
    std::map<std::vector<int>, Rat> terms;

    Rat eval(const std::vector<int>& z) const;
    int degree() const;
};

// Exact multinomial-weighted average of p over {s : Z(s) = z}, followed by an
// exact degree-<= d polynomial fit in z. A nonzero fit residual means the
// averaging did not produce a degree-d interpolable table and is reported as
// FitFailure (it would contradict the symmetrization guarantee).
ZPoly ambainis_symmetrize(const MultilinearPolynomial& p, int N, int R, int d);

// q(x) = ptilde(N - sum T_i(x), T_1(x), ..., T_R(x)) expanded multilinearly
// over the N*R cube; T_i counts the -1 entries of block i. deg q <= deg ptilde.
MultilinearPolynomial q_transform(const ZPoly& ptilde, int N, int R);

// --- Encoding, g* and g ----------------------------------------------------

// Fixed-width block decoder onto [R]_0: big-endian binary value mod (R+1).
struct SurjEncoding {
    int R = 0;
    int width = 0;
    int decode(uint64_t block) const;  // block uses the low `width` bits
    bool surjective() const;
};
SurjEncoding surj_encode(int R);                 // width = 6 ceil(log2(R+1))
SurjEncoding surj_encode_width(int R, int width);  // any width >= ceil(log2(R+1))

// Minimal circuit IR: literals with polarity, AND/OR gates, and an opaque
// table gate with a declared depth for non-DNF base functions.
struct Formula {
    enum class Kind { Lit, And, Or, Oracle };
    Kind kind = Kind::Lit;
    int var = -1;
    bool negated = false;
    std::vector<Formula> kids;
    std::shared_ptr<BooleanFunction> oracle;
    int oracle_depth = 0;

    int eval(uint64_t x) const;
    int depth() const;
    bool monotone() const;
};

struct FormulaAccounting {
    int depth = 0;
    int width = 0;        // max literals per term when the formula is a DNF
    bool is_dnf = false;
    bool monotone = false;
    std::string bottom_gate;
};
FormulaAccounting account_formula(const Formula& f);

// g*(u) = G^prop(Y(s_u)) with s_u = (dec(u_1), ..., dec(u_N)), on m = N*width
// variables. The circuit replaces every input of F_R by the decoder DNF; when
// F_R comes with a monotone DNF the whole circuit is flattened to a DNF of
// width <= w * width.
struct GStar {
    int N = 0;
    int R = 0;
    int m = 0;  // N * enc.width
    SurjEncoding enc;
    Formula circuit;
    FormulaAccounting acct;
    std::shared_ptr<BooleanFunction> base;   // F_R
    std::shared_ptr<BooleanFunction> table;  // materialized when m is small

    int eval(uint64_t u) const;      // via the defining map, not the circuit
    int eval_raw(uint64_t u) const;  // always decodes, ignoring the cache
};
GStar build_gstar(const BooleanFunction& F, int N, const SurjEncoding& enc,
                  const MonotoneDnf* F_dnf = nullptr, int declared_depth = 1);

// The monotone doubling of g*: inputs come in (v, negated-v) halves and every
// literal of the g* circuit becomes an unnegated input.
struct GFun {
    int m = 0;  // g has 2m inputs
    Formula circuit;
    FormulaAccounting acct;
    std::shared_ptr<BooleanFunction> table;  // materialized when 2m fits

    int eval(uint64_t y) const;
    uint64_t diagonal_point(uint64_t v) const;  // (v, -v)
};
GFun build_g(const GStar& gs);

}  // namespace adeg

#endif
