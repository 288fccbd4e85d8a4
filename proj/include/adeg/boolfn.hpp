#ifndef ADEG_BOOLFN_HPP
#define ADEG_BOOLFN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adeg/bits.hpp"

namespace adeg {

enum class FnKind { Or, And, Maj, Parity, Const, Composed, Surj, Table };

enum class DomainKind { All, MaxWeight, Explicit };

// A +/-1 valued function on all of {-1,1}^n, on the weight-capped slice, or
// on an explicit point set. TRUE is -1 (see bits.hpp for the encoding).
class BooleanFunction {
public:
    BooleanFunction() = default;

    static BooleanFunction total(int n, const std::function<int(uint64_t)>& eval,
                                 FnKind kind = FnKind::Table);
    static BooleanFunction on_points(int n, std::vector<uint64_t> points,
                                     const std::function<int(uint64_t)>& eval,
                                     DomainKind dk = DomainKind::Explicit, int weight_cap = 0,
                                     FnKind kind = FnKind::Table);

    int n() const { return n_; }
    DomainKind domain_kind() const { return domain_; }
    int weight_cap() const { return weight_cap_; }
    FnKind kind() const { return kind_; }
    bool is_total() const { return domain_ == DomainKind::All; }

    bool in_domain(uint64_t mask) const;
    int value(uint64_t mask) const;  // throws std::out_of_range off-domain

    size_t domain_size() const;
    // Sorted ascending; for All domains this materializes 2^n masks.
    std::vector<uint64_t> domain_points() const;

    BooleanFunction negated() const;

private:
    int n_ = 0;
    DomainKind domain_ = DomainKind::All;
    int weight_cap_ = 0;
    FnKind kind_ = FnKind::Table;
    std::vector<int8_t> dense_;           // All: indexed by mask
    std::vector<uint64_t> points_;        // MaxWeight/Explicit: sorted
    std::vector<int8_t> sparse_vals_;     // parallel to points_
};

// Arity cap for operations that walk a full 2^n table.
inline constexpr int kTableArityCap = 24;

// OR/AND/MAJ/PARITY with the standard -1 = TRUE semantics; MAJ on even arity
// breaks ties toward +1. CONST takes the output sign via const_sign.
BooleanFunction make_basic(FnKind kind, int n, int const_sign = +1);

// (f o g)(x_1..x_M) = f(g(x_1),...,g(x_M)); block i occupies variable indices
// [(i-1)*m, i*m). Both functions must be total.
BooleanFunction block_compose(const BooleanFunction& f, const BooleanFunction& g);

// SURJ_{N,R}: input is N blocks of log2(R) bits, block j decoding s_j in
// [R] = {1..R} as (big-endian binary value)+1; output -1 iff every element of
// [R] occurs. R must be a power of two >= 2 and N >= R.
BooleanFunction surjectivity(int N, int R);

int surj_block_decode(uint64_t mask, int block, int width);  // s_j in [1..2^width]

// Monotone DNF: each clause is a variable mask; a clause fires iff every one
// of its variables is -1. Empty clause list is rejected where it matters.
struct MonotoneDnf {
    int n = 0;
    std::vector<uint64_t> clauses;
};

int eval_monotone_dnf(const MonotoneDnf& f, uint64_t x);

// The doubled-input function f* built from a monotone DNF for f: inputs come
// in pairs (x_i, x_{n+i}); a pair with exactly one -1 selects a literal value,
// anything else is undefined; f* is -1 iff some clause is satisfied by the
// selected values and no pair is (+1,+1). Satisfies f*(y,-y) = f(y).
BooleanFunction fstar(const MonotoneDnf& f);

// Certificate complexity by exhaustive subset search, increasing size then
// lexicographic, first witness kept.
struct CertificateReport {
    int n = 0;
    std::vector<int> size_at;          // indexed by input mask
    std::vector<uint64_t> witness_at;  // fixed-coordinate set per input
    int c_all = 0;
    int c_minus = 0;  // max over f^{-1}(-1)
    int c_plus = 0;   // max over f^{-1}(+1)
};

CertificateReport certificate_complexity(const BooleanFunction& f, int brute_cap = 16);

// Structure of the certificates of fstar(f): for each input the paper-shaped
// certificate (a satisfied clause's pairs plus the -1 coordinates, a (+1,+1)
// pair, or all -1 coordinates), verified by brute force, with the number of
// +1 entries it reveals. No exponent is asserted; callers read the counts.
struct FstarCertificateReport {
    int n = 0;                         // fstar arity is 2n
    bool all_verified = true;          // every constructed set is a certificate
    std::vector<int> plus_entries_at;  // per input: +1 entries in the certificate
    int max_plus_entries = 0;
};
FstarCertificateReport fstar_certificate_structure(const MonotoneDnf& f);

// A list s in [R]_0^N together with its indicator table Y(s) (one -1 per
// column) and histogram Z(s) (sums to N). Y is laid out row-major over
// (R+1)*N variables: entry (i,j) at bit i*N + (j-1), rows i = 0..R.
struct EncodingState {
    int N = 0;
    int R = 0;
    std::vector<int> s;   // values in [0..R]
    uint64_t y = 0;       // Y(s) over (R+1)*N vars
    std::vector<int> z;   // Z(s), size R+1
};

EncodingState make_encoding_state(int N, int R, const std::vector<int>& s);

}  // namespace adeg

#endif
