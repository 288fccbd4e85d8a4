#ifndef ADEG_SHAREAPP_HPP
#define ADEG_SHAREAPP_HPP

#include <cstdint>
#include <vector>

#include "adeg/boolfn.hpp"
#include "adeg/witness.hpp"

namespace adeg {

// Secret sharing driven by a dual witness: psi = mu_+ - mu_- with
// ||mu_+|| = ||mu_-|| = 1/2, shares drawn from 2 mu_b, reconstruction by
// applying f to the shares. Distributions are exact rational tables.
struct SharingScheme {
    BooleanFunction f;
    DualWitness psi;
    // 2*mu_{+1} and 2*mu_{-1}, sorted by point; probabilities sum to 1
    std::vector<std::pair<uint64_t, Rat>> dist_plus;
    std::vector<std::pair<uint64_t, Rat>> dist_minus;
};

// Requires ||psi||_1 = 1 and <psi, 1> = 0 (pure high degree >= 1).
SharingScheme scheme_from_witness(const BooleanFunction& f, const DualWitness& psi);

struct ShareBundle {
    int secret = 0;       // +1 or -1
    uint64_t shares = 0;  // point of {-1,1}^n
    uint64_t seed = 0;
};

// Draws shares from 2*mu_b by exact cumulative inversion of one 64-bit draw
// from a seeded deterministic generator.
ShareBundle split(int secret, const SharingScheme& scheme, uint64_t seed);

int reconstruct(const ShareBundle& bundle, const BooleanFunction& f);

// Pr_{2mu_+}[f=1] - Pr_{2mu_-}[f=1]; equals <psi, f> exactly.
Rat advantage(const SharingScheme& scheme);

// Compares the exact marginals of the two share distributions on every
// subset of fewer than d parties.
struct MarginalRow {
    uint64_t assignment = 0;  // restricted to the subset's bits
    Rat p_plus;
    Rat p_minus;
};
struct AuditResult {
    bool pass = true;
    int d = 0;
    std::vector<uint64_t> subsets_checked;
    uint64_t worst_subset = 0;
    std::vector<MarginalRow> failure_table;  // marginals on the worst subset
};
AuditResult secrecy_audit(const SharingScheme& scheme, int d);

}  // namespace adeg

#endif
