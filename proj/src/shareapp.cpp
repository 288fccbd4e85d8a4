#include "adeg/shareapp.hpp"

#include <random>
#include <stdexcept>

namespace adeg {

SharingScheme scheme_from_witness(const BooleanFunction& f, const DualWitness& psi) {
    if (!f.is_total()) throw std::invalid_argument("scheme_from_witness: f must be total");
    if (psi.n() != f.n()) throw std::invalid_argument("scheme_from_witness: arity mismatch");
    if (psi.l1() != 1) throw std::invalid_argument("scheme_from_witness: psi must have unit norm");
    if (psi.inner_monomial(0) != 0)
        throw std::invalid_argument("scheme_from_witness: psi must be orthogonal to constants");
    SharingScheme s;
    s.f = f;
    s.psi = psi;
    for (const auto& [x, v] : psi.entries()) {
        if (v > 0)
            s.dist_plus.emplace_back(x, 2 * v);
        else
            s.dist_minus.emplace_back(x, -2 * v);
    }
    Rat total_plus = 0, total_minus = 0;
    for (const auto& [x, p] : s.dist_plus) total_plus += p;
    for (const auto& [x, p] : s.dist_minus) total_minus += p;
    if (total_plus != 1 || total_minus != 1)
        throw std::invalid_argument("scheme_from_witness: sign parts are not balanced halves");
    return s;
}

namespace {

uint64_t sample_point(const std::vector<std::pair<uint64_t, Rat>>& dist, uint64_t draw) {
    // r = draw / 2^64 as an exact rational; pick the first point whose
    // cumulative probability exceeds r.
    Rat r = Rat(Int(draw)) / Rat(int_pow(Int(2), 64));
    Rat cum = 0;
    for (const auto& [x, p] : dist) {
        cum += p;
        if (cum > r) return x;
    }
    return dist.back().first;  // unreachable for a proper distribution
}

}  // namespace

ShareBundle split(int secret, const SharingScheme& scheme, uint64_t seed) {
    if (secret != 1 && secret != -1)
        throw std::invalid_argument("split: secret must be +1 or -1");
    const auto& dist = secret == 1 ? scheme.dist_plus : scheme.dist_minus;
    if (dist.empty()) throw std::invalid_argument("split: empty share distribution");
    std::mt19937_64 rng(seed);
    ShareBundle b;
    b.secret = secret;
    b.seed = seed;
    b.shares = sample_point(dist, rng());
    return b;
}

int reconstruct(const ShareBundle& bundle, const BooleanFunction& f) {
    return f.value(bundle.shares);
}

Rat advantage(const SharingScheme& scheme) {
    Rat p_plus = 0, p_minus = 0;
    for (const auto& [x, p] : scheme.dist_plus)
        if (scheme.f.value(x) == 1) p_plus += p;
    for (const auto& [x, p] : scheme.dist_minus)
        if (scheme.f.value(x) == 1) p_minus += p;
    return p_plus - p_minus;
}

AuditResult secrecy_audit(const SharingScheme& scheme, int d) {
    if (d > scheme.f.n() + 1) throw std::invalid_argument("secrecy_audit: d exceeds arity");
    AuditResult res;
    res.d = d;
    for (int size = 0; size < d; ++size) {
        for (uint64_t S : masks_of_weight(scheme.f.n(), size)) {
            res.subsets_checked.push_back(S);
            std::map<uint64_t, Rat> marg_plus, marg_minus;
            for (const auto& [x, p] : scheme.dist_plus) marg_plus[x & S] += p;
            for (const auto& [x, p] : scheme.dist_minus) marg_minus[x & S] += p;
            bool equal = true;
            std::map<uint64_t, std::pair<Rat, Rat>> merged;
            for (const auto& [a, p] : marg_plus) merged[a].first = p;
            for (const auto& [a, p] : marg_minus) merged[a].second = p;
            for (const auto& [a, pq] : merged)
                if (pq.first != pq.second) equal = false;
            if (!equal && res.pass) {
                res.pass = false;
                res.worst_subset = S;
                for (const auto& [a, pq] : merged)
                    res.failure_table.push_back(MarginalRow{a, pq.first, pq.second});
            }
        }
    }
    return res;
}

}  // namespace adeg
