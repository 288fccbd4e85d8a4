#include "adeg/symprofile.hpp"

#include <stdexcept>

namespace adeg {

Rat SymmetricProfile::l1() const {
    Rat s = 0;
    for (const Rat& v : values) s += rat_abs(v);
    return s;
}

SymmetricProfile SymmetricProfile::normalized_copy() const {
    Rat norm = l1();
    if (norm == 0) throw std::domain_error("SymmetricProfile: cannot normalize zero profile");
    SymmetricProfile out = *this;
    for (Rat& v : out.values) v /= norm;
    out.normalized = true;
    return out;
}

Rat SymmetricProfile::power_moment(int j) const {
    Rat s = 0;
    for (int t = 0; t <= k; ++t) {
        if (values[t] == 0) continue;
        s += values[t] * Rat(int_pow(Int(t), static_cast<unsigned long>(j)));
    }
    return s;
}

Rat SymmetricProfile::or_correlation() const {
    Rat s = values[0];
    for (int t = 1; t <= k; ++t) s -= values[t];
    return s;
}

std::pair<SymmetricProfile, SymmetricProfile> SymmetricProfile::sign_split() const {
    SymmetricProfile pos(k, std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0)));
    SymmetricProfile neg = pos;
    for (int t = 0; t <= k; ++t) {
        if (values[t] > 0)
            pos.values[t] = values[t];
        else if (values[t] < 0)
            neg.values[t] = -values[t];
    }
    return {pos, neg};
}

SymmetricProfile minsky_papert_symmetrize(const MultilinearPolynomial& p) {
    const int n = p.n();
    std::vector<Rat> layer_sum(static_cast<size_t>(n) + 1, Rat(0));
    for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) layer_sum[weight(x)] += p.eval(x);
    for (int t = 0; t <= n; ++t)
        layer_sum[t] /= Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(t)));
    return SymmetricProfile(n, std::move(layer_sum));
}

bool profile_fits_degree(const SymmetricProfile& q, int d) {
    if (d >= q.k) return true;
    std::vector<Rat> diff = q.values;
    for (int order = 1; order <= d + 1; ++order) {
        for (size_t i = 0; i + order < q.values.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.resize(q.values.size() - order);
    }
    for (const Rat& v : diff)
        if (v != 0) return false;
    return true;
}

int profile_degree(const SymmetricProfile& q) {
    for (int d = 0; d <= q.k; ++d)
        if (profile_fits_degree(q, d)) return d;
    return q.k;
}

}  // namespace adeg
