#include "adeg/dualcraft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adeg {

DualWitness dual_block_compose(const DualWitness& outer, const DualWitness& inner,
                               size_t support_cap) {
    if (outer.is_zero() || inner.is_zero())
        throw std::invalid_argument("dual_block_compose: witnesses must not be identically zero");
    const int M = outer.n(), m = inner.n();
    if (M * m > 63) throw std::invalid_argument("dual_block_compose: composed arity too large");

    std::vector<std::pair<uint64_t, Rat>> supp(inner.entries().begin(), inner.entries().end());
    double combos = 1;
    for (int i = 0; i < M; ++i) combos *= static_cast<double>(supp.size());
    if (combos > static_cast<double>(support_cap))
        throw std::invalid_argument("dual_block_compose: support would exceed the cap");

    const Rat two_m = Rat(int_pow(Int(2), static_cast<unsigned long>(M)));
    DualWitness out(M * m);
    std::vector<size_t> idx(static_cast<size_t>(M), 0);
    while (true) {
        uint64_t x = 0, z = 0;
        Rat prod = 1;
        for (int i = 0; i < M; ++i) {
            const auto& [mask, val] = supp[idx[i]];
            x |= mask << (i * m);
            if (sign_of(val) == -1) z |= uint64_t(1) << i;
            prod *= rat_abs(val);
        }
        Rat o = outer.at(z);
        if (o != 0 && prod != 0) out.set(x, two_m * o * prod);
        int pos = 0;
        while (pos < M && ++idx[pos] == supp.size()) idx[pos++] = 0;
        if (pos == M) break;
    }
    return out;
}

std::vector<int> omega_support(int k, int c) {
    std::vector<int> t = {1, 2};
    for (int i = 0; i * i * c <= k; ++i) t.push_back(c * i * i);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

SymmetricProfile omega_profile(int k, int c) {
    if (c < 1) throw std::invalid_argument("omega_profile: c must be positive");
    if (k < c) throw std::invalid_argument("omega_profile: requires k >= c");
    int m = 0;
    while ((m + 1) * (m + 1) * c <= k) ++m;

    std::vector<bool> in_T(static_cast<size_t>(k) + 1, false);
    for (int t : omega_support(k, c)) in_T[static_cast<size_t>(t)] = true;

    SymmetricProfile w(k, std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0)));
    const Rat inv_kfact = Rat(1) / Rat(factorial(static_cast<unsigned long>(k)));
    for (int t = 0; t <= k; ++t) {
        if (!in_T[static_cast<size_t>(t)]) continue;  // the product vanishes off T anyway
        Int prod = 1;
        for (int r = 0; r <= k; ++r) {
            if (in_T[static_cast<size_t>(r)]) continue;
            prod *= Int(t - r);
        }
        Rat val = Rat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(t))) *
                  Rat(prod) * inv_kfact;
        if ((t + (k - m)) % 2 != 0) val = -val;
        w.values[static_cast<size_t>(t)] = val;
    }
    return w;
}

DualWitness or_dual_witness_capped(int N, int k, int c) {
    if (k > N) throw std::invalid_argument("or_dual_witness_capped: requires k <= N");
    if (N > 63) throw std::invalid_argument("or_dual_witness_capped: N too large");
    SymmetricProfile w = omega_profile(k, c).normalized_copy();

    Int support_size = 0;
    for (int t : omega_support(k, c))
        support_size += binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(t));
    if (support_size > Int(1) << 21)
        throw std::invalid_argument("or_dual_witness_capped: support too large to materialize");

    DualWitness psi(N);
    for (int t : omega_support(k, c)) {
        if (w.at(t) == 0) continue;
        Rat v = w.at(t) /
                Rat(binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(t)));
        for (uint64_t x : masks_of_weight(N, t)) psi.set(x, v);
    }
    return psi;
}

bool symmetric_witness_orthogonal_below(const SymmetricProfile& w, int N, int d) {
    // sum over a layer of chi_S depends only on s = |S|:
    //   K_s(t) = sum_j (-1)^j C(s,j) C(N-s, t-j)
    for (int s = 0; s < d; ++s) {
        Rat acc = 0;
        for (int t = 0; t <= w.k; ++t) {
            if (w.at(t) == 0) continue;
            Int layer = 0;
            for (int j = 0; j <= std::min(s, t); ++j) {
                Int term = binomial(static_cast<unsigned long>(s), static_cast<unsigned long>(j)) *
                           binomial(static_cast<unsigned long>(N - s),
                                    static_cast<unsigned long>(t - j));
                layer += (j % 2 == 0) ? term : -term;
            }
            acc += w.at(t) * Rat(layer) /
                   Rat(binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(t)));
        }
        if (acc != 0) return false;
    }
    return true;
}

DualWitness and_amplifier(int M) {
    if (M < 1) throw std::invalid_argument("and_amplifier: M must be >= 1");
    if (M > 20) throw std::invalid_argument("and_amplifier: M too large");
    auto and_m = make_basic(FnKind::And, M);
    const uint64_t full = (uint64_t(1) << M) - 1;
    const uint64_t npts = uint64_t(1) << M;

    // Variables: u_z for all z, v_z only where AND(z) = -1 (the single
    // all-TRUE point); everywhere else Psi >= 0 is required.
    std::vector<int> ucol(npts), vcol(npts, -1);
    int nvars = 0;
    for (uint64_t z = 0; z < npts; ++z) {
        ucol[z] = nvars++;
        if (z == full) vcol[z] = nvars++;
    }
    LpProblem lp;
    lp.num_vars = nvars;
    lp.maximize = true;
    lp.objective.assign(nvars, Rat(0));
    for (uint64_t z = 0; z < npts; ++z) {
        Rat fz(and_m.value(z));
        lp.objective[ucol[z]] = fz;
        if (vcol[z] >= 0) lp.objective[vcol[z]] = -fz;
    }
    {
        std::vector<Rat> norm(nvars, Rat(1));
        lp.add_row(std::move(norm), Rel::Eq, Rat(1));
    }
    {
        std::vector<Rat> ones(nvars, Rat(1));
        for (uint64_t z = 0; z < npts; ++z)
            if (vcol[z] >= 0) ones[vcol[z]] = -1;
        lp.add_row(std::move(ones), Rel::Eq, Rat(0));  // <Psi, 1_M> = 0
    }
    LpSolution stage1 = solve_lp(lp);
    if (stage1.status != LpStatus::Optimal)
        throw LpFailure(stage1.status, "and_amplifier: stage-1 program did not solve");

    // Tie-break among the optima: pin the correlation, maximize Psi(1^M).
    // The optimum is the witness supported on the two constant patterns,
    // which is the one whose composed conclusions certify.
    LpProblem lp2 = lp;
    lp2.add_row(lp.objective, Rel::Eq, stage1.objective);
    lp2.objective.assign(nvars, Rat(0));
    lp2.objective[ucol[0]] = 1;
    LpSolution stage2 = solve_lp(lp2);
    if (stage2.status != LpStatus::Optimal)
        throw LpFailure(stage2.status, "and_amplifier: stage-2 program did not solve");

    DualWitness psi(M);
    for (uint64_t z = 0; z < npts; ++z) {
        Rat v = stage2.x[ucol[z]];
        if (vcol[z] >= 0) v -= stage2.x[vcol[z]];
        psi.set(z, v);
    }
    if (psi.l1() != 1) throw std::logic_error("and_amplifier: norm drifted off 1");
    return psi;
}

AmplifyInstance certify_amplification(int M, const BooleanFunction& f, const DualWitness& psi) {
    if (!f.is_total()) throw std::invalid_argument("certify_amplification: f must be total");
    if (psi.l1() != 1) throw std::invalid_argument("certify_amplification: psi must have unit norm");
    if (psi.correlation(f) < Rat(1, 3))
        throw std::invalid_argument("certify_amplification: psi must correlate >= 1/3 with f");
    for (const auto& [x, v] : psi.entries())
        if (f.value(x) == 1 && v < 0)
            throw std::invalid_argument("certify_amplification: psi is not one-sided for f");

    AmplifyInstance inst;
    inst.M = M;
    DualWitness big = dual_block_compose(and_amplifier(M), psi);
    auto g = block_compose(make_basic(FnKind::And, M), f);
    inst.correlation = big.correlation(g);
    inst.target = Rat(1) - rat_pow(Rat(2, 3), static_cast<unsigned long>(M));
    inst.meets_target = inst.correlation >= inst.target;
    inst.unit_norm = big.l1() == 1;
    inst.composed = std::move(big);
    return inst;
}

ZetaReport build_zeta(const DualWitness& phi, const DualWitness& Psi, const DualWitness& psi,
                      const BooleanFunction* G) {
    ZetaReport rep;
    DualWitness left = dual_block_compose(dual_block_compose(phi, Psi), psi);
    DualWitness right = dual_block_compose(phi, dual_block_compose(Psi, psi));
    rep.associativity_ok = left.entries() == right.entries();
    rep.zeta = std::move(right);
    rep.unit_norm = rep.zeta.l1() == 1;
    rep.certified_phd = rep.zeta.pure_high_degree(rep.zeta.n());
    if (G != nullptr) {
        rep.correlation = rep.zeta.correlation(*G);
        rep.correlation_checked = true;
    }
    return rep;
}

namespace {

// Truncated convolution: bucket cap+1 holds everything above the cap.
std::vector<Rat> convolve_capped(const std::vector<Rat>& dist, const SymmetricProfile& w,
                                 int cap) {
    std::vector<Rat> out(static_cast<size_t>(cap) + 2, Rat(0));
    for (int s = 0; s < static_cast<int>(dist.size()); ++s) {
        if (dist[s] == 0) continue;
        for (int t = 0; t <= w.k; ++t) {
            if (w.at(t) == 0) continue;
            int idx = std::min(s + t, cap + 1);
            out[idx] += dist[s] * w.at(t);
        }
    }
    return out;
}

}  // namespace

Rat mass_outside_cap(const DualWitness& Phi, const SymmetricProfile& w, int block_arity,
                     int cap) {
    if (cap < 0) throw std::invalid_argument("mass_outside_cap: negative cap");
    if (w.k > block_arity)
        throw std::invalid_argument("mass_outside_cap: profile exceeds the block arity");
    const int R = Phi.n();
    auto [wpos, wneg] = w.sign_split();
    const Rat two_r = Rat(int_pow(Int(2), static_cast<unsigned long>(R)));
    Rat total = 0;
    for (const auto& [z, pv] : Phi.entries()) {
        std::vector<Rat> dist(1, Rat(1));
        for (int i = 0; i < R; ++i)
            dist = convolve_capped(dist, ((z >> i) & 1) ? wneg : wpos, cap);
        if (dist[static_cast<size_t>(cap) + 1] != 0)
            total += rat_abs(pv) * dist[static_cast<size_t>(cap) + 1];
    }
    return two_r * total;
}

Rat profile_tail_mass(const std::vector<SymmetricProfile>& etas, int cap) {
    std::vector<Rat> dist(1, Rat(1));
    for (const auto& eta : etas) dist = convolve_capped(dist, eta, cap);
    return dist[static_cast<size_t>(cap) + 1];
}

TailBoundReport tail_product_bound(int k, int R, const std::vector<SymmetricProfile>& etas,
                                   int cap) {
    if (static_cast<int>(etas.size()) != R)
        throw std::invalid_argument("tail_product_bound: need exactly R profiles");
    if (k < 1 || R < 1 || cap < 1) throw std::invalid_argument("tail_product_bound: bad sizes");
    for (const auto& eta : etas) {
        if (eta.k != k) throw std::invalid_argument("tail_product_bound: profile index != k");
        Rat sum = 0;
        for (int r = 0; r <= k; ++r) {
            if (eta.at(r) < 0)
                throw std::invalid_argument("tail_product_bound: profiles must be nonnegative");
            if (eta.at(r) * Rat((r + 1) * (r + 1)) > 5)
                throw std::invalid_argument("tail_product_bound: layer cap 5/(r+1)^2 violated");
            sum += eta.at(r);
        }
        if (sum > Rat(1, 2))
            throw std::invalid_argument("tail_product_bound: profile mass exceeds 1/2");
    }

    TailBoundReport rep;
    rep.lhs = profile_tail_mass(etas, cap);
    // lhs <= 2^-R (2NR)^{-2R/k}  iff  lhs^k 2^{Rk} (2NR)^{2R} <= 1
    const Int base = Int(2) * Int(cap) * Int(R);
    Rat scaled = rat_pow(rep.lhs, static_cast<unsigned long>(k)) *
                 Rat(int_pow(Int(2), static_cast<unsigned long>(R) * k)) *
                 Rat(int_pow(base, 2 * static_cast<unsigned long>(R)));
    rep.holds = scaled <= 1;
    rep.rhs_expr = "2^-" + std::to_string(R) + " * (" + base.get_str() + ")^(-2*" +
                   std::to_string(R) + "/" + std::to_string(k) + ")";
    rep.rhs_approx = std::pow(2.0, -R) * std::pow(static_cast<double>(2.0 * cap * R),
                                                  -2.0 * R / static_cast<double>(k));
    return rep;
}

DualWitness eraser_witness(uint64_t y, int D, int m) {
    if (D < 0 || D > m - 1) throw std::invalid_argument("eraser_witness: need 0 <= D <= m-1");
    if (weight(y) <= D) throw std::invalid_argument("eraser_witness: need |y| > D");
    WitnessLp spec;
    spec.n = m;
    spec.points = masks_up_to_weight(m, D);
    spec.pinned = {{y, Rat(1)}};
    spec.orthogonal_monomials = masks_up_to_weight(m, D - 1);
    if (D == 0) spec.orthogonal_monomials.clear();
    spec.l1_objective_region = spec.points;
    return min_l1_witness(spec);
}

DualWitness correction_witness(const DualWitness& zeta, int cap, int D) {
    const int m = zeta.n();
    DualWitness nu(m);
    for (const auto& [y, v] : zeta.entries()) {
        if (weight(y) <= cap) continue;
        DualWitness phi_y = eraser_witness(y, D, m);
        phi_y *= v;
        for (const auto& [x, pv] : phi_y.entries()) nu.set(x, nu.at(x) + pv);
    }
    return nu;
}

DualWitness apply_correction(const DualWitness& zeta, const DualWitness& nu) {
    DualWitness diff = zeta;
    diff -= nu;
    if (diff.is_zero())
        throw std::domain_error("apply_correction: zeta equals nu everywhere");
    return diff.normalized();
}

Rat euler_upper_bound() { return Rat(Int("27182818285"), Int("10000000000")); }

namespace {

long ceil_log2(long x) {
    long lg = 0;
    while ((long(1) << lg) < x) ++lg;
    return lg;
}

}  // namespace

AmplificationParams AmplificationParams::from(long n, long d) {
    if (n < 2 || d < 1 || d > n)
        throw std::invalid_argument("AmplificationParams: need n >= 2, 1 <= d <= n");
    AmplificationParams p;
    p.n = n;
    p.d = d;
    long c = 0;
    while ((c + 1) * (c + 1) * (c + 1) * d <= n) ++c;  // floor((n/d)^(1/3))
    p.k = c * c;
    p.c1 = Rat(1, 5);
    p.D = p.c1 * Rat(c) * Rat(d);  // c1 sqrt(k) d with sqrt(k) = c exactly
    p.R = 10 * n * ceil_log2(n);
    p.c2 = Rat(160) * Rat(2) * euler_upper_bound();  // 160 * C_up * e_up, C_up = 2
    const long lgR = p.R >= 1 ? ceil_log2(p.R) : 0;
    Rat target = p.c2 * Rat(p.R) * Rat(lgR * lgR);
    Int num = target.get_num(), den = target.get_den();
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    p.N = q;
    p.m = Int(p.R) * p.N;
    return p;
}

long AmplificationParams::min_int_phd() const {
    Int num = D.get_num(), den = D.get_den();
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q.get_si();
}

bool binomial_bound_holds(long n, long k) {
    if (k < 1 || k > n) throw std::invalid_argument("binomial_bound_holds: need 1 <= k <= n");
    Rat lhs(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    Rat rhs = rat_pow(euler_upper_bound() * Rat(n) / Rat(k), static_cast<unsigned long>(k));
    return lhs <= rhs;
}

Rat inv_square_partial_sum(long m, long M) {
    if (m < 1 || M < m) throw std::invalid_argument("inv_square_partial_sum: need 1 <= m <= M");
    Rat s = 0;
    for (long r = m; r <= M; ++r) s += Rat(1) / Rat(Int(r) * Int(r));
    return s;
}

bool alternating_binomial_vanishes(int k, int j) {
    Rat acc = 0;
    for (int t = 0; t <= k; ++t) {
        Rat term = Rat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(t))) *
                   Rat(int_pow(Int(t), static_cast<unsigned long>(j)));
        acc += (t % 2 == 0) ? term : -term;
    }
    return acc == 0;
}

}  // namespace adeg
