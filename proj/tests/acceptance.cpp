// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// exact arithmetic throughout. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "adeg/degree.hpp"
#include "adeg/dualcraft.hpp"
#include "adeg/reduction.hpp"
#include "adeg/shareapp.hpp"

using namespace adeg;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    double budget_seconds;  // 0 = no stated budget
    std::chrono::steady_clock::time_point start;
    int local_failures = 0;
    std::vector<std::string> notes;

    explicit Criterion(std::string l, double budget = 0)
        : label(std::move(l)), budget_seconds(budget), start(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++local_failures;
            if (notes.size() < 6) notes.push_back(what);
        }
    }

    ~Criterion() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = budget_seconds == 0 || secs <= budget_seconds;
        if (!in_budget) {
            ++local_failures;
            notes.push_back("runtime " + std::to_string(secs) + "s over budget");
        }
        bool ok = local_failures == 0;
        std::printf("[%s] %s (%.2fs)\n", ok ? "PASS" : "FAIL", label.c_str(), secs);
        for (const auto& n : notes) std::printf("       - %s\n", n.c_str());
        if (!ok) ++g_failures;
    }
};

BooleanFunction random_total(int n, std::mt19937_64& rng) {
    std::vector<int8_t> table(size_t(1) << n);
    for (auto& v : table) v = (rng() % 2) ? int8_t(1) : int8_t(-1);
    return BooleanFunction::total(n, [&](uint64_t m) { return int(table[m]); });
}

DualWitness random_witness(int n, std::mt19937_64& rng, bool unit_norm = true) {
    DualWitness w(n);
    while (w.is_zero()) {
        for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) {
            if (rng() % 3 == 0) continue;
            int num = static_cast<int>(rng() % 19) - 9;
            if (num != 0) w.set(x, rat_frac(num, 1 + static_cast<long>(rng() % 7)));
        }
    }
    return unit_norm ? w.normalized() : w;
}

DualWitness random_balanced_witness(int n, std::mt19937_64& rng) {
    while (true) {
        DualWitness w = random_witness(n, rng, false);
        Rat mean = w.inner_monomial(0) / Rat(Int(1) << n);
        DualWitness centered(n);
        for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) centered.set(x, w.at(x) - mean);
        if (!centered.is_zero()) return centered.normalized();
    }
}

// Brute-force verification of a degree certificate, independent of the
// solver path: evaluates the polynomial at every domain point and checks the
// witness by direct summation over monomials.
bool certificate_verifies(const BooleanFunction& f, const LpCertificate& cert) {
    Rat worst = 0;
    for (uint64_t x : f.domain_points()) {
        Rat e = rat_abs(cert.primal_poly.eval(x) - Rat(f.value(x)));
        if (e > worst) worst = e;
    }
    if (worst != cert.primal_eps) return false;
    if (cert.primal_poly.degree() > cert.degree_bound) return false;
    if (!cert.witness.is_zero()) {
        if (cert.witness.l1() != 1) return false;
        if (!cert.witness.orthogonal_below(cert.degree_bound + 1)) return false;
        if (cert.witness.correlation(f) != cert.dual_correlation) return false;
    }
    return cert.strong_duality;
}

// Degree by certificate-verified grid search over the (d, eps) ladder.
int verified_ladder_degree(const BooleanFunction& f, const Rat& eps, bool& all_verified) {
    for (int d = 0; d <= f.n(); ++d) {
        auto cert = certify_degree(f, d);
        if (!certificate_verifies(f, cert)) all_verified = false;
        if (cert.primal_eps <= eps) return d;
    }
    all_verified = false;
    return f.n() + 1;
}

Rat mass_outside_brute(const DualWitness& Phi, const SymmetricProfile& w, int B, int cap) {
    const int R = Phi.n();
    Rat total = 0;
    const Rat two_r = Rat(int_pow(Int(2), static_cast<unsigned long>(R)));
    for (uint64_t x = 0; x < (uint64_t(1) << (R * B)); ++x) {
        if (weight(x) <= cap) continue;
        Rat prod = 1;
        uint64_t z = 0;
        for (int i = 0; i < R; ++i) {
            int t = weight((x >> (i * B)) & ((uint64_t(1) << B) - 1));
            Rat psi = t <= w.k ? w.at(t) / Rat(binomial(B, t)) : Rat(0);
            prod *= rat_abs(psi);
            if (sign_of(psi) == -1) z |= uint64_t(1) << i;
        }
        if (prod != 0) total += rat_abs(two_r * Phi.at(z) * prod);
    }
    return total;
}

void criterion_1_strong_duality() {
    Criterion c("1. strong duality on 100 seeded random functions", 60);
    std::mt19937_64 rng(0xADE6001);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto f = random_total(n, rng);
        for (int d = 1; d <= n; ++d) {
            Rat primal = eps_opt(f, d - 1).eps;
            auto dual = dual_witness(f, d);
            c.require(primal == dual.correlation,
                      "mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    }
}

void criterion_2_known_values() {
    Criterion c("2. known OR/PARITY degree values vs certificate-verified grid search");
    bool verified = true;
    for (int n = 1; n <= 4; ++n) {
        auto f = make_basic(FnKind::Or, n);
        int lp_deg = approx_degree(f, Rat(1, 3)).degree;
        int grid_deg = verified_ladder_degree(f, Rat(1, 3), verified);
        c.require(lp_deg == grid_deg, "OR_" + std::to_string(n) + " ladder disagrees");
    }
    c.require(verified, "a degree certificate failed independent verification");
    c.require(eps_opt(make_basic(FnKind::Or, 2), 1).eps == Rat(1, 2), "eps_opt(OR_2,1) != 1/2");
    c.require(approx_degree(make_basic(FnKind::Or, 2), Rat(1, 3)).degree == 2,
              "adeg(OR_2,1/3) != 2");
    for (int n = 1; n <= 3; ++n)
        c.require(approx_degree(make_basic(FnKind::Parity, n), Rat(2, 3)).degree == n,
                  "adeg(PARITY_" + std::to_string(n) + ",2/3) != n");
}

void criterion_3_omega_suite() {
    Criterion c("3. omega profile satisfies its five layer properties", 10);
    for (int k : {25, 36, 49, 100}) {
        auto raw = omega_profile(k);
        auto w = raw.normalized_copy();
        c.require(w.l1() == 1, "norm at k=" + std::to_string(k));
        c.require(w.or_correlation() >= Rat(1, 3), "correlation at k=" + std::to_string(k));
        c.require(raw.or_correlation() * 3 >= raw.l1(),
                  "relative correlation at k=" + std::to_string(k));
        for (int j = 0; 25 * j * j < k; ++j)
            c.require(w.power_moment(j) == 0,
                      "moment j=" + std::to_string(j) + " at k=" + std::to_string(k));
        c.require(w.at(0) > 0, "w(0) sign at k=" + std::to_string(k));
        for (int t = 0; t <= k; ++t)
            c.require(rat_abs(w.at(t)) * Rat((t + 1) * (t + 1)) <= 5,
                      "layer decay at k=" + std::to_string(k) + " t=" + std::to_string(t));
    }
    auto w25 = omega_profile(25);
    c.require(w25.at(0) == Rat(1, 50), "w25(0)");
    c.require(w25.at(1) == Rat(-1, 24), "w25(1)");
    c.require(rat_abs(w25.at(1)) / w25.at(0) == Rat(25, 12), "|w(1)|/w(0) at k=25");
    c.require(omega_support(25) == std::vector<int>{0, 1, 2, 25}, "support at k=25");
}

void criterion_4_dual_block_laws() {
    Criterion c("4. dual block laws on 50 seeded pairs and triples", 120);
    std::mt19937_64 rng(0xADE6004);
    for (int trial = 0; trial < 50; ++trial) {
        int M = 1 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 3);
        auto outer = random_witness(M, rng);
        auto inner = random_balanced_witness(m, rng);
        auto comp = dual_block_compose(outer, inner);
        c.require(comp.l1() == 1, "norm preservation, trial " + std::to_string(trial));
        int D = outer.pure_high_degree(M);
        int d = inner.pure_high_degree(m);
        c.require(comp.orthogonal_below(D * d),
                  "phd multiplicativity, trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 50; ++trial) {
        int a = 1 + static_cast<int>(rng() % 2);
        int b = 1 + static_cast<int>(rng() % 2);
        int cc = 1 + static_cast<int>(rng() % 2);
        auto za = random_witness(a, rng, false);
        auto zb = random_witness(b, rng, false);
        auto zc = random_witness(cc, rng, false);
        auto ab = dual_block_compose(za, zb);
        auto bc = dual_block_compose(zb, zc);
        if (ab.is_zero() || bc.is_zero()) continue;
        c.require(dual_block_compose(ab, zc).entries() == dual_block_compose(za, bc).entries(),
                  "associativity, trial " + std::to_string(trial));
    }
}

void criterion_5_amplification() {
    Criterion c("5. amplification conclusions for M in {1,2,3}, f in {OR_2, OR_3}");
    for (int M = 1; M <= 3; ++M) {
        auto Psi = and_amplifier(M);
        c.require(Psi.inner_monomial(0) == 0, "amplifier unbalanced at M=" + std::to_string(M));
        for (int nf : {2, 3}) {
            auto f = make_basic(FnKind::Or, nf);
            auto psi = one_sided_dual_witness(f, 2);
            c.require(psi.correlation >= Rat(1, 3), "one-sided correlation below 1/3");
            auto inst = certify_amplification(M, f, psi.witness);
            c.require(inst.unit_norm, "composed norm");
            c.require(inst.meets_target, "amplified correlation at M=" + std::to_string(M) +
                                             " f=OR_" + std::to_string(nf));
            // correlation-loss bound on the same instance
            auto F = make_basic(FnKind::And, M);
            Rat eps = Psi.correlation(F);
            Rat delta = Rat(1) - psi.witness.correlation(f);
            auto composed_fn = block_compose(F, f);
            c.require(inst.composed.correlation(composed_fn) >= eps - Rat(4 * M) * delta,
                      "loss bound at M=" + std::to_string(M));
        }
    }
    // the loss bound on seeded generic instances
    std::mt19937_64 rng(0xADE6005);
    for (int trial = 0; trial < 20; ++trial) {
        int M = 1 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 3);
        auto F = random_total(M, rng);
        auto f = random_total(m, rng);
        auto Psi = random_witness(M, rng);
        auto psi = random_balanced_witness(m, rng);
        Rat eps = Psi.correlation(F);
        Rat delta = Rat(1) - psi.correlation(f);
        auto comp = dual_block_compose(Psi, psi);
        c.require(comp.correlation(block_compose(F, f)) >= eps - Rat(4 * M) * delta,
                  "generic loss bound, trial " + std::to_string(trial));
    }
}

void criterion_6_rs_suite() {
    Criterion c("6. point-erasure witnesses and the corrected final witness");
    for (int m = 1; m <= 6; ++m) {
        for (int D = 0; D <= std::min(2, m - 1); ++D) {
            for (uint64_t y = 0; y < (uint64_t(1) << m); ++y) {
                if (weight(y) <= D) continue;
                auto phi = eraser_witness(y, D, m);
                c.require(phi.at(y) == 1, "phi(y) != 1");
                bool clean = true;
                Rat low = 0;
                for (const auto& [x, v] : phi.entries()) {
                    if (weight(x) > D && x != y) clean = false;
                    if (weight(x) <= D) low += rat_abs(v);
                }
                c.require(clean, "support leaks above the cutoff");
                c.require(phi.orthogonal_below(D), "orthogonality below D");
                c.require(low <= Rat(int_pow(Int(2), D) * binomial(weight(y), D)),
                          "l1 bound 2^D C(|y|,D)");
            }
        }
    }
    // built pipeline instances
    struct Inst {
        DualWitness phi, psi;
        int M;
        int cap, D;
    };
    std::vector<Inst> insts;
    insts.push_back({dual_witness(make_basic(FnKind::Or, 2), 2).witness,
                     one_sided_dual_witness(make_basic(FnKind::Or, 2), 2).witness, 1, 2, 2});
    insts.push_back({dual_witness(make_basic(FnKind::Or, 1), 1).witness,
                     one_sided_dual_witness(make_basic(FnKind::Or, 2), 2).witness, 2, 2, 2});
    for (auto& inst : insts) {
        auto rep = build_zeta(inst.phi, and_amplifier(inst.M), inst.psi);
        c.require(rep.unit_norm, "zeta norm");
        auto nu = correction_witness(rep.zeta, inst.cap, inst.D);
        c.require(nu.orthogonal_below(inst.D), "nu orthogonality");
        bool agrees = true;
        for (const auto& [x, v] : rep.zeta.entries())
            if (weight(x) > inst.cap && nu.at(x) != v) agrees = false;
        c.require(agrees, "nu misses overweight mass");
        auto zh = apply_correction(rep.zeta, nu);
        c.require(zh.l1() == 1, "zetahat norm");
        c.require(zh.max_support_weight() <= inst.cap, "zetahat support");
        c.require(zh.orthogonal_below(inst.D), "zetahat phd");
    }
}

void criterion_7_mass_dp() {
    Criterion c("7. layered mass DP vs enumeration; numeric lemmas");
    std::mt19937_64 rng(0xADE6007);
    for (int R = 1; R <= 4; ++R) {
        for (int B = 1; R * B <= 12; ++B) {
            int k = 1 + static_cast<int>(rng() % B);
            auto Phi = random_witness(R, rng);
            SymmetricProfile w(k, std::vector<Rat>(static_cast<size_t>(k) + 1));
            for (int t = 0; t <= k; ++t)
                w.values[t] = rat_frac(static_cast<int>(rng() % 9) - 4,
                                       3 + static_cast<long>(rng() % 5));
            for (int cap = 1; cap <= std::min(R * k + 1, 12); ++cap)
                c.require(mass_outside_cap(Phi, w, B, cap) == mass_outside_brute(Phi, w, B, cap),
                          "mass DP mismatch at R=" + std::to_string(R) +
                              " B=" + std::to_string(B) + " cap=" + std::to_string(cap));
        }
    }
    // tail product DP vs direct enumeration
    for (int trial = 0; trial < 8; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        int R = 1 + static_cast<int>(rng() % 3);
        std::vector<SymmetricProfile> etas;
        for (int i = 0; i < R; ++i) {
            SymmetricProfile eta(k, std::vector<Rat>(static_cast<size_t>(k) + 1));
            Rat total = 0;
            for (int r = 0; r <= k; ++r) {
                eta.values[r] = Rat(1) / Rat((r + 1) * (r + 1) * 4);
                total += eta.values[r];
            }
            etas.push_back(eta);
        }
        for (int cap = 1; cap <= k * R; ++cap) {
            Rat direct = 0;
            std::vector<int> t(static_cast<size_t>(R), 0);
            while (true) {
                int sum = 0;
                for (int v : t) sum += v;
                if (sum > cap) {
                    Rat prod = 1;
                    for (int i = 0; i < R; ++i) prod *= etas[i].at(t[i]);
                    direct += prod;
                }
                int pos = 0;
                while (pos < R && ++t[pos] > k) t[pos++] = 0;
                if (pos == R) break;
            }
            auto rep = tail_product_bound(k, R, etas, cap);
            c.require(rep.lhs == direct, "tail DP mismatch");
        }
    }
    for (long n = 1; n <= 30; ++n)
        for (long k = 1; k <= n; ++k)
            c.require(binomial_bound_holds(n, k),
                      "binomial bound at n=" + std::to_string(n) + " k=" + std::to_string(k));
    for (long m = 1; m <= 100; ++m)
        for (long M : {m, 2 * m, m + 999})
            c.require(inv_square_partial_sum(m, M) <= Rat(2) / Rat(Int(m)),
                      "inverse-square tail at m=" + std::to_string(m));
    for (int k = 1; k <= 10; ++k)
        for (int j = 0; j < k; ++j)
            c.require(alternating_binomial_vanishes(k, j),
                      "alternating sum at k=" + std::to_string(k));
}

void criterion_8_reduction_chain() {
    Criterion c("8. symmetrization reduction chain over all desk sizes");
    std::mt19937_64 rng(0xADE6008);
    for (int N = 1; N <= 5; ++N) {
        for (int R = 1; (R + 1) * N <= 10; ++R) {
            std::vector<BooleanFunction> bases = {make_basic(FnKind::And, R),
                                                  make_basic(FnKind::Or, R),
                                                  make_basic(FnKind::Parity, R),
                                                  random_total(R, rng)};
            for (const auto& F : bases) {
                auto prop = g_prop(F, N);
                auto prom = restrict_promise(F, N);
                for (Rat eps : {Rat(1, 3), Rat(1, 2)}) {
                    int dp = approx_degree(prop.fn, eps).degree;
                    int dq = approx_degree(prom, eps).degree;
                    c.require(dp >= dq, "degree order at N=" + std::to_string(N) +
                                            " R=" + std::to_string(R));
                    // constructive direction: the optimal primal pushes through
                    auto primal = eps_opt(prop.fn, dq);
                    auto pt = ambainis_symmetrize(primal.poly, N, R, dq);
                    auto q = q_transform(pt, N, R);
                    c.require(q.degree() <= dq, "q degree grew");
                    Rat worst = 0;
                    for (uint64_t x : prom.domain_points()) {
                        Rat e = rat_abs(q.eval(x) - Rat(prom.value(x)));
                        if (e > worst) worst = e;
                    }
                    c.require(worst <= primal.eps, "chain error grew at N=" +
                                                       std::to_string(N) +
                                                       " R=" + std::to_string(R));
                }
            }
        }
    }
    // monotone doubling identity, exhaustive for 2m <= 12
    {
        auto gs = build_gstar(make_basic(FnKind::Or, 1), 1, surj_encode(1), nullptr, 1);
        auto g = build_g(gs);
        bool diag = true;
        for (uint64_t v = 0; v < (uint64_t(1) << g.m); ++v)
            if (g.eval(g.diagonal_point(v)) != gs.eval(v)) diag = false;
        c.require(diag && 2 * g.m == 12, "diagonal identity at the default width");
    }
    for (auto [R, N, width] : std::vector<std::tuple<int, int, int>>{
             {1, 2, 1}, {1, 3, 2}, {3, 1, 2}, {2, 1, 3}}) {
        auto F = make_basic(R == 1 ? FnKind::Or : FnKind::And, R);
        auto enc = surj_encode_width(R, width);
        auto gs = build_gstar(F, N, enc, nullptr, 1);
        auto g = build_g(gs);
        if (2 * gs.m > 12) continue;
        bool diag = true;
        for (uint64_t v = 0; v < (uint64_t(1) << g.m); ++v)
            if (g.eval(g.diagonal_point(v)) != gs.eval(v)) diag = false;
        c.require(diag, "diagonal identity at toy width");
    }
    // width accounting at the default 6 ceil(log(R+1)) encoding
    for (int R : {1, 2, 3}) {
        MonotoneDnf dnf;
        dnf.n = R;
        for (int i = 0; i < R; ++i) dnf.clauses.push_back(uint64_t(1) << i);  // OR_R, width 1
        auto F = BooleanFunction::total(R, [&](uint64_t x) { return eval_monotone_dnf(dnf, x); });
        auto enc = surj_encode(R);
        for (int N : {1, 2}) {
            auto gs = build_gstar(F, N, enc, &dnf);
            c.require(gs.acct.is_dnf, "flattened form is not a DNF");
            c.require(gs.acct.width <= 1 * enc.width, "width bound at R=" + std::to_string(R));
            auto g = build_g(gs);
            c.require(g.acct.monotone, "doubled DNF not monotone");
            c.require(g.acct.width <= 1 * enc.width, "doubled width bound");
        }
    }
    {
        // clause width 2: the default encoding distributes into millions of
        // terms, so the w factor of the bound is exercised at a narrow width
        // (the default-width factor is covered by the width-1 cases above)
        MonotoneDnf dnf{2, {0b11}};  // AND_2 as a width-2 monotone DNF
        auto F = BooleanFunction::total(2, [&](uint64_t x) { return eval_monotone_dnf(dnf, x); });
        auto enc = surj_encode_width(2, 2);
        auto gs = build_gstar(F, 2, enc, &dnf);
        c.require(gs.acct.is_dnf && gs.acct.width <= 2 * enc.width, "width-2 bound");
        auto g = build_g(gs);
        c.require(g.acct.monotone && g.acct.width <= 2 * enc.width, "doubled width-2 bound");
    }
}

void criterion_9_secret_sharing() {
    Criterion c("9. secret sharing: advantage, audits, monte carlo", 120);
    std::mt19937_64 rng(0xADE6009);
    // advantage == <psi, f> on every tested scheme
    int schemes_tested = 0;
    for (int trial = 0; trial < 25 || schemes_tested < 10; ++trial) {
        if (trial > 200) break;
        int n = 1 + static_cast<int>(rng() % 4);
        auto f = random_total(n, rng);
        int d = 1 + static_cast<int>(rng() % n);
        auto dw = dual_witness(f, d);
        if (dw.witness.is_zero() || dw.witness.inner_monomial(0) != 0) continue;
        auto scheme = scheme_from_witness(f, dw.witness);
        c.require(advantage(scheme) == dw.witness.correlation(f), "advantage != <psi,f>");
        c.require(advantage(scheme) == eps_opt(f, d - 1).eps, "duality chain broke");
        int phd = dw.witness.pure_high_degree(n);
        c.require(secrecy_audit(scheme, phd).pass, "audit failed below the phd");
        ++schemes_tested;
    }
    // constructed near-miss: phd exactly d-1
    {
        auto f = make_basic(FnKind::Or, 2);
        DualWitness nearmiss(2);
        nearmiss.set(0b00, Rat(1, 4));
        nearmiss.set(0b01, Rat(-1, 4));
        nearmiss.set(0b10, Rat(1, 4));
        nearmiss.set(0b11, Rat(-1, 4));
        auto s = scheme_from_witness(f, nearmiss);
        c.require(secrecy_audit(s, 1).pass, "near-miss audit should pass at d=1");
        c.require(!secrecy_audit(s, 2).pass, "near-miss audit should fail at d=2");

        DualWitness x1x2(2);
        x1x2.set(0b00, Rat(1, 4));
        x1x2.set(0b01, Rat(-1, 4));
        x1x2.set(0b10, Rat(-1, 4));
        x1x2.set(0b11, Rat(1, 4));
        auto s2 = scheme_from_witness(f, x1x2);
        c.require(secrecy_audit(s2, 2).pass, "character scheme audit at d=2");
        c.require(!secrecy_audit(s2, 3).pass, "character scheme must leak at d=3");

        // monte carlo: 1e5 seeded trials within 3 sigma of (1+adv)/2
        const long trials = 100000;
        std::mt19937_64 mc(0xADE6C0);
        long hits = 0;
        for (long t = 0; t < trials; ++t) {
            int secret = (mc() % 2) ? 1 : -1;
            auto b = split(secret, s2, mc());
            if (reconstruct(b, f) == secret) ++hits;
        }
        Rat p = (1 + advantage(s2)) / 2;
        Rat freq = Rat(hits) / Rat(trials);
        Rat diff = freq - p;
        c.require(diff * diff * Rat(trials) <= 9 * p * (1 - p),
                  "monte carlo frequency outside 3 sigma");
    }
}

void criterion_10_certificates() {
    Criterion c("10. certificate complexity and the doubled-function application");
    auto rep = certificate_complexity(make_basic(FnKind::Or, 3));
    c.require(rep.c_all == 3, "C(OR_3) != 3");
    c.require(rep.c_minus == 1, "C_minus(OR_3) != 1");

    std::mt19937_64 rng(0xADE600A);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            MonotoneDnf dnf;
            dnf.n = n;
            int m = 1 + static_cast<int>(rng() % 3);
            for (int cl = 0; cl < m; ++cl) {
                uint64_t mask = rng() & ((uint64_t(1) << n) - 1);
                if (mask == 0) mask = 1;
                dnf.clauses.push_back(mask);
            }
            auto fs = fstar(dnf);
            bool diag = true;
            for (uint64_t y = 0; y < (uint64_t(1) << n); ++y) {
                uint64_t point = y | ((~y & ((uint64_t(1) << n) - 1)) << n);
                if (fs.value(point) != eval_monotone_dnf(dnf, y)) diag = false;
            }
            c.require(diag, "diagonal identity at n=" + std::to_string(n));
            auto base =
                BooleanFunction::total(n, [&](uint64_t y) { return eval_monotone_dnf(dnf, y); });
            int d_fs = approx_degree(fs, Rat(1, 3)).degree;
            int d_f = approx_degree(base, Rat(1, 3)).degree;
            c.require(d_fs >= d_f, "doubled function lost degree at n=" + std::to_string(n));
        }
    }

    // majority pre-composition keeps the degree at large error: the best
    // degree-(d*-1) fit of MAJ_3 o OR_2 must still err above 1/3, so every
    // eps strictly between 1/3 and that ladder value forces degree >= d*.
    auto or2 = make_basic(FnKind::Or, 2);
    int dstar = approx_degree(or2, Rat(1, 3)).degree;
    auto maj_or = block_compose(make_basic(FnKind::Maj, 3), or2);
    Rat ladder_eps = eps_opt(maj_or, dstar - 1).eps;
    c.require(ladder_eps > Rat(1, 3),
              "maj composition error at degree d*-1 is " + rat_str(ladder_eps));
    Rat eps_mid = (Rat(1, 3) + ladder_eps) / 2;
    c.require(approx_degree(maj_or, eps_mid).degree >= dstar,
              "maj composition does not preserve the degree at eps = " + rat_str(eps_mid));
}

}  // namespace

int main() {
    std::printf("acceptance suite (exact arithmetic)\n");
    criterion_1_strong_duality();
    criterion_2_known_values();
    criterion_3_omega_suite();
    criterion_4_dual_block_laws();
    criterion_5_amplification();
    criterion_6_rs_suite();
    criterion_7_mass_dp();
    criterion_8_reduction_chain();
    criterion_9_secret_sharing();
    criterion_10_certificates();
    if (g_failures == 0)
        std::printf("ACCEPTANCE: all 10 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
