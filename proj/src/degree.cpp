#include "adeg/degree.hpp"

#include <algorithm>
#include <stdexcept>

namespace adeg {

std::vector<uint64_t> monomial_basis(int n, int d) { return masks_up_to_weight(n, d); }

EpsOptResult eps_opt(const BooleanFunction& f, int d) {
    if (d < 0) throw std::invalid_argument("eps_opt: negative degree bound");
    const auto points = f.domain_points();
    const auto monos = monomial_basis(f.n(), std::min(d, f.n()));
    const int k = static_cast<int>(monos.size());

    // Variables: c+_S, c-_S for each monomial, then eps. Minimize eps s.t.
    //   p(x) - f(x) <= eps  and  f(x) - p(x) <= eps  on the domain.
    LpProblem lp;
    lp.num_vars = 2 * k + 1;
    lp.maximize = false;
    lp.objective.assign(lp.num_vars, Rat(0));
    lp.objective[2 * k] = 1;
    for (uint64_t x : points) {
        std::vector<Rat> up(lp.num_vars, Rat(0)), down(lp.num_vars, Rat(0));
        for (int j = 0; j < k; ++j) {
            Rat s(chi(monos[j], x));
            up[2 * j] = s;
            up[2 * j + 1] = -s;
            down[2 * j] = -s;
            down[2 * j + 1] = s;
        }
        up[2 * k] = -1;
        down[2 * k] = -1;
        lp.add_row(std::move(up), Rel::Le, Rat(f.value(x)));
        lp.add_row(std::move(down), Rel::Le, Rat(-f.value(x)));
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw LpFailure(sol.status, "eps_opt: degree program did not solve");
    EpsOptResult out;
    out.eps = sol.objective;
    out.poly = MultilinearPolynomial(f.n());
    for (int j = 0; j < k; ++j) out.poly.set(monos[j], sol.x[2 * j] - sol.x[2 * j + 1]);
    return out;
}

AdegResult approx_degree(const BooleanFunction& f, const Rat& eps) {
    if (eps < 0) throw std::invalid_argument("adeg: negative error");
    AdegResult res;
    if (eps >= 1) return res;  // trivial approximation regime
    for (int d = 0; d <= f.n(); ++d) {
        Rat e = eps_opt(f, d).eps;
        res.ladder.push_back(e);
        if (e <= eps) {
            res.degree = d;
            return res;
        }
    }
    throw std::logic_error("adeg: full-degree fit failed to reach the error target");
}

namespace {

DualOptResult dual_core(const BooleanFunction& f, int d, bool one_sided) {
    if (d < 1) throw std::invalid_argument("dual_witness: degree must be >= 1");
    const auto points = f.domain_points();
    const int np = static_cast<int>(points.size());
    const auto monos = monomial_basis(f.n(), std::min(d - 1, f.n()));

    // Variables: u_x, v_x >= 0 with psi = u - v; v is dropped on f^{-1}(+1)
    // in the one-sided program. Maximize sum f(x) psi(x) subject to
    // sum(u+v) = 1 and orthogonality below degree d.
    std::vector<int> ucol(np), vcol(np, -1);
    int nvars = 0;
    for (int i = 0; i < np; ++i) {
        ucol[i] = nvars++;
        if (!(one_sided && f.value(points[i]) == 1)) vcol[i] = nvars++;
    }

    LpProblem lp;
    lp.num_vars = nvars;
    lp.maximize = true;
    lp.objective.assign(nvars, Rat(0));
    for (int i = 0; i < np; ++i) {
        Rat fx(f.value(points[i]));
        lp.objective[ucol[i]] = fx;
        if (vcol[i] >= 0) lp.objective[vcol[i]] = -fx;
    }
    // The exact LP dual of eps_opt bounds the mass by 1 rather than pinning
    // it; this keeps the one-sided variant feasible for constant functions
    // (zero witness), and any positive optimum still forces unit norm.
    {
        std::vector<Rat> norm(nvars, Rat(1));
        lp.add_row(std::move(norm), Rel::Le, Rat(1));
    }
    for (uint64_t S : monos) {
        std::vector<Rat> row(nvars, Rat(0));
        for (int i = 0; i < np; ++i) {
            Rat s(chi(S, points[i]));
            row[ucol[i]] = s;
            if (vcol[i] >= 0) row[vcol[i]] = -s;
        }
        lp.add_row(std::move(row), Rel::Eq, Rat(0));
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw LpFailure(sol.status, "dual_witness: dual program did not solve");

    DualOptResult out;
    out.correlation = sol.objective;
    out.claimed_phd = d;
    DualWitness psi(f.n());
    for (int i = 0; i < np; ++i) {
        Rat v = sol.x[ucol[i]];
        if (vcol[i] >= 0) v -= sol.x[vcol[i]];
        psi.set(points[i], v);
    }

    // A positive optimum forces ||psi||_1 = 1 (otherwise psi/||psi|| would
    // beat it). At optimum 0 the vertex may be slack; look for any nonzero
    // witness of the same pure high degree and use it, normalized. Its
    // correlation is still exactly 0 because max = min = 0 by symmetry.
    if (out.correlation == 0 && psi.l1() != 1) {
        psi = DualWitness(f.n());
        LpProblem probe_base = lp;
        probe_base.rows[0].rel = Rel::Eq;  // pin the norm so the probe is bounded
        for (int target = 0; target < np && psi.is_zero(); ++target) {
            LpProblem probe = probe_base;
            probe.objective.assign(nvars, Rat(0));
            probe.objective[ucol[target]] = 1;
            if (vcol[target] >= 0) probe.objective[vcol[target]] = -1;
            LpSolution ps = solve_lp(probe);
            if (ps.status != LpStatus::Optimal || ps.objective <= 0) continue;
            DualWitness cand(f.n());
            for (int i = 0; i < np; ++i) {
                Rat v = ps.x[ucol[i]];
                if (vcol[i] >= 0) v -= ps.x[vcol[i]];
                cand.set(points[i], v);
            }
            if (!cand.is_zero()) psi = cand.normalized();
        }
    }
    out.witness = psi;
    return out;
}

}  // namespace

DualOptResult dual_witness(const BooleanFunction& f, int d) { return dual_core(f, d, false); }

DualOptResult one_sided_dual_witness(const BooleanFunction& f, int d) {
    return dual_core(f, d, true);
}

DualWitness min_l1_witness(const WitnessLp& spec) {
    // Points with pinned values are constants, not variables.
    std::vector<uint64_t> pts = spec.points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto pinned_value = [&](uint64_t x) -> std::optional<Rat> {
        for (const auto& [p, v] : spec.pinned)
            if (p == x) return v;
        return std::nullopt;
    };

    std::vector<uint64_t> free_pts;
    for (uint64_t x : pts)
        if (!pinned_value(x)) free_pts.push_back(x);
    const int np = static_cast<int>(free_pts.size());

    std::vector<bool> nonneg(np, false);
    for (int i = 0; i < np; ++i)
        for (uint64_t x : spec.nonnegative_points)
            if (x == free_pts[i]) nonneg[i] = true;

    std::vector<int> ucol(np), vcol(np, -1);
    int nvars = 0;
    for (int i = 0; i < np; ++i) {
        ucol[i] = nvars++;
        if (!nonneg[i]) vcol[i] = nvars++;
    }

    LpProblem lp;
    lp.num_vars = nvars;
    lp.maximize = false;
    lp.objective.assign(nvars, Rat(0));
    for (int i = 0; i < np; ++i) {
        bool in_region = false;
        for (uint64_t x : spec.l1_objective_region)
            if (x == free_pts[i]) in_region = true;
        if (!in_region) continue;
        lp.objective[ucol[i]] = 1;  // |psi| <= u + v, tight at an optimum
        if (vcol[i] >= 0) lp.objective[vcol[i]] = 1;
    }
    for (uint64_t S : spec.orthogonal_monomials) {
        std::vector<Rat> row(nvars, Rat(0));
        Rat rhs = 0;
        for (int i = 0; i < np; ++i) {
            Rat s(chi(S, free_pts[i]));
            row[ucol[i]] = s;
            if (vcol[i] >= 0) row[vcol[i]] = -s;
        }
        for (const auto& [p, v] : spec.pinned) rhs -= v * Rat(chi(S, p));
        lp.add_row(std::move(row), Rel::Eq, rhs);
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw LpFailure(sol.status, "min_l1_witness: constraint system infeasible");

    DualWitness psi(spec.n);
    for (int i = 0; i < np; ++i) {
        Rat v = sol.x[ucol[i]];
        if (vcol[i] >= 0) v -= sol.x[vcol[i]];
        psi.set(free_pts[i], v);
    }
    for (const auto& [p, v] : spec.pinned) psi.set(p, v);
    return psi;
}

LpCertificate certify_degree(const BooleanFunction& f, int d) {
    LpCertificate cert;
    cert.degree_bound = d;
    auto primal = eps_opt(f, d);
    cert.primal_eps = primal.eps;
    cert.primal_poly = primal.poly;
    auto dual = dual_witness(f, d + 1);
    cert.dual_correlation = dual.correlation;
    cert.witness = dual.witness;
    cert.strong_duality = (cert.primal_eps == cert.dual_correlation);
    return cert;
}

}  // namespace adeg
