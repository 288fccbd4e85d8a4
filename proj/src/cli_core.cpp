#include "adeg/cli_core.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "adeg/dualcraft.hpp"
#include "adeg/json_io.hpp"
#include "adeg/manifest.hpp"
#include "adeg/reduction.hpp"

namespace adeg {

namespace {

struct FnArgs {
    std::string kind;
    std::string file;
    int n = 0;
};

void add_fn_flags(CLI::App* cmd, FnArgs& fa) {
    cmd->add_option("--fn", fa.kind, "builtin function: or|and|maj|parity|const");
    cmd->add_option("--file", fa.file, "function file (JSON)");
    cmd->add_option("--n", fa.n, "arity for --fn");
}

BooleanFunction resolve_fn(const FnArgs& fa, RunManifest& man) {
    if (!fa.file.empty()) {
        man.add_input(fa.file);
        return function_from_json(load_json_file(fa.file));
    }
    if (fa.kind.empty()) throw CLI::ValidationError("need --fn or --file");
    FnKind k;
    if (fa.kind == "or")
        k = FnKind::Or;
    else if (fa.kind == "and")
        k = FnKind::And;
    else if (fa.kind == "maj")
        k = FnKind::Maj;
    else if (fa.kind == "parity")
        k = FnKind::Parity;
    else if (fa.kind == "const")
        k = FnKind::Const;
    else
        throw CLI::ValidationError("unknown --fn kind '" + fa.kind + "'");
    man.params["fn"] = fa.kind;
    man.params["n"] = fa.n;
    return make_basic(k, fa.n);
}

int brute_cap_from_env() {
    const char* env = std::getenv("ADEG_BRUTE_CAP");
    if (env == nullptr) return 16;
    return std::atoi(env);
}

std::string dstr(const Rat& r) { return rat_str(r); }

// Approximate decimal for human columns; machine fields stay rational.
std::string approx(const Rat& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", r.get_d());
    return buf;
}

MonotoneDnf parse_clause_list(const std::string& text, int n) {
    MonotoneDnf dnf;
    dnf.n = n;
    uint64_t clause = 0;
    std::string num;
    auto flush_var = [&] {
        if (num.empty()) return;
        int v = std::stoi(num);
        if (v < 1 || v > n) throw CLI::ValidationError("clause variable out of range");
        clause |= uint64_t(1) << (v - 1);
        num.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            num.push_back(c);
        } else if (c == ',') {
            flush_var();
        } else if (c == ';') {
            flush_var();
            dnf.clauses.push_back(clause);
            clause = 0;
        } else {
            throw CLI::ValidationError("bad clause list character");
        }
    }
    flush_var();
    if (clause != 0) dnf.clauses.push_back(clause);
    return dnf;
}

// ---- subcommand bodies ----------------------------------------------------

void cmd_adeg(const FnArgs& fa, const std::string& eps_str, RunManifest& man,
              std::ostream& out) {
    auto f = resolve_fn(fa, man);
    Rat eps = rat_parse(eps_str);
    man.params["eps"] = rat_str(eps);
    auto res = approx_degree(f, eps);
    for (size_t d = 0; d < res.ladder.size(); ++d)
        man.certified("eps_opt(d=" + std::to_string(d) + ")", dstr(res.ladder[d]));
    man.certified("adeg", std::to_string(res.degree), "", "", "least d with eps_opt <= eps");
    out << res.degree << "\n";
}

void cmd_eps(const FnArgs& fa, int d, const std::string& cert_out, RunManifest& man,
             std::ostream& out) {
    auto f = resolve_fn(fa, man);
    man.params["d"] = d;
    auto res = eps_opt(f, d);
    man.certified("eps_opt", dstr(res.eps));
    if (!cert_out.empty()) {
        auto cert = certify_degree(f, d);
        save_json_file(cert_out, certificate_to_json(cert));
        man.check("strong_duality", cert.strong_duality, dstr(cert.primal_eps), "==",
                  dstr(cert.dual_correlation));
    }
    out << rat_str(res.eps) << "\n";
}

void cmd_dual(const FnArgs& fa, int d, bool one_sided, const std::string& eps_str,
              const std::string& wit_out, RunManifest& man, std::ostream& out) {
    auto f = resolve_fn(fa, man);
    man.params["d"] = d;
    man.params["one_sided"] = one_sided;
    auto res = one_sided ? one_sided_dual_witness(f, d) : dual_witness(f, d);
    man.certified("correlation", dstr(res.correlation));
    if (!res.witness.is_zero()) {
        man.check("unit_l1_norm", res.witness.l1() == 1, dstr(res.witness.l1()), "==", "1/1");
        man.check("orthogonal_below_d", res.witness.orthogonal_below(d), std::to_string(d));
    } else {
        man.reported("zero_witness", "0/1", "==", "0/1",
                     "no nonzero witness of this pure high degree exists on the domain");
    }
    if (!one_sided) {
        Rat primal = eps_opt(f, d - 1).eps;
        man.check("strong_duality", primal == res.correlation, dstr(primal), "==",
                  dstr(res.correlation));
    }
    if (!eps_str.empty()) {
        // strict comparison per the duality theorem: correlation > eps
        // certifies degree >= d at that error
        Rat eps = rat_parse(eps_str);
        if (res.correlation > eps)
            man.certified("witnesses_degree_ge_d", dstr(res.correlation), ">", dstr(eps));
        else
            man.reported("witnesses_degree_ge_d", dstr(res.correlation), ">", dstr(eps),
                         "correlation does not exceed eps; no degree claim at this error");
    }
    if (!wit_out.empty()) save_json_file(wit_out, witness_to_json(res.witness));
    out << rat_str(res.correlation) << "\n";
}

void cmd_compose(const std::string& outer_path, const std::string& inner_path,
                 const std::string& out_path, RunManifest& man, std::ostream& out) {
    man.add_input(outer_path);
    man.add_input(inner_path);
    auto outer = witness_from_json(load_json_file(outer_path));
    auto inner = witness_from_json(load_json_file(inner_path));
    auto comp = dual_block_compose(outer, inner);
    Rat norm = comp.l1();
    bool balanced_inner = inner.inner_monomial(0) == 0;
    if (outer.l1() == 1 && inner.l1() == 1 && balanced_inner)
        man.check("l1_norm_preserved", norm == 1, dstr(norm), "==", "1/1");
    else
        man.reported("l1_norm", dstr(norm), "", "",
                     "norm preservation needs unit-norm inputs and a balanced inner witness");
    if (comp.n() <= 16 && !comp.is_zero()) {
        int dout = outer.pure_high_degree(outer.n());
        int din = inner.pure_high_degree(inner.n());
        man.check("phd_multiplicative", comp.orthogonal_below(dout * din),
                  std::to_string(dout * din), "<=", "phd");
    }
    if (!out_path.empty()) save_json_file(out_path, witness_to_json(comp));
    out << comp.entries().size() << " support points on " << comp.n() << " vars\n";
}

void cmd_omega(int k, int c, const std::string& out_path, RunManifest& man, std::ostream& out) {
    man.params["k"] = k;
    man.params["c"] = c;
    auto raw = omega_profile(k, c);
    auto w = raw.normalized_copy();
    man.check("unit_l1_norm", w.l1() == 1, dstr(w.l1()), "==", "1/1");
    man.check("or_correlation", w.or_correlation() >= Rat(1, 3), dstr(w.or_correlation()), ">=",
              "1/3");
    man.check("or_correlation_relative", raw.or_correlation() * 3 >= raw.l1(),
              dstr(raw.or_correlation()), ">=", dstr(raw.l1() / 3));
    bool orth = true;
    int jmax = 0;
    for (int j = 0; c * j * j < k; ++j) {
        jmax = j;
        if (w.power_moment(j) != 0) orth = false;
    }
    man.check("orthogonal_powers_below_sqrt(k/c)", orth, "j<=" + std::to_string(jmax));
    man.check("positive_at_zero", w.at(0) > 0, dstr(w.at(0)), ">", "0/1");
    bool decay = true;
    for (int t = 0; t <= k; ++t)
        if (rat_abs(w.at(t)) * Rat((t + 1) * (t + 1)) > 5) decay = false;
    man.check("layer_decay_5_over_t+1_sq", decay, "max over t");
    if (!out_path.empty()) {
        ojson j;
        j["raw"] = profile_to_json(raw);
        j["normalized"] = profile_to_json(w);
        save_json_file(out_path, j);
    }
    out << "support layers:";
    for (int t : omega_support(k, c)) out << " " << t;
    out << "\n";
}

void cmd_amplify(int M, const FnArgs& fa, int d, long sched_n, long sched_d,
                 const std::string& out_path, RunManifest& man, std::ostream& out) {
    auto f = resolve_fn(fa, man);
    man.params["M"] = M;
    if (sched_n > 0) {
        auto p = AmplificationParams::from(sched_n, sched_d);
        ojson sched;
        sched["n"] = p.n;
        sched["d"] = p.d;
        sched["k"] = p.k;
        sched["D"] = rat_str(p.D);
        sched["R"] = p.R;
        sched["N"] = p.N.get_str();
        sched["m"] = p.m.get_str();
        sched["c1"] = rat_str(p.c1);
        sched["c2"] = rat_str(p.c2);
        man.params["schedule"] = sched;
        man.reported("schedule_desk_override", "full-scale parameters recorded", "", "",
                     "the run itself uses the desk-scale instance below");
    }
    if (d <= 0) d = approx_degree(f, Rat(1, 3)).degree;
    man.params["d"] = d;
    auto Psi = and_amplifier(M);
    man.check("amplifier_unit_norm", Psi.l1() == 1, dstr(Psi.l1()), "==", "1/1");
    man.check("amplifier_orthogonal_to_ones", Psi.inner_monomial(0) == 0,
              dstr(Psi.inner_monomial(0)), "==", "0/1");
    auto psi = one_sided_dual_witness(f, d);
    if (psi.witness.is_zero() || psi.correlation < Rat(1, 3))
        throw std::runtime_error("amplify: one-sided witness has correlation below 1/3");
    auto inst = certify_amplification(M, f, psi.witness);
    man.check("composed_unit_norm", inst.unit_norm, "", "==", "1/1");
    man.check("amplified_correlation", inst.meets_target, dstr(inst.correlation), ">=",
              dstr(inst.target));
    if (!out_path.empty()) save_json_file(out_path, witness_to_json(inst.composed));
    out << rat_str(inst.correlation) << " >= " << rat_str(inst.target)
        << (inst.meets_target ? " ok" : " VIOLATED") << "\n";
}

void cmd_reduce(const FnArgs& fa, int N, const std::string& eps_str, int width,
                RunManifest& man, std::ostream& out) {
    auto F = resolve_fn(fa, man);
    const int R = F.n();
    man.params["N"] = N;
    man.params["R"] = R;
    Rat eps = rat_parse(eps_str);
    man.params["eps"] = rat_str(eps);

    auto prop = g_prop(F, N);
    auto prom = restrict_promise(F, N);
    if ((R + 1) * N <= 10) {
        int dp = approx_degree(prop.fn, eps).degree;
        int dq = approx_degree(prom, eps).degree;
        man.check("property_degree_dominates_promise", dp >= dq, std::to_string(dp), ">=",
                  std::to_string(dq));
        auto primal = eps_opt(prop.fn, dq);
        auto pt = ambainis_symmetrize(primal.poly, N, R, dq);
        auto q = q_transform(pt, N, R);
        Rat worst = 0;
        for (uint64_t x : prom.domain_points()) {
            Rat errv = rat_abs(q.eval(x) - Rat(prom.value(x)));
            if (errv > worst) worst = errv;
        }
        man.check("symmetrized_chain_error_preserved", worst <= primal.eps, dstr(worst), "<=",
                  dstr(primal.eps));
    } else {
        man.reported("lp_comparison", "skipped", "", "", "(R+1)*N above the exact-LP budget");
    }

    auto enc = width > 0 ? surj_encode_width(R, width) : surj_encode(R);
    man.params["enc_width"] = enc.width;
    man.check("encoding_surjective", enc.surjective(), std::to_string(enc.width));

    const MonotoneDnf* dnf_ptr = nullptr;
    MonotoneDnf dnf;
    if (F.kind() == FnKind::Or) {
        dnf.n = R;
        for (int i = 0; i < R; ++i) dnf.clauses.push_back(uint64_t(1) << i);
        dnf_ptr = &dnf;
    } else if (F.kind() == FnKind::And) {
        dnf.n = R;
        dnf.clauses.push_back((uint64_t(1) << R) - 1);
        dnf_ptr = &dnf;
    }
    auto gs = build_gstar(F, N, enc, dnf_ptr, 1);
    auto g = build_g(gs);
    man.params["m"] = gs.m;
    if (gs.m <= 12) {
        bool diag = true;
        for (uint64_t v = 0; v < (uint64_t(1) << gs.m); ++v)
            if (g.eval(g.diagonal_point(v)) != gs.eval(v)) diag = false;
        man.check("g_diagonal_identity", diag, "exhaustive over 2^" + std::to_string(gs.m));
        bool circ = true;
        for (uint64_t u = 0; u < (uint64_t(1) << gs.m); ++u)
            if (gs.circuit.eval(u) != gs.eval(u)) circ = false;
        man.check("gstar_circuit_matches_definition", circ,
                  "exhaustive over 2^" + std::to_string(gs.m));
    }
    if (dnf_ptr != nullptr) {
        int w = 0;
        for (uint64_t cl : dnf.clauses) w = std::max(w, weight(cl));
        man.check("monotone_dnf_width_bound", gs.acct.is_dnf && gs.acct.width <= w * enc.width,
                  std::to_string(gs.acct.width), "<=", std::to_string(w * enc.width));
        man.check("g_monotone", g.acct.monotone, "");
    }
    man.certified("depth", std::to_string(g.acct.depth));
    out << "g on " << 2 * gs.m << " vars, depth " << g.acct.depth << ", width "
        << g.acct.width << "\n";
}

void cmd_correct(const std::string& witness_path, int cap, int D, const std::string& out_path,
                 RunManifest& man, std::ostream& out) {
    man.add_input(witness_path);
    man.params["N"] = cap;
    man.params["D"] = D;
    auto zeta = witness_from_json(load_json_file(witness_path));
    auto nu = correction_witness(zeta, cap, D);
    man.check("correction_orthogonal_below_D", nu.orthogonal_below(D), std::to_string(D));
    bool agrees = true;
    for (const auto& [x, v] : zeta.entries())
        if (weight(x) > cap && nu.at(x) != v) agrees = false;
    for (const auto& [x, v] : nu.entries())
        if (weight(x) > cap && zeta.at(x) != v) agrees = false;
    man.check("correction_matches_above_cap", agrees, "");
    Rat numass = nu.l1();
    if (numass * 10 <= 1)
        man.certified("correction_mass", dstr(numass), "<=", "1/10");
    else
        man.reported("correction_mass", dstr(numass), "<=", "1/10",
                     "asymptotic target, reported at desk scale");
    auto zh = apply_correction(zeta, nu);
    man.check("zetahat_unit_norm", zh.l1() == 1, dstr(zh.l1()), "==", "1/1");
    man.check("zetahat_supported_below_cap", zh.max_support_weight() <= cap,
              std::to_string(zh.max_support_weight()), "<=", std::to_string(cap));
    if (zh.n() <= 16)
        man.check("zetahat_phd_at_least_D", zh.orthogonal_below(D), std::to_string(D));
    if (!out_path.empty()) save_json_file(out_path, witness_to_json(zh));
    out << "correction mass " << rat_str(numass) << "\n";
}

void cmd_masscheck(const std::string& phi_path, const std::string& omega_path, int block,
                   int cap, int k, int R, RunManifest& man, std::ostream& out) {
    if (!phi_path.empty()) {
        man.add_input(phi_path);
        man.add_input(omega_path);
        auto Phi = witness_from_json(load_json_file(phi_path));
        auto w = profile_from_json(load_json_file(omega_path));
        man.params["block"] = block;
        man.params["N"] = cap;
        Rat dp = mass_outside_cap(Phi, w, block, cap);
        man.certified("mass_outside_cap", dstr(dp));
        if (Phi.n() * block <= 12) {
            // direct enumeration cross-check at tiny sizes
            Rat direct = 0;
            const Rat two_r = Rat(int_pow(Int(2), static_cast<unsigned long>(Phi.n())));
            for (uint64_t x = 0; x < (uint64_t(1) << (Phi.n() * block)); ++x) {
                if (weight(x) <= cap) continue;
                Rat prodv = 1;
                uint64_t z = 0;
                for (int i = 0; i < Phi.n(); ++i) {
                    int t = weight((x >> (i * block)) & ((uint64_t(1) << block) - 1));
                    Rat psi = t <= w.k ? w.at(t) / Rat(binomial(block, t)) : Rat(0);
                    prodv *= rat_abs(psi);
                    if (sign_of(psi) == -1) z |= uint64_t(1) << i;
                }
                if (prodv != 0) direct += rat_abs(two_r * Phi.at(z) * prodv);
            }
            man.check("dp_equals_enumeration", dp == direct, dstr(dp), "==", dstr(direct));
        }
        out << rat_str(dp) << "\n";
        return;
    }
    // combinatorial tail bound with the canonical decaying profiles
    man.params["k"] = k;
    man.params["R"] = R;
    man.params["N"] = cap;
    Rat scale_den = 0;
    for (int r = 0; r <= k; ++r) scale_den += Rat(1) / Rat((r + 1) * (r + 1));
    Rat scale = Rat(1, 2) / scale_den;
    SymmetricProfile eta(k, std::vector<Rat>(static_cast<size_t>(k) + 1));
    for (int r = 0; r <= k; ++r) eta.values[r] = scale / Rat((r + 1) * (r + 1));
    std::vector<SymmetricProfile> etas(static_cast<size_t>(R), eta);
    auto rep = tail_product_bound(k, R, etas, cap);
    if (rep.holds)
        man.certified("tail_product_bound", dstr(rep.lhs), "<=", rep.rhs_expr);
    else
        man.reported("tail_product_bound", dstr(rep.lhs), "<=", rep.rhs_expr,
                     "bound target missed at these parameters");
    // DP vs enumeration when the profile grid is tiny
    if (static_cast<double>(k + 1) * R <= 24 && rat_pow(Rat(k + 1), R) <= Rat(1 << 20)) {
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
        man.check("dp_equals_enumeration", rep.lhs == direct, dstr(rep.lhs), "==",
                  dstr(direct));
    }
    out << rat_str(rep.lhs) << " vs " << rep.rhs_expr << " (~" << rep.rhs_approx << ")"
        << (rep.holds ? " ok" : " not reached") << "\n";
}

void cmd_share_make(const FnArgs& fa, int d, const std::string& out_path, RunManifest& man,
                    std::ostream& out) {
    auto f = resolve_fn(fa, man);
    man.params["d"] = d;
    auto dw = dual_witness(f, d);
    if (dw.witness.is_zero()) throw std::runtime_error("share make: witness is zero");
    auto scheme = scheme_from_witness(f, dw.witness);
    Rat adv = advantage(scheme);
    man.check("advantage_equals_correlation", adv == dw.correlation, dstr(adv), "==",
              dstr(dw.correlation));
    if (!out_path.empty()) save_json_file(out_path, scheme_to_json(scheme));
    out << "advantage " << rat_str(adv) << "\n";
}

void cmd_share_split(const std::string& scheme_path, int secret, uint64_t seed,
                     RunManifest& man, std::ostream& out) {
    man.add_input(scheme_path);
    man.params["b"] = secret;
    man.params["seed"] = seed;
    auto scheme = scheme_from_json(load_json_file(scheme_path));
    auto bundle = split(secret, scheme, seed);
    auto replay = split(secret, scheme, seed);
    man.check("seed_replay_identical", replay.shares == bundle.shares,
              mask_to_bits(bundle.shares, scheme.f.n()));
    man.certified("reconstructed", std::to_string(reconstruct(bundle, scheme.f)));
    out << mask_to_bits(bundle.shares, scheme.f.n()) << "\n";
}

void cmd_share_audit(const std::string& scheme_path, int d, RunManifest& man,
                     std::ostream& out) {
    man.add_input(scheme_path);
    man.params["d"] = d;
    auto scheme = scheme_from_json(load_json_file(scheme_path));
    auto res = secrecy_audit(scheme, d);
    man.params["subsets_checked"] = res.subsets_checked.size();
    if (res.pass) {
        man.certified("secrecy", "all marginals identical", "for subsets of size <",
                      std::to_string(d));
    } else {
        ojson table = ojson::array();
        for (const auto& row : res.failure_table)
            table.push_back(ojson{{"assignment", mask_to_bits(row.assignment, scheme.f.n())},
                                  {"p_plus", rat_str(row.p_plus)},
                                  {"p_minus", rat_str(row.p_minus)}});
        man.params["failure_marginals"] = table;
        man.failed("secrecy", "subset " + mask_to_bits(res.worst_subset, scheme.f.n()),
                   "leaks", "", "marginals differ; table in params.failure_marginals");
    }
    out << (res.pass ? "pass" : "FAIL") << "\n";
}

void cmd_cert(const FnArgs& fa, const std::string& clauses, bool with_fstar, RunManifest& man,
              std::ostream& out) {
    auto f = resolve_fn(fa, man);
    auto rep = certificate_complexity(f, brute_cap_from_env());
    man.certified("C", std::to_string(rep.c_all));
    man.certified("C_minus", std::to_string(rep.c_minus));
    man.certified("C_plus", std::to_string(rep.c_plus));
    out << "C=" << rep.c_all << " C-=" << rep.c_minus << " C+=" << rep.c_plus << "\n";
    if (with_fstar) {
        if (clauses.empty()) throw CLI::ValidationError("--fstar needs --clauses");
        auto dnf = parse_clause_list(clauses, f.n());
        auto fs = fstar(dnf);
        bool diag = true;
        for (uint64_t y = 0; y < (uint64_t(1) << f.n()); ++y) {
            uint64_t point = y | ((~y & ((uint64_t(1) << f.n()) - 1)) << f.n());
            if (fs.value(point) != eval_monotone_dnf(dnf, y)) diag = false;
        }
        man.check("fstar_diagonal_identity", diag, "exhaustive");
        auto structure = fstar_certificate_structure(dnf);
        man.check("fstar_certificates_verified", structure.all_verified, "exhaustive");
        // a measurement, not an asserted bound: no exponent is claimed
        man.params["fstar_max_plus_entries"] = structure.max_plus_entries;
        if (f.n() <= 3) {
            int d_fs = approx_degree(fs, Rat(1, 3)).degree;
            auto base = BooleanFunction::total(
                f.n(), [&](uint64_t y) { return eval_monotone_dnf(dnf, y); });
            int d_f = approx_degree(base, Rat(1, 3)).degree;
            man.check("fstar_degree_dominates", d_fs >= d_f, std::to_string(d_fs), ">=",
                      std::to_string(d_f));
        }
    }
}

void cmd_report(const FnArgs& fa, const std::string& from_manifest, const std::string& csv_path,
                RunManifest& man, std::ostream& out) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write '" + csv_path + "'");
    if (!from_manifest.empty()) {
        man.add_input(from_manifest);
        auto j = load_json_file(from_manifest);
        csv << "name,status,lhs,relation,rhs\n";
        for (const auto& p : j.at("properties")) {
            csv << p.value("name", "") << "," << p.value("status", "") << ","
                << p.value("lhs", "") << "," << p.value("relation", "") << ","
                << p.value("rhs", "") << "\n";
        }
        man.certified("ledger_rows", std::to_string(j.at("properties").size()));
    } else {
        auto f = resolve_fn(fa, man);
        csv << "d,eps_opt,approx_decimal\n";
        for (int d = 0; d <= f.n(); ++d) {
            Rat e = eps_opt(f, d).eps;
            csv << d << "," << rat_str(e) << ",~" << approx(e) << "\n";
            man.certified("eps_opt(d=" + std::to_string(d) + ")", dstr(e));
        }
    }
    out << "wrote " << csv_path << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact approximate-degree workbench"};
    app.require_subcommand(1);

    RunManifest man;
    std::string manifest_path = "manifest.json";
    app.add_option("--manifest", manifest_path, "manifest output path")->capture_default_str();

    FnArgs fa;
    std::string eps_str = "1/3";
    std::string out_path, outer_path, inner_path, witness_path, scheme_path, clauses,
        from_manifest, cert_out;
    int d = 1, k = 25, c = 25, M = 1, N = 1, cap = 1, block = 1, R = 1, width = 0, secret = -1;
    uint64_t seed = 0;
    bool one_sided = false, with_fstar = false;

    auto* a_adeg = app.add_subcommand("adeg", "approximate degree by ascending LP search");
    add_fn_flags(a_adeg, fa);
    a_adeg->add_option("--eps", eps_str, "error bound as p/q");

    auto* a_eps = app.add_subcommand("eps", "least degree-d approximation error");
    add_fn_flags(a_eps, fa);
    a_eps->add_option("--d", d, "degree bound")->required();
    a_eps->add_option("--cert-out", cert_out, "write an LP certificate (both optima)");

    auto* a_dual = app.add_subcommand("dual", "optimal dual witness at pure high degree d");
    add_fn_flags(a_dual, fa);
    a_dual->add_option("--d", d, "pure high degree")->required();
    a_dual->add_flag("--one-sided", one_sided, "require psi >= 0 on f^{-1}(+1)");
    a_dual->add_option("--out", out_path, "witness output file");
    std::string dual_eps;
    a_dual->add_option("--eps", dual_eps, "also report the strict degree comparison");

    auto* a_comp = app.add_subcommand("compose", "dual block composition of two witnesses");
    a_comp->add_option("--outer", outer_path)->required();
    a_comp->add_option("--inner", inner_path)->required();
    a_comp->add_option("--out", out_path, "composed witness output");

    auto* a_omega = app.add_subcommand("omega", "decaying OR dual layer profile");
    a_omega->add_option("--k", k, "layer cap")->required();
    a_omega->add_option("--c", c, "spacing constant");
    a_omega->add_flag("--check", "kept for compatibility; checks always run");
    a_omega->add_option("--out", out_path, "profile output file");

    auto* a_amp = app.add_subcommand("amplify", "AND amplifier conclusions, per instance");
    a_amp->add_option("--M", M, "outer AND arity")->required();
    add_fn_flags(a_amp, fa);
    a_amp->add_option("--d", d, "one-sided witness degree (default: adeg at 1/3)");
    a_amp->add_option("--out", out_path, "composed witness output");
    long sched_n = 0, sched_d = 1;
    a_amp->add_option("--schedule-n", sched_n, "record the full parameter schedule for n");
    a_amp->add_option("--schedule-d", sched_d, "schedule's base degree d");

    auto* a_red = app.add_subcommand("reduce", "symmetrization reduction chain");
    add_fn_flags(a_red, fa);
    a_red->add_option("--N", N, "list length / weight cap")->required();
    a_red->add_option("--eps", eps_str, "error for the LP comparison");
    a_red->add_option("--width", width, "encoding width override");

    auto* a_cor = app.add_subcommand("correct", "zero out overweight mass of a witness");
    a_cor->add_option("--witness", witness_path)->required();
    a_cor->add_option("--N", cap, "weight cap")->required();
    a_cor->add_option("--D", d, "orthogonality degree")->required();
    a_cor->add_option("--out", out_path, "corrected witness output");

    auto* a_mass = app.add_subcommand("masscheck", "overweight mass DP and tail bound");
    a_mass->add_option("--phi", witness_path, "outer witness file (mass mode)");
    a_mass->add_option("--omega", scheme_path, "layer profile file (mass mode)");
    a_mass->add_option("--block", block, "block arity (mass mode)");
    a_mass->add_option("--N", cap, "weight cap")->required();
    a_mass->add_option("--k", k, "profile index cap (bound mode)");
    a_mass->add_option("--R", R, "profile count (bound mode)");

    auto* a_share = app.add_subcommand("share", "dual-witness secret sharing");
    a_share->require_subcommand(1);
    auto* s_make = a_share->add_subcommand("make", "build a scheme from the LP witness");
    add_fn_flags(s_make, fa);
    s_make->add_option("--d", d, "witness pure high degree")->required();
    s_make->add_option("--out", out_path, "scheme output file");
    auto* s_split = a_share->add_subcommand("split", "draw shares for a secret bit");
    s_split->add_option("--scheme", scheme_path)->required();
    s_split->add_option("--b", secret, "secret bit, +1 or -1")->required();
    s_split->add_option("--seed", seed);
    auto* s_audit = a_share->add_subcommand("audit", "exact marginal secrecy audit");
    s_audit->add_option("--scheme", scheme_path)->required();
    s_audit->add_option("--d", d, "audit subsets of size < d")->required();

    auto* a_cert = app.add_subcommand("cert", "certificate complexity by brute force");
    add_fn_flags(a_cert, fa);
    a_cert->add_flag("--fstar", with_fstar, "also build and check the doubled function");
    a_cert->add_option("--clauses", clauses, "monotone DNF, e.g. '1,2;3'");

    auto* a_rep = app.add_subcommand("report", "CSV ladders and inequality ledgers");
    add_fn_flags(a_rep, fa);
    a_rep->add_option("--from-manifest", from_manifest, "emit a ledger from a manifest");
    a_rep->add_option("--out", out_path, "CSV output path")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 1;
    try {
        if (a_adeg->parsed()) {
            man.command = "adeg";
            cmd_adeg(fa, eps_str, man, out);
        } else if (a_eps->parsed()) {
            man.command = "eps";
            cmd_eps(fa, d, cert_out, man, out);
        } else if (a_dual->parsed()) {
            man.command = "dual";
            cmd_dual(fa, d, one_sided, dual_eps, out_path, man, out);
        } else if (a_comp->parsed()) {
            man.command = "compose";
            cmd_compose(outer_path, inner_path, out_path, man, out);
        } else if (a_omega->parsed()) {
            man.command = "omega";
            cmd_omega(k, c, out_path, man, out);
        } else if (a_amp->parsed()) {
            man.command = "amplify";
            cmd_amplify(M, fa, a_amp->count("--d") ? d : 0, sched_n, sched_d, out_path, man,
                        out);
        } else if (a_red->parsed()) {
            man.command = "reduce";
            cmd_reduce(fa, N, eps_str, width, man, out);
        } else if (a_cor->parsed()) {
            man.command = "correct";
            cmd_correct(witness_path, cap, d, out_path, man, out);
        } else if (a_mass->parsed()) {
            man.command = "masscheck";
            cmd_masscheck(witness_path, scheme_path, block, cap, k, R, man, out);
        } else if (s_make->parsed()) {
            man.command = "share make";
            cmd_share_make(fa, d, out_path, man, out);
        } else if (s_split->parsed()) {
            man.command = "share split";
            cmd_share_split(scheme_path, secret, seed, man, out);
        } else if (s_audit->parsed()) {
            man.command = "share audit";
            cmd_share_audit(scheme_path, d, man, out);
        } else if (a_cert->parsed()) {
            man.command = "cert";
            cmd_cert(fa, clauses, with_fstar, man, out);
        } else if (a_rep->parsed()) {
            man.command = "report";
            cmd_report(fa, from_manifest, out_path, man, out);
        }
        code = man.exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        man.failed("run_error", e.what());
        code = 1;
    }
    man.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    try {
        man.write_atomic(manifest_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace adeg
