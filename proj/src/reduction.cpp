#include "adeg/reduction.hpp"

#include <algorithm>
#include <bit>

namespace adeg {

BooleanFunction restrict_promise(const BooleanFunction& F, int N) {
    if (!F.is_total()) throw std::invalid_argument("restrict_promise: F must be total");
    if (N < 1) throw std::invalid_argument("restrict_promise: N must be >= 1");
    const int R = F.n();
    if (N * R > kTableArityCap) throw std::invalid_argument("restrict_promise: N*R too large");
    std::vector<uint64_t> pts;
    for (int w = 0; w <= N; ++w)
        for (uint64_t x : masks_of_weight(N * R, w)) pts.push_back(x);
    const uint64_t block_mask = (uint64_t(1) << N) - 1;
    return BooleanFunction::on_points(
        N * R, std::move(pts),
        [&](uint64_t x) {
            uint64_t outer = 0;
            for (int i = 0; i < R; ++i)
                if (((x >> (i * N)) & block_mask) != 0) outer |= uint64_t(1) << i;
            return F.value(outer);
        },
        DomainKind::MaxWeight, N, FnKind::Composed);
}

std::vector<std::vector<int>> all_lists(int N, int R) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(static_cast<size_t>(N), 0);
    while (true) {
        out.push_back(s);
        int pos = N - 1;
        while (pos >= 0 && s[pos] == R) s[pos--] = 0;
        if (pos < 0) break;
        ++s[pos];
    }
    return out;
}

std::vector<std::vector<int>> all_histograms(int N, int R) {
    std::vector<std::vector<int>> out;
    std::vector<int> z(static_cast<size_t>(R) + 1, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == R) {
            z[idx] = left;
            out.push_back(z);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            z[idx] = v;
            rec(idx + 1, left - v);
        }
    };
    rec(0, N);
    return out;
}

PropertyFunction g_prop(const BooleanFunction& F, int N) {
    if (!F.is_total()) throw std::invalid_argument("g_prop: F must be total");
    const int R = F.n();
    if ((R + 1) * N > 63) throw std::invalid_argument("g_prop: (R+1)*N too large");
    std::vector<uint64_t> pts;
    for (const auto& s : all_lists(N, R)) pts.push_back(make_encoding_state(N, R, s).y);
    PropertyFunction pf;
    pf.N = N;
    pf.R = R;
    pf.fn = BooleanFunction::on_points(
        (R + 1) * N, std::move(pts),
        [&](uint64_t y) {
            uint64_t outer = 0;
            const uint64_t row_mask = (uint64_t(1) << N) - 1;
            for (int i = 1; i <= R; ++i)
                if (((y >> (i * N)) & row_mask) != 0) outer |= uint64_t(1) << (i - 1);
            return F.value(outer);
        },
        DomainKind::Explicit, 0, FnKind::Composed);
    return pf;
}

SymmetrizedProperty g_tilde(const BooleanFunction& F, int N) {
    if (!F.is_total()) throw std::invalid_argument("g_tilde: F must be total");
    const int R = F.n();
    SymmetrizedProperty sp;
    sp.N = N;
    sp.R = R;
    for (const auto& z : all_histograms(N, R)) {
        uint64_t outer = 0;
        for (int i = 1; i <= R; ++i)
            if (z[i] > 0) outer |= uint64_t(1) << (i - 1);  // I_{>0}
        sp.values[z] = F.value(outer);
    }
    return sp;
}

Rat ZPoly::eval(const std::vector<int>& z) const {
    Rat acc = 0;
    for (const auto& [alpha, c] : terms) {
        Rat term = c;
        for (size_t i = 0; i < alpha.size(); ++i)
            for (int e = 0; e < alpha[i]; ++e) term *= z[i];
        acc += term;
    }
    return acc;
}

int ZPoly::degree() const {
    int d = 0;
    for (const auto& [alpha, c] : terms) {
        int t = 0;
        for (int a : alpha) t += a;
        d = std::max(d, t);
    }
    return d;
}

namespace {

// Multi-indices over `vars` variables with total degree <= d, graded.
std::vector<std::vector<int>> multi_indices(int vars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> alpha(static_cast<size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == vars - 1) {
            alpha[idx] = left;
            out.push_back(alpha);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            alpha[idx] = v;
            rec(idx + 1, left - v);
        }
    };
    for (int total = 0; total <= d; ++total) rec(0, total);
    return out;
}

Rat eval_multi_index(const std::vector<int>& alpha, const std::vector<int>& z) {
    Rat t = 1;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (int e = 0; e < alpha[i]; ++e) t *= z[i];
    return t;
}

}  // namespace

ZPoly ambainis_symmetrize(const MultilinearPolynomial& p, int N, int R, int d) {
    if (p.n() != (R + 1) * N)
        throw std::invalid_argument("ambainis_symmetrize: p has the wrong arity");
    // Average p(Y(s)) over the fiber {s : Z(s) = z} for every histogram z.
    std::map<std::vector<int>, Rat> sums;
    std::map<std::vector<int>, Int> counts;
    for (const auto& s : all_lists(N, R)) {
        auto st = make_encoding_state(N, R, s);
        sums[st.z] += p.eval(st.y);
        counts[st.z] += 1;
    }
    const auto histograms = all_histograms(N, R);
    std::vector<Rat> rhs;
    rhs.reserve(histograms.size());
    for (const auto& z : histograms) rhs.push_back(sums.at(z) / Rat(counts.at(z)));

    // Exact fit: monomials in z of degree <= d against the averaged table.
    const auto alphas = multi_indices(R + 1, d);
    const size_t rows = histograms.size(), cols = alphas.size();
    std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) aug[r][c] = eval_multi_index(alphas[c], histograms[r]);
        aug[r][cols] = rhs[r];
    }
    // Gaussian elimination over the rationals.
    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && aug[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(aug[row], aug[pr]);
        Rat inv = Rat(1) / aug[row][col];
        for (size_t c = col; c <= cols; ++c) aug[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (size_t c = col; c <= cols; ++c) aug[r][c] -= f * aug[row][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t r = row; r < rows; ++r)
        if (aug[r][cols] != 0)
            throw FitFailure("ambainis_symmetrize: averaged table is not degree-" +
                             std::to_string(d) + " interpolable");

    ZPoly out;
    out.vars = R + 1;
    for (size_t r = 0; r < row; ++r) {
        if (aug[r][cols] != 0)
            out.terms[alphas[static_cast<size_t>(pivot_col_of_row[r])]] = aug[r][cols];
    }
    return out;
}

MultilinearPolynomial q_transform(const ZPoly& ptilde, int N, int R) {
    if (ptilde.vars != R + 1) throw std::invalid_argument("q_transform: arity mismatch");
    const int n = N * R;
    if (n > kTableArityCap) throw std::invalid_argument("q_transform: N*R too large");
    const uint64_t block_mask = (uint64_t(1) << N) - 1;
    auto q = MultilinearPolynomial::from_values(n, [&](uint64_t x) {
        std::vector<int> z(static_cast<size_t>(R) + 1, 0);
        int total = 0;
        for (int i = 1; i <= R; ++i) {
            z[i] = weight((x >> ((i - 1) * N)) & block_mask);
            total += z[i];
        }
        z[0] = N - total;  // may be negative off the promise; the polynomial identity still holds
        return ptilde.eval(z);
    });
    if (q.degree() > ptilde.degree())
        throw std::logic_error("q_transform: degree grew under a linear substitution");
    return q;
}

int SurjEncoding::decode(uint64_t block) const {
    int v = 0;
    for (int b = 0; b < width; ++b) {
        v = (v << 1) | static_cast<int>((block >> b) & 1);
        v %= (R + 1);
    }
    return v;
}

bool SurjEncoding::surjective() const {
    if (width <= 20) {  // full decode scan
        std::vector<bool> seen(static_cast<size_t>(R) + 1, false);
        for (uint64_t b = 0; b < (uint64_t(1) << width); ++b) seen[decode(b)] = true;
        return std::all_of(seen.begin(), seen.end(), [](bool v) { return v; });
    }
    // wide blocks: exhibit one preimage per residue instead of scanning
    for (uint64_t v = 0; v <= static_cast<uint64_t>(R); ++v) {
        uint64_t block = 0;
        for (int b = 0; b < width; ++b)
            if ((v >> (width - 1 - b)) & 1) block |= uint64_t(1) << b;
        if (decode(block) != static_cast<int>(v)) return false;
    }
    return true;
}

SurjEncoding surj_encode(int R) {
    int lg = 0;
    while ((1 << lg) < R + 1) ++lg;
    return surj_encode_width(R, 6 * lg);
}

SurjEncoding surj_encode_width(int R, int width) {
    if (R < 1) throw std::invalid_argument("surj_encode: R must be >= 1");
    int lg = 0;
    while ((1 << lg) < R + 1) ++lg;
    if (width < lg) throw std::invalid_argument("surj_encode: width below ceil(log2(R+1))");
    SurjEncoding enc{R, width};
    if (!enc.surjective()) throw std::invalid_argument("surj_encode: decoder not surjective");
    return enc;
}

int Formula::eval(uint64_t x) const {
    switch (kind) {
        case Kind::Lit: {
            int v = bit_value(x, var);
            return negated ? -v : v;
        }
        case Kind::And: {
            for (const auto& k : kids)
                if (k.eval(x) == 1) return 1;
            return -1;
        }
        case Kind::Or: {
            for (const auto& k : kids)
                if (k.eval(x) == -1) return -1;
            return 1;
        }
        case Kind::Oracle: {
            uint64_t inner = 0;
            for (size_t i = 0; i < kids.size(); ++i)
                if (kids[i].eval(x) == -1) inner |= uint64_t(1) << i;
            return oracle->value(inner);
        }
    }
    return 1;
}

int Formula::depth() const {
    if (kind == Kind::Lit) return 0;
    int d = 0;
    for (const auto& k : kids) d = std::max(d, k.depth());
    return d + (kind == Kind::Oracle ? oracle_depth : 1);
}

bool Formula::monotone() const {
    if (kind == Kind::Lit) return !negated;
    if (kind == Kind::Oracle) return false;  // opaque; make no claim
    for (const auto& k : kids)
        if (!k.monotone()) return false;
    return true;
}

FormulaAccounting account_formula(const Formula& f) {
    FormulaAccounting acct;
    acct.depth = f.depth();
    acct.monotone = f.monotone();
    auto term_width = [](const Formula& t) -> int {
        if (t.kind == Formula::Kind::Lit) return 1;
        if (t.kind != Formula::Kind::And) return -1;
        int w = 0;
        for (const auto& lit : t.kids) {
            if (lit.kind != Formula::Kind::Lit) return -1;
            ++w;
        }
        return w;
    };
    if (f.kind == Formula::Kind::Or) {
        acct.is_dnf = true;
        for (const auto& t : f.kids) {
            int w = term_width(t);
            if (w < 0) {
                acct.is_dnf = false;
                break;
            }
            acct.width = std::max(acct.width, w);
        }
    } else {
        int w = term_width(f);
        acct.is_dnf = w >= 0;
        acct.width = std::max(0, w);
    }
    if (!acct.is_dnf) acct.width = 0;
    acct.bottom_gate = f.kind == Formula::Kind::Lit ? "LIT" : "AND";
    return acct;
}

namespace {

// Decoder DNF for range item i: one AND term per (position j, bit pattern p)
// with dec(p) = i.
std::vector<Formula> decoder_terms(const SurjEncoding& enc, int N, int item) {
    std::vector<Formula> terms;
    for (int j = 0; j < N; ++j) {
        for (uint64_t p = 0; p < (uint64_t(1) << enc.width); ++p) {
            if (enc.decode(p) != item) continue;
            Formula term;
            term.kind = Formula::Kind::And;
            for (int b = 0; b < enc.width; ++b) {
                Formula lit;
                lit.kind = Formula::Kind::Lit;
                lit.var = j * enc.width + b;
                lit.negated = ((p >> b) & 1) == 0;  // matches the +1 value
                term.kids.push_back(lit);
            }
            terms.push_back(std::move(term));
        }
    }
    return terms;
}

}  // namespace

GStar build_gstar(const BooleanFunction& F, int N, const SurjEncoding& enc,
                  const MonotoneDnf* F_dnf, int declared_depth) {
    if (!F.is_total()) throw std::invalid_argument("build_gstar: F must be total");
    const int R = F.n();
    if (enc.R != R) throw std::invalid_argument("build_gstar: encoding range mismatch");
    GStar gs;
    gs.N = N;
    gs.R = R;
    gs.enc = enc;
    gs.m = N * enc.width;

    if (F_dnf != nullptr) {
        if (F_dnf->n != R) throw std::invalid_argument("build_gstar: DNF arity mismatch");
        // Flatten OR(F-clauses) of AND(decoder DNFs) into one DNF.
        Formula dnf;
        dnf.kind = Formula::Kind::Or;
        for (uint64_t clause : F_dnf->clauses) {
            if (clause == 0)
                throw std::invalid_argument("build_gstar: empty clause in the base DNF");
            std::vector<int> items;
            for (int i = 0; i < R; ++i)
                if ((clause >> i) & 1) items.push_back(i + 1);
            std::vector<std::vector<Formula>> choices;
            for (int item : items) choices.push_back(decoder_terms(enc, N, item));
            std::vector<size_t> idx(choices.size(), 0);
            if (choices.empty()) continue;
            double combos = 1;
            for (const auto& c : choices) combos *= static_cast<double>(c.size());
            if (combos > double(1 << 20))
                throw std::invalid_argument("build_gstar: DNF expansion too large");
            while (true) {
                Formula term;
                term.kind = Formula::Kind::And;
                bool conflict = false;
                for (size_t c = 0; c < choices.size() && !conflict; ++c) {
                    for (const auto& lit : choices[c][idx[c]].kids) {
                        bool dup = false;
                        for (const auto& seen : term.kids) {
                            if (seen.var != lit.var) continue;
                            if (seen.negated == lit.negated)
                                dup = true;
                            else
                                conflict = true;  // unsatisfiable term, drop it
                        }
                        if (!dup && !conflict) term.kids.push_back(lit);
                    }
                }
                if (!conflict) dnf.kids.push_back(std::move(term));
                size_t pos = 0;
                while (pos < choices.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
                if (pos == choices.size()) break;
            }
        }
        gs.circuit = std::move(dnf);
    } else {
        Formula top;
        top.kind = Formula::Kind::Oracle;
        top.oracle = std::make_shared<BooleanFunction>(F);
        top.oracle_depth = declared_depth;
        for (int i = 1; i <= R; ++i) {
            Formula ci;
            ci.kind = Formula::Kind::Or;
            ci.kids = decoder_terms(enc, N, i);
            top.kids.push_back(std::move(ci));
        }
        gs.circuit = std::move(top);
    }
    gs.acct = account_formula(gs.circuit);

    gs.base = std::make_shared<BooleanFunction>(F);
    if (gs.m <= 20) {
        gs.table = std::make_shared<BooleanFunction>(
            BooleanFunction::total(gs.m, [&](uint64_t u) { return gs.eval_raw(u); },
                                   FnKind::Composed));
    }
    return gs;
}

int GStar::eval_raw(uint64_t u) const {
    uint64_t outer = 0;
    const uint64_t wmask = (uint64_t(1) << enc.width) - 1;
    for (int j = 0; j < N; ++j) {
        int item = enc.decode((u >> (j * enc.width)) & wmask);
        if (item >= 1) outer |= uint64_t(1) << (item - 1);
    }
    return base->value(outer);
}

int GStar::eval(uint64_t u) const {
    if (table) return table->value(u);
    return eval_raw(u);
}

namespace {

Formula monotone_double(const Formula& f, int m) {
    Formula out = f;
    if (f.kind == Formula::Kind::Lit) {
        if (f.negated) {
            out.var = m + f.var;
            out.negated = false;
        }
        return out;
    }
    out.kids.clear();
    for (const auto& k : f.kids) out.kids.push_back(monotone_double(k, m));
    return out;
}

}  // namespace

GFun build_g(const GStar& gs) {
    GFun g;
    g.m = gs.m;
    g.circuit = monotone_double(gs.circuit, gs.m);
    g.acct = account_formula(g.circuit);
    if (2 * gs.m <= 20) {
        g.table = std::make_shared<BooleanFunction>(BooleanFunction::total(
            2 * gs.m, [&](uint64_t y) { return g.circuit.eval(y); }, FnKind::Composed));
    }
    return g;
}

int GFun::eval(uint64_t y) const {
    if (table) return table->value(y);
    return circuit.eval(y);
}

uint64_t GFun::diagonal_point(uint64_t v) const {
    const uint64_t mask = (uint64_t(1) << m) - 1;
    return (v & mask) | ((~v & mask) << m);
}

}  // namespace adeg
