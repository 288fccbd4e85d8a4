#include "adeg/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace adeg {

BooleanFunction BooleanFunction::total(int n, const std::function<int(uint64_t)>& eval,
                                       FnKind kind) {
    if (n < 0 || n > kTableArityCap)
        throw std::invalid_argument("BooleanFunction::total: arity out of range");
    BooleanFunction f;
    f.n_ = n;
    f.domain_ = DomainKind::All;
    f.kind_ = kind;
    f.dense_.resize(size_t(1) << n);
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
        int v = eval(m);
        if (v != 1 && v != -1) throw std::invalid_argument("BooleanFunction: value not in {-1,+1}");
        f.dense_[m] = static_cast<int8_t>(v);
    }
    return f;
}

BooleanFunction BooleanFunction::on_points(int n, std::vector<uint64_t> points,
                                           const std::function<int(uint64_t)>& eval,
                                           DomainKind dk, int weight_cap, FnKind kind) {
    if (n < 0 || n > 63) throw std::invalid_argument("BooleanFunction::on_points: bad arity");
    BooleanFunction f;
    f.n_ = n;
    f.domain_ = dk;
    f.weight_cap_ = weight_cap;
    f.kind_ = kind;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    f.points_ = std::move(points);
    f.sparse_vals_.reserve(f.points_.size());
    for (uint64_t m : f.points_) {
        if (n < 64 && (m >> n) != 0)
            throw std::invalid_argument("BooleanFunction: point outside the cube");
        if (dk == DomainKind::MaxWeight && weight(m) > weight_cap)
            throw std::invalid_argument("BooleanFunction: point above the weight cap");
        int v = eval(m);
        if (v != 1 && v != -1) throw std::invalid_argument("BooleanFunction: value not in {-1,+1}");
        f.sparse_vals_.push_back(static_cast<int8_t>(v));
    }
    return f;
}

bool BooleanFunction::in_domain(uint64_t mask) const {
    if (n_ < 64 && (mask >> n_) != 0) return false;
    if (domain_ == DomainKind::All) return true;
    return std::binary_search(points_.begin(), points_.end(), mask);
}

int BooleanFunction::value(uint64_t mask) const {
    if (domain_ == DomainKind::All) {
        if ((mask >> n_) != 0) throw std::out_of_range("BooleanFunction::value: off the cube");
        return dense_[mask];
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), mask);
    if (it == points_.end() || *it != mask)
        throw std::out_of_range("BooleanFunction::value: point not in domain");
    return sparse_vals_[static_cast<size_t>(it - points_.begin())];
}

size_t BooleanFunction::domain_size() const {
    if (domain_ == DomainKind::All) return size_t(1) << n_;
    return points_.size();
}

std::vector<uint64_t> BooleanFunction::domain_points() const {
    if (domain_ != DomainKind::All) return points_;
    std::vector<uint64_t> pts(size_t(1) << n_);
    for (uint64_t m = 0; m < pts.size(); ++m) pts[m] = m;
    return pts;
}

BooleanFunction BooleanFunction::negated() const {
    BooleanFunction f = *this;
    for (auto& v : f.dense_) v = static_cast<int8_t>(-v);
    for (auto& v : f.sparse_vals_) v = static_cast<int8_t>(-v);
    f.kind_ = FnKind::Table;
    return f;
}

BooleanFunction make_basic(FnKind kind, int n, int const_sign) {
    if (kind == FnKind::Const) {
        if (n < 0) throw std::invalid_argument("make_basic: negative arity");
        if (const_sign != 1 && const_sign != -1)
            throw std::invalid_argument("make_basic: CONST sign must be +1 or -1");
        return BooleanFunction::total(n, [&](uint64_t) { return const_sign; }, FnKind::Const);
    }
    if (n < 1) throw std::invalid_argument("make_basic: arity must be >= 1");
    switch (kind) {
        case FnKind::Or:
            return BooleanFunction::total(n, [](uint64_t m) { return m != 0 ? -1 : +1; },
                                          FnKind::Or);
        case FnKind::And:
            return BooleanFunction::total(
                n, [n](uint64_t m) { return weight(m) == n ? -1 : +1; }, FnKind::And);
        case FnKind::Maj:
            // ties (even arity, weight exactly n/2) go to +1
            return BooleanFunction::total(
                n, [n](uint64_t m) { return 2 * weight(m) > n ? -1 : +1; }, FnKind::Maj);
        case FnKind::Parity:
            return BooleanFunction::total(
                n, [](uint64_t m) { return weight(m) % 2 == 1 ? -1 : +1; }, FnKind::Parity);
        default:
            throw std::invalid_argument("make_basic: unsupported kind");
    }
}

BooleanFunction block_compose(const BooleanFunction& f, const BooleanFunction& g) {
    if (!f.is_total() || !g.is_total())
        throw std::invalid_argument("block_compose: both functions must be total");
    const int M = f.n(), m = g.n();
    if (M * m > kTableArityCap)
        throw std::invalid_argument("block_compose: composed arity exceeds table cap");
    const uint64_t block_mask = m == 64 ? ~uint64_t(0) : (uint64_t(1) << m) - 1;
    return BooleanFunction::total(
        M * m,
        [&](uint64_t x) {
            uint64_t outer = 0;
            for (int i = 0; i < M; ++i) {
                uint64_t xi = (x >> (i * m)) & block_mask;
                if (g.value(xi) == -1) outer |= uint64_t(1) << i;
            }
            return f.value(outer);
        },
        FnKind::Composed);
}

int surj_block_decode(uint64_t mask, int block, int width) {
    int v = 0;
    for (int b = 0; b < width; ++b) {
        v <<= 1;
        v |= static_cast<int>((mask >> (block * width + b)) & 1);
    }
    return v + 1;
}

BooleanFunction surjectivity(int N, int R) {
    if (R < 2 || (R & (R - 1)) != 0)
        throw std::invalid_argument("surjectivity: R must be a power of two >= 2");
    if (N < R) throw std::invalid_argument("surjectivity: need N >= R");
    const int w = std::countr_zero(static_cast<unsigned>(R));
    if (N * w > kTableArityCap)
        throw std::invalid_argument("surjectivity: table too large");
    return BooleanFunction::total(
        N * w,
        [&](uint64_t x) {
            uint64_t seen = 0;
            for (int j = 0; j < N; ++j) seen |= uint64_t(1) << (surj_block_decode(x, j, w) - 1);
            return seen == (R == 64 ? ~uint64_t(0) : (uint64_t(1) << R) - 1) ? -1 : +1;
        },
        FnKind::Surj);
}

int eval_monotone_dnf(const MonotoneDnf& f, uint64_t x) {
    for (uint64_t c : f.clauses)
        if ((c & x) == c) return -1;
    return +1;
}

BooleanFunction fstar(const MonotoneDnf& f) {
    if (f.clauses.empty()) throw std::invalid_argument("fstar: empty clause list");
    const int n = f.n;
    if (2 * n > kTableArityCap) throw std::invalid_argument("fstar: table too large");
    return BooleanFunction::total(2 * n, [&](uint64_t x) {
        uint64_t gamma_true = 0;  // variables whose selected value is -1
        uint64_t defined = 0;     // balanced pairs
        bool has_plus_plus = false;
        for (int i = 0; i < n; ++i) {
            bool lo = (x >> i) & 1, hi = (x >> (n + i)) & 1;
            if (lo != hi) {
                defined |= uint64_t(1) << i;
                if (lo) gamma_true |= uint64_t(1) << i;
            } else if (!lo) {
                has_plus_plus = true;
            }
        }
        if (has_plus_plus) return +1;
        for (uint64_t c : f.clauses)
            if ((c & defined) == c && (c & gamma_true) == c) return -1;
        return +1;
    });
}

namespace {

// Is S a certificate for f at x? All points agreeing with x on S share f(x).
bool is_certificate(const BooleanFunction& f, uint64_t x, uint64_t S) {
    const int fx = f.value(x);
    const int n = f.n();
    uint64_t free = ((n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1)) & ~S;
    // walk subsets of the free coordinates
    uint64_t sub = 0;
    while (true) {
        uint64_t y = (x & S) | sub;
        if (f.value(y) != fx) return false;
        if (sub == free) break;
        sub = (sub - free) & free;
    }
    return true;
}

}  // namespace

CertificateReport certificate_complexity(const BooleanFunction& f, int brute_cap) {
    if (!f.is_total()) throw std::invalid_argument("certificate_complexity: f must be total");
    if (f.n() > brute_cap)
        throw std::invalid_argument("certificate_complexity: arity above brute-force cap");
    const int n = f.n();
    CertificateReport rep;
    rep.n = n;
    rep.size_at.assign(size_t(1) << n, n);
    rep.witness_at.assign(size_t(1) << n, 0);
    for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) {
        bool found = false;
        for (int s = 0; s <= n && !found; ++s) {
            for (uint64_t S : masks_of_weight(n, s)) {
                if (is_certificate(f, x, S)) {
                    rep.size_at[x] = s;
                    rep.witness_at[x] = S;
                    found = true;
                    break;
                }
            }
        }
        rep.c_all = std::max(rep.c_all, rep.size_at[x]);
        if (f.value(x) == -1)
            rep.c_minus = std::max(rep.c_minus, rep.size_at[x]);
        else
            rep.c_plus = std::max(rep.c_plus, rep.size_at[x]);
    }
    return rep;
}

FstarCertificateReport fstar_certificate_structure(const MonotoneDnf& f) {
    auto fs = fstar(f);
    const int n = f.n;
    FstarCertificateReport rep;
    rep.n = n;
    rep.plus_entries_at.assign(size_t(1) << (2 * n), 0);
    for (uint64_t x = 0; x < (uint64_t(1) << (2 * n)); ++x) {
        uint64_t S = 0;
        if (fs.value(x) == -1) {
            // a satisfied clause's pairs plus every -1 coordinate
            for (uint64_t cl : f.clauses) {
                bool sat = true;
                for (int i = 0; i < n && sat; ++i) {
                    if (!((cl >> i) & 1)) continue;
                    bool lo = (x >> i) & 1, hi = (x >> (n + i)) & 1;
                    if (!(lo && !hi)) sat = false;  // need a balanced pair with x_i = -1
                }
                if (sat) {
                    for (int i = 0; i < n; ++i)
                        if ((cl >> i) & 1) S |= (uint64_t(1) << i) | (uint64_t(1) << (n + i));
                    break;
                }
            }
            S |= x;  // all -1 coordinates
        } else {
            int open_pair = -1;
            for (int i = 0; i < n; ++i)
                if (!((x >> i) & 1) && !((x >> (n + i)) & 1)) open_pair = i;
            if (open_pair >= 0)
                S = (uint64_t(1) << open_pair) | (uint64_t(1) << (n + open_pair));
            else
                S = x;  // all -1 coordinates
        }
        if (!is_certificate(fs, x, S)) rep.all_verified = false;
        int plus = 0;
        for (int i = 0; i < 2 * n; ++i)
            if (((S >> i) & 1) && !((x >> i) & 1)) ++plus;
        rep.plus_entries_at[x] = plus;
        rep.max_plus_entries = std::max(rep.max_plus_entries, plus);
    }
    return rep;
}

EncodingState make_encoding_state(int N, int R, const std::vector<int>& s) {
    if (N < 1 || R < 1) throw std::invalid_argument("make_encoding_state: need N,R >= 1");
    if (static_cast<int>(s.size()) != N)
        throw std::invalid_argument("make_encoding_state: list length != N");
    if ((R + 1) * N > 63) throw std::invalid_argument("make_encoding_state: Y table too wide");
    EncodingState st;
    st.N = N;
    st.R = R;
    st.s = s;
    st.z.assign(R + 1, 0);
    for (int j = 0; j < N; ++j) {
        if (s[j] < 0 || s[j] > R)
            throw std::invalid_argument("make_encoding_state: entry outside [0..R]");
        st.y |= uint64_t(1) << (s[j] * N + j);
        ++st.z[s[j]];
    }
    return st;
}

}  // namespace adeg
