#include "twistlab/twist.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

namespace twistlab {

Vec mat_vec(const Mat& a, const Vec& v) {
    Vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat out(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l])
                for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

Mat unit_upper_inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat inv(n, Vec(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t ii = n; ii-- > 0;) {
            Int s = ii == j ? 1 : 0;
            for (std::size_t k = ii + 1; k < n; ++k) s -= a[ii][k] * inv[k][j];
            inv[ii][j] = s;
        }
    }
    return inv;
}

GLSMatrices build_MN(const CartanDatum& c, const Word& w) {
    if (!is_reduced(c, w)) throw Error("word " + word_str(w) + " is not reduced");
    std::size_t m = w.size();
    GLSMatrices g;
    g.word = w;
    g.M.assign(m, Vec(m, 0));
    g.N.assign(m, Vec(m, 0));
    for (std::size_t q = 0; q < m; ++q) {
        Vec lam = fundamental(c, w[q]);
        g.M[q][q] = 1;
        for (std::size_t p = q; p-- > 0;) {
            lam = reflect(c, w[p + 1], lam);
            g.M[p][q] = lam[w[p] - 1];
        }
    }
    auto km = kmaps(w);
    for (std::size_t p = 0; p < m; ++p) {
        g.N[p][p] = 1;
        if (km.plus[p] <= static_cast<int>(m)) g.N[p][km.plus[p] - 1] = -1;
    }
    g.Minv = unit_upper_inverse(g.M);
    g.Ninv = unit_upper_inverse(g.N);
    return g;
}

std::vector<int> missing_support(const CartanDatum& c, const Word& w) {
    auto s = support(w);
    std::vector<int> miss;
    for (int i = 1; i <= c.rank; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) miss.push_back(i);
    return miss;
}

long lcm_all(const std::vector<long>& v) {
    long l = 1;
    for (long x : v) l = std::lcm(l, x);
    return l;
}

TwistContext::TwistContext(const CartanDatum& c, Word w, int normalize_cap)
    : c_(c), w_(std::move(w)), e_(&engine_for(c)), cap_(normalize_cap) {
    gls_ = build_MN(c_, w_);
    MN_ = mat_mul(gls_.M, gls_.N);
    letters_ = support(w_);
    P_.assign(c_.rank + 1, Vec(w_.size(), 0));
    S_.assign(c_.rank + 1, Vec(w_.size(), 0));
    first_.assign(c_.rank + 1, -1);
    sumS_.assign(w_.size(), 0);
    for (int j : letters_) {
        P_[j] = frozen_P(w_, j);
        S_[j] = frozen_S(c_, w_, j);
        for (std::size_t k = 0; k < w_.size(); ++k) sumS_[k] += S_[j][k];
    }
    for (std::size_t k = w_.size(); k-- > 0;) first_[w_[k]] = static_cast<int>(k);
}

Vec TwistContext::nonneg_shift(const Vec& pbw, Vec* shift) const {
    Vec out = pbw;
    Vec sh(c_.rank, 0);
    for (std::size_t k = 0; k < w_.size(); ++k) sh[w_[k] - 1] = std::max(sh[w_[k] - 1], -pbw[k]);
    for (std::size_t k = 0; k < w_.size(); ++k) out[k] += sh[w_[k] - 1];
    if (shift) *shift = sh;
    return out;
}

Vec TwistContext::psi(const Vec& pbw) const {
    if (pbw.size() != w_.size()) throw Error("vector length does not match word length");
    Vec sh;
    Vec q = nonneg_shift(pbw, &sh);
    Vec t = e_->string_from_pbw(w_, q);
    for (int j : letters_)
        if (sh[j - 1])
            for (std::size_t k = 0; k < t.size(); ++k) t[k] -= sh[j - 1] * S_[j][k];
    return t;
}

Vec TwistContext::psi_inv(const Vec& str, Vec* shift) const {
    if (str.size() != w_.size()) throw Error("vector length does not match word length");
    std::size_t m = w_.size();
    Int n0 = 0;
    for (std::size_t k = 0; k < m; ++k)
        if (str[k] < 0) n0 = std::max(n0, (-str[k] + sumS_[k] - 1) / sumS_[k]);
    std::vector<Vec> tried;
    auto attempt = [&](const Vec& per_letter) -> std::optional<Vec> {
        Vec c = str;
        for (int j : letters_)
            for (std::size_t k = 0; k < m; ++k) c[k] += per_letter[j - 1] * S_[j][k];
        for (Int x : c)
            if (x < 0) return std::nullopt;
        auto r = e_->string_reconstruct(w_, c);
        if (!(r.valid && r.in_bw)) {
            if (tried.size() < 16) tried.push_back(per_letter);
            return std::nullopt;
        }
        Vec p = r.pbw;
        for (std::size_t k = 0; k < m; ++k) p[k] -= per_letter[w_[k] - 1];
        if (shift) *shift = per_letter;
        return p;
    };
    for (Int n = n0; n <= n0 + cap_; ++n) {
        Vec per(c_.rank, 0);
        for (int j : letters_) per[j - 1] = n;
        if (auto p = attempt(per)) return *p;
    }
    // Per-letter shifts around the uniform starting point, by increasing total.
    std::size_t L = letters_.size();
    for (Int total = 0; total <= cap_; ++total) {
        std::vector<Int> parts(L, 0);
        std::function<std::optional<Vec>(std::size_t, Int)> rec = [&](std::size_t idx, Int left) -> std::optional<Vec> {
            if (idx + 1 == L) {
                parts[idx] = left;
                Vec per(c_.rank, 0);
                for (std::size_t q = 0; q < L; ++q) per[letters_[q] - 1] = n0 + parts[q];
                return attempt(per);
            }
            for (Int x = 0; x <= left; ++x) {
                parts[idx] = x;
                if (auto p = rec(idx + 1, left - x)) return p;
            }
            return std::nullopt;
        };
        if (L && total <= 8)
            if (auto p = rec(0, total)) return *p;
    }
    throw NormalizationError("frozen normalization failed for string vector " + vec_str(str), tried);
}

Vec TwistContext::canonical(const Vec& pbw) const {
    Vec out = pbw;
    for (int j : letters_) {
        Int base = pbw[first_[j]];
        if (base)
            for (std::size_t k = 0; k < out.size(); ++k)
                if (w_[k] == j) out[k] -= base;
    }
    return out;
}

bool TwistContext::equiv(const Vec& x, const Vec& y) const { return canonical(x) == canonical(y); }

Vec TwistContext::string_to_pbw_lattice(const Vec& s) const {
    return mat_vec(gls_.Ninv, mat_vec(gls_.Minv, s));
}

bool TwistContext::equiv_string(const Vec& s, const Vec& t) const {
    return equiv(string_to_pbw_lattice(s), string_to_pbw_lattice(t));
}

std::pair<Vec, Vec> TwistContext::g_vectors(const Vec& pbw) const {
    return {mat_vec(gls_.Minv, psi(pbw)), mat_vec(gls_.N, pbw)};
}

Vec TwistContext::twist_string_image(const Vec& pbw) const {
    Vec v = mat_vec(MN_, pbw);
    for (auto& x : v) x = -x;
    return v;
}

Vec TwistContext::forward(const Vec& pbw, Vec* shift) const { return psi_inv(twist_string_image(pbw), shift); }

Vec TwistContext::inverse(const Vec& pbw) const {
    Vec v = string_to_pbw_lattice(psi(pbw));
    for (auto& x : v) x = -x;
    return v;
}

Vec TwistContext::power(const Vec& pbw, long k) const {
    Vec x = pbw;
    for (long s = 0; s < k; ++s) x = forward(x);
    for (long s = 0; s > k; --s) x = inverse(x);
    return x;
}

Vec TwistContext::minor(int k) const {
    if (k < 1 || k > length()) throw Error("minor index out of range");
    Vec col(w_.size());
    for (std::size_t p = 0; p < w_.size(); ++p) col[p] = gls_.M[p][k - 1];
    return psi_inv(col);
}

std::optional<long> TwistContext::xi(int k, long cap) const {
    Vec start = canonical(minor(k));
    Vec x = start;
    for (long p = 1; p <= cap; ++p) {
        x = canonical(inverse(x));
        if (x == start) return p;
    }
    return std::nullopt;
}

PeriodResult TwistContext::period(long cap, int threads) const {
    auto miss = missing_support(c_, w_);
    if (!miss.empty()) throw Error("support of " + word_str(w_) + " is not the full index set");
    PeriodResult res;
    res.cap = cap;
    int m = length();
    res.xi.assign(m, std::nullopt);
    auto fz = kmaps(w_).frozen;
    std::vector<char> frozen(m, 0);
    for (int k : fz) frozen[k - 1] = 1;
    std::atomic<int> next{0};
    auto work = [&] {
        for (int k; (k = next.fetch_add(1)) < m;) res.xi[k] = frozen[k] ? std::optional<long>(1) : xi(k + 1, cap);
    };
    int nt = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nt = std::min(nt, std::max(1, m));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::vector<long> vals;
    for (auto& x : res.xi) {
        if (!x) return res;
        vals.push_back(*x);
    }
    res.value = lcm_all(vals);
    return res;
}

PeriodResult parabolic_period(const CartanDatum& c, const std::vector<int>& J, long cap, int threads) {
    std::vector<int> s = J;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("repeated node in J");
    Word w = coset_longest(c, s);
    if (w.empty()) return {1, cap, {}};
    return TwistContext(c, w).period(cap, threads);
}

LocalizedElement twist_apply(const TwistContext& ctx, const LocalizedElement& x, bool forward_dir) {
    if (x.word != ctx.word()) throw Error("element word does not match the context word");
    return {x.word, forward_dir ? ctx.forward(x.pbw) : ctx.inverse(x.pbw)};
}

}  // namespace twistlab
