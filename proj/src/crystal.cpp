#include "twistlab/crystal.hpp"

#include <algorithm>
#include <limits>

namespace twistlab {

namespace {

constexpr Int kLimit = Int(1) << 58;

inline Int guard(Int x) {
    if (x > kLimit || x < -kLimit) throw Error("integer range exceeded in crystal arithmetic");
    return x;
}

Vec reversed(const Vec& v) { return Vec(v.rbegin(), v.rend()); }

Vec plucker_b2(const Vec& t) {
    Int t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3];
    Int pi1 = std::min(t1 + t2, std::min(t1, t3) + t4);
    Int pi2 = std::min(2 * t1 + t2, 2 * std::min(t1, t3) + t4);
    return {t2 + 2 * t3 + t4 - pi2, pi2 - pi1, 2 * pi1 - pi2, t1 + t2 + t3 - pi1};
}

Vec plucker_g2(const Vec& t) {
    Int t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3], t5 = t[4], t6 = t[5];
    Int m13 = std::min(t1, t3), m35 = std::min(t3, t5);
    Int q = std::min({t1 + t3, 2 * t3, t3 + t5, t1 + t5});
    Int pi1 = std::min({t1 + t2 + 2 * t3 + t4, t1 + t2 + 2 * m35 + t6, m13 + t4 + 2 * t5 + t6});
    Int pi2 = std::min({2 * t1 + 2 * t2 + 3 * t3 + t4, 2 * t1 + 2 * t2 + 3 * m35 + t6,
                        2 * m13 + 2 * t4 + 3 * t5 + t6, t1 + t2 + t4 + 2 * t5 + t6 + q});
    Int pi3 = std::min({3 * t1 + 2 * t2 + 3 * t3 + t4, 3 * t1 + 2 * t2 + 3 * m35 + t6,
                        3 * m13 + 2 * t4 + 3 * t5 + t6, 2 * t1 + t2 + t4 + 2 * t5 + t6 + q});
    Int inner = std::min({t1 + t2 + 3 * t3 + t4, t1 + t2 + 3 * m35 + t6, q + t4 + 2 * t5 + t6});
    Int pi4 = std::min(2 * t1 + 2 * t2 + 3 * t3 + t4 + inner,
                       2 * t6 + 3 * std::min(t1 + t2 + 2 * m35, m13 + t4 + 2 * t5));
    return {t2 + 3 * t3 + 2 * t4 + 3 * t5 + t6 - pi3, pi3 - pi2, 3 * pi2 - pi3 - pi4,
            pi4 - pi1 - pi2, 3 * pi1 - pi4, t1 + t2 + 2 * t3 + t4 + t5 - pi1};
}

}  // namespace

int braid_order(const CartanDatum& c, int i, int j) {
    switch (c(i, j) * c(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    }
    throw Error("unsupported rank-2 pair");
}

Vec rank2_transition(Int aij, Int aji, const Vec& t) {
    for (Int x : t) guard(x);
    Vec out;
    if (aij == 0 && aji == 0) {
        out = {t[1], t[0]};
    } else if (aij == -1 && aji == -1) {
        Int p = std::min(t[0], t[2]);
        out = {t[1] + t[2] - p, p, t[0] + t[1] - p};
    } else if (aij == -1 && aji == -2) {
        out = plucker_b2(t);
    } else if (aij == -2 && aji == -1) {
        out = reversed(plucker_b2(reversed(t)));
    } else if (aij == -1 && aji == -3) {
        out = plucker_g2(t);
    } else if (aij == -3 && aji == -1) {
        out = reversed(plucker_g2(reversed(t)));
    } else {
        throw Error("unsupported rank-2 pair");
    }
    for (Int x : out) guard(x);
    return out;
}

static void apply_move(const CartanDatum& c, Word& word, Vec& a, const BraidMove& mv) {
    int p = mv.pos, m = mv.m;
    if (p < 0 || p + m > static_cast<int>(word.size())) throw Error("braid move out of range");
    int x = word[p], y = word[p + 1];
    if (x == y || braid_order(c, x, y) != m) throw Error("braid move not applicable");
    for (int k = 0; k < m; ++k)
        if (word[p + k] != (k % 2 ? y : x)) throw Error("braid move not applicable");
    Vec block(a.begin() + p, a.begin() + p + m);
    Vec nb = rank2_transition(c(x, y), c(y, x), block);
    for (int k = 0; k < m; ++k) {
        a[p + k] = nb[k];
        word[p + k] = k % 2 ? x : y;
    }
}

LusztigDatum braid_move_apply(const CartanDatum& c, const LusztigDatum& d, const BraidMove& mv) {
    LusztigDatum out = d;
    apply_move(c, out.word, out.a, mv);
    return out;
}

Vec weight_of(const CartanDatum& c, const LusztigDatum& d) {
    auto betas = beta_sequence(c, d.word);
    Vec wt(c.rank, 0);
    for (std::size_t k = 0; k < betas.size(); ++k)
        for (int i = 0; i < c.rank; ++i) wt[i] += d.a[k] * betas[k][i];
    return wt;
}

StarOps star_ops(const LusztigDatum& d) {
    if (d.word.empty()) throw Error("star operators need a nonempty word");
    StarOps s{d.a[0], {}, d, d.a[0] > 0};
    s.lowered.a[0] += 1;
    if (s.can_raise) {
        s.raised = d;
        s.raised.a[0] -= 1;
    }
    return s;
}

Engine::Engine(CartanDatum c) : c_(std::move(c)) {
    w0_ = longest_word(c_);
    dag_ = dagger(c_);
    end_.assign(c_.rank + 1, {});
    for (int i = 1; i <= c_.rank; ++i) {
        Word start = complete_to_longest(c_, Word{i});
        end_[i] = Word(start.rbegin(), start.rend());
    }
}

void Engine::path_rec(const Word& u, const Word& v, int offset, std::vector<BraidMove>& out) const {
    std::size_t k = 0;
    while (k < u.size() && u[k] == v[k]) ++k;
    if (k == u.size()) return;
    Word us(u.begin() + k, u.end()), vs(v.begin() + k, v.end());
    offset += static_cast<int>(k);
    int a = us[0], b = vs[0];
    int m = braid_order(c_, a, b);
    Word ab, ba;
    for (int r = 0; r < m; ++r) {
        ab.push_back(r % 2 ? b : a);
        ba.push_back(r % 2 ? a : b);
    }
    Vec rho(c_.rank, 1);
    Vec y = act_word(c_, Word(ab.rbegin(), ab.rend()), act_word(c_, us, rho));
    Word rest;
    for (;;) {
        int desc = 0;
        for (int i = 1; i <= c_.rank && !desc; ++i)
            if (y[i - 1] < 0) desc = i;
        if (!desc) break;
        rest.push_back(desc);
        y = reflect(c_, desc, y);
    }
    Word z = ab, z2 = ba;
    z.insert(z.end(), rest.begin(), rest.end());
    z2.insert(z2.end(), rest.begin(), rest.end());
    if (z.size() != us.size()) throw Error("words do not represent the same element");
    path_rec(us, z, offset, out);
    out.push_back({offset, m});
    path_rec(z2, vs, offset, out);
}

std::vector<BraidMove> Engine::tits_path(const Word& u, const Word& v) const {
    {
        std::shared_lock lk(mu_);
        auto it = paths_.find({u, v});
        if (it != paths_.end()) return it->second;
    }
    if (u.size() != v.size() || !is_reduced(c_, u) || !is_reduced(c_, v) || !same_element(c_, u, v))
        throw Error("words " + word_str(u) + " and " + word_str(v) + " are not reduced words of one element");
    std::vector<BraidMove> out;
    path_rec(u, v, 0, out);
    std::unique_lock lk(mu_);
    paths_.emplace(std::make_pair(u, v), out);
    return out;
}

void Engine::apply_path(Word& word, Vec& a, const Word& target) const {
    if (word == target) return;
    for (const auto& mv : tits_path(word, target)) apply_move(c_, word, a, mv);
}

LusztigDatum Engine::transition(const LusztigDatum& d, const Word& target) const {
    LusztigDatum out = d;
    apply_path(out.word, out.a, target);
    return out;
}

const Word& Engine::completion(const Word& w) const {
    {
        std::shared_lock lk(mu_);
        auto it = completions_.find(w);
        if (it != completions_.end()) return it->second;
    }
    Word full = complete_to_longest(c_, w);
    std::unique_lock lk(mu_);
    return completions_.emplace(w, full).first->second;
}

LusztigDatum Engine::extend_to_w0(const LusztigDatum& d) const {
    LusztigDatum out{completion(d.word), d.a};
    out.a.resize(out.word.size(), 0);
    return out;
}

Int Engine::epsilon(const LusztigDatum& d, int i) const {
    LusztigDatum e = transition(extend_to_w0(d), end_[dag_[i]]);
    return e.a.back();
}

LusztigDatum Engine::raise(const LusztigDatum& d, int i) const {
    LusztigDatum full = extend_to_w0(d);
    Word back = full.word;
    LusztigDatum e = transition(full, end_[dag_[i]]);
    if (e.a.back() == 0) throw Error("element is highest for index " + std::to_string(i));
    e.a.back() -= 1;
    return transition(e, back);
}

LusztigDatum Engine::lower(const LusztigDatum& d, int i) const {
    LusztigDatum full = extend_to_w0(d);
    Word back = full.word;
    LusztigDatum e = transition(full, end_[dag_[i]]);
    e.a.back() = guard(e.a.back() + 1);
    return transition(e, back);
}

Vec Engine::string_from_pbw(const Word& w, const Vec& a) const {
    if (a.size() != w.size()) throw Error("datum length does not match word length");
    for (Int x : a)
        if (x < 0) throw Error("PBW datum must be nonnegative");
    Word word = completion(w);
    Vec v = a;
    v.resize(word.size(), 0);
    Vec t(w.size(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        apply_path(word, v, end_[dag_[w[k]]]);
        t[k] = v.back();
        v.back() = 0;
    }
    for (Int x : v)
        if (x != 0) throw Error("string extraction did not exhaust the element: inconsistent conventions");
    return t;
}

Reconstruction Engine::string_reconstruct(const Word& w, const Vec& t) const {
    if (t.size() != w.size()) throw Error("string length does not match word length");
    for (Int x : t)
        if (x < 0) throw Error("string datum must be nonnegative");
    Reconstruction r;
    Word word = w0_;
    Vec v(word.size(), 0);
    for (std::size_t k = w.size(); k-- > 0;) {
        apply_path(word, v, end_[dag_[w[k]]]);
        v.back() = guard(v.back() + t[k]);
    }
    apply_path(word, v, completion(w));
    r.full = v;
    r.pbw = Vec(v.begin(), v.begin() + static_cast<long>(w.size()));
    r.in_bw = std::all_of(v.begin() + static_cast<long>(w.size()), v.end(), [](Int x) { return x == 0; });
    r.valid = false;
    if (r.in_bw) {
        r.recomputed = string_from_pbw(w, r.pbw);
        r.valid = r.recomputed == t;
    }
    return r;
}

const Engine& engine_for(const CartanDatum& c) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::unique_ptr<Engine>> cache;
    std::lock_guard lk(mu);
    auto& slot = cache[{c.family, c.rank}];
    if (!slot) slot = std::make_unique<Engine>(c);
    return *slot;
}

Vec frozen_P(const Word& w, int j) {
    Vec p(w.size(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) p[k] = w[k] == j ? 1 : 0;
    return p;
}

Vec frozen_S(const CartanDatum& c, const Word& w, int j) {
    Vec s(w.size(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word tail(w.begin() + static_cast<long>(k) + 1, w.end());
        s[k] = act_word(c, tail, fundamental(c, j))[w[k] - 1];
    }
    return s;
}

}  // namespace twistlab
