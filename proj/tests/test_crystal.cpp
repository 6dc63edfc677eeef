#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle/tensor_model.hpp"
#include "oracle/weyl_brute.hpp"
#include "twistlab/crystal.hpp"

using namespace twistlab;

namespace {

void boxes(int dim, int hi, std::vector<Vec>& out) {
    Vec v(dim, 0);
    for (;;) {
        out.push_back(v);
        int k = 0;
        while (k < dim && v[k] == hi) v[k++] = 0;
        if (k == dim) return;
        ++v[k];
    }
}

Vec string_weight(const CartanDatum& c, const Word& w, const Vec& t) {
    Vec wt(c.rank, 0);
    for (std::size_t k = 0; k < w.size(); ++k) wt[w[k] - 1] += t[k];
    return wt;
}

// Walks B(inf) breadth-first to the given depth in both the tensor model and
// the Lusztig-data engine, checking that the two are isomorphic crystals.
void compare_with_tensor_model(char f, int r, int depth) {
    auto c = build_cartan(f, r);
    const Engine& e = engine_for(c);
    oracle::TensorModel tm(c, e.w0());
    std::map<Vec, LusztigDatum> seen;
    std::vector<Vec> frontier = {Vec(e.w0().size(), 0)};
    seen[frontier[0]] = {e.w0(), Vec(e.w0().size(), 0)};
    for (int d = 0; d < depth; ++d) {
        std::vector<Vec> next;
        for (const auto& x : frontier) {
            const LusztigDatum& b = seen.at(x);
            for (int i = 1; i <= r; ++i) {
                REQUIRE(e.epsilon(b, i) == tm.epsilon(x, i));
                Vec y = tm.lower(x, i);
                LusztigDatum fb = e.lower(b, i);
                CHECK(e.epsilon(fb, i) == e.epsilon(b, i) + 1);
                CHECK(e.raise(fb, i) == b);
                auto it = seen.find(y);
                if (it == seen.end()) {
                    seen.emplace(y, fb);
                    next.push_back(y);
                } else {
                    REQUIRE(it->second == fb);
                }
            }
        }
        frontier = std::move(next);
    }
    MESSAGE(std::string(1, f) << r << " compared " << seen.size());
}

}  // namespace

TEST_CASE("rank-2 transitions: involutive and weight preserving") {
    for (auto [f, x, y] : std::vector<std::tuple<char, int, int>>{
             {'A', 1, 2}, {'B', 1, 2}, {'B', 2, 1}, {'C', 1, 2}, {'C', 2, 1}, {'G', 1, 2}, {'G', 2, 1}}) {
        auto c = build_cartan(f, 2);
        int m = braid_order(c, x, y);
        Word u, v;
        for (int k = 0; k < m; ++k) {
            u.push_back(k % 2 ? y : x);
            v.push_back(k % 2 ? x : y);
        }
        std::vector<Vec> data;
        boxes(m, m == 6 ? 2 : 4, data);
        for (const auto& a : data) {
            LusztigDatum d{u, a};
            LusztigDatum t = braid_move_apply(c, d, {0, m});
            CHECK(t.word == v);
            for (Int z : t.a) CHECK(z >= 0);
            CHECK(weight_of(c, t) == weight_of(c, d));
            CHECK(braid_move_apply(c, t, {0, m}) == d);
        }
    }
    auto a2 = build_cartan('A', 2);
    CHECK(braid_move_apply(a2, {{1, 2, 1}, {2, 0, 1}}, {0, 3}).a == Vec{0, 1, 1});
    CHECK(braid_move_apply(a2, {{1, 2, 1}, {1, 0, 1}}, {0, 3}).a == Vec{0, 1, 0});
    CHECK(braid_move_apply(build_cartan('A', 3), {{1, 3}, {4, 7}}, {0, 2}) == LusztigDatum{{3, 1}, {7, 4}});
    CHECK_THROWS_AS(braid_move_apply(a2, {{1, 2, 1}, {1, 0, 1}}, {0, 2}), Error);
}

TEST_CASE("tits paths replay to the target") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}, {'D', 4}}) {
        auto c = build_cartan(f, r);
        const Engine& e = engine_for(c);
        oracle::WeylGroup W(c);
        auto words = W.reduced_words(e.w0());
        std::mt19937 rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            const Word& u = words[rng() % words.size()];
            const Word& v = words[rng() % words.size()];
            Word cur = u;
            Vec dummy(u.size(), 0);
            for (const auto& mv : e.tits_path(u, v)) cur = braid_move_apply(c, {cur, dummy}, mv).word;
            CHECK(cur == v);
        }
    }
    auto a3 = build_cartan('A', 3);
    const Engine& e = engine_for(a3);
    CHECK(e.tits_path({1, 2, 1}, {2, 1, 2}) == std::vector<BraidMove>{{0, 3}});
    CHECK(e.tits_path({1, 2, 1, 3, 2, 1}, {1, 2, 1, 3, 2, 1}).empty());
    CHECK_THROWS_AS(e.tits_path({1, 2, 1}, {1, 2, 3}), Error);
}

TEST_CASE("transitions agree along different paths") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}}) {
        auto c = build_cartan(f, r);
        const Engine& e = engine_for(c);
        oracle::WeylGroup W(c);
        auto words = W.reduced_words(e.w0());
        const Word& u = words.front();
        const Word& v = words.back();
        std::mt19937 rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            Vec a(u.size());
            for (auto& x : a) x = rng() % 4;
            LusztigDatum direct = e.transition({u, a}, v);
            const Word& mid = words[rng() % words.size()];
            LusztigDatum via = e.transition(e.transition({u, a}, mid), v);
            CHECK(direct == via);
            CHECK(weight_of(c, direct) == weight_of(c, {u, a}));
        }
    }
    auto a2 = build_cartan('A', 2);
    const Engine& e = engine_for(a2);
    CHECK(e.transition({{1, 2, 1}, {0, 0, 0}}, {2, 1, 2}).a == Vec{0, 0, 0});
    CHECK(e.transition({{1, 2, 1}, {1, 0, 1}}, {1, 2, 1}).a == Vec{1, 0, 1});
}

TEST_CASE("engine crystal is isomorphic to the tensor-product model") {
    compare_with_tensor_model('A', 2, 8);
    compare_with_tensor_model('A', 3, 4);
    compare_with_tensor_model('B', 2, 10);
    compare_with_tensor_model('C', 2, 10);
    compare_with_tensor_model('B', 3, 6);
    compare_with_tensor_model('C', 3, 6);
    compare_with_tensor_model('G', 2, 10);
    compare_with_tensor_model('D', 4, 5);
}

TEST_CASE("star operators") {
    LusztigDatum z1{{1, 2, 1}, {1, 0, 1}};
    auto s = star_ops(z1);
    CHECK(s.epsilon == 1);
    CHECK(star_ops(s.lowered).raised == z1);
    auto zero = star_ops({{1, 2, 1}, {0, 0, 0}});
    CHECK(zero.epsilon == 0);
    CHECK_FALSE(zero.can_raise);
}

TEST_CASE("plain operators and Kashiwara axioms") {
    auto a2 = build_cartan('A', 2);
    const Engine& e = engine_for(a2);
    LusztigDatum z1{{1, 2, 1}, {1, 0, 1}};
    CHECK(e.epsilon(z1, 1) == 0);
    CHECK(e.epsilon(z1, 2) == 1);
    for (int i = 1; i <= 2; ++i) CHECK(e.epsilon({{1, 2, 1}, {0, 0, 0}}, i) == 0);
    CHECK_THROWS_AS(e.raise({{1, 2, 1}, {0, 0, 0}}, 1), Error);

    for (char f : {'A', 'B'}) {
        auto c = build_cartan(f, 2);
        const Engine& en = engine_for(c);
        std::set<Vec> level = {Vec(en.w0().size(), 0)};
        for (int d = 0; d < 4; ++d) {
            std::set<Vec> next;
            for (const auto& a : level) {
                LusztigDatum b{en.w0(), a};
                for (int i = 1; i <= 2; ++i) {
                    LusztigDatum fb = en.lower(b, i);
                    CHECK(en.raise(fb, i) == b);
                    CHECK(en.epsilon(fb, i) == en.epsilon(b, i) + 1);
                    if (en.epsilon(b, i) > 0) CHECK(en.lower(en.raise(b, i), i) == b);
                    Vec wdiff = weight_of(c, fb);
                    Vec wb = weight_of(c, b);
                    wb[i - 1] += 1;
                    CHECK(wdiff == wb);
                    next.insert(fb.a);
                }
            }
            level = std::move(next);
        }
    }
}

TEST_CASE("extension to the longest element") {
    auto a2 = build_cartan('A', 2);
    const Engine& e = engine_for(a2);
    CHECK(e.extend_to_w0({{1}, {3}}) == LusztigDatum{{1, 2, 1}, {3, 0, 0}});
    CHECK(e.extend_to_w0({{1, 2, 1}, {1, 2, 3}}) == LusztigDatum{{1, 2, 1}, {1, 2, 3}});
    auto a5 = build_cartan('A', 5);
    CHECK(engine_for(a5).completion({3, 4, 5, 2, 3, 4, 1, 2, 3}).size() == 15);
}

TEST_CASE("string parametrization") {
    auto a2 = build_cartan('A', 2);
    const Engine& e = engine_for(a2);
    Word w = {1, 2, 1};
    std::vector<Vec> data;
    boxes(3, 5, data);
    for (const auto& a : data) {
        Int p = std::min(a[0], a[2]);
        CHECK(e.string_from_pbw(w, a) == Vec{a[0] + a[1] - p, a[1] + a[2], p});
    }
    CHECK(e.string_from_pbw(w, {0, 0, 0}) == Vec{0, 0, 0});

    auto r = e.string_reconstruct(w, {1, 1, 0});
    CHECK(r.valid);
    CHECK(r.pbw == Vec{0, 1, 0});
    auto bad = e.string_reconstruct(w, {1, 0, 1});
    CHECK_FALSE(bad.valid);
    CHECK(bad.recomputed == Vec{2, 0, 0});

    // the valid string data with small entries are exactly the cone x >= 0, y >= z >= 0
    std::vector<Vec> small;
    boxes(3, 2, small);
    for (const auto& t : small) CHECK(e.string_reconstruct(w, t).valid == (t[1] >= t[2]));

    auto a5 = build_cartan('A', 5);
    Word x3 = {3, 4, 5, 2, 3, 4, 1, 2, 3};
    CHECK(engine_for(a5).string_from_pbw(x3, {0, 0, 0, 1, 0, 0, 0, 0, 1}) == Vec{1, 1, 1, 1, 1, 0, 1, 1, 0});
}

TEST_CASE("string parametrization: conservation and round trips") {
    std::mt19937 rng(5);
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        auto c = build_cartan(f, r);
        const Engine& e = engine_for(c);
        Word w0 = e.w0();
        for (int trial = 0; trial < 40; ++trial) {
            Vec a(w0.size());
            for (auto& x : a) x = rng() % 5;
            Vec t = e.string_from_pbw(w0, a);
            CHECK(string_weight(c, w0, t) == weight_of(c, {w0, a}));
            auto rc = e.string_reconstruct(w0, t);
            CHECK(rc.valid);
            CHECK(rc.pbw == a);
        }
    }
    for (auto [f, r, word] : std::vector<std::tuple<char, int, Word>>{
             {'A', 3, {2, 1, 3, 2}}, {'A', 3, {1, 2, 3, 1}}, {'B', 3, {3, 2, 3, 1, 2}}}) {
        auto c = build_cartan(f, r);
        const Engine& e = engine_for(c);
        std::vector<Vec> data;
        boxes(static_cast<int>(word.size()), 3, data);
        for (const auto& a : data) {
            auto rc = e.string_reconstruct(word, e.string_from_pbw(word, a));
            CHECK(rc.valid);
            CHECK(rc.in_bw);
            CHECK(rc.pbw == a);
        }
    }
}

TEST_CASE("frozen vectors") {
    auto a2 = build_cartan('A', 2);
    Word w = {1, 2, 1};
    CHECK(frozen_P(w, 1) == Vec{1, 0, 1});
    CHECK(frozen_P(w, 2) == Vec{0, 1, 0});
    CHECK(frozen_S(a2, w, 1) == Vec{0, 1, 1});
    CHECK(frozen_S(a2, w, 2) == Vec{1, 1, 0});
    auto a5 = build_cartan('A', 5);
    Word x3 = {3, 4, 5, 2, 3, 4, 1, 2, 3};
    CHECK(frozen_S(a5, x3, 3) == Vec(9, 1));
    CHECK(frozen_S(a5, x3, 5) == Vec{1, 1, 1, 0, 0, 0, 0, 0, 0});

    std::mt19937 rng(9);
    for (auto [f, r, word] : std::vector<std::tuple<char, int, Word>>{
             {'A', 2, {1, 2, 1}}, {'A', 3, {2, 1, 3, 2}}, {'B', 3, {3, 2, 3, 1, 2, 3}}, {'D', 4, {2, 1, 3, 4, 2}},
             {'G', 2, {1, 2, 1, 2}}}) {
        auto c = build_cartan(f, r);
        const Engine& e = engine_for(c);
        for (int j : support(word)) {
            Vec P = frozen_P(word, j), S = frozen_S(c, word, j);
            CHECK(e.string_from_pbw(word, P) == S);
            for (int trial = 0; trial < 10; ++trial) {
                Vec x(word.size());
                for (auto& v : x) v = rng() % 4;
                Int s = rng() % 4;
                Vec xs = x, expect = e.string_from_pbw(word, x);
                for (std::size_t k = 0; k < x.size(); ++k) {
                    xs[k] += s * P[k];
                    expect[k] += s * S[k];
                }
                CHECK(e.string_from_pbw(word, xs) == expect);
            }
        }
    }
}
