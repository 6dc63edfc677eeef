#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle/weyl_brute.hpp"
#include "twistlab/cartan.hpp"

using namespace twistlab;

TEST_CASE("cartan matrices and symmetrizers") {
    auto a2 = build_cartan('A', 2);
    CHECK(a2.a == Mat{{2, -1}, {-1, 2}});
    CHECK(a2.d == Vec{1, 1});
    auto b2 = build_cartan('B', 2);
    CHECK(b2.a == Mat{{2, -1}, {-2, 2}});
    CHECK(b2.d == Vec{2, 1});
    auto d4 = build_cartan('D', 4);
    for (int i = 1; i <= 4; ++i)
        if (i != 4) CHECK(d4(i, 4) == (i == 2 ? -1 : 0));
    CHECK_THROWS_AS(build_cartan('D', 3), Error);
    CHECK_THROWS_AS(build_cartan('G', 3), Error);
    CHECK_THROWS_AS(build_cartan('X', 2), Error);

    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 5}, {'B', 4}, {'C', 4}, {'D', 5}, {'E', 6},
                                                         {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) {
        auto c = build_cartan(f, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                CHECK(c.d[i] * c.a[i][j] == c.d[j] * c.a[j][i]);
                if (i != j) CHECK(c.a[i][j] <= 0);
                CHECK((c.a[i][j] == 0) == (c.a[j][i] == 0));
            }
        CHECK(static_cast<int>(longest_word(c).size()) == num_positive_roots(c));
        if (f != 'E') {
            oracle::WeylGroup W(c);
            int maxlen = 0;
            for (auto& [v, l] : W.length) maxlen = std::max(maxlen, l);
            CHECK(maxlen == num_positive_roots(c));
        }
    }
}

TEST_CASE("reflections") {
    auto c = build_cartan('A', 2);
    CHECK(reflect(c, 1, Vec{1, 0}) == Vec{-1, 1});
    CHECK(reflect(c, 1, Vec{0, 3}) == Vec{0, 3});
    CHECK(act_word(c, {}, Vec{2, 5}) == Vec{2, 5});
    CHECK(act_word(c, {2}, Vec{1, 1}) == reflect(c, 2, Vec{1, 1}));

    auto a3 = build_cartan('A', 3);
    Vec lam = act_word(a3, {2, 1, 3, 2}, Vec{0, 1, 0});
    CHECK(lam == Vec{0, -1, 0});
    CHECK(lam == [&] {
        Vec v{0, 1, 0};
        Vec r = root_to_weight(a3, Vec{1, 2, 1});
        for (int i = 0; i < 3; ++i) v[i] -= r[i];
        return v;
    }());

    for (auto [f, r] : std::vector<std::pair<char, int>>{{'B', 3}, {'G', 2}, {'C', 3}}) {
        auto cd = build_cartan(f, r);
        std::vector<Word> grid;
        for (int x = -10; x <= 10; x += 3)
            for (int y = -10; y <= 10; y += 4) {
                Vec v(r, 0);
                v[0] = x;
                v[1] = y;
                for (int i = 1; i <= r; ++i) CHECK(reflect(cd, i, reflect(cd, i, v)) == v);
            }
    }
}

TEST_CASE("reducedness agrees with brute-force length") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
        auto c = build_cartan(f, r);
        oracle::WeylGroup W(c);
        for (int len = 0; len <= 6; ++len) {
            std::vector<Word> words;
            oracle::all_words(r, len, words);
            for (const auto& w : words) CHECK(is_reduced(c, w) == (W.len(w) == len));
        }
    }
    auto a2 = build_cartan('A', 2);
    CHECK_FALSE(is_reduced(a2, {1, 1}));
    CHECK_FALSE(is_reduced(a2, {1, 2, 1, 2}));
    CHECK(is_reduced(build_cartan('A', 5), {3, 4, 5, 2, 3, 4, 1, 2, 3}));
}

TEST_CASE("beta sequences") {
    auto a5 = build_cartan('A', 5);
    auto betas = beta_sequence(a5, {3, 4, 5, 2, 3, 4, 1, 2, 3});
    std::vector<Vec> expect = {{0, 0, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 1, 1},
                               {0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 1, 1},
                               {1, 1, 1, 0, 0}, {1, 1, 1, 1, 0}, {1, 1, 1, 1, 1}};
    CHECK(betas == expect);
    auto b4 = build_cartan('B', 4);
    auto bb = beta_sequence(b4, {4, 3, 2, 1, 4, 3, 2, 4, 3, 4});
    CHECK(bb[0] == Vec{0, 0, 0, 1});
    CHECK(bb[1] == Vec{0, 0, 1, 2});
    CHECK(beta_sequence(b4, {2}) == std::vector<Vec>{{0, 1, 0, 0}});
}

TEST_CASE("inversion sets are braid invariant") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}, {'C', 3}}) {
        auto c = build_cartan(f, r);
        oracle::WeylGroup W(c);
        Word w0 = longest_word(c);
        std::set<Vec> ref;
        for (auto& b : beta_sequence(c, w0)) ref.insert(b);
        CHECK(static_cast<int>(ref.size()) == num_positive_roots(c));
        auto words = W.reduced_words(w0);
        for (std::size_t k = 0; k < words.size(); k += 7) {
            auto bs = beta_sequence(c, words[k]);
            std::set<Vec> s(bs.begin(), bs.end());
            CHECK(s == ref);
            for (auto& b : bs) CHECK(is_positive(b));
        }
        // a non-longest element: its inversion set is the set of positive roots made negative by w^{-1}
        Word w = {1, 2};
        auto bs = beta_sequence(c, w);
        std::set<Vec> s(bs.begin(), bs.end());
        Word winv(w.rbegin(), w.rend());
        for (auto& b : ref) {
            Vec img = act_word_root(c, winv, b);
            CHECK(s.count(b) == (is_positive(img) ? 0u : 1u));
        }
    }
}

TEST_CASE("k-maps") {
    auto km = kmaps({1, 2, 1});
    CHECK(km.plus == std::vector<int>{3, 4, 4});
    CHECK(km.minus == std::vector<int>{0, 0, 1});
    CHECK(km.frozen == std::vector<int>{2, 3});
    CHECK(kmaps({3, 4, 5, 2, 3, 4, 1, 2, 3}).frozen == std::vector<int>{3, 6, 7, 8, 9});
    auto one = kmaps({1});
    CHECK(one.plus == std::vector<int>{2});
    CHECK(one.frozen == std::vector<int>{1});
}

TEST_CASE("longest words, cosets, dagger") {
    CHECK(longest_word(build_cartan('A', 2)) == Word{1, 2, 1});
    CHECK(longest_word(build_cartan('A', 4)).size() == 10);
    CHECK(longest_word(build_cartan('B', 4)).size() == 16);

    auto a5 = build_cartan('A', 5);
    Word x3 = coset_longest(a5, {1, 2, 4, 5});
    CHECK(x3.size() == 9);
    CHECK(same_element(a5, x3, {3, 4, 5, 2, 3, 4, 1, 2, 3}));
    CHECK(coset_longest(a5, {}) == longest_word(a5));
    CHECK(coset_longest(build_cartan('A', 4), {2, 3}).size() == 7);

    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'D', 4}, {'D', 5}, {'E', 6}}) {
        auto c = build_cartan(f, r);
        oracle::WeylGroup W(c);
        std::vector<int> nodes;
        for (int i = 1; i <= r; ++i) nodes.push_back(i);
        for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {
            std::vector<int> J;
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1) J.push_back(i + 1);
            Word x = coset_longest(c, J);
            CHECK(is_reduced(c, x));
            CHECK(static_cast<int>(x.size()) ==
                  num_positive_roots(c) - static_cast<int>(parabolic_longest(c, J).size()));
            for (int j : J) {
                Word sx = x;
                sx.insert(sx.begin(), j);
                CHECK(W.len(sx) == W.len(x) + 1);
            }
        }
    }

    CHECK(dagger(build_cartan('A', 4)) == std::vector<int>{0, 4, 3, 2, 1});
    CHECK(dagger(build_cartan('B', 3)) == std::vector<int>{0, 1, 2, 3});
    CHECK(dagger(build_cartan('D', 5)) == std::vector<int>{0, 1, 2, 3, 5, 4});
    CHECK(dagger(build_cartan('D', 4)) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(dagger(build_cartan('E', 6)) == std::vector<int>{0, 6, 2, 5, 4, 3, 1});
}

TEST_CASE("coxeter powers") {
    auto a3 = build_cartan('A', 3);
    CHECK(coxeter_power_word(a3, 1) == Word{1, 3, 2});
    CHECK(coxeter_power_word(a3, 2) == Word{1, 3, 2, 1, 3, 2});
    CHECK_THROWS_AS(coxeter_power_word(build_cartan('A', 2), 2), Error);
    CHECK(coxeter_power_word(build_cartan('B', 2), 2) == Word{1, 2, 1, 2});
    CHECK(coxeter_number(a3) == 4);
    CHECK(coxeter_number(build_cartan('E', 8)) == 30);
}
