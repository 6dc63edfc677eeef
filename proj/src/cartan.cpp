#include "twistlab/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace twistlab {

bool valid_type(char family, int rank) {
    switch (family) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

CartanDatum build_cartan(char family, int rank) {
    if (!valid_type(family, rank))
        throw Error("invalid Cartan type " + std::string(1, family) + std::to_string(rank));
    CartanDatum c;
    c.family = family;
    c.rank = rank;
    c.a.assign(rank, Vec(rank, 0));
    c.d.assign(rank, 1);
    for (int i = 0; i < rank; ++i) c.a[i][i] = 2;
    auto link = [&](int i, int j, Int aij = -1, Int aji = -1) {
        c.a[i - 1][j - 1] = aij;
        c.a[j - 1][i - 1] = aji;
    };
    int n = rank;
    switch (family) {
    case 'A':
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 1, n, -1, -2);
        for (int i = 0; i < n - 1; ++i) c.d[i] = 2;
        break;
    case 'C':
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 1, n, -2, -1);
        c.d[n - 1] = 2;
        break;
    case 'D':
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case 'E':
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i) link(i, i + 1);
        break;
    case 'F':
        link(1, 2);
        link(2, 3, -1, -2);
        link(3, 4);
        c.d = {2, 2, 1, 1};
        break;
    case 'G':
        link(1, 2, -3, -1);
        c.d = {1, 3};
        break;
    }
    return c;
}

Vec simple_root(const CartanDatum& c, int i) {
    Vec v(c.rank, 0);
    v[i - 1] = 1;
    return v;
}

Vec fundamental(const CartanDatum& c, int j) { return simple_root(c, j); }

Vec root_to_weight(const CartanDatum& c, const Vec& beta) {
    Vec out(c.rank, 0);
    for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j) out[i] += c.a[i][j] * beta[j];
    return out;
}

Int pair(const CartanDatum& c, int i, const Vec& beta) {
    Int s = 0;
    for (int j = 0; j < c.rank; ++j) s += c.a[i - 1][j] * beta[j];
    return s;
}

Vec reflect(const CartanDatum& c, int i, const Vec& lambda) {
    Vec out = lambda;
    Int h = lambda[i - 1];
    if (h == 0) return out;
    for (int k = 0; k < c.rank; ++k) out[k] -= h * c.a[k][i - 1];
    return out;
}

Vec reflect_root(const CartanDatum& c, int i, const Vec& beta) {
    Vec out = beta;
    out[i - 1] -= pair(c, i, beta);
    return out;
}

Vec act_word(const CartanDatum& c, const Word& w, const Vec& lambda) {
    Vec v = lambda;
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(c, *it, v);
    return v;
}

Vec act_word_root(const CartanDatum& c, const Word& w, const Vec& beta) {
    Vec v = beta;
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect_root(c, *it, v);
    return v;
}

bool is_positive(const Vec& beta) {
    bool nonzero = false;
    for (Int x : beta) {
        if (x < 0) return false;
        if (x != 0) nonzero = true;
    }
    return nonzero;
}

static void check_letters(const CartanDatum& c, const Word& w) {
    for (int x : w)
        if (x < 1 || x > c.rank) throw Error("letter " + std::to_string(x) + " out of range");
}

std::vector<Vec> beta_sequence(const CartanDatum& c, const Word& w) {
    check_letters(c, w);
    std::vector<Vec> out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word prefix(w.begin(), w.begin() + k);
        out.push_back(act_word_root(c, prefix, simple_root(c, w[k])));
    }
    return out;
}

bool is_reduced(const CartanDatum& c, const Word& w) {
    for (const auto& b : beta_sequence(c, w))
        if (!is_positive(b)) return false;
    return true;
}

KMaps kmaps(const Word& w) {
    int l = static_cast<int>(w.size());
    KMaps km;
    km.plus.assign(l, l + 1);
    km.minus.assign(l, 0);
    for (int k = 0; k < l; ++k) {
        for (int p = k + 1; p < l; ++p)
            if (w[p] == w[k]) {
                km.plus[k] = p + 1;
                km.minus[p] = k + 1;
                break;
            }
    }
    for (int k = 0; k < l; ++k)
        if (km.plus[k] == l + 1) km.frozen.push_back(k + 1);
    return km;
}

int num_positive_roots(const CartanDatum& c) {
    int n = c.rank;
    switch (c.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    }
    return 0;
}

static Word greedy_extend(const CartanDatum& c, Word w, const std::vector<int>& allowed) {
    for (;;) {
        bool grew = false;
        for (int i : allowed) {
            if (is_positive(act_word_root(c, w, simple_root(c, i)))) {
                w.push_back(i);
                grew = true;
                break;
            }
        }
        if (!grew) return w;
    }
}

static std::vector<int> all_nodes(const CartanDatum& c) {
    std::vector<int> v(c.rank);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

Word longest_word(const CartanDatum& c) { return greedy_extend(c, {}, all_nodes(c)); }

Word complete_to_longest(const CartanDatum& c, const Word& w) {
    if (!is_reduced(c, w)) throw Error("word " + word_str(w) + " is not reduced");
    return greedy_extend(c, w, all_nodes(c));
}

Word parabolic_longest(const CartanDatum& c, const std::vector<int>& J) {
    std::vector<int> s = J;
    std::sort(s.begin(), s.end());
    for (int j : s)
        if (j < 1 || j > c.rank) throw Error("node " + std::to_string(j) + " out of range");
    return greedy_extend(c, {}, s);
}

Word coset_longest(const CartanDatum& c, const std::vector<int>& J) {
    Word head = parabolic_longest(c, J);
    Word full = greedy_extend(c, head, all_nodes(c));
    return Word(full.begin() + head.size(), full.end());
}

bool same_element(const CartanDatum& c, const Word& u, const Word& v) {
    Vec rho(c.rank, 1);
    return act_word(c, u, rho) == act_word(c, v, rho);
}

std::vector<int> support(const Word& w) {
    std::vector<int> s(w.begin(), w.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<int> dagger(const CartanDatum& c) {
    Word w0 = longest_word(c);
    std::vector<int> out(c.rank + 1, 0);
    for (int i = 1; i <= c.rank; ++i) {
        Vec v = act_word(c, w0, fundamental(c, i));
        for (auto& x : v) x = -x;
        for (int j = 1; j <= c.rank; ++j)
            if (v == fundamental(c, j)) out[i] = j;
    }
    return out;
}

std::vector<int> odd_nodes(const CartanDatum& c) {
    std::vector<int> color(c.rank + 1, -1);
    std::queue<int> q;
    color[1] = 0;
    q.push(1);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 1; j <= c.rank; ++j)
            if (j != i && c(i, j) != 0 && color[j] < 0) {
                color[j] = 1 - color[i];
                q.push(j);
            }
    }
    std::vector<int> odd;
    for (int i = 1; i <= c.rank; ++i)
        if (color[i] == 0) odd.push_back(i);
    return odd;
}

Word coxeter_word(const CartanDatum& c) {
    Word w = odd_nodes(c);
    for (int i = 1; i <= c.rank; ++i)
        if (std::find(w.begin(), w.end(), i) == w.end()) w.push_back(i);
    std::sort(w.begin() + static_cast<long>(odd_nodes(c).size()), w.end());
    return w;
}

Word coxeter_power_word(const CartanDatum& c, int m) {
    if (m < 1) throw Error("Coxeter power must be positive");
    Word cw = coxeter_word(c);
    if (static_cast<long>(m) * c.rank > num_positive_roots(c))
        throw Error("Coxeter power " + std::to_string(m) + " exceeds the longest length");
    Word w;
    for (int k = 0; k < m; ++k) w.insert(w.end(), cw.begin(), cw.end());
    if (!is_reduced(c, w)) throw Error("Coxeter power " + std::to_string(m) + " is not reduced");
    return w;
}

int coxeter_number(const CartanDatum& c) { return 2 * num_positive_roots(c) / c.rank; }

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    os << ')';
    return os.str();
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ')';
    return os.str();
}

}  // namespace twistlab
