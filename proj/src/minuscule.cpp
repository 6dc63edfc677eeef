#include "twistlab/minuscule.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace twistlab {

namespace {

int width_A(const MinusculeContext& c) { return c.rank - c.t + 1; }

void require_A(const MinusculeContext& c, const char* what) {
    if (c.family != 'A') throw Error(std::string(what) + " is only defined in type A");
}

}  // namespace

bool is_minuscule(char family, int n, int t) {
    if (!valid_type(family, n)) return false;
    switch (family) {
        case 'A': return t >= 1 && t <= n;
        case 'B': return t == n;
        case 'C': return t == 1;
        case 'D': return t == 1 || t == n - 1 || t == n;
        default: return false;
    }
}

int residue(const MinusculeContext& c, int i, int j) {
    int n = c.rank;
    switch (c.family) {
        case 'A': return c.t - i + j;
        case 'B': return n + i - j;
        case 'C': return j <= n ? j : 2 * n - j;
        case 'D':
            if (c.t == 1) return j <= n ? j : 2 * n - j - 1;
            if (i == j) return i % 2 == 1 ? c.t : (c.t == n ? n - 1 : n);
            return n + i - j - 1;
    }
    throw Error("no residue rule for this family");
}

MinusculeContext minuscule_context(char family, int n, int t) {
    if (!valid_type(family, n)) throw Error("invalid Cartan type");
    if (!is_minuscule(family, n, t)) throw Error("index " + std::to_string(t) + " is not minuscule in type " + family + std::to_string(n));
    MinusculeContext c{family, n, t, false, {}, {}, {}, build_cartan(family, n)};
    switch (family) {
        case 'A': c.outer.assign(t, n - t + 1); break;
        case 'B':
            c.shifted = true;
            for (int k = n; k >= 1; --k) c.outer.push_back(k);
            break;
        case 'C': c.outer = {2 * n - 1}; break;
        case 'D':
            if (t == 1) {
                c.outer = {2 * n - 2};
            } else {
                c.shifted = true;
                for (int k = n - 1; k >= 1; --k) c.outer.push_back(k);
            }
            break;
    }
    for (int i = 1; i <= static_cast<int>(c.outer.size()); ++i) {
        int start = c.shifted ? i : 1;
        for (int j = start; j < start + c.outer[i - 1]; ++j) c.boxes.push_back({i, j});
    }
    for (const Box& b : c.boxes) c.word.push_back(residue(c, b.i, b.j));
    std::vector<int> J;
    for (int i = 1; i <= n; ++i)
        if (i != t) J.push_back(i);
    if (!is_reduced(c.cartan, c.word) || !same_element(c.cartan, c.word, coset_longest(c.cartan, J)))
        throw Error("reading word " + word_str(c.word) + " does not represent the coset element");
    return c;
}

Shape make_shape(const MinusculeContext& c, std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int p : parts)
        if (p < 0) throw Error("negative part in shape");
    if (c.family == 'D' && c.t == 1 && parts.size() == static_cast<std::size_t>(c.rank - 1) &&
        std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; }))
        return {parts, true};
    if (parts.size() > c.outer.size()) throw Error("shape " + shape_str({parts}) + " has too many rows");
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] > c.outer[k]) throw Error("shape " + shape_str({parts}) + " does not fit in the maximal shape");
        if (k > 0 && (c.shifted ? parts[k] >= parts[k - 1] : parts[k] > parts[k - 1]))
            throw Error("shape " + shape_str({parts}) + (c.shifted ? " is not strictly decreasing" : " is not a partition"));
    }
    return {parts, false};
}

bool shape_contains(const MinusculeContext& c, const Shape& s, const Box& b) {
    if (s.special) return b.j == 1 && b.i >= 1 && b.i <= static_cast<int>(s.parts.size());
    if (b.i < 1 || b.i > static_cast<int>(s.parts.size())) return false;
    int start = c.shifted ? b.i : 1;
    return b.j >= start && b.j < start + s.parts[b.i - 1];
}

std::vector<Box> shape_boxes(const MinusculeContext& c, const Shape& s) {
    std::vector<Box> out;
    if (s.special) {
        for (int i = 1; i <= static_cast<int>(s.parts.size()); ++i) out.push_back({i, 1});
        return out;
    }
    for (const Box& b : c.boxes)
        if (shape_contains(c, s, b)) out.push_back(b);
    return out;
}

std::vector<Shape> all_shapes(const MinusculeContext& c) {
    std::vector<Shape> out;
    std::vector<int> parts;
    std::function<void(std::size_t)> rec = [&](std::size_t row) {
        out.push_back({parts, false});
        if (row == c.outer.size()) return;
        int hi = c.outer[row];
        if (row > 0) hi = std::min(hi, c.shifted ? parts.back() - 1 : parts.back());
        for (int p = 1; p <= hi; ++p) {
            parts.push_back(p);
            rec(row + 1);
            parts.pop_back();
        }
    };
    rec(0);
    if (c.family == 'D' && c.t == 1) out.push_back({std::vector<int>(c.rank - 1, 1), true});
    return out;
}

std::string shape_str(const Shape& s) {
    if (s.parts.empty()) return "()";
    std::string out = "(";
    for (std::size_t k = 0; k < s.parts.size(); ++k) out += (k ? "," : "") + std::to_string(s.parts[k]);
    return out + ")";
}

namespace {

Vec boxes_weight(const MinusculeContext& c, const std::vector<Box>& bs) {
    Vec wt(c.rank, 0);
    for (const Box& b : bs) ++wt[residue(c, b.i, b.j) - 1];
    return wt;
}

Vec special_weight(const MinusculeContext& c) {
    Vec wt(c.rank, 0);
    for (int k = 0; k < c.rank - 2; ++k) wt[k] = 1;
    wt[c.rank - 1] = 1;
    return wt;
}

}  // namespace

Vec shape_weight(const MinusculeContext& c, const Shape& s) {
    return s.special ? special_weight(c) : boxes_weight(c, shape_boxes(c, s));
}

Vec orbit_weight(const MinusculeContext& c, const Shape& s) {
    Vec lam = fundamental(c.cartan, c.t);
    Vec w = root_to_weight(c.cartan, shape_weight(c, s));
    for (int k = 0; k < c.rank; ++k) lam[k] -= w[k];
    return lam;
}

std::vector<Piece> decompose(const MinusculeContext& c, const Shape& s) {
    std::vector<Piece> out;
    if (s.parts.empty()) return out;
    auto piece = [&](std::vector<Box> bs) { out.push_back({bs, boxes_weight(c, bs)}); };
    auto all = shape_boxes(c, s);
    switch (c.family) {
        case 'A': {
            for (int k = 1; k <= static_cast<int>(s.parts.size()) && s.parts[k - 1] >= k; ++k) {
                std::vector<Box> hook;
                for (const Box& b : all)
                    if ((b.i == k && b.j >= k) || (b.j == k && b.i > k)) hook.push_back(b);
                piece(hook);
            }
            break;
        }
        case 'B':
        case 'D':
            if (s.special) {
                out.push_back({all, special_weight(c)});
            } else if (c.family == 'D' && c.t == 1) {
                if (s.parts == c.outer) {
                    piece({all.front()});
                    piece(std::vector<Box>(all.begin() + 1, all.end()));
                } else {
                    piece(all);
                }
            } else {
                int step = c.family == 'B' ? 1 : 2;
                for (int r = 1; r <= static_cast<int>(s.parts.size()); r += step) {
                    std::vector<Box> rows;
                    for (const Box& b : all)
                        if (b.i >= r && b.i < r + step) rows.push_back(b);
                    piece(rows);
                }
            }
            break;
        case 'C':
            if (s.parts == c.outer) {
                piece({all.front()});
                piece(std::vector<Box>(all.begin() + 1, all.end()));
            } else {
                piece(all);
            }
            break;
    }
    return out;
}

Vec s_vector(const MinusculeContext& c, const Shape& s) {
    Vec v(c.N(), 0);
    if (s.special) {
        for (int k = 0; k < c.rank - 2; ++k) v[k] = 1;
        v[c.rank - 1] = 1;
        return v;
    }
    for (int k = 0; k < c.N(); ++k) v[k] = shape_contains(c, s, c.boxes[k]) ? 1 : 0;
    return v;
}

Vec p_vector(const MinusculeContext& c, const Shape& s) {
    auto betas = beta_sequence(c.cartan, c.word);
    Vec p(c.N(), 0);
    for (const Piece& pc : decompose(c, s)) {
        auto it = std::find(betas.begin(), betas.end(), pc.weight);
        if (it == betas.end())
            throw Error("piece weight " + vec_str(pc.weight) + " of " + shape_str(s) + " is not a root of the word");
        p[it - betas.begin()] = 1;
    }
    return p;
}

std::pair<Vec, Vec> b_r_vectors(const MinusculeContext& c, int k) {
    require_A(c, "b/r vectors");
    if (k < 1 || k > c.N()) throw Error("box index out of range");
    Box bk = c.boxes[k - 1];
    Vec b(c.N(), 0), r(c.N(), 0);
    for (int q = 0; q < c.N(); ++q) {
        const Box& x = c.boxes[q];
        if (x.i <= bk.i && x.j <= bk.j) {
            b[q] = 1;
            if (x.i == bk.i || x.j == bk.j) r[q] = 1;
        }
    }
    return {b, r};
}

Vec minuscule_twist_image(const MinusculeContext& c, const Shape& s) {
    require_A(c, "the closed twist image");
    Vec p = p_vector(c, s);
    Vec out(c.N(), 0);
    for (int k = 1; k <= c.N(); ++k)
        if (p[k - 1]) {
            Vec r = b_r_vectors(c, k).second;
            for (int q = 0; q < c.N(); ++q) out[q] -= r[q];
        }
    return out;
}

bool rect_valid(const MinusculeContext& c, const Rect& r) {
    if (c.family != 'A') return false;
    return r.a >= 0 && r.b >= 0 && r.c >= 0 && r.d >= 0 && r.a + r.c <= c.t && r.b + r.d <= width_A(c);
}

bool rect_in_gamma(const MinusculeContext& c, const Rect& r) { return rect_valid(c, r) && (r.a == 0 || r.b == 0); }

Vec rect_vector(const MinusculeContext& c, const Rect& r) {
    if (!rect_valid(c, r)) throw Error("rectangle " + rect_str(r) + " does not fit in the maximal shape");
    Vec v(c.N(), 0);
    for (int q = 0; q < c.N(); ++q) {
        const Box& x = c.boxes[q];
        if (x.i > r.a && x.i <= r.a + r.c && x.j > r.b && x.j <= r.b + r.d) v[q] = 1;
    }
    return v;
}

Rect rect_apply(const MinusculeContext& c, const Rect& r) {
    if (!rect_in_gamma(c, r)) throw Error("rectangle " + rect_str(r) + " is not attached to the top or left edge");
    if (r.b == 0) {
        int m = std::min(r.a, r.d);
        return {r.a - m, r.d - m, r.c, width_A(c) - r.d};
    }
    int m = std::min(r.b, r.c);
    return {r.c - m, r.b - m, c.t - r.c, r.d};
}

std::string rect_str(const Rect& r) {
    std::ostringstream os;
    os << "R(" << r.a << "," << r.b << ")(" << r.c << "," << r.d << ")";
    return os.str();
}

std::pair<int, int> kappa(int n, int t, int i, int j, int x, int y) {
    int W = n - t + 1;
    int m = (x - 1) / t, u = (y - 1) / W;
    return {m % 2 == 0 ? i : t - i, u % 2 == 0 ? j : W - j};
}

Rect path_rect(int n, int t, int i, int j, int x, int y) {
    int W = n - t + 1;
    bool h = x % t == 0, v = y % W == 0;
    auto [p, q] = kappa(n, t, i, j, x, y);
    if (h && v) return {0, W - q, t - p, q};
    if (!h && !v) return {x % t - p, y % W - q, p, q};
    throw Error("lattice point lies on a single grid line");
}

namespace {

void check_path_args(int n, int t, int i, int j) {
    if (n < 1 || t < 1 || t > n) throw Error("need 1 <= t <= n");
    if (i <= 0 || i >= t || j <= 0 || j >= n - t + 1) throw Error("start point must satisfy 0 < i < t and 0 < j < n-t+1");
}

}  // namespace

LatticePath lattice_path(int n, int t, int i, int j, int crossings) {
    check_path_args(n, t, i, j);
    if (crossings < 0) throw Error("number of crossings must be nonnegative");
    int W = n - t + 1;
    LatticePath L{n, t, i, j, {{i, j}}, {{i, j}}, {}, {0}};
    long target = static_cast<long>(W) * crossings + (crossings % 2 == 0 ? j : W - j);
    int x = i, y = j, diag = 0;
    while (y < target) {
        bool h = x % t == 0, v = y % W == 0;
        if (h && v) {
            auto [p, q] = kappa(n, t, i, j, x, y);
            L.vertices.push_back({x + t - p, y});
            x += t - p;
            y += W - q;
        } else {
            int s = std::min(t - x % t, W - y % W);
            x += s;
            y += s;
            diag += s;
            L.vertices.push_back({x, y});
            bool hh = x % t == 0, vv = y % W == 0;
            if (hh && !vv) x += (x / t) % 2 == 1 ? t - i : i;
            else if (vv && !hh) y += (y / W) % 2 == 1 ? W - j : j;
        }
        if (L.vertices.back() != std::make_pair(x, y)) L.vertices.push_back({x, y});
        L.points.push_back({x, y});
        L.diagonal_moves.push_back(diag);
    }
    if (y != target) throw Error("lattice path overshot the target column");
    for (auto [px, py] : L.points) L.S.push_back(path_rect(n, t, i, j, px, py));
    return L;
}

PathClosedForm path_closed_form(int n, int t, int i, int j, int u) {
    check_path_args(n, t, i, j);
    long W = n - t + 1, jc = W - j, ic = t - i;
    long D = W * (u / 2) + (u % 2 == 1 ? jc : 0);
    long q = D / t, r = D % t;
    long x = 2 * q * t + (r < ic ? i + r : t + r);
    long y = W * u + (u % 2 == 0 ? j : jc);
    long e = u + 2 * q + (r < ic ? 0 : 1);
    return {D, x, y, e};
}

long pd_minuscule_A(int n, int t) {
    if (n < 1 || t < 1 || t > n) throw Error("need 1 <= t <= n");
    if (t == 1 || t == n) return 1;
    if (n == 3 && t == 2) return 2;
    if (n >= 4 && (t == 2 || t == n - 1)) return n + 1;
    return 2L * (n + 1) / std::gcd(n + 1, t);
}

std::string render_shape(const MinusculeContext& c, const Shape& s) {
    std::ostringstream os;
    if (s.special) {
        for (int k = 1; k <= static_cast<int>(s.parts.size()); ++k) {
            int res = k <= c.rank - 2 ? k : c.rank;
            os << "[" << (res < 10 ? " " : "") << res << "]\n";
        }
        return os.str();
    }
    for (int i = 1; i <= static_cast<int>(c.outer.size()); ++i) {
        int start = c.shifted ? i : 1;
        os << std::string(4 * (start - 1), ' ');
        for (int j = start; j < start + c.outer[i - 1]; ++j) {
            if (shape_contains(c, s, {i, j})) {
                int res = residue(c, i, j);
                os << "[" << (res < 10 ? " " : "") << res << "]";
            } else {
                os << "  . ";
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string render_rect(const MinusculeContext& c, const Rect& r) {
    require_A(c, "rectangle rendering");
    int W = width_A(c);
    std::ostringstream os;
    os << "+" << std::string(W, '-') << "+\n";
    for (int i = 1; i <= c.t; ++i) {
        os << "|";
        for (int j = 1; j <= W; ++j) os << (i > r.a && i <= r.a + r.c && j > r.b && j <= r.b + r.d ? '#' : '.');
        os << "|\n";
    }
    os << "+" << std::string(W, '-') << "+\n";
    return os.str();
}

std::string render_path(const LatticePath& L) {
    int W = L.n - L.t + 1;
    int X = 0, Y = 0;
    for (auto [x, y] : L.vertices) {
        X = std::max(X, x);
        Y = std::max(Y, y);
    }
    X = (X + L.t - 1) / L.t * L.t;
    Y = (Y + W - 1) / W * W;
    std::vector<std::string> g(X + 1, std::string(Y + 1, ' '));
    for (int x = 1; x <= X; ++x)
        for (int y = 1; y <= Y; ++y) {
            bool h = x % L.t == 0, v = y % W == 0;
            g[x][y] = h && v ? '+' : h ? '-' : v ? '|' : '.';
        }
    for (std::size_t k = 1; k < L.vertices.size(); ++k) {
        auto [x0, y0] = L.vertices[k - 1];
        auto [x1, y1] = L.vertices[k];
        int dx = (x1 > x0) - (x1 < x0), dy = (y1 > y0) - (y1 < y0);
        for (int x = x0, y = y0;; x += dx, y += dy) {
            g[x][y] = '*';
            if (x == x1 && y == y1) break;
        }
    }
    const std::string labels = "0123456789abcdefghijklmnopqrstuvwxyz";
    for (std::size_t k = 0; k < L.points.size(); ++k) {
        auto [x, y] = L.points[k];
        g[x][y] = k < labels.size() ? labels[k] : '@';
    }
    std::ostringstream os;
    for (int x = 1; x <= X; ++x) os << g[x].substr(1) << "\n";
    return os.str();
}

}  // namespace twistlab
