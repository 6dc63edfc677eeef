#pragma once

#include <string>
#include <utility>

#include "twistlab/cartan.hpp"

namespace twistlab {

struct Box {
    int i, j;  // 1-based row and column
    bool operator==(const Box&) const = default;
};

// Diagram data for the minuscule index t: outer shape, initial tableau, reading word.
struct MinusculeContext {
    char family;
    int rank;
    int t;
    bool shifted;            // shifted Young diagrams (B, and D with t in {n-1, n})
    std::vector<int> outer;  // parts of the maximal shape
    std::vector<Box> boxes;  // boxes[k-1] carries entry k of the initial tableau
    Word word;
    CartanDatum cartan;
    int N() const { return static_cast<int>(boxes.size()); }
};

MinusculeContext minuscule_context(char family, int n, int t);
bool is_minuscule(char family, int n, int t);
int residue(const MinusculeContext& ctx, int i, int j);

struct Shape {
    std::vector<int> parts;
    bool special = false;  // the column (1^{n-1}) in type D with t = 1
};

Shape make_shape(const MinusculeContext& ctx, std::vector<int> parts);  // validates
bool shape_contains(const MinusculeContext& ctx, const Shape& s, const Box& b);
std::vector<Box> shape_boxes(const MinusculeContext& ctx, const Shape& s);
std::vector<Shape> all_shapes(const MinusculeContext& ctx);
std::string shape_str(const Shape& s);

Vec shape_weight(const MinusculeContext& ctx, const Shape& s);  // root coordinates
Vec orbit_weight(const MinusculeContext& ctx, const Shape& s);  // Lambda_t - wt, weight coordinates

struct Piece {
    std::vector<Box> boxes;
    Vec weight;  // root coordinates
};
std::vector<Piece> decompose(const MinusculeContext& ctx, const Shape& s);

Vec s_vector(const MinusculeContext& ctx, const Shape& s);
Vec p_vector(const MinusculeContext& ctx, const Shape& s);

// Type A only.
std::pair<Vec, Vec> b_r_vectors(const MinusculeContext& ctx, int k);
Vec minuscule_twist_image(const MinusculeContext& ctx, const Shape& s);

struct Rect {
    int a, b, c, d;
    bool operator==(const Rect&) const = default;
};
bool rect_valid(const MinusculeContext& ctx, const Rect& r);
bool rect_in_gamma(const MinusculeContext& ctx, const Rect& r);
Vec rect_vector(const MinusculeContext& ctx, const Rect& r);
Rect rect_apply(const MinusculeContext& ctx, const Rect& r);
std::string rect_str(const Rect& r);

struct LatticePath {
    int n, t, i, j;
    std::vector<std::pair<int, int>> points;    // p_0, p_1, ...
    std::vector<std::pair<int, int>> vertices;  // polyline through every corner of the path
    std::vector<Rect> S;                        // S(p_k)
    std::vector<int> diagonal_moves;            // (1,1)-moves used to reach p_k
};

std::pair<int, int> kappa(int n, int t, int i, int j, int x, int y);
Rect path_rect(int n, int t, int i, int j, int x, int y);
LatticePath lattice_path(int n, int t, int i, int j, int crossings);

struct PathClosedForm {
    long D, x, y, e;
};
PathClosedForm path_closed_form(int n, int t, int i, int j, int u);

long pd_minuscule_A(int n, int t);

std::string render_shape(const MinusculeContext& ctx, const Shape& s);
std::string render_rect(const MinusculeContext& ctx, const Rect& r);
std::string render_path(const LatticePath& p);

}  // namespace twistlab
