#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlab {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;
using Word = std::vector<int>;  // letters are 1-based node indices

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CartanDatum {
    char family = 'A';
    int rank = 0;
    Mat a;   // a[i][j] = <h_i, alpha_j>, 0-based
    Vec d;   // symmetrizers, d_i a_ij = d_j a_ji

    int n() const { return rank; }
    Int operator()(int i, int j) const { return a[i - 1][j - 1]; }
    bool operator==(const CartanDatum& o) const { return family == o.family && rank == o.rank; }
};

CartanDatum build_cartan(char family, int rank);
bool valid_type(char family, int rank);

// Weights in the fundamental basis, roots in the simple-root basis.
Vec root_to_weight(const CartanDatum& c, const Vec& beta);
Int pair(const CartanDatum& c, int i, const Vec& beta);  // <h_i, beta>, beta in root coords
Vec fundamental(const CartanDatum& c, int j);
Vec simple_root(const CartanDatum& c, int i);

Vec reflect(const CartanDatum& c, int i, const Vec& lambda);
Vec reflect_root(const CartanDatum& c, int i, const Vec& beta);
Vec act_word(const CartanDatum& c, const Word& w, const Vec& lambda);
Vec act_word_root(const CartanDatum& c, const Word& w, const Vec& beta);

bool is_positive(const Vec& beta);
bool is_reduced(const CartanDatum& c, const Word& w);
std::vector<Vec> beta_sequence(const CartanDatum& c, const Word& w);

struct KMaps {
    std::vector<int> plus;   // 1-based positions, l+1 when absent
    std::vector<int> minus;  // 0 when absent
    std::vector<int> frozen; // positions k with k+ = l+1, increasing
};
KMaps kmaps(const Word& w);

int num_positive_roots(const CartanDatum& c);
Word longest_word(const CartanDatum& c);
Word complete_to_longest(const CartanDatum& c, const Word& w);
Word parabolic_longest(const CartanDatum& c, const std::vector<int>& J);
Word coset_longest(const CartanDatum& c, const std::vector<int>& J);
bool same_element(const CartanDatum& c, const Word& u, const Word& v);
std::vector<int> support(const Word& w);

// -w0 diagram automorphism.
std::vector<int> dagger(const CartanDatum& c);

std::vector<int> odd_nodes(const CartanDatum& c);
Word coxeter_word(const CartanDatum& c);
Word coxeter_power_word(const CartanDatum& c, int m);
int coxeter_number(const CartanDatum& c);

std::string word_str(const Word& w);
std::string vec_str(const Vec& v);

}  // namespace twistlab
