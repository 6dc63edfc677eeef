#pragma once

// Independent model of B(infinity): the image of the Kashiwara embedding
// B(inf) -> B(inf) (x) B_{j_N} (x) ... (x) B_{j_1} for a reduced word j of w0,
// with the tensor product rule. Elements are exponent vectors (c_N, ..., c_1)
// standing for 1 (x) b_{j_N}(-c_N) (x) ... (x) b_{j_1}(-c_1).

#include <limits>
#include <optional>
#include <stdexcept>

#include "twistlab/cartan.hpp"

namespace oracle {

using twistlab::CartanDatum;
using twistlab::Int;
using twistlab::Vec;
using twistlab::Word;

struct TensorModel {
    const CartanDatum* c;
    Word factors;  // colour of each elementary factor, left to right

    TensorModel(const CartanDatum& cd, const Word& w0) : c(&cd), factors(w0.rbegin(), w0.rend()) {}

    static constexpr Int kNone = std::numeric_limits<Int>::min() / 4;

    // eps[k] = epsilon_i of the tensor product of factors k.. (index 0 is the B(inf) factor).
    std::vector<Int> suffix_eps(const Vec& x, int i) const {
        int L = static_cast<int>(factors.size());
        std::vector<Int> eps(L + 2, kNone);
        for (int k = L; k >= 1; --k) {
            int col = factors[k - 1];
            Int own = col == i ? x[k - 1] : kNone;
            Int next = eps[k + 1];
            Int shifted = next == kNone ? kNone : next + x[k - 1] * (*c)(i, col);
            eps[k] = std::max(own, shifted);
        }
        eps[0] = std::max<Int>(0, eps[1]);
        return eps;
    }

    Int epsilon(const Vec& x, int i) const { return suffix_eps(x, i)[0]; }

    Vec lower(const Vec& x, int i) const {
        auto eps = suffix_eps(x, i);
        if (0 > eps[1]) throw std::logic_error("lowering acts on the B(inf) factor");
        for (std::size_t k = 1; k <= factors.size(); ++k) {
            if (factors[k - 1] != i) continue;
            Int phi = -x[k - 1];
            if (phi > eps[k + 1]) {
                Vec y = x;
                y[k - 1] += 1;
                return y;
            }
        }
        throw std::logic_error("no factor accepts lowering");
    }

    std::optional<Vec> raise(const Vec& x, int i) const {
        auto eps = suffix_eps(x, i);
        if (0 >= eps[1]) return std::nullopt;
        for (std::size_t k = 1; k <= factors.size(); ++k) {
            if (factors[k - 1] != i) continue;
            Int phi = -x[k - 1];
            if (phi >= eps[k + 1]) {
                Vec y = x;
                y[k - 1] -= 1;
                return y;
            }
        }
        throw std::logic_error("no factor accepts raising");
    }
};

}  // namespace oracle
