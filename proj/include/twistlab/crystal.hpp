#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "twistlab/cartan.hpp"

namespace twistlab {

struct LusztigDatum {
    Word word;
    Vec a;
    bool operator==(const LusztigDatum&) const = default;
};

struct StringDatum {
    Word word;
    Vec t;
    bool operator==(const StringDatum&) const = default;
};

struct BraidMove {
    int pos = 0;  // 0-based start of the block
    int m = 2;
    bool operator==(const BraidMove&) const = default;
};

int braid_order(const CartanDatum& c, int i, int j);
Vec rank2_transition(Int aij, Int aji, const Vec& block);
LusztigDatum braid_move_apply(const CartanDatum& c, const LusztigDatum& d, const BraidMove& mv);
Vec weight_of(const CartanDatum& c, const LusztigDatum& d);  // root coordinates

struct StarOps {
    Int epsilon;
    LusztigDatum raised;  // empty word when a_1 = 0
    LusztigDatum lowered;
    bool can_raise;
};
StarOps star_ops(const LusztigDatum& d);

struct Reconstruction {
    Vec pbw;         // first m coordinates over the word of w
    Vec full;        // datum over the completed word of w0
    Vec recomputed;  // string datum of the reconstructed element
    bool valid;      // recomputed == input
    bool in_bw;      // support inside the first m coordinates
};

// Per-type engine with cached Tits paths. Safe for concurrent use.
class Engine {
public:
    explicit Engine(CartanDatum c);

    const CartanDatum& cartan() const { return c_; }
    const Word& w0() const { return w0_; }
    const std::vector<int>& dag() const { return dag_; }
    const Word& ending_with(int i) const { return end_[i]; }

    std::vector<BraidMove> tits_path(const Word& u, const Word& v) const;
    LusztigDatum transition(const LusztigDatum& d, const Word& target) const;
    LusztigDatum extend_to_w0(const LusztigDatum& d) const;
    const Word& completion(const Word& w) const;

    Int epsilon(const LusztigDatum& d, int i) const;
    LusztigDatum raise(const LusztigDatum& d, int i) const;  // throws when epsilon = 0
    LusztigDatum lower(const LusztigDatum& d, int i) const;

    Vec string_from_pbw(const Word& w, const Vec& a) const;
    Reconstruction string_reconstruct(const Word& w, const Vec& t) const;

private:
    void apply_path(Word& word, Vec& a, const Word& target) const;
    void path_rec(const Word& u, const Word& v, int offset, std::vector<BraidMove>& out) const;

    CartanDatum c_;
    Word w0_;
    std::vector<int> dag_;
    std::vector<Word> end_;
    mutable std::shared_mutex mu_;
    mutable std::map<std::pair<Word, Word>, std::vector<BraidMove>> paths_;
    mutable std::map<Word, Word> completions_;
};

const Engine& engine_for(const CartanDatum& c);

Vec frozen_P(const Word& w, int j);
Vec frozen_S(const CartanDatum& c, const Word& w, int j);

}  // namespace twistlab
