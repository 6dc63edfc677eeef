#pragma once

#include <optional>

#include "twistlab/crystal.hpp"

namespace twistlab {

struct GLSMatrices {
    Word word;
    Mat M, N, Minv, Ninv;
};

GLSMatrices build_MN(const CartanDatum& c, const Word& w);
Mat unit_upper_inverse(const Mat& a);
Vec mat_vec(const Mat& a, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);

struct LocalizedElement {
    Word word;
    Vec pbw;
    bool operator==(const LocalizedElement&) const = default;
};

struct NormalizationError : Error {
    std::vector<Vec> attempts;
    NormalizationError(const std::string& msg, std::vector<Vec> tried) : Error(msg), attempts(std::move(tried)) {}
};

struct CapExceeded {
    long cap;
};

struct PeriodResult {
    std::optional<long> value;  // empty when some minor exceeded the cap
    long cap = 0;
    std::vector<std::optional<long>> xi;  // one entry per position of the word
};

// Twist machinery attached to a reduced word of w.
class TwistContext {
public:
    TwistContext(const CartanDatum& c, Word w, int normalize_cap = 64);

    const CartanDatum& cartan() const { return c_; }
    const Word& word() const { return w_; }
    const GLSMatrices& gls() const { return gls_; }
    const std::vector<int>& letters() const { return letters_; }
    const Vec& P(int j) const { return P_[j]; }
    const Vec& S(int j) const { return S_[j]; }
    int length() const { return static_cast<int>(w_.size()); }

    // psi on the localized crystal: frozen-equivariant extension of string_from_pbw.
    Vec psi(const Vec& pbw) const;
    // Inverse of psi on Z^m; shift receives the per-letter frozen shift used.
    Vec psi_inv(const Vec& str, Vec* shift = nullptr) const;

    // Nonnegative representative: pbw + sum_j shift_j P_j.
    Vec nonneg_shift(const Vec& pbw, Vec* shift = nullptr) const;

    Vec canonical(const Vec& pbw) const;
    bool equiv(const Vec& x, const Vec& y) const;
    bool equiv_string(const Vec& s, const Vec& t) const;
    Vec string_to_pbw_lattice(const Vec& s) const;  // (MN)^{-1} s

    std::pair<Vec, Vec> g_vectors(const Vec& pbw) const;  // (gL, gR)
    Vec twist_string_image(const Vec& pbw) const;          // -M N pbw
    Vec forward(const Vec& pbw, Vec* shift = nullptr) const;
    Vec inverse(const Vec& pbw) const;
    Vec power(const Vec& pbw, long k) const;

    Vec minor(int k) const;  // 1-based
    std::optional<long> xi(int k, long cap) const;
    PeriodResult period(long cap, int threads = 0) const;

private:
    CartanDatum c_;
    Word w_;
    const Engine* e_;
    GLSMatrices gls_;
    Mat MN_;
    std::vector<int> letters_;
    std::vector<Vec> P_, S_;
    std::vector<int> first_;  // first position of each letter, -1 if absent
    Vec sumS_;
    int cap_;
};

// PD(x_J). For J = I the element is the identity and the period is 1.
PeriodResult parabolic_period(const CartanDatum& c, const std::vector<int>& J, long cap, int threads = 0);

LocalizedElement twist_apply(const TwistContext& ctx, const LocalizedElement& x, bool forward_dir);
std::vector<int> missing_support(const CartanDatum& c, const Word& w);
long lcm_all(const std::vector<long>& v);

}  // namespace twistlab
