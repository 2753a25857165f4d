#pragma once

// The field tower F = GF(q) inside L = GF(q^n), both realized in a single
// extension of F_p of degree e*n. sigma is the q-Frobenius generating
// Gal(L/F); sigma_bar = sigma - id.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mfd/field.hpp"

namespace mfd {

namespace detail {

// Minimal dense linear algebra over F_p (row-major).
struct FpMat {
    std::uint64_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    FpMat() = default;
    FpMat(std::uint64_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

    std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<std::size_t> fp_rref(FpMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        const std::uint64_t s = inv_mod(m.at(row, col), m.p);
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = (m.at(row, c) * s) % m.p;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const std::uint64_t f = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c) {
                std::uint64_t sub = (f * m.at(row, c)) % m.p;
                std::uint64_t& t = m.at(r, c);
                t = t >= sub ? t - sub : t + m.p - sub;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Kernel of m (as column-vector map x -> m x), rows = canonical basis vectors.
inline FpMat fp_kernel(FpMat m) {
    const auto pivots = fp_rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMat ker(m.p, free_cols.size(), m.cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        ker.at(i, fc) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const std::uint64_t v = m.at(r, fc);
            if (v) ker.at(i, pivots[r]) = m.p - v;
        }
    }
    fp_rref(ker);  // canonical echelon basis
    return ker;
}

// Inverse of a square matrix; fails if singular.
inline FpMat fp_inverse(const FpMat& m) {
    const std::size_t n = m.rows;
    FpMat aug(m.p, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const auto pivots = fp_rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        fail(Errc::SpecMismatch, "matrix not invertible over F_p");
    FpMat inv(m.p, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

inline std::vector<std::uint64_t> fp_apply(const FpMat& m, const std::vector<std::uint64_t>& x) {
    std::vector<std::uint64_t> y(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < m.cols; ++c) acc = (acc + m.at(r, c) * x[c]) % m.p;
        y[r] = acc;
    }
    return y;
}

}  // namespace detail

class Tower {
  public:
    static std::shared_ptr<const Tower> make(std::uint64_t p, int e, int n,
                                             std::optional<std::vector<std::uint64_t>> big_modulus = std::nullopt) {
        return std::shared_ptr<const Tower>(new Tower(p, e, n, std::move(big_modulus)));
    }

    std::uint64_t p() const { return p_; }
    int e() const { return e_; }
    int n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const Field& big_field() const { return big_; }
    const FieldElement& gamma() const { return gamma_; }
    const BaseFieldPtr& base() const { return base_; }

    /// Echelonized F_p-basis of the fixed field of the q-Frobenius.
    const std::vector<FieldElement>& subfield_basis() const { return subfield_basis_; }

    /// Power basis 1, gamma, ..., gamma^(n-1) of L over F.
    const std::vector<FieldElement>& power_basis() const { return power_basis_; }

    FieldElement zero() const { return FieldElement::zero(big_); }
    FieldElement one() const { return FieldElement::one(big_); }

    bool contains(const FieldElement& a) const { return *a.spec() == *big_; }

    void require_member(const FieldElement& a) const {
        if (!contains(a)) fail(Errc::SpecMismatch, "element does not live in this tower's big field");
    }

    /// Canonical GF(q) code of a subfield element (coordinates in the power
    /// basis of the canonical modulus root found inside L).
    std::uint32_t encode_subfield(const FieldElement& a) const {
        require_member(a);
        const auto y = detail::fp_apply(xi_solver_, a.coeffs());
        // consistency: the element must actually lie in the subfield span
        std::vector<std::uint64_t> back(static_cast<std::size_t>(big_->k), 0);
        for (int t = 0; t < e_; ++t) {
            const auto& bc = xi_powers_[static_cast<std::size_t>(t)].coeffs();
            for (std::size_t i = 0; i < back.size(); ++i) back[i] = (back[i] + y[static_cast<std::size_t>(t)] * bc[i]) % p_;
        }
        if (back != a.coeffs()) fail(Errc::CoordinateNotInSubfield, "element is not in the base subfield");
        std::uint32_t code = 0, m = 1;
        for (int t = 0; t < e_; ++t) {
            code += static_cast<std::uint32_t>(y[static_cast<std::size_t>(t)]) * m;
            m = static_cast<std::uint32_t>(m * p_);
        }
        return code;
    }

    FieldElement decode_subfield(std::uint32_t code) const {
        FieldElement r = zero();
        for (int t = 0; t < e_; ++t) {
            const std::uint64_t digit = code % p_;
            code = static_cast<std::uint32_t>(code / p_);
            if (digit)
                r = add(r, mul(FieldElement::from_int(big_, digit), xi_powers_[static_cast<std::size_t>(t)]));
        }
        return r;
    }

    /// gamma^t * xi^s for 0 <= t < n, 0 <= s < e: an F_p-basis of L aligned
    /// with F-coordinates in the power basis of gamma.
    const FieldElement& mixed_basis(int slot, int digit) const {
        return mixed_basis_[static_cast<std::size_t>(slot * e_ + digit)];
    }

  private:
    Tower(std::uint64_t p, int e, int n, std::optional<std::vector<std::uint64_t>> big_modulus)
        : p_(p), e_(e), n_(n) {
        if (e < 1 || n < 1) fail(Errc::DegreeMismatch, "tower parameters must satisfy e >= 1, n >= 1");
        if (e * n > 64) fail(Errc::UnsupportedFieldSize, "tower degree e*n beyond desk scale");
        base_ = BaseField::make(p, e);
        q_ = base_->q();
        big_ = make_field(p, e * n, std::move(big_modulus));
        gamma_ = FieldElement::generator(big_);
        build_subfield();
        power_basis_.reserve(static_cast<std::size_t>(n_));
        FieldElement g = one();
        for (int i = 0; i < n_; ++i) {
            power_basis_.push_back(g);
            if (i + 1 < n_) g = mul(g, gamma_);
        }
        build_mixed_basis();
    }

    void build_subfield() {
        const int k = big_->k;
        // kernel of (Frob_q - id) acting on power-basis coordinates
        detail::FpMat m(p_, static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        FieldElement g = one();
        for (int j = 0; j < k; ++j) {
            const FieldElement img = sub(pow(g, q_), g);
            for (int i = 0; i < k; ++i) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = img.coeffs()[static_cast<std::size_t>(i)];
            if (j + 1 < k) g = mul(g, gamma_);
        }
        detail::FpMat ker = detail::fp_kernel(std::move(m));
        if (ker.rows != static_cast<std::size_t>(e_))
            fail(Errc::SpecMismatch, "fixed field dimension != e (internal)");
        subfield_basis_.reserve(static_cast<std::size_t>(e_));
        for (std::size_t r = 0; r < ker.rows; ++r) {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(k));
            for (std::size_t j = 0; j < ker.cols; ++j) c[j] = ker.at(r, j);
            subfield_basis_.emplace_back(big_, std::move(c));
        }
        // locate the canonical modulus root xi inside the subfield: first
        // root in code-scan order over F_p-combinations of the kernel basis
        const auto& g_can = base_->spec()->modulus;
        FieldElement xi = zero();
        bool found = false;
        for (std::uint32_t code = 0; code < q_ && !found; ++code) {
            FieldElement cand = zero();
            std::uint32_t c = code;
            for (int t = 0; t < e_; ++t) {
                const std::uint64_t digit = c % p_;
                c = static_cast<std::uint32_t>(c / p_);
                if (digit)
                    cand = add(cand, mul(FieldElement::from_int(big_, digit), subfield_basis_[static_cast<std::size_t>(t)]));
            }
            // Horner evaluation of g_can at cand
            FieldElement v = zero();
            for (auto it = g_can.rbegin(); it != g_can.rend(); ++it)
                v = add(mul(v, cand), FieldElement::from_int(big_, *it));
            if (v.is_zero()) {
                xi = cand;
                found = true;
            }
        }
        if (!found) fail(Errc::SpecMismatch, "canonical subfield generator not found (internal)");
        xi_powers_.reserve(static_cast<std::size_t>(e_));
        FieldElement xp = one();
        for (int t = 0; t < e_; ++t) {
            xi_powers_.push_back(xp);
            if (t + 1 < e_) xp = mul(xp, xi);
        }
        // solver: y = S * coords(a) recovers xi-power coordinates of subfield elements
        detail::FpMat cols(p_, static_cast<std::size_t>(k), static_cast<std::size_t>(e_));
        for (int t = 0; t < e_; ++t)
            for (int i = 0; i < k; ++i)
                cols.at(static_cast<std::size_t>(i), static_cast<std::size_t>(t)) =
                    xi_powers_[static_cast<std::size_t>(t)].coeffs()[static_cast<std::size_t>(i)];
        // pick e independent rows greedily, invert that square block
        std::vector<std::size_t> chosen;
        for (std::size_t r = 0; r < static_cast<std::size_t>(k) && chosen.size() < static_cast<std::size_t>(e_); ++r) {
            detail::FpMat trial(p_, chosen.size() + 1, static_cast<std::size_t>(e_));
            for (std::size_t i = 0; i < chosen.size(); ++i)
                for (int t = 0; t < e_; ++t) trial.at(i, static_cast<std::size_t>(t)) = cols.at(chosen[i], static_cast<std::size_t>(t));
            for (int t = 0; t < e_; ++t) trial.at(chosen.size(), static_cast<std::size_t>(t)) = cols.at(r, static_cast<std::size_t>(t));
            detail::FpMat tmp = trial;
            if (detail::fp_rref(tmp).size() == chosen.size() + 1) chosen.push_back(r);
        }
        if (chosen.size() != static_cast<std::size_t>(e_))
            fail(Errc::SpecMismatch, "subfield coordinate solver construction failed (internal)");
        detail::FpMat block(p_, static_cast<std::size_t>(e_), static_cast<std::size_t>(e_));
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (int t = 0; t < e_; ++t) block.at(i, static_cast<std::size_t>(t)) = cols.at(chosen[i], static_cast<std::size_t>(t));
        detail::FpMat block_inv = detail::fp_inverse(block);
        // xi_solver_ = block_inv * row-selection
        xi_solver_ = detail::FpMat(p_, static_cast<std::size_t>(e_), static_cast<std::size_t>(k));
        for (int t = 0; t < e_; ++t)
            for (std::size_t i = 0; i < chosen.size(); ++i)
                xi_solver_.at(static_cast<std::size_t>(t), chosen[i]) = block_inv.at(static_cast<std::size_t>(t), i);
    }

    void build_mixed_basis() {
        mixed_basis_.reserve(static_cast<std::size_t>(n_ * e_));
        for (int slot = 0; slot < n_; ++slot)
            for (int t = 0; t < e_; ++t)
                mixed_basis_.push_back(mul(power_basis_[static_cast<std::size_t>(slot)],
                                           xi_powers_[static_cast<std::size_t>(t)]));
    }

    std::uint64_t p_;
    int e_;
    int n_;
    std::uint64_t q_ = 0;
    Field big_;
    FieldElement gamma_;
    BaseFieldPtr base_;
    std::vector<FieldElement> subfield_basis_;
    std::vector<FieldElement> power_basis_;
    std::vector<FieldElement> xi_powers_;
    std::vector<FieldElement> mixed_basis_;
    detail::FpMat xi_solver_;
};

using TowerPtr = std::shared_ptr<const Tower>;

inline FieldElement gamma_power(const Tower& t, std::uint64_t exponent) {
    return pow(t.gamma(), exponent);
}

inline FieldElement frobenius_q(const Tower& t, const FieldElement& a) {
    t.require_member(a);
    return pow(a, t.q());
}

inline FieldElement sigma_bar(const Tower& t, const FieldElement& a) {
    t.require_member(a);
    return sub(pow(a, t.q()), a);
}

inline FieldElement sigma_bar_power(const Tower& t, FieldElement a, int j) {
    if (j < 0) fail(Errc::OutOfRange, "sigma_bar_power requires j >= 0");
    t.require_member(a);
    for (int i = 0; i < j; ++i) a = sigma_bar(t, a);
    return a;
}

inline bool is_in_base_subfield(const Tower& t, const FieldElement& a) {
    t.require_member(a);
    return pow(a, t.q()) == a;
}

}  // namespace mfd
