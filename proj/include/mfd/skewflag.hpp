#pragma once

// Modular skew algebra machinery: skew polynomials on the sigma_bar-monomial
// basis, evaluation as F-linear maps on L, the kernel flag F_i = ker(sigma_bar^i),
// F-compatible bases, and the matrix representation with respect to such a basis
// (columns hold the images of the basis vectors).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfd/errors.hpp"
#include "mfd/ferrers.hpp"
#include "mfd/tower.hpp"

namespace mfd {

// Dense matrix over the coefficient field F = GF(q), entries as BaseField codes.
class FMatrix {
  public:
    FMatrix() = default;
    FMatrix(BaseFieldPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

    static FMatrix identity(BaseFieldPtr f, int n) {
        FMatrix m(std::move(f), n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const BaseFieldPtr& field() const { return f_; }

    std::uint32_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
    std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
    }

    friend bool operator==(const FMatrix& x, const FMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && *x.f_ == *y.f_ && x.a_ == y.a_;
    }

    friend FMatrix operator*(const FMatrix& x, const FMatrix& y) {
        if (x.cols_ != y.rows_ || !(*x.f_ == *y.f_)) fail(Errc::SpecMismatch, "matrix shape/field mismatch");
        const BaseField& F = *x.f_;
        FMatrix r(x.f_, x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const std::uint32_t v = x.at(i, k);
                if (!v) continue;
                for (int j = 0; j < y.cols_; ++j)
                    if (y.at(k, j)) r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
            }
        return r;
    }

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& x) const {
        const BaseField& F = *f_;
        std::vector<std::uint32_t> y(static_cast<std::size_t>(rows_), 0);
        for (int i = 0; i < rows_; ++i) {
            std::uint32_t acc = 0;
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) && x[static_cast<std::size_t>(j)])
                    acc = F.add(acc, F.mul(at(i, j), x[static_cast<std::size_t>(j)]));
            y[static_cast<std::size_t>(i)] = acc;
        }
        return y;
    }

  private:
    BaseFieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

// Reduced row echelon form in place. Pivot rule: leftmost nonzero column,
// first row from the top, pivot scaled to 1. Returns pivot columns.
inline std::vector<int> rref(FMatrix& m) {
    const BaseField& F = *m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        const std::uint32_t s = F.inv(m.at(row, col));
        if (s != 1)
            for (int c = col; c < m.cols(); ++c) m.at(row, c) = F.mul(m.at(row, c), s);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const std::uint32_t v = m.at(r, col);
            if (!v) continue;
            for (int c = col; c < m.cols(); ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(v, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(FMatrix m) { return static_cast<int>(rref(m).size()); }

// Canonical echelon basis of { x : m x = 0 }, returned as matrix rows.
inline FMatrix kernel_rows(FMatrix m) {
    const BaseFieldPtr f = m.field();
    const BaseField& F = *f;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    FMatrix ker(f, static_cast<int>(free_cols.size()), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        ker.at(static_cast<int>(i), free_cols[i]) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const std::uint32_t v = m.at(static_cast<int>(r), free_cols[i]);
            if (v) ker.at(static_cast<int>(i), pivots[r]) = F.neg(v);
        }
    }
    rref(ker);
    return ker;
}

inline FMatrix inverse(const FMatrix& m) {
    if (m.rows() != m.cols()) fail(Errc::SpecMismatch, "inverse of a non-square matrix");
    const int n = m.rows();
    FMatrix aug(m.field(), n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        fail(Errc::SpecMismatch, "matrix is singular");
    FMatrix inv(m.field(), n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

using MatrixOverF = FMatrix;

// ---------------------------------------------------------------------------

/// Coordinates of L over F in the power basis 1, gamma, ..., gamma^(n-1).
class FCoords {
  public:
    explicit FCoords(TowerPtr tower) : tower_(std::move(tower)) {
        const Tower& t = *tower_;
        const int en = t.big_field()->k;
        detail::FpMat m(t.p(), static_cast<std::size_t>(en), static_cast<std::size_t>(en));
        for (int slot = 0; slot < t.n(); ++slot)
            for (int digit = 0; digit < t.e(); ++digit) {
                const auto& b = t.mixed_basis(slot, digit).coeffs();
                const std::size_t col = static_cast<std::size_t>(slot * t.e() + digit);
                for (int i = 0; i < en; ++i) m.at(static_cast<std::size_t>(i), col) = b[static_cast<std::size_t>(i)];
            }
        inv_ = detail::fp_inverse(m);
    }

    const TowerPtr& tower() const { return tower_; }

    std::vector<std::uint32_t> coords(const FieldElement& a) const {
        const Tower& t = *tower_;
        t.require_member(a);
        const auto y = detail::fp_apply(inv_, a.coeffs());
        std::vector<std::uint32_t> out(static_cast<std::size_t>(t.n()), 0);
        for (int slot = 0; slot < t.n(); ++slot) {
            std::uint32_t code = 0, m = 1;
            for (int digit = 0; digit < t.e(); ++digit) {
                code += static_cast<std::uint32_t>(y[static_cast<std::size_t>(slot * t.e() + digit)]) * m;
                m = static_cast<std::uint32_t>(m * t.p());
            }
            out[static_cast<std::size_t>(slot)] = code;
        }
        return out;
    }

    FieldElement element(const std::vector<std::uint32_t>& coords) const {
        const Tower& t = *tower_;
        FieldElement r = t.zero();
        for (int slot = 0; slot < t.n(); ++slot) {
            const std::uint32_t code = coords[static_cast<std::size_t>(slot)];
            if (code) r = add(r, mul(t.decode_subfield(code), t.power_basis()[static_cast<std::size_t>(slot)]));
        }
        return r;
    }

  private:
    TowerPtr tower_;
    detail::FpMat inv_;
};

/// Reduced echelon basis of the F-span of the given elements of L,
/// with respect to power-basis coordinates.
inline std::vector<FieldElement> f_linear_solve(const TowerPtr& tower, const std::vector<FieldElement>& vecs) {
    FCoords fc(tower);
    FMatrix m(tower->base(), static_cast<int>(vecs.size()), tower->n());
    for (std::size_t r = 0; r < vecs.size(); ++r) {
        const auto row = fc.coords(vecs[r]);
        for (int c = 0; c < tower->n(); ++c) m.at(static_cast<int>(r), c) = row[static_cast<std::size_t>(c)];
    }
    const auto pivots = rref(m);
    std::vector<FieldElement> out;
    out.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<std::uint32_t> row(static_cast<std::size_t>(tower->n()));
        for (int c = 0; c < tower->n(); ++c) row[static_cast<std::size_t>(c)] = m.at(static_cast<int>(r), c);
        out.push_back(fc.element(row));
    }
    return out;
}

// ---------------------------------------------------------------------------

/// Element of L[sigma] stored on the sigma_bar-monomial basis:
/// coeff(i) multiplies sigma_bar^i, i = 0..n-1.
class SkewPoly {
  public:
    SkewPoly(TowerPtr tower, std::vector<FieldElement> coeffs)
        : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != tower_->n())
            fail(Errc::DegreeMismatch, "skew polynomial needs exactly n coefficients");
        for (const auto& c : coeffs_) tower_->require_member(c);
    }

    static SkewPoly zero(const TowerPtr& t) {
        return SkewPoly(t, std::vector<FieldElement>(static_cast<std::size_t>(t->n()), t->zero()));
    }
    static SkewPoly identity(const TowerPtr& t) {
        auto f = zero(t);
        f.coeffs_[0] = t->one();
        return f;
    }
    /// lambda * sigma_bar^degree
    static SkewPoly monomial(const TowerPtr& t, const FieldElement& lambda, int degree) {
        if (degree < 0 || degree >= t->n()) fail(Errc::OutOfRange, "sigma_bar degree out of range");
        auto f = zero(t);
        f.coeffs_[static_cast<std::size_t>(degree)] = lambda;
        return f;
    }

    const TowerPtr& tower() const { return tower_; }
    const FieldElement& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
    }

    /// Largest i with coeff(i) != 0; the zero polynomial has no degree.
    std::optional<int> sigma_bar_degree() const {
        for (int i = tower_->n() - 1; i >= 0; --i)
            if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
        return std::nullopt;
    }

    friend SkewPoly add(const SkewPoly& a, const SkewPoly& b) {
        if (!(*a.tower_->big_field() == *b.tower_->big_field()))
            fail(Errc::SpecMismatch, "skew polynomials from different towers");
        SkewPoly r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        return r;
    }

  private:
    TowerPtr tower_;
    std::vector<FieldElement> coeffs_;
};

inline FieldElement evaluate(const SkewPoly& f, const FieldElement& alpha) {
    const Tower& t = *f.tower();
    t.require_member(alpha);
    FieldElement acc = t.zero();
    FieldElement w = alpha;
    for (int i = 0; i < t.n(); ++i) {
        if (!f.coeff(i).is_zero()) acc = add(acc, mul(f.coeff(i), w));
        if (i + 1 < t.n()) w = sigma_bar(t, w);
    }
    return acc;
}

// ---------------------------------------------------------------------------

struct BasisCheck {
    bool ok = true;
    int failed_index = 0;  // 1-based index of the offending element
    std::string detail;
};

/// The full flag F_0 c F_1 c ... c F_n with a distinguished compatible basis.
class FlagData {
  public:
    static FlagData build(TowerPtr tower) {
        FlagData fd(std::move(tower));
        fd.build_flag_subspaces();
        fd.build_default_basis();
        fd.finalize_basis_matrix();
        return fd;
    }

    /// Same flag, different compatible basis (must pass verification).
    FlagData with_basis(const std::vector<FieldElement>& candidate) const {
        const BasisCheck chk = check_basis(candidate);
        if (!chk.ok) fail(Errc::InvalidBasis, chk.detail);
        FlagData fd = *this;
        fd.basis_ = candidate;
        fd.finalize_basis_matrix();
        return fd;
    }

    const TowerPtr& tower() const { return tower_; }
    int order() const { return tower_->n(); }
    const FCoords& coords() const { return *fcoords_; }

    /// Echelonized F-basis of F_i = ker(sigma_bar^i); has exactly i elements.
    const std::vector<FieldElement>& flag_basis(int i) const { return flag_elems_[static_cast<std::size_t>(i)]; }

    const std::vector<FieldElement>& compatible_basis() const { return basis_; }

    bool in_flag_subspace(const FieldElement& a, int i) const {
        const auto y = sigma_power_[static_cast<std::size_t>(i)].apply(fcoords_->coords(a));
        return std::all_of(y.begin(), y.end(), [](std::uint32_t v) { return v == 0; });
    }

    /// Coordinates of v in the compatible basis, as GF(q) codes.
    std::vector<std::uint32_t> coords_in_basis(const FieldElement& v) const {
        return basis_inv_.apply(fcoords_->coords(v));
    }

    BasisCheck check_basis(const std::vector<FieldElement>& candidate) const {
        const int n = tower_->n();
        if (static_cast<int>(candidate.size()) != n)
            return {false, 0, "candidate basis must have exactly n elements"};
        FMatrix acc(tower_->base(), n, n);
        for (int i = 1; i <= n; ++i) {
            const FieldElement& b = candidate[static_cast<std::size_t>(i - 1)];
            tower_->require_member(b);
            if (!in_flag_subspace(b, i))
                return {false, i,
                        "element " + std::to_string(i) + " is not in the flag subspace of dimension " +
                            std::to_string(i)};
            const auto row = fcoords_->coords(b);
            for (int c = 0; c < n; ++c) acc.at(i - 1, c) = row[static_cast<std::size_t>(c)];
            FMatrix prefix(tower_->base(), i, n);
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < n; ++c) prefix.at(r, c) = acc.at(r, c);
            if (rank(prefix) != i)
                return {false, i, "first " + std::to_string(i) + " elements are F-linearly dependent"};
        }
        return {};
    }

    const FMatrix& sigma_matrix(int power = 1) const { return sigma_power_[static_cast<std::size_t>(power)]; }

  private:
    explicit FlagData(TowerPtr tower) : tower_(std::move(tower)) {
        const Tower& t = *tower_;
        int m = t.n();
        while (m % static_cast<int>(t.p()) == 0) m /= static_cast<int>(t.p());
        if (m != 1)
            fail(Errc::NotPrimePowerOrder,
                 "flag requires the tower degree n to be a power of the characteristic");
        fcoords_ = std::make_shared<FCoords>(tower_);
    }

    void build_flag_subspaces() {
        const Tower& t = *tower_;
        const int n = t.n();
        FMatrix msig(t.base(), n, n);
        for (int j = 0; j < n; ++j) {
            const auto col = fcoords_->coords(sigma_bar(t, t.power_basis()[static_cast<std::size_t>(j)]));
            for (int i = 0; i < n; ++i) msig.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        sigma_power_.clear();
        sigma_power_.push_back(FMatrix::identity(t.base(), n));
        for (int i = 1; i <= n; ++i) sigma_power_.push_back(sigma_power_.back() * msig);

        flag_rows_.clear();
        flag_elems_.clear();
        for (int i = 0; i <= n; ++i) {
            FMatrix ker = kernel_rows(sigma_power_[static_cast<std::size_t>(i)]);
            if (ker.rows() != i)
                fail(Errc::SpecMismatch, "flag subspace dimension mismatch (internal)");
            std::vector<FieldElement> elems;
            elems.reserve(static_cast<std::size_t>(i));
            for (int r = 0; r < i; ++r) {
                std::vector<std::uint32_t> row(static_cast<std::size_t>(n));
                for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = ker.at(r, c);
                elems.push_back(fcoords_->element(row));
            }
            flag_rows_.push_back(std::move(ker));
            flag_elems_.push_back(std::move(elems));
        }
    }

    // Echelon extension: beta_1 = 1; beta_i = first echelon F_i basis vector
    // outside the span of the earlier ones, reduced against them and scaled
    // to leading coefficient 1.
    void build_default_basis() {
        const Tower& t = *tower_;
        const BaseField& F = *t.base();
        const int n = t.n();
        basis_.clear();
        basis_.push_back(t.one());
        FMatrix span(t.base(), n, n);  // rows 0..k-1 hold the running RREF
        std::vector<int> span_pivots;
        auto insert_row = [&](std::vector<std::uint32_t> v) {
            // reduce v against current rows
            for (std::size_t r = 0; r < span_pivots.size(); ++r) {
                const std::uint32_t c = v[static_cast<std::size_t>(span_pivots[r])];
                if (!c) continue;
                for (int j = 0; j < n; ++j)
                    v[static_cast<std::size_t>(j)] = F.sub(v[static_cast<std::size_t>(j)], F.mul(c, span.at(static_cast<int>(r), j)));
            }
            int lead = -1;
            for (int j = 0; j < n; ++j)
                if (v[static_cast<std::size_t>(j)]) {
                    lead = j;
                    break;
                }
            if (lead < 0) return std::optional<std::vector<std::uint32_t>>{};
            const std::uint32_t s = F.inv(v[static_cast<std::size_t>(lead)]);
            if (s != 1)
                for (int j = lead; j < n; ++j) v[static_cast<std::size_t>(j)] = F.mul(v[static_cast<std::size_t>(j)], s);
            // eliminate the new pivot from existing rows, keep rows pivot-sorted
            for (std::size_t r = 0; r < span_pivots.size(); ++r) {
                const std::uint32_t c = span.at(static_cast<int>(r), lead);
                if (!c) continue;
                for (int j = 0; j < n; ++j)
                    span.at(static_cast<int>(r), j) = F.sub(span.at(static_cast<int>(r), j), F.mul(c, v[static_cast<std::size_t>(j)]));
            }
            std::size_t pos = 0;
            while (pos < span_pivots.size() && span_pivots[pos] < lead) ++pos;
            // shift rows below pos down by one
            for (std::size_t r = span_pivots.size(); r > pos; --r)
                for (int j = 0; j < n; ++j) span.at(static_cast<int>(r), j) = span.at(static_cast<int>(r - 1), j);
            for (int j = 0; j < n; ++j) span.at(static_cast<int>(pos), j) = v[static_cast<std::size_t>(j)];
            span_pivots.insert(span_pivots.begin() + static_cast<std::ptrdiff_t>(pos), lead);
            return std::optional<std::vector<std::uint32_t>>{std::move(v)};
        };
        insert_row(fcoords_->coords(t.one()));
        for (int i = 2; i <= n; ++i) {
            bool extended = false;
            const FMatrix& ker = flag_rows_[static_cast<std::size_t>(i)];
            for (int r = 0; r < ker.rows() && !extended; ++r) {
                std::vector<std::uint32_t> row(static_cast<std::size_t>(n));
                for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = ker.at(r, c);
                if (auto reduced = insert_row(std::move(row))) {
                    basis_.push_back(fcoords_->element(*reduced));
                    extended = true;
                }
            }
            if (!extended) fail(Errc::SpecMismatch, "flag nesting violated during basis extension (internal)");
        }
    }

    void finalize_basis_matrix() {
        const Tower& t = *tower_;
        const int n = t.n();
        FMatrix b(t.base(), n, n);
        for (int c = 0; c < n; ++c) {
            const auto col = fcoords_->coords(basis_[static_cast<std::size_t>(c)]);
            for (int r = 0; r < n; ++r) b.at(r, c) = col[static_cast<std::size_t>(r)];
        }
        basis_inv_ = inverse(b);
    }

    TowerPtr tower_;
    std::shared_ptr<FCoords> fcoords_;
    std::vector<FMatrix> sigma_power_;      // sigma_bar^i as F-matrices, i = 0..n
    std::vector<FMatrix> flag_rows_;        // echelon coordinate rows of F_i
    std::vector<std::vector<FieldElement>> flag_elems_;
    std::vector<FieldElement> basis_;       // compatible basis B
    FMatrix basis_inv_;
};

inline FlagData build_flag(TowerPtr tower) { return FlagData::build(std::move(tower)); }

inline BasisCheck verify_compatible_basis(const FlagData& flag, const std::vector<FieldElement>& candidate) {
    return flag.check_basis(candidate);
}

inline BasisCheck verify_compatible_basis(const TowerPtr& tower, const std::vector<FieldElement>& candidate) {
    return FlagData::build(tower).check_basis(candidate);
}

/// Matrix of an F-linear endomorphism of L in the compatible basis;
/// column c holds the coordinates of the image of basis element c.
inline MatrixOverF matrix_of_endomorphism(const FlagData& flag,
                                          const std::function<FieldElement(const FieldElement&)>& fn) {
    const int n = flag.order();
    MatrixOverF m(flag.tower()->base(), n, n);
    for (int c = 0; c < n; ++c) {
        const auto col = flag.coords_in_basis(fn(flag.compatible_basis()[static_cast<std::size_t>(c)]));
        for (int r = 0; r < n; ++r) m.at(r, c) = col[static_cast<std::size_t>(r)];
    }
    return m;
}

inline MatrixOverF matrix_of(const SkewPoly& f, const FlagData& flag) {
    if (!(*f.tower()->big_field() == *flag.tower()->big_field()))
        fail(Errc::SpecMismatch, "skew polynomial and flag use different towers");
    return matrix_of_endomorphism(flag, [&](const FieldElement& a) { return evaluate(f, a); });
}

/// Generators beta_t * sigma_bar^(i-1) for 1 <= t <= c_i, enumerated with the
/// monomial level i ascending and t ascending. If max_sigma_bar_degree is
/// given, only levels with i - 1 <= max_sigma_bar_degree are produced.
inline std::vector<SkewPoly> monotone_space_basis(const FerrersDiagram& d, const FlagData& flag,
                                                  std::optional<int> max_sigma_bar_degree = std::nullopt) {
    const int n = flag.order();
    if (d.order() != n) fail(Errc::OrderMismatch, "diagram order != tower degree");
    const int cap = max_sigma_bar_degree ? std::min(*max_sigma_bar_degree, n - 1) : n - 1;
    std::vector<SkewPoly> out;
    for (int i = 1; i <= cap + 1; ++i)
        for (int t = 1; t <= d.column(i); ++t)
            out.push_back(SkewPoly::monomial(flag.tower(),
                                             flag.compatible_basis()[static_cast<std::size_t>(t - 1)], i - 1));
    return out;
}

}  // namespace mfd
