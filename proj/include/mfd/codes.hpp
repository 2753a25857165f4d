#pragma once

// MFD code constructions: the p-monotone core (order = power of the
// characteristic), strictly monotone diagrams over any finite field via
// top-right embedding, initially convex diagrams via adjunction, and
// MDS-constructible pairs via the diagonal procedure. A dispatcher routes
// a (diagram, distance, field) triple to the first applicable path.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mfd/errors.hpp"
#include "mfd/ferrers.hpp"
#include "mfd/skewflag.hpp"

namespace mfd {

struct ConstructOptions {
    /// Big-field modulus (ascending coefficients, degree e*n of the tower used
    /// by the construction; for embedded constructions that is the tower of
    /// the enlarged diagram).
    std::optional<std::vector<std::uint64_t>> modulus;
    /// Compatible basis given as gamma exponents, e.g. {0, 2968, 1531, ...}.
    std::optional<std::vector<std::uint64_t>> basis_gamma_exponents;
};

struct ConstructionTrace {
    std::string path;
    std::string modulus;          // modulus actually used ("" when no tower was needed)
    std::string basis = "default";
    std::optional<int> offset;                      // zero columns prepended by embedding
    std::optional<FerrersDiagram> embedded;         // enlarged diagram of order p^m
    std::optional<FerrersDiagram> adjoint_diagram;  // adjunction paths
    std::optional<int> j;                           // chosen Singleton index
    std::vector<int> y_set;                         // diagonals meeting D inside S
    std::optional<int> ell;                         // min of y_set
    std::optional<FerrersDiagram> d_prime;
    std::optional<FerrersDiagram> d_second;
    std::optional<int> nu_min_d_second;
    std::optional<int> dropped_cells;  // |D'' \ D'|
    std::vector<std::string> notes;
};

struct FerrersCode {
    BaseFieldPtr field;
    std::uint64_t p = 2;
    int e = 1;
    int n = 0;
    int d = 1;
    FerrersDiagram diagram;
    std::vector<MatrixOverF> generators;
    ConstructionTrace trace;

    int dimension() const { return static_cast<int>(generators.size()); }
};

namespace detail {

inline std::string modulus_string(const Poly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    return os.str();
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

/// Shared flag per (p, e, n, modulus); population is idempotent.
inline std::shared_ptr<const FlagData> flag_for(std::uint64_t p, int e, int n,
                                                const std::optional<std::vector<std::uint64_t>>& modulus) {
    static std::mutex mx;
    static std::map<std::string, std::shared_ptr<const FlagData>> cache;
    std::ostringstream key;
    key << p << ':' << e << ':' << n << ':';
    if (modulus) key << modulus_string(*modulus);
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(key.str());
    if (it != cache.end()) return it->second;
    auto tower = Tower::make(p, e, n, modulus);
    auto flag = std::make_shared<const FlagData>(FlagData::build(tower));
    cache.emplace(key.str(), flag);
    return flag;
}

inline FlagData apply_basis_option(const FlagData& flag, const ConstructOptions& opts, ConstructionTrace& trace) {
    trace.modulus = modulus_string(flag.tower()->big_field()->modulus);
    if (!opts.basis_gamma_exponents) return flag;
    std::vector<FieldElement> candidate;
    std::ostringstream desc;
    for (std::size_t i = 0; i < opts.basis_gamma_exponents->size(); ++i) {
        if (i) desc << ',';
        desc << (*opts.basis_gamma_exponents)[i];
        candidate.push_back(gamma_power(*flag.tower(), (*opts.basis_gamma_exponents)[i]));
    }
    trace.basis = desc.str();
    return flag.with_basis(candidate);  // throws InvalidBasis on failure
}

}  // namespace detail

inline MatrixOverF antitranspose(const MatrixOverF& m) {
    const int n = m.rows();
    MatrixOverF r(m.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = m.at(n - 1 - j, n - 1 - i);
    return r;
}

inline FerrersCode construct_p_monotone(const FerrersDiagram& diag, int d, std::uint64_t p, int e,
                                        const ConstructOptions& opts = {}) {
    const int n = diag.order();
    require_distance(diag, d);
    if (!detail::is_power_of(static_cast<std::uint64_t>(n), p))
        fail(Errc::OrderNotPowerOfChar, "diagram order " + std::to_string(n) +
                                            " is not a power of the characteristic " + std::to_string(p));
    if (!is_p_monotone(diag, p)) fail(Errc::NotPMonotone, "diagram is not p-monotone for p = " + std::to_string(p));

    FerrersCode code;
    code.trace.path = "p-monotone";
    const auto flag = detail::flag_for(p, e, n, opts.modulus);
    const FlagData used = detail::apply_basis_option(*flag, opts, code.trace);
    code.field = used.tower()->base();
    code.p = p;
    code.e = e;
    code.n = n;
    code.d = d;
    code.diagram = diag;
    for (const SkewPoly& f : monotone_space_basis(diag, used, n - d))
        code.generators.push_back(matrix_of(f, used));
    return code;
}

namespace detail {

// Embed a strictly p-monotone diagram into order p^m, construct there, and
// crop every generator to the top-right n x n block.
inline FerrersCode construct_via_embedding(const FerrersDiagram& diag, int d, std::uint64_t p, int e,
                                           const ConstructOptions& opts, const std::string& path_name) {
    const int n = diag.order();
    const EmbedResult emb = embed_strictly_monotone(diag, p);
    FerrersCode inner = construct_p_monotone(emb.diagram, d, p, e, opts);
    FerrersCode code;
    code.field = inner.field;
    code.p = p;
    code.e = e;
    code.n = n;
    code.d = d;
    code.diagram = diag;
    code.trace = inner.trace;
    code.trace.path = path_name;
    code.trace.offset = emb.offset;
    code.trace.embedded = emb.diagram;
    const int big_n = emb.diagram.order();
    for (const MatrixOverF& g : inner.generators) {
        for (int i = 0; i < big_n; ++i)
            for (int j = 0; j < big_n; ++j)
                if ((i >= n || j < emb.offset) && g.at(i, j) != 0)
                    fail(Errc::SpecMismatch, "embedded generator has support outside the crop block (internal)");
        MatrixOverF c(code.field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c.at(i, j) = g.at(i, emb.offset + j);
        code.generators.push_back(std::move(c));
    }
    return code;
}

}  // namespace detail

inline FerrersCode construct_strictly_monotone(const FerrersDiagram& diag, int d, std::uint64_t p, int e,
                                               const ConstructOptions& opts = {}) {
    if (!is_strictly_monotone(diag)) fail(Errc::NotStrictlyMonotone, "diagram is not strictly monotone");
    require_distance(diag, d);
    return detail::construct_via_embedding(diag, d, p, e, opts, "strictly-monotone");
}

inline FerrersCode construct_initially_convex(const FerrersDiagram& diag, int d, std::uint64_t p, int e,
                                              const ConstructOptions& opts = {}) {
    if (!is_initially_convex(diag)) fail(Errc::NotInitiallyConvex, "diagram is not initially convex");
    require_distance(diag, d);
    const FerrersDiagram adj = adjoint(diag);
    FerrersCode inner = construct_strictly_monotone(adj, d, p, e, opts);
    FerrersCode code;
    code.field = inner.field;
    code.p = p;
    code.e = e;
    code.n = diag.order();
    code.d = d;
    code.diagram = diag;
    code.trace = inner.trace;
    code.trace.path = "initially-convex";
    code.trace.adjoint_diagram = adj;
    for (const MatrixOverF& g : inner.generators) code.generators.push_back(antitranspose(g));
    return code;
}

/// Subcode supported on a subdiagram: solves the homogeneous system forcing
/// all coordinates outside the target to vanish; generators are echelonized
/// with respect to row-major flattening.
inline FerrersCode intersect_with_support(const FerrersCode& c, const FerrersDiagram& target) {
    if (target.order() != c.n) fail(Errc::NotSubdiagram, "target diagram has a different order");
    for (int col = 1; col <= c.n; ++col)
        if (target.column(col) > c.diagram.column(col))
            fail(Errc::NotSubdiagram, "target is not a subdiagram of the code support");
    const BaseField& F = *c.field;
    std::vector<Cell> kill;
    for (const Cell& cell : c.diagram.to_cells())
        if (!target.contains(cell)) kill.push_back(cell);
    const int k = c.dimension();
    FMatrix constraints(c.field, static_cast<int>(kill.size()), k);
    for (std::size_t r = 0; r < kill.size(); ++r)
        for (int g = 0; g < k; ++g)
            constraints.at(static_cast<int>(r), g) = c.generators[static_cast<std::size_t>(g)].at(kill[r].row - 1, kill[r].col - 1);
    FMatrix ker = kernel_rows(std::move(constraints));
    // combinations, flattened row-major, echelonized
    FMatrix flat(c.field, ker.rows(), c.n * c.n);
    for (int r = 0; r < ker.rows(); ++r)
        for (int g = 0; g < k; ++g) {
            const std::uint32_t w = ker.at(r, g);
            if (!w) continue;
            const MatrixOverF& gen = c.generators[static_cast<std::size_t>(g)];
            for (int i = 0; i < c.n; ++i)
                for (int j = 0; j < c.n; ++j)
                    if (gen.at(i, j))
                        flat.at(r, i * c.n + j) = F.add(flat.at(r, i * c.n + j), F.mul(w, gen.at(i, j)));
        }
    const auto pivots = rref(flat);
    FerrersCode out;
    out.field = c.field;
    out.p = c.p;
    out.e = c.e;
    out.n = c.n;
    out.d = c.d;
    out.diagram = target;
    out.trace = c.trace;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        MatrixOverF g(c.field, c.n, c.n);
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j) g.at(i, j) = flat.at(static_cast<int>(r), i * c.n + j);
        out.generators.push_back(std::move(g));
    }
    return out;
}

inline FerrersCode construct_mds_constructible(const FerrersDiagram& diag, int d, std::uint64_t p, int e,
                                               const ConstructOptions& opts = {}) {
    const int n = diag.order();
    if (d < 2 || d > n) fail(Errc::OutOfRange, "MDS-constructible path requires 2 <= d <= n");
    if (!is_mds_constructible(diag, d))
        fail(Errc::NotMdsConstructible, "the pair (diagram, d) is not MDS-constructible");

    FerrersCode code;
    code.p = p;
    code.e = e;
    code.n = n;
    code.d = d;
    code.diagram = diag;
    code.trace.path = "mds-constructible";

    const int j = singleton_indices(diag, d).front();
    code.trace.j = j;
    const Region s = region(RegionKind::S, n, d, j);
    const Region l = region(RegionKind::L, n, d, j);

    std::vector<int> y;
    for (int i = 1; i <= n - d + 1; ++i) {
        bool hit = false;
        for (int t = 1; t <= n - i + 1 && !hit; ++t)
            hit = diag.contains(t, t + i - 1) && s.contains({t, t + i - 1});
        if (hit) y.push_back(i);
    }
    code.trace.y_set = y;

    if (y.empty()) {
        code.field = BaseField::make(p, e);
        return code;  // zero code; nu_min is 0 in this case
    }
    const int ell = y.front();
    code.trace.ell = ell;

    // D'' = union of the diagonals ell..n, a shifted copy of a triangle
    std::vector<int> second_cols(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) second_cols[static_cast<std::size_t>(t - 1)] = std::max(0, t - ell + 1);
    const FerrersDiagram d_second = FerrersDiagram::from_columns(std::move(second_cols));

    // D' = (D ∩ S) ∪ union over i >= ell of (Δ_i ∩ L)
    std::vector<Cell> prime_cells;
    for (const Cell& cell : diag.to_cells())
        if (s.contains(cell)) prime_cells.push_back(cell);
    for (int i = ell; i <= n; ++i)
        for (int t = 1; t <= n - i + 1; ++t)
            if (l.contains({t, t + i - 1})) prime_cells.push_back({t, t + i - 1});
    const FerrersDiagram d_prime = FerrersDiagram::from_cells(n, prime_cells);

    code.trace.d_prime = d_prime;
    code.trace.d_second = d_second;
    code.trace.nu_min_d_second = nu_min(d_second, d);
    code.trace.dropped_cells = d_second.cell_count() - d_prime.cell_count();

    FerrersCode big = construct_strictly_monotone(d_second, d, p, e, opts);
    ConstructionTrace keep = code.trace;
    keep.modulus = big.trace.modulus;
    keep.basis = big.trace.basis;
    keep.offset = big.trace.offset;
    keep.embedded = big.trace.embedded;
    FerrersCode sub = intersect_with_support(big, d_prime);
    code.field = sub.field;
    code.generators = std::move(sub.generators);
    code.trace = std::move(keep);
    code.trace.notes.push_back("code on D' reused verbatim as a code on the requested diagram");
    return code;
}

/// Dimension |D| full-support code for d = 1: one elementary matrix per cell.
namespace detail {
inline FerrersCode construct_full_space(const FerrersDiagram& diag, std::uint64_t p, int e) {
    FerrersCode code;
    code.field = BaseField::make(p, e);
    code.p = p;
    code.e = e;
    code.n = diag.order();
    code.d = 1;
    code.diagram = diag;
    code.trace.path = "full-space";
    for (const Cell& cell : diag.to_cells()) {
        MatrixOverF g(code.field, code.n, code.n);
        g.at(cell.row - 1, cell.col - 1) = 1;
        code.generators.push_back(std::move(g));
    }
    return code;
}
}  // namespace detail

/// Route to the first applicable construction. Order: d = 1 full space;
/// strictly monotone; initially convex; p-monotone / p-convex when the order
/// is a power of the characteristic; strictly p-monotone / initially p-convex
/// via embedding; MDS-constructible.
inline FerrersCode construct(const FerrersDiagram& diag, int d, std::uint64_t p, int e,
                             const ConstructOptions& opts = {}) {
    require_distance(diag, d);
    detail::require_prime(p);
    if (d == 1) return detail::construct_full_space(diag, p, e);
    if (is_strictly_monotone(diag)) return construct_strictly_monotone(diag, d, p, e, opts);
    if (is_initially_convex(diag)) return construct_initially_convex(diag, d, p, e, opts);
    const int n = diag.order();
    if (detail::is_power_of(static_cast<std::uint64_t>(n), p)) {
        if (is_p_monotone(diag, p)) return construct_p_monotone(diag, d, p, e, opts);
        if (is_p_convex(diag, p)) {
            const FerrersDiagram adj = adjoint(diag);
            FerrersCode inner = construct_p_monotone(adj, d, p, e, opts);
            FerrersCode code;
            code.field = inner.field;
            code.p = p;
            code.e = e;
            code.n = n;
            code.d = d;
            code.diagram = diag;
            code.trace = inner.trace;
            code.trace.path = "p-convex";
            code.trace.adjoint_diagram = adj;
            for (const MatrixOverF& g : inner.generators) code.generators.push_back(antitranspose(g));
            return code;
        }
    }
    if (is_strictly_p_monotone(diag, p))
        return detail::construct_via_embedding(diag, d, p, e, opts, "strictly-p-monotone");
    if (is_initially_p_convex(diag, p)) {
        const FerrersDiagram adj = adjoint(diag);
        FerrersCode inner = detail::construct_via_embedding(adj, d, p, e, opts, "strictly-p-monotone");
        FerrersCode code;
        code.field = inner.field;
        code.p = p;
        code.e = e;
        code.n = n;
        code.d = d;
        code.diagram = diag;
        code.trace = inner.trace;
        code.trace.path = "initially-p-convex";
        code.trace.adjoint_diagram = adj;
        for (const MatrixOverF& g : inner.generators) code.generators.push_back(antitranspose(g));
        return code;
    }
    if (is_mds_constructible(diag, d)) return construct_mds_constructible(diag, d, p, e, opts);
    fail(Errc::UnsupportedDiagramClass,
         "no implemented construction covers this pair: the diagram is not strictly monotone, initially convex, "
         "or MDS-constructible for this distance, and the monotone/convex constructions apply only when the "
         "order is a power of the field characteristic (order " +
             std::to_string(n) + ", characteristic " + std::to_string(p) + ")");
}

}  // namespace mfd
