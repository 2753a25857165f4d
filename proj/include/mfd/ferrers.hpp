#pragma once

// Ferrers diagram combinatorics: validation, adjoints, p-height and
// p-contraction, monotonicity/convexity classes, the nu_j dimension bound,
// diagonals, MDS-constructibility, j-Singleton indices, and the S/T/L
// region decomposition of the n x n grid.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mfd/errors.hpp"
#include "mfd/field.hpp"

namespace mfd {

struct Cell {
    int row = 0;  // 1-based, row 1 at the top
    int col = 0;  // 1-based

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class FerrersDiagram {
  public:
    FerrersDiagram() = default;

    static FerrersDiagram from_columns(std::vector<int> columns) {
        FerrersDiagram d;
        d.n_ = static_cast<int>(columns.size());
        if (d.n_ == 0) fail(Errc::OutOfRange, "diagram order must be positive");
        for (int i = 0; i < d.n_; ++i) {
            const int c = columns[static_cast<std::size_t>(i)];
            if (c < 0 || c > d.n_)
                fail(Errc::ColumnExceedsOrder,
                     "column " + std::to_string(i + 1) + " count " + std::to_string(c) + " outside [0, n]");
            if (i > 0 && c < columns[static_cast<std::size_t>(i - 1)])
                fail(Errc::NotNondecreasing, "column counts must be nondecreasing (violated at column " +
                                                 std::to_string(i + 1) + ")");
        }
        d.cols_ = std::move(columns);
        return d;
    }

    static FerrersDiagram from_cells(int n, const std::vector<Cell>& cells) {
        if (n < 1) fail(Errc::OutOfRange, "diagram order must be positive");
        std::set<Cell> s(cells.begin(), cells.end());
        for (const Cell& c : s) {
            if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
                fail(Errc::OutOfRange, "cell outside the n x n grid");
            if (c.col < n && !s.count({c.row, c.col + 1}))
                fail(Errc::NotTopRightJustified, "cell set not closed to the right");
            if (c.row > 1 && !s.count({c.row - 1, c.col}))
                fail(Errc::NotTopRightJustified, "cell set not closed upward");
        }
        std::vector<int> columns(static_cast<std::size_t>(n), 0);
        for (const Cell& c : s) ++columns[static_cast<std::size_t>(c.col - 1)];
        return from_columns(std::move(columns));
    }

    int order() const { return n_; }
    const std::vector<int>& columns() const { return cols_; }
    int column(int j) const { return cols_[static_cast<std::size_t>(j - 1)]; }

    int cell_count() const {
        int s = 0;
        for (int c : cols_) s += c;
        return s;
    }

    bool contains(int row, int col) const {
        return row >= 1 && col >= 1 && col <= n_ && row <= column(col);
    }
    bool contains(const Cell& c) const { return contains(c.row, c.col); }

    std::vector<Cell> to_cells() const {
        std::vector<Cell> cells;
        cells.reserve(static_cast<std::size_t>(cell_count()));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (contains(i, j)) cells.push_back({i, j});
        return cells;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < n_; ++i) {
            if (i) os << ',';
            os << cols_[static_cast<std::size_t>(i)];
        }
        return os.str();
    }

    friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;

  private:
    int n_ = 0;
    std::vector<int> cols_;
};

/// Parse "0,1,1,4,5"; reports the offending token position on error.
inline FerrersDiagram parse_diagram(const std::string& text) {
    std::vector<int> columns;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            columns.push_back(v);
        } catch (const std::exception&) {
            fail(Errc::ParseError,
                 "invalid column count '" + tok + "' at position " + std::to_string(pos));
        }
        pos = next + 1;
        if (next == text.size()) break;
    }
    return FerrersDiagram::from_columns(std::move(columns));
}

inline FerrersDiagram adjoint(const FerrersDiagram& d) {
    const int n = d.order();
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(d.cell_count()));
    for (const Cell& c : d.to_cells()) cells.push_back({n + 1 - c.col, n + 1 - c.row});
    return FerrersDiagram::from_cells(n, cells);
}

namespace detail {
inline void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
}
}  // namespace detail

inline int p_height(const FerrersDiagram& d, std::uint64_t p) {
    detail::require_prime(p);
    const int n = d.order();
    const auto& c = d.columns();
    auto satisfies = [&](int h) {
        std::uint64_t ph = 1;
        for (int i = 0; i < h; ++i) ph *= p;
        if (static_cast<std::uint64_t>(n) % ph != 0) return false;
        for (int v : c)
            if (static_cast<std::uint64_t>(v) % ph != 0) return false;
        // c_{n-r} constant on each block {Q*p^h, ..., (Q+1)*p^h - 1}
        for (int r = 0; r + 1 < n; ++r)
            if (static_cast<std::uint64_t>(r) / ph == static_cast<std::uint64_t>(r + 1) / ph &&
                c[static_cast<std::size_t>(n - 1 - r)] != c[static_cast<std::size_t>(n - 2 - r)])
                return false;
        return true;
    };
    int hmax = 0;
    {
        std::uint64_t ph = p;
        while (static_cast<std::uint64_t>(n) % ph == 0) {
            ++hmax;
            if (ph > static_cast<std::uint64_t>(n) / p) break;
            ph *= p;
        }
    }
    for (int h = hmax; h > 0; --h)
        if (satisfies(h)) return h;
    return 0;
}

inline FerrersDiagram p_contraction(const FerrersDiagram& d, std::uint64_t p) {
    const int h = p_height(d, p);
    std::uint64_t ph = 1;
    for (int i = 0; i < h; ++i) ph *= p;
    const int m = static_cast<int>(static_cast<std::uint64_t>(d.order()) / ph);
    std::vector<int> cols(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        cols[static_cast<std::size_t>(i - 1)] =
            static_cast<int>(static_cast<std::uint64_t>(d.column(static_cast<int>(ph) * i)) / ph);
    return FerrersDiagram::from_columns(std::move(cols));
}

inline bool is_monotone(const FerrersDiagram& d) {
    const int n = d.order();
    for (int i = 1; i < n; ++i)
        if (d.column(i) > 0 && d.column(i) < n && d.column(i + 1) <= d.column(i)) return false;
    return true;
}

inline bool is_strictly_monotone(const FerrersDiagram& d) {
    const int n = d.order();
    for (int i = 1; i < n; ++i)
        if (d.column(i) > 0 && d.column(i + 1) <= d.column(i)) return false;
    return true;
}

inline bool is_convex(const FerrersDiagram& d) {
    const int n = d.order();
    for (int i = 1; i < n; ++i)
        if (d.column(i + 1) - d.column(i) > 1) return false;
    return true;
}

inline bool is_initially_convex(const FerrersDiagram& d) {
    return d.column(1) <= 1 && is_convex(d);
}

inline bool is_p_monotone(const FerrersDiagram& d, std::uint64_t p) { return is_monotone(p_contraction(d, p)); }
inline bool is_p_convex(const FerrersDiagram& d, std::uint64_t p) { return is_convex(p_contraction(d, p)); }
inline bool is_strictly_p_monotone(const FerrersDiagram& d, std::uint64_t p) {
    return is_strictly_monotone(p_contraction(d, p));
}
inline bool is_initially_p_convex(const FerrersDiagram& d, std::uint64_t p) {
    return is_initially_convex(p_contraction(d, p));
}

inline void require_distance(const FerrersDiagram& d, int dist) {
    if (dist < 1 || dist > d.order())
        fail(Errc::OutOfRange, "distance d must satisfy 1 <= d <= n");
}

/// nu_j: cells left after deleting the first d-j-1 rows and the last j columns.
inline int nu_j(const FerrersDiagram& diag, int d, int j) {
    require_distance(diag, d);
    if (j < 0 || j > d - 1) fail(Errc::OutOfRange, "index j must satisfy 0 <= j <= d-1");
    int s = 0;
    for (int i = 1; i <= diag.order() - j; ++i) s += std::max(0, diag.column(i) - d + 1 + j);
    return s;
}

inline int nu_min(const FerrersDiagram& diag, int d) {
    require_distance(diag, d);
    int best = nu_j(diag, d, 0);
    for (int j = 1; j <= d - 1; ++j) best = std::min(best, nu_j(diag, d, j));
    return best;
}

/// |D ∩ Δ_i| with Δ_i = {(t, t+i-1) : t in [n-i+1]}, the i-th diagonal.
inline int diagonal_count(const FerrersDiagram& diag, int i) {
    const int n = diag.order();
    if (i < 1 || i > n) fail(Errc::OutOfRange, "diagonal index must satisfy 1 <= i <= n");
    int s = 0;
    for (int t = 1; t <= n - i + 1; ++t)
        if (diag.contains(t, t + i - 1)) ++s;
    return s;
}

inline int nu_mds(const FerrersDiagram& diag, int d) {
    require_distance(diag, d);
    int s = 0;
    for (int i = 1; i <= diag.order(); ++i) s += std::max(0, diagonal_count(diag, i) - d + 1);
    return s;
}

inline bool is_mds_constructible(const FerrersDiagram& diag, int d) {
    require_distance(diag, d);
    if (d == 1) return true;
    return nu_min(diag, d) == nu_mds(diag, d);
}

inline std::vector<int> singleton_indices(const FerrersDiagram& diag, int d) {
    if (d < 2 || d > diag.order()) fail(Errc::OutOfRange, "distance d must satisfy 2 <= d <= n");
    const int m = nu_min(diag, d);
    std::vector<int> out;
    for (int j = 0; j <= d - 1; ++j)
        if (nu_j(diag, d, j) == m) out.push_back(j);
    return out;
}

inline bool is_j_singleton(const FerrersDiagram& diag, int d, int j) {
    if (d < 2 || d > diag.order()) fail(Errc::OutOfRange, "distance d must satisfy 2 <= d <= n");
    if (j < 0 || j > d - 1) fail(Errc::OutOfRange, "index j must satisfy 0 <= j <= d-1");
    return nu_j(diag, d, j) == nu_min(diag, d);
}

enum class RegionKind { S, T, L };

struct Region {
    RegionKind kind = RegionKind::S;
    int n = 0, d = 0, j = 0;
    std::vector<Cell> cells;  // sorted

    bool contains(const Cell& c) const { return std::binary_search(cells.begin(), cells.end(), c); }
    int size() const { return static_cast<int>(cells.size()); }
};

inline Region region(RegionKind kind, int n, int d, int j) {
    if (n < 1 || d < 2 || d > n) fail(Errc::OutOfRange, "region requires 2 <= d <= n");
    if (j < 0 || j > d - 1) fail(Errc::OutOfRange, "region requires 0 <= j <= d-1");
    auto in_s = [&](int row, int col) { return row >= d - j && col <= n - j; };
    Region r{kind, n, d, j, {}};
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col) {
            bool keep = false;
            switch (kind) {
                case RegionKind::S: keep = in_s(row, col); break;
                case RegionKind::T: keep = in_s(row, col) && row <= col; break;
                case RegionKind::L: keep = !in_s(row, col); break;
            }
            if (keep) r.cells.push_back({row, col});
        }
    return r;
}

struct EmbedResult {
    FerrersDiagram diagram;  // order p^m
    int offset = 0;          // number of zero columns prepended
};

/// Prepend zero columns until the order is the least power of p that is >= n.
inline EmbedResult embed_strictly_monotone(const FerrersDiagram& d, std::uint64_t p) {
    detail::require_prime(p);
    if (!is_strictly_p_monotone(d, p))
        fail(Errc::NotStrictlyPMonotone, "diagram is not strictly p-monotone for p = " + std::to_string(p));
    const int n = d.order();
    std::uint64_t pm = 1;
    while (pm < static_cast<std::uint64_t>(n)) pm *= p;
    const int offset = static_cast<int>(pm) - n;
    std::vector<int> cols(static_cast<std::size_t>(offset), 0);
    cols.insert(cols.end(), d.columns().begin(), d.columns().end());
    return {FerrersDiagram::from_columns(std::move(cols)), offset};
}

// -- analysis summary -------------------------------------------------------

struct DistanceRecord {
    int d = 0;
    std::vector<int> nu;  // nu_0 .. nu_{d-1}
    int nu_min = 0;
    int nu_mds = 0;
    bool mds_constructible = false;
    std::vector<int> singleton;  // empty for d = 1
};

struct PrimeRecord {
    std::uint64_t p = 2;
    int height = 0;
    FerrersDiagram contraction;
    bool p_monotone = false, p_convex = false;
    bool strictly_p_monotone = false, initially_p_convex = false;
};

struct DiagramProfile {
    FerrersDiagram diagram;
    FerrersDiagram adj;
    bool monotone = false, strictly_monotone = false;
    bool convex = false, initially_convex = false;
    std::vector<PrimeRecord> primes;
    std::vector<DistanceRecord> distances;
};

inline DiagramProfile analyze_diagram(const FerrersDiagram& diag, const std::vector<std::uint64_t>& primes,
                                      int dmin, int dmax) {
    const int n = diag.order();
    if (dmin < 1 || dmax > n || dmin > dmax) fail(Errc::OutOfRange, "d range must satisfy 1 <= dmin <= dmax <= n");
    DiagramProfile prof;
    prof.diagram = diag;
    prof.adj = adjoint(diag);
    prof.monotone = is_monotone(diag);
    prof.strictly_monotone = is_strictly_monotone(diag);
    prof.convex = is_convex(diag);
    prof.initially_convex = is_initially_convex(diag);
    for (std::uint64_t p : primes) {
        PrimeRecord pr;
        pr.p = p;
        pr.height = p_height(diag, p);
        pr.contraction = p_contraction(diag, p);
        pr.p_monotone = is_monotone(pr.contraction);
        pr.p_convex = is_convex(pr.contraction);
        pr.strictly_p_monotone = is_strictly_monotone(pr.contraction);
        pr.initially_p_convex = is_initially_convex(pr.contraction);
        prof.primes.push_back(std::move(pr));
    }
    for (int d = dmin; d <= dmax; ++d) {
        DistanceRecord rec;
        rec.d = d;
        for (int j = 0; j <= d - 1; ++j) rec.nu.push_back(nu_j(diag, d, j));
        rec.nu_min = *std::min_element(rec.nu.begin(), rec.nu.end());
        rec.nu_mds = nu_mds(diag, d);
        rec.mds_constructible = is_mds_constructible(diag, d);
        if (d >= 2) rec.singleton = singleton_indices(diag, d);
        prof.distances.push_back(std::move(rec));
    }
    return prof;
}

}  // namespace mfd
