#pragma once

// Independent verification oracles: support checks, dimension via rank of the
// flattened generators, exhaustive and sampled minimum-rank computation over
// all nonzero codewords, the literal cell-deletion nu_min oracle, and the
// composite MFD certificate.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mfd/codes.hpp"

namespace mfd {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 20;

struct VerificationReport {
    bool support_ok = false;
    int dimension = 0;
    int expected_dimension = 0;
    std::optional<int> min_rank;  // exact when method == "exhaustive"
    std::string method = "none";  // "exhaustive" | "sampled"
    bool certified = false;       // true only for a completed exhaustive scan
    bool not_a_proof = false;     // set when the rank evidence is sampled
    bool rank_violation = false;
    std::uint64_t codewords_checked = 0;
    std::optional<MatrixOverF> witness;
    bool pass = false;
    double elapsed_seconds = 0.0;
};

inline bool check_support(const FerrersCode& c, const FerrersDiagram& diag) {
    if (diag.order() != c.n) return false;
    for (const MatrixOverF& g : c.generators)
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j)
                if (g.at(i, j) != 0 && !diag.contains(i + 1, j + 1)) return false;
    return true;
}

inline int dimension(const FerrersCode& c) {
    FMatrix flat(c.field, c.dimension(), c.n * c.n);
    for (int g = 0; g < c.dimension(); ++g)
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j)
                flat.at(g, i * c.n + j) = c.generators[static_cast<std::size_t>(g)].at(i, j);
    return rank(std::move(flat));
}

namespace detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
        r *= base;
    }
    return r;
}

inline int rank_of_codes(std::vector<std::uint32_t> a, int n, const BaseField& F) {
    if (F.q() == 2) {
        // pack rows into bitmasks
        std::uint64_t rows[64];
        for (int i = 0; i < n; ++i) {
            std::uint64_t r = 0;
            for (int j = 0; j < n; ++j) r |= static_cast<std::uint64_t>(a[static_cast<std::size_t>(i * n + j)]) << j;
            rows[i] = r;
        }
        int rk = 0;
        for (int col = 0; col < n && rk < n; ++col) {
            const std::uint64_t bit = 1ull << col;
            int sel = rk;
            while (sel < n && !(rows[sel] & bit)) ++sel;
            if (sel == n) continue;
            std::swap(rows[sel], rows[rk]);
            for (int r = rk + 1; r < n; ++r)
                if (rows[r] & bit) rows[r] ^= rows[rk];
            ++rk;
        }
        return rk;
    }
    int rk = 0;
    for (int col = 0; col < n && rk < n; ++col) {
        int sel = rk;
        while (sel < n && a[static_cast<std::size_t>(sel * n + col)] == 0) ++sel;
        if (sel == n) continue;
        if (sel != rk)
            for (int j = col; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(sel * n + j)], a[static_cast<std::size_t>(rk * n + j)]);
        const std::uint32_t piv_inv = F.inv(a[static_cast<std::size_t>(rk * n + col)]);
        for (int r = rk + 1; r < n; ++r) {
            const std::uint32_t v = a[static_cast<std::size_t>(r * n + col)];
            if (!v) continue;
            const std::uint32_t f = F.mul(v, piv_inv);
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(r * n + j)] =
                    F.sub(a[static_cast<std::size_t>(r * n + j)], F.mul(f, a[static_cast<std::size_t>(rk * n + j)]));
        }
        ++rk;
    }
    return rk;
}

struct FlatGenerators {
    int n = 0;
    std::vector<std::vector<std::uint32_t>> gens;  // flattened row-major

    explicit FlatGenerators(const FerrersCode& c) : n(c.n) {
        gens.reserve(c.generators.size());
        for (const MatrixOverF& g : c.generators) {
            std::vector<std::uint32_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i * n + j)] = g.at(i, j);
            gens.push_back(std::move(flat));
        }
    }

    void add_scaled(std::vector<std::uint32_t>& acc, int g, std::uint32_t w, const BaseField& F) const {
        if (!w) return;
        const auto& src = gens[static_cast<std::size_t>(g)];
        for (std::size_t i = 0; i < src.size(); ++i)
            if (src[i]) acc[i] = F.add(acc[i], F.mul(w, src[i]));
    }
};

}  // namespace detail

struct MinRankResult {
    int min_rank = 0;
    std::uint64_t codewords_checked = 0;
    std::uint64_t witness_index = 0;  // smallest enumeration index attaining the minimum
    MatrixOverF witness;
};

/// Exhaustive scan over the enumeration indices [from, to). Index i in
/// [1, q^k) encodes the coefficient vector of a codeword as base-q digits,
/// least significant digit first. Any partition of the full range reduces to
/// the same minimum and the same (smallest) witness index.
inline MinRankResult min_rank_exhaustive_range(const FerrersCode& c, std::uint64_t from, std::uint64_t to) {
    const BaseField& F = *c.field;
    const int k = c.dimension();
    const std::uint32_t q = F.q();
    if (k == 0 || from >= to) fail(Errc::NoNonzeroCodewords, "no nonzero codewords to enumerate");
    detail::FlatGenerators fg(c);
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
    {
        std::uint64_t v = from;
        for (int g = 0; g < k; ++g) {
            digits[static_cast<std::size_t>(g)] = static_cast<std::uint32_t>(v % q);
            v /= q;
        }
    }
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(c.n) * static_cast<std::size_t>(c.n), 0);
    for (int g = 0; g < k; ++g) fg.add_scaled(cur, g, digits[static_cast<std::size_t>(g)], F);

    MinRankResult res;
    res.min_rank = c.n + 1;
    for (std::uint64_t idx = from;;) {
        const int r = detail::rank_of_codes(cur, c.n, F);
        ++res.codewords_checked;
        if (r < res.min_rank) {
            res.min_rank = r;
            res.witness_index = idx;
            res.witness = MatrixOverF(c.field, c.n, c.n);
            for (int i = 0; i < c.n; ++i)
                for (int j = 0; j < c.n; ++j) res.witness.at(i, j) = cur[static_cast<std::size_t>(i * c.n + j)];
        }
        if (++idx >= to) break;
        int pos = 0;
        for (;;) {
            const std::uint32_t old = digits[static_cast<std::size_t>(pos)];
            const std::uint32_t nw = old + 1 == q ? 0 : old + 1;
            digits[static_cast<std::size_t>(pos)] = nw;
            fg.add_scaled(cur, pos, F.sub(nw, old), F);
            if (nw != 0) break;
            ++pos;
        }
    }
    return res;
}

inline MinRankResult min_rank_exhaustive(const FerrersCode& c, std::uint64_t cap = kDefaultEnumerationCap) {
    const int k = c.dimension();
    if (k == 0) fail(Errc::NoNonzeroCodewords, "the zero code has no nonzero codewords");
    const auto total = detail::checked_pow(c.field->q(), k);
    if (!total || *total - 1 > cap)
        fail(Errc::CapExceeded, "q^k - 1 exceeds the enumeration cap of " + std::to_string(cap) +
                                    " codewords; raise the cap or use sampled verification");
    return min_rank_exhaustive_range(c, 1, *total);
}

struct SampleReport {
    int min_rank_seen = 0;      // an upper bound on the true minimum rank
    bool violation = false;     // a codeword of rank < designed distance was seen
    std::uint64_t trials = 0;
    MatrixOverF best;
};

inline SampleReport min_rank_sampled(const FerrersCode& c, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) fail(Errc::OutOfRange, "sampled verification requires trials >= 1");
    const int k = c.dimension();
    if (k == 0) fail(Errc::NoNonzeroCodewords, "the zero code has no nonzero codewords");
    const BaseField& F = *c.field;
    const std::uint32_t q = F.q();
    detail::FlatGenerators fg(c);
    std::mt19937_64 rng(seed);
    SampleReport rep;
    rep.min_rank_seen = c.n + 1;
    rep.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
        bool nonzero = false;
        while (!nonzero) {
            for (int g = 0; g < k; ++g) {
                digits[static_cast<std::size_t>(g)] = static_cast<std::uint32_t>(rng() % q);
                if (digits[static_cast<std::size_t>(g)]) nonzero = true;
            }
        }
        std::vector<std::uint32_t> cur(static_cast<std::size_t>(c.n) * static_cast<std::size_t>(c.n), 0);
        for (int g = 0; g < k; ++g) fg.add_scaled(cur, g, digits[static_cast<std::size_t>(g)], F);
        const int r = detail::rank_of_codes(cur, c.n, F);
        if (r < rep.min_rank_seen) {
            rep.min_rank_seen = r;
            rep.best = MatrixOverF(c.field, c.n, c.n);
            for (int i = 0; i < c.n; ++i)
                for (int j = 0; j < c.n; ++j) rep.best.at(i, j) = cur[static_cast<std::size_t>(i * c.n + j)];
        }
    }
    rep.violation = rep.min_rank_seen < c.d;
    return rep;
}

/// nu_min computed by literally deleting the first d-j-1 rows and last j
/// columns and counting the remaining cells; independent of the closed form.
inline int nu_min_oracle(const FerrersDiagram& diag, int d) {
    require_distance(diag, d);
    const int n = diag.order();
    int best = std::numeric_limits<int>::max();
    for (int j = 0; j <= d - 1; ++j) {
        int count = 0;
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= n; ++col)
                if (diag.contains(row, col) && row > d - j - 1 && col <= n - j) ++count;
        best = std::min(best, count);
    }
    return best;
}

inline VerificationReport is_mfd(const FerrersCode& c, const FerrersDiagram& diag, int d,
                                 std::uint64_t cap = kDefaultEnumerationCap, std::uint64_t trials = 10000,
                                 std::uint64_t seed = 12345) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.support_ok = check_support(c, diag);
    rep.dimension = dimension(c);
    rep.expected_dimension = nu_min_oracle(diag, d);
    bool rank_ok;
    if (c.dimension() == 0) {
        rep.method = "exhaustive";
        rep.certified = true;
        rank_ok = true;  // no nonzero codeword can violate the distance
    } else {
        try {
            const MinRankResult mr = min_rank_exhaustive(c, cap);
            rep.method = "exhaustive";
            rep.certified = true;
            rep.min_rank = mr.min_rank;
            rep.codewords_checked = mr.codewords_checked;
            rep.witness = mr.witness;
            rank_ok = mr.min_rank >= d;
        } catch (const Error& err) {
            if (err.code() != Errc::CapExceeded) throw;
            const SampleReport sr = min_rank_sampled(c, trials, seed);
            rep.method = "sampled";
            rep.certified = false;
            rep.not_a_proof = true;
            rep.min_rank = sr.min_rank_seen;
            rep.codewords_checked = sr.trials;
            rep.witness = sr.best;
            rank_ok = !sr.violation;
        }
    }
    rep.rank_violation = !rank_ok;
    rep.pass = rep.support_ok && rep.dimension == rep.expected_dimension && rank_ok;
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace mfd
