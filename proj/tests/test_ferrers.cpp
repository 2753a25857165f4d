#include "doctest.h"

#include <random>

#include "mfd/ferrers.hpp"
#include "mfd/verify.hpp"

using namespace mfd;

namespace {

FerrersDiagram random_diagram(int n, std::mt19937_64& rng) {
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (auto& c : cols) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    std::sort(cols.begin(), cols.end());
    return FerrersDiagram::from_columns(std::move(cols));
}

FerrersDiagram random_strictly_monotone(int n, std::mt19937_64& rng) {
    std::vector<int> tail;
    for (int v = 1; v <= n; ++v)
        if (rng() % 2) tail.push_back(v);
    std::vector<int> cols(static_cast<std::size_t>(n) - tail.size(), 0);
    cols.insert(cols.end(), tail.begin(), tail.end());
    return FerrersDiagram::from_columns(std::move(cols));
}

// all diagrams of a given order (nondecreasing column vectors)
void enumerate_diagrams(int n, const std::function<void(const FerrersDiagram&)>& fn) {
    std::vector<int> cols(static_cast<std::size_t>(n), 0);
    for (;;) {
        fn(FerrersDiagram::from_columns(cols));
        int i = n - 1;
        while (i >= 0 && cols[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) return;
        const int v = cols[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j) cols[static_cast<std::size_t>(j)] = v;
    }
}

FerrersDiagram triangular(int n) {
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
    return FerrersDiagram::from_columns(std::move(cols));
}

}  // namespace

TEST_CASE("column and cell views are mutually inverse") {
    const auto d = FerrersDiagram::from_columns({0, 1, 1, 4, 5});
    CHECK(d.cell_count() == 11);
    const auto cells = d.to_cells();
    CHECK(cells.size() == 11);
    CHECK(FerrersDiagram::from_cells(5, cells) == d);

    const auto empty = FerrersDiagram::from_columns({0, 0, 0});
    CHECK(empty.to_cells().empty());

    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const auto r = random_diagram(1 + static_cast<int>(rng() % 8), rng);
        CHECK(FerrersDiagram::from_cells(r.order(), r.to_cells()) == r);
    }
}

TEST_CASE("construction rejects invalid input") {
    try {
        FerrersDiagram::from_columns({2, 1, 3});
        FAIL("expected NotNondecreasing");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotNondecreasing);
    }
    try {
        FerrersDiagram::from_columns({0, 1, 4});
        FAIL("expected ColumnExceedsOrder");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ColumnExceedsOrder);
    }
    try {
        FerrersDiagram::from_cells(3, {{1, 1}});  // not closed to the right
        FAIL("expected NotTopRightJustified");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotTopRightJustified);
    }
    try {
        FerrersDiagram::from_cells(3, {{2, 3}});  // not closed upward
        FAIL("expected NotTopRightJustified");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotTopRightJustified);
    }
}

TEST_CASE("parse_diagram round-trips and reports positions") {
    CHECK(parse_diagram("0,1,1,4,5") == FerrersDiagram::from_columns({0, 1, 1, 4, 5}));
    try {
        parse_diagram("0,1,x,4");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("adjoint golden values and involution") {
    const auto d = FerrersDiagram::from_columns({0, 1, 1, 4, 5});
    CHECK(adjoint(d) == FerrersDiagram::from_columns({1, 2, 2, 2, 4}));
    CHECK(adjoint(triangular(6)) == triangular(6));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto r = random_diagram(1 + static_cast<int>(rng() % 9), rng);
        const auto a = adjoint(r);
        CHECK(a.cell_count() == r.cell_count());
        CHECK(adjoint(a) == r);
    }
}

TEST_CASE("p-height golden values") {
    CHECK(p_height(FerrersDiagram::from_columns({4, 4, 4, 4, 8, 8, 8, 8}), 2) == 2);
    // (0,2,2,2) has a mixed top-left 2x2 block, so its 2-height is 0
    CHECK(p_height(FerrersDiagram::from_columns({0, 2, 2, 2}), 2) == 0);
    CHECK(p_height(FerrersDiagram::from_columns({0, 0, 2, 2}), 2) == 1);
    // nonempty strictly monotone diagrams have p-height 0 for every p
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const auto d = random_strictly_monotone(2 + static_cast<int>(rng() % 7), rng);
        if (d.cell_count() == 0) continue;
        for (std::uint64_t p : {2ull, 3ull, 5ull}) CHECK(p_height(d, p) == 0);
    }
}

TEST_CASE("p-contraction golden values") {
    CHECK(p_contraction(FerrersDiagram::from_columns({4, 4, 4, 4, 8, 8, 8, 8}), 2) ==
          FerrersDiagram::from_columns({1, 2}));
    CHECK(p_contraction(FerrersDiagram::from_columns({0, 0, 2, 2}), 2) == FerrersDiagram::from_columns({0, 1}));
    CHECK(p_contraction(FerrersDiagram::from_columns({0, 2, 2, 2}), 2) ==
          FerrersDiagram::from_columns({0, 2, 2, 2}));
    // height zero means the contraction is the diagram itself
    const auto d = FerrersDiagram::from_columns({1, 2, 4, 5, 5});
    CHECK(p_height(d, 2) == 0);
    CHECK(p_contraction(d, 2) == d);
}

TEST_CASE("class predicates on the published examples") {
    for (auto cols : {std::vector<int>{0, 0, 1, 3, 4}, {1, 2, 4, 5, 5}, {2, 3, 5, 5, 5}, {0, 1, 4, 5, 5}})
        CHECK(is_monotone(FerrersDiagram::from_columns(cols)));
    for (auto cols : {std::vector<int>{0, 1, 2, 2, 3}, {2, 3, 3, 4, 5}, {3, 3, 4, 5, 5}, {2, 3, 3, 3, 4}})
        CHECK(is_convex(FerrersDiagram::from_columns(cols)));

    CHECK(is_p_monotone(FerrersDiagram::from_columns({4, 4, 4, 4, 8, 8, 8, 8}), 2));

    const auto empty = FerrersDiagram::from_columns({0, 0, 0, 0});
    const auto full = FerrersDiagram::from_columns({4, 4, 4, 4});
    CHECK(is_monotone(empty));
    CHECK(is_convex(empty));
    CHECK(is_strictly_monotone(empty));
    CHECK(is_initially_convex(empty));
    CHECK(is_monotone(full));
    CHECK(is_convex(full));
    CHECK_FALSE(is_strictly_monotone(full));
    CHECK_FALSE(is_initially_convex(full));
    // order 1 full diagram is strictly monotone
    CHECK(is_strictly_monotone(FerrersDiagram::from_columns({1})));

    CHECK(is_strictly_monotone(FerrersDiagram::from_columns({0, 0, 1, 3, 4})));
    CHECK_FALSE(is_strictly_monotone(FerrersDiagram::from_columns({1, 2, 4, 5, 5})));
}

TEST_CASE("adjunction duality for p-height, contraction, and classes") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        const auto d = random_diagram(1 + static_cast<int>(rng() % 9), rng);
        const auto a = adjoint(d);
        for (std::uint64_t p : {2ull, 3ull}) {
            CHECK(p_height(d, p) == p_height(a, p));
            CHECK(p_contraction(a, p) == adjoint(p_contraction(d, p)));
            CHECK(is_p_monotone(d, p) == is_p_convex(a, p));
            CHECK(is_strictly_p_monotone(d, p) == is_initially_p_convex(a, p));
        }
        CHECK(is_monotone(d) == is_convex(a));
        CHECK(is_strictly_monotone(d) == is_initially_convex(a));
    }
}

TEST_CASE("nu_j golden values") {
    const auto d = FerrersDiagram::from_columns({0, 1, 1, 4, 5});
    CHECK(nu_j(d, 3, 0) == 5);
    CHECK(nu_j(d, 3, 1) == 3);
    CHECK(nu_j(d, 3, 2) == 2);
    CHECK(nu_min(d, 3) == 2);

    for (int n : {3, 5, 8})
        for (int dist = 1; dist <= n; ++dist)
            CHECK(nu_min(triangular(n), dist) == (n - dist + 1) * (n - dist + 2) / 2);

    std::mt19937_64 rng(37);
    for (int t = 0; t < 50; ++t) {
        const auto r = random_diagram(1 + static_cast<int>(rng() % 9), rng);
        CHECK(nu_min(r, 1) == r.cell_count());
    }

    try {
        nu_j(d, 3, 3);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfRange);
    }
    try {
        nu_min(d, 6);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfRange);
    }
}

TEST_CASE("nu_min is invariant under adjunction") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const auto d = random_diagram(1 + static_cast<int>(rng() % 9), rng);
        const int dist = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d.order()));
        CHECK(nu_min(d, dist) == nu_min(adjoint(d), dist));
    }
}

TEST_CASE("nu_j equals the literal deletion count") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 300; ++t) {
        const auto d = random_diagram(1 + static_cast<int>(rng() % 9), rng);
        const int n = d.order();
        const int dist = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(dist));
        int count = 0;
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= n; ++col)
                if (d.contains(row, col) && row > dist - j - 1 && col <= n - j) ++count;
        CHECK(nu_j(d, dist, j) == count);
    }
}

TEST_CASE("p-monotone diagrams attain nu_min by deleting columns only") {
    // nu_min = nu_{d-1} = sum of the first n-d+1 column counts
    std::mt19937_64 rng(53);
    int seen = 0;
    for (int t = 0; t < 2000 && seen < 100; ++t) {
        const auto d = random_diagram(1 + static_cast<int>(rng() % 8), rng);
        bool pm = false;
        for (std::uint64_t p : {2ull, 3ull})
            if (is_p_monotone(d, p)) pm = true;
        if (!pm) continue;
        ++seen;
        const int n = d.order();
        for (int dist = 1; dist <= n; ++dist) {
            int tail = 0;
            for (int i = 1; i <= n - dist + 1; ++i) tail += d.column(i);
            CHECK(nu_min(d, dist) == nu_j(d, dist, dist - 1));
            CHECK(nu_min(d, dist) == tail);
        }
    }
    CHECK(seen >= 50);
}

TEST_CASE("diagonal counts, nu_mds, and MDS-constructibility golden values") {
    const auto d2 = FerrersDiagram::from_columns({1, 2, 4, 5, 5});
    CHECK(nu_min(d2, 2) == 12);
    CHECK(nu_mds(d2, 2) == 10);
    CHECK_FALSE(is_mds_constructible(d2, 2));
    CHECK(nu_min(d2, 4) == 3);
    CHECK(nu_mds(d2, 4) == 3);
    CHECK(is_mds_constructible(d2, 4));

    const auto dm = FerrersDiagram::from_columns({0, 2, 2, 3, 3, 5, 6, 8});
    CHECK(nu_min(dm, 4) == 9);
    CHECK(nu_mds(dm, 4) == 9);
    CHECK(is_mds_constructible(dm, 4));

    for (int n : {2, 4, 6})
        for (int dist = 1; dist <= n; ++dist) CHECK(is_mds_constructible(triangular(n), dist));
}

TEST_CASE("singleton indices") {
    const auto dm = FerrersDiagram::from_columns({0, 2, 2, 3, 3, 5, 6, 8});
    CHECK(singleton_indices(dm, 4) == std::vector<int>{1});
    CHECK(is_j_singleton(dm, 4, 1));
    CHECK_FALSE(is_j_singleton(dm, 4, 0));

    // triangular diagrams attain the minimum at every j
    for (int n : {3, 5, 7})
        for (int dist = 2; dist <= n; ++dist) {
            const auto idx = singleton_indices(triangular(n), dist);
            CHECK(static_cast<int>(idx.size()) == dist);
        }

    // p-monotone diagrams always contain j = d-1
    std::mt19937_64 rng(59);
    int seen = 0;
    for (int t = 0; t < 2000 && seen < 60; ++t) {
        const auto d = random_diagram(2 + static_cast<int>(rng() % 7), rng);
        if (!is_p_monotone(d, 2)) continue;
        ++seen;
        for (int dist = 2; dist <= d.order(); ++dist) {
            const auto idx = singleton_indices(d, dist);
            CHECK(std::find(idx.begin(), idx.end(), dist - 1) != idx.end());
        }
    }
    CHECK(seen >= 30);
}

TEST_CASE("region sizes and the nu_j identity") {
    const Region s = region(RegionKind::S, 8, 4, 1);
    const Region l = region(RegionKind::L, 8, 4, 1);
    const Region t = region(RegionKind::T, 8, 4, 1);
    CHECK(s.size() == 42);
    CHECK(l.size() == 22);
    CHECK(t.size() == 15);
    CHECK(s.size() + l.size() == 64);

    // j = d-1: S spans all rows and the first n-d+1 columns
    const Region s2 = region(RegionKind::S, 6, 3, 2);
    CHECK(s2.size() == 6 * 4);
    for (const Cell& c : s2.cells) CHECK(c.col <= 4);

    std::mt19937_64 rng(61);
    for (int tcase = 0; tcase < 100; ++tcase) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto d = random_diagram(n, rng);
        const int dist = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(dist));
        const Region sr = region(RegionKind::S, n, dist, j);
        int inter = 0;
        for (const Cell& c : sr.cells)
            if (d.contains(c)) ++inter;
        CHECK(inter == nu_j(d, dist, j));
    }
}

TEST_CASE("strictly monotone embedding golden values") {
    const auto d = FerrersDiagram::from_columns({1, 2, 3, 4, 5, 6});
    const auto e2 = embed_strictly_monotone(d, 2);
    CHECK(e2.diagram == FerrersDiagram::from_columns({0, 0, 1, 2, 3, 4, 5, 6}));
    CHECK(e2.offset == 2);
    const auto e3 = embed_strictly_monotone(d, 3);
    CHECK(e3.diagram == FerrersDiagram::from_columns({0, 0, 0, 1, 2, 3, 4, 5, 6}));
    CHECK(e3.offset == 3);

    const auto d8 = FerrersDiagram::from_columns({0, 0, 1, 2, 3, 4, 5, 6});
    const auto e8 = embed_strictly_monotone(d8, 2);
    CHECK(e8.diagram == d8);
    CHECK(e8.offset == 0);

    try {
        embed_strictly_monotone(FerrersDiagram::from_columns({1, 2, 4, 5, 5}), 2);
        FAIL("expected NotStrictlyPMonotone");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotStrictlyPMonotone);
    }

    // a strictly 2-monotone diagram with positive 2-height embeds too
    const auto dh = FerrersDiagram::from_columns({2, 2, 4, 4, 6, 6});
    CHECK(p_height(dh, 2) == 1);
    CHECK(is_strictly_p_monotone(dh, 2));
    const auto eh = embed_strictly_monotone(dh, 2);
    CHECK(eh.diagram == FerrersDiagram::from_columns({0, 0, 2, 2, 4, 4, 6, 6}));
    CHECK(is_strictly_p_monotone(eh.diagram, 2));
    CHECK(p_height(eh.diagram, 2) == 1);
}

TEST_CASE("monotone diagrams are closed along diagonals") {
    std::mt19937_64 rng(67);
    int seen = 0;
    for (int t = 0; t < 2000 && seen < 100; ++t) {
        const auto d = random_diagram(2 + static_cast<int>(rng() % 7), rng);
        if (!is_monotone(d)) continue;
        ++seen;
        const int n = d.order();
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                if (d.contains(i, j)) CHECK(d.contains(i + 1, j + 1));
    }
    CHECK(seen >= 50);
}

TEST_CASE("strictly monotone and initially convex pairs are MDS-constructible") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_diagrams(n, [&](const FerrersDiagram& d) {
            if (!is_strictly_monotone(d) && !is_initially_convex(d)) return;
            for (int dist = 2; dist <= n; ++dist) CHECK(is_mds_constructible(d, dist));
        });
    }
}

TEST_CASE("MDS-constructible j-Singleton pairs satisfy the region equalities") {
    for (int n = 2; n <= 7; ++n) {
        enumerate_diagrams(n, [&](const FerrersDiagram& d) {
            for (int dist = 2; dist <= n; ++dist) {
                if (!is_mds_constructible(d, dist)) continue;
                for (int j : singleton_indices(d, dist)) {
                    const Region s = region(RegionKind::S, n, dist, j);
                    const Region t = region(RegionKind::T, n, dist, j);
                    // D ∩ S = D ∩ T
                    for (const Cell& c : s.cells)
                        if (d.contains(c)) CHECK(t.contains(c));
                    // diagonals with >= d cells are exactly those meeting S
                    for (int i = 1; i <= n - dist + 1; ++i) {
                        bool meets_s = false;
                        for (int tt = 1; tt <= n - i + 1 && !meets_s; ++tt)
                            meets_s = d.contains(tt, tt + i - 1) && s.contains({tt, tt + i - 1});
                        CHECK((diagonal_count(d, i) >= dist) == meets_s);
                    }
                }
            }
        });
    }
}

TEST_CASE("nu_min_oracle matches the closed formula") {
    CHECK(nu_min_oracle(FerrersDiagram::from_columns({0, 1, 1, 4, 5}), 3) == 2);
    CHECK(nu_min_oracle(triangular(5), 5) == 1);
    std::mt19937_64 rng(71);
    for (int t = 0; t < 1000; ++t) {
        const auto d = random_diagram(1 + static_cast<int>(rng() % 9), rng);
        const int dist = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d.order()));
        CHECK(nu_min_oracle(d, dist) == nu_min(d, dist));
    }
}

TEST_CASE("analyze_diagram aggregates the profile") {
    const auto prof = analyze_diagram(FerrersDiagram::from_columns({4, 4, 4, 4, 8, 8, 8, 8}), {2, 3}, 1, 4);
    CHECK(prof.primes.size() == 2);
    CHECK(prof.primes[0].height == 2);
    CHECK(prof.primes[0].contraction == FerrersDiagram::from_columns({1, 2}));
    CHECK(prof.primes[0].p_monotone);
    CHECK(prof.primes[1].height == 0);
    CHECK(prof.distances.size() == 4);
    for (const auto& rec : prof.distances)
        CHECK(rec.nu_min == *std::min_element(rec.nu.begin(), rec.nu.end()));
}
