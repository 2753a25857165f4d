#include "doctest.h"

#include <random>

#include "mfd/golden.hpp"
#include "mfd/verify.hpp"

using namespace mfd;

namespace {

FerrersCode published_f2_code() {
    ConstructOptions opts;
    opts.modulus = golden::f2_modulus;
    opts.basis_gamma_exponents = golden::f2_basis_exponents;
    return construct_strictly_monotone(FerrersDiagram::from_columns({1, 2, 3, 4, 5, 6}), 4, 2, 1, opts);
}

FerrersCode published_f5_code() {
    ConstructOptions opts;
    opts.modulus = golden::f5_modulus;
    opts.basis_gamma_exponents = golden::f5_basis_exponents;
    return construct_p_monotone(FerrersDiagram::from_columns({1, 3, 4, 5, 5}), 4, 5, 1, opts);
}

}  // namespace

TEST_CASE("check_support") {
    const auto code = published_f2_code();
    CHECK(check_support(code, code.diagram));

    // an identity generator is not supported on a diagram with an empty first column
    FerrersCode bad;
    bad.field = BaseField::make(2, 1);
    bad.p = 2;
    bad.e = 1;
    bad.n = 3;
    bad.d = 1;
    bad.diagram = FerrersDiagram::from_columns({0, 1, 3});
    bad.generators.push_back(FMatrix::identity(bad.field, 3));
    CHECK_FALSE(check_support(bad, bad.diagram));
}

TEST_CASE("dimension is the rank of the flattened generators") {
    const auto f5 = published_f5_code();
    CHECK(dimension(f5) == 4);
    const auto f2 = published_f2_code();
    CHECK(dimension(f2) == 6);

    FerrersCode dup = f2;
    dup.generators.push_back(dup.generators.front());
    CHECK(dimension(dup) == 6);
}

TEST_CASE("exhaustive minimum rank on the published codes") {
    const auto f2 = published_f2_code();
    const auto r2 = min_rank_exhaustive(f2);
    CHECK(r2.codewords_checked == 63);
    CHECK(r2.min_rank == 4);
    CHECK(rank(r2.witness) == 4);

    const auto f5 = published_f5_code();
    const auto r5 = min_rank_exhaustive(f5);
    CHECK(r5.codewords_checked == 624);
    CHECK(r5.min_rank == 4);
}

TEST_CASE("exhaustive enumeration flags the zero code and the cap") {
    FerrersCode zero;
    zero.field = BaseField::make(2, 1);
    zero.p = 2;
    zero.e = 1;
    zero.n = 3;
    zero.d = 2;
    zero.diagram = FerrersDiagram::from_columns({0, 0, 0});
    try {
        min_rank_exhaustive(zero);
        FAIL("expected NoNonzeroCodewords");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoNonzeroCodewords);
    }

    const auto big = published_f5_code();
    try {
        min_rank_exhaustive(big, 100);  // 624 > 100
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CapExceeded);
    }
}

TEST_CASE("enumeration is partition invariant") {
    const auto code = published_f5_code();
    const auto whole = min_rank_exhaustive(code);

    std::mt19937_64 rng(91);
    const std::uint64_t total = 625;  // q^k = 5^4
    for (int trial = 0; trial < 5; ++trial) {
        // random split points over [1, total)
        std::vector<std::uint64_t> cuts{1, total};
        for (int i = 0; i < 3; ++i) cuts.push_back(1 + rng() % (total - 1));
        std::sort(cuts.begin(), cuts.end());
        int best = code.n + 1;
        std::uint64_t witness_index = 0;
        std::uint64_t checked = 0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i] == cuts[i + 1]) continue;
            const auto part = min_rank_exhaustive_range(code, cuts[i], cuts[i + 1]);
            checked += part.codewords_checked;
            if (part.min_rank < best) {
                best = part.min_rank;
                witness_index = part.witness_index;
            } else if (part.min_rank == best) {
                witness_index = std::min(witness_index, part.witness_index);
            }
        }
        CHECK(best == whole.min_rank);
        CHECK(witness_index == whole.witness_index);
        CHECK(checked == whole.codewords_checked);
    }
}

TEST_CASE("sampled verification finds planted low-rank words and rejects trials = 0") {
    const auto good = published_f2_code();
    const auto rep = min_rank_sampled(good, 10000, 2024);
    CHECK_FALSE(rep.violation);
    CHECK(rep.min_rank_seen >= 4);

    // plant a rank-1 generator: violation must be found quickly
    FerrersCode corrupted = good;
    MatrixOverF plant(corrupted.field, corrupted.n, corrupted.n);
    plant.at(0, corrupted.n - 1) = 1;
    corrupted.generators.push_back(plant);
    const auto viol = min_rank_sampled(corrupted, 10000, 2024);
    CHECK(viol.violation);
    CHECK(viol.min_rank_seen < 4);

    try {
        min_rank_sampled(good, 0, 1);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfRange);
    }
}

TEST_CASE("sampled verification is deterministic for a fixed seed") {
    const auto code = published_f5_code();
    const auto a = min_rank_sampled(code, 500, 7);
    const auto b = min_rank_sampled(code, 500, 7);
    CHECK(a.min_rank_seen == b.min_rank_seen);
    CHECK(a.best == b.best);
}

TEST_CASE("nu_min_oracle golden values") {
    CHECK(nu_min_oracle(FerrersDiagram::from_columns({0, 1, 1, 4, 5}), 3) == 2);
    std::vector<int> tri{1, 2, 3, 4, 5};
    CHECK(nu_min_oracle(FerrersDiagram::from_columns(tri), 5) == 1);
}

TEST_CASE("is_mfd passes the published codes and reports corruption") {
    {
        const auto code = published_f5_code();
        const auto rep = is_mfd(code, code.diagram, 4);
        CHECK(rep.pass);
        CHECK(rep.certified);
        CHECK(rep.method == "exhaustive");
        CHECK(rep.codewords_checked == 624);
        CHECK(rep.min_rank == 4);
        CHECK(rep.dimension == rep.expected_dimension);
    }
    {
        auto code = published_f2_code();
        const auto rep = is_mfd(code, code.diagram, 4);
        CHECK(rep.pass);
        // zero out one generator: dimension mismatch
        code.generators[2] = MatrixOverF(code.field, code.n, code.n);
        const auto bad = is_mfd(code, code.diagram, 4);
        CHECK_FALSE(bad.pass);
        CHECK(bad.dimension != bad.expected_dimension);
    }
}

TEST_CASE("is_mfd accepts the zero code when nu_min is zero") {
    const auto diag = FerrersDiagram::from_columns({0, 0, 1});
    const auto code = construct(diag, 3, 2, 1);  // nu_min((0,0,1), 3) = 0
    REQUIRE(code.dimension() == 0);
    const auto rep = is_mfd(code, diag, 3);
    CHECK(rep.pass);
    CHECK(rep.certified);
    CHECK(rep.codewords_checked == 0);
    CHECK_FALSE(rep.min_rank.has_value());
}

TEST_CASE("is_mfd downgrades to sampled beyond the cap and says so") {
    const auto diag = FerrersDiagram::from_columns({1, 2, 3, 4, 5, 6, 7, 8});
    const auto code = construct(diag, 2, 2, 1);  // dimension 28 over F_2: 2^28 - 1 codewords
    REQUIRE(code.dimension() == 28);
    const auto rep = is_mfd(code, diag, 2, /*cap=*/1 << 20, /*trials=*/2000, /*seed=*/5);
    CHECK(rep.method == "sampled");
    CHECK(rep.not_a_proof);
    CHECK_FALSE(rep.certified);
    CHECK(rep.pass);  // support + dimension + no sampled violation
    CHECK(rep.codewords_checked == 2000);
}

TEST_CASE("the p-monotone code construction stays within the degree bound") {
    // every generator combination has sigma_bar-degree <= n - d, hence rank >= d
    ConstructOptions opts;
    const auto diag = FerrersDiagram::from_columns({4, 4, 4, 4, 8, 8, 8, 8});
    const auto code = construct_p_monotone(diag, 5, 2, 1, opts);
    CHECK(code.dimension() == nu_min(diag, 5));
    const auto rep = is_mfd(code, diag, 5);
    CHECK(rep.pass);
    CHECK(rep.min_rank >= 5);
}
