#include "doctest.h"

#include "mfd/golden.hpp"
#include "mfd/json_io.hpp"

using namespace mfd;

TEST_CASE("diagram JSON round-trip") {
    const auto d = FerrersDiagram::from_columns({0, 1, 1, 4, 5});
    const json j = diagram_to_json(d);
    CHECK(j.at("n") == 5);
    CHECK(diagram_from_json(j) == d);

    try {
        diagram_from_json(json{{"n", 4}, {"columns", {0, 1, 1, 4, 5}}});
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}

TEST_CASE("code artifact round-trip preserves the verification report") {
    ConstructOptions opts;
    opts.modulus = golden::f2_modulus;
    opts.basis_gamma_exponents = golden::f2_basis_exponents;
    const auto code = construct_strictly_monotone(FerrersDiagram::from_columns({1, 2, 3, 4, 5, 6}), 4, 2, 1, opts);

    const json j = code_to_json(code);
    CHECK(j.at("q") == 2);
    CHECK(j.at("dimension") == 6);
    CHECK(j.at("path") == "strictly-monotone");

    const FerrersCode back = code_from_json(j);
    CHECK(back.n == code.n);
    CHECK(back.d == code.d);
    CHECK(back.diagram == code.diagram);
    CHECK(back.dimension() == code.dimension());
    for (int g = 0; g < code.dimension(); ++g)
        CHECK(back.generators[static_cast<std::size_t>(g)] == code.generators[static_cast<std::size_t>(g)]);

    const auto rep1 = is_mfd(code, code.diagram, code.d);
    const auto rep2 = is_mfd(back, back.diagram, back.d);
    CHECK(rep1.pass == rep2.pass);
    CHECK(rep1.dimension == rep2.dimension);
    CHECK(rep1.min_rank == rep2.min_rank);
    CHECK(rep1.codewords_checked == rep2.codewords_checked);
}

TEST_CASE("extension field entries serialize as coefficient lists") {
    const auto diag = FerrersDiagram::from_columns({1, 2, 3});
    const auto code = construct(diag, 2, 2, 2);  // GF(4)
    const json j = code_to_json(code);
    CHECK(j.at("e") == 2);
    // every entry is a list of two residues
    for (const auto& gen : j.at("generators"))
        for (const auto& row : gen)
            for (const auto& entry : row) {
                CHECK(entry.is_array());
                CHECK(entry.size() == 2);
            }
    const FerrersCode back = code_from_json(j);
    CHECK(back.field->q() == 4);
    for (int g = 0; g < code.dimension(); ++g)
        CHECK(back.generators[static_cast<std::size_t>(g)] == code.generators[static_cast<std::size_t>(g)]);
}

TEST_CASE("report JSON carries the certificate fields") {
    ConstructOptions opts;
    opts.modulus = golden::f5_modulus;
    opts.basis_gamma_exponents = golden::f5_basis_exponents;
    const auto code = construct_p_monotone(FerrersDiagram::from_columns({1, 3, 4, 5, 5}), 4, 5, 1, opts);
    const auto rep = is_mfd(code, code.diagram, 4);
    const json j = report_to_json(rep);
    CHECK(j.at("pass") == true);
    CHECK(j.at("certified") == true);
    CHECK(j.at("method") == "exhaustive");
    CHECK(j.at("codewords_checked") == 624);
    CHECK(j.at("min_rank") == 4);
    CHECK(j.at("witness").is_array());
}

TEST_CASE("matrix text rendering") {
    const auto F2 = BaseField::make(2, 1);
    MatrixOverF m(F2, 2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(format_matrix(m) == "1 0\n0 1\n");

    const auto F4 = BaseField::make(2, 2);
    MatrixOverF x(F4, 1, 2);
    x.at(0, 0) = 2;  // the class of x
    CHECK(format_matrix(x) == "[0,1] [0,0]\n");
}
