#pragma once

// JSON artifacts: diagrams, constructed codes, verification reports.
// Field entries serialize as integer residues when e = 1 and as ascending
// coefficient lists when e > 1.

#include <string>
#include <vector>

#include "json.hpp"

#include "mfd/codes.hpp"
#include "mfd/verify.hpp"

namespace mfd {

using nlohmann::json;

inline json diagram_to_json(const FerrersDiagram& d) {
    return json{{"n", d.order()}, {"columns", d.columns()}};
}

inline FerrersDiagram diagram_from_json(const json& j) {
    const auto cols = j.at("columns").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(cols.size()))
        fail(Errc::ParseError, "diagram order does not match the column list");
    return FerrersDiagram::from_columns(cols);
}

inline json entry_to_json(const BaseField& f, std::uint32_t code) {
    if (f.e() == 1) return json(code);
    return json(f.code_coeffs(code));
}

inline std::uint32_t entry_from_json(const BaseField& f, const json& j) {
    if (j.is_number()) {
        if (f.e() != 1) fail(Errc::ParseError, "scalar entry in an extension-field artifact");
        const auto v = j.get<std::uint64_t>();
        if (v >= f.q()) fail(Errc::ParseError, "entry out of range for the field");
        return static_cast<std::uint32_t>(v);
    }
    return f.coeffs_code(j.get<std::vector<std::uint64_t>>());
}

inline json matrix_to_json(const MatrixOverF& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(*m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline MatrixOverF matrix_from_json(const BaseFieldPtr& f, const json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    MatrixOverF m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(static_cast<std::size_t>(i)).size()) != cols)
            fail(Errc::ParseError, "ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = entry_from_json(*f, j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(c)));
    }
    return m;
}

inline json trace_to_json(const ConstructionTrace& t) {
    json j{{"path", t.path}, {"modulus", t.modulus}, {"basis", t.basis}};
    if (t.offset) j["offset"] = *t.offset;
    if (t.embedded) j["embedded"] = diagram_to_json(*t.embedded);
    if (t.adjoint_diagram) j["adjoint"] = diagram_to_json(*t.adjoint_diagram);
    if (t.j) j["j"] = *t.j;
    if (!t.y_set.empty()) j["Y"] = t.y_set;
    if (t.ell) j["ell"] = *t.ell;
    if (t.d_prime) j["D_prime"] = diagram_to_json(*t.d_prime);
    if (t.d_second) j["D_second"] = diagram_to_json(*t.d_second);
    if (t.nu_min_d_second) j["nu_min_D_second"] = *t.nu_min_d_second;
    if (t.dropped_cells) j["dropped_cells"] = *t.dropped_cells;
    if (!t.notes.empty()) j["notes"] = t.notes;
    return j;
}

inline ConstructionTrace trace_from_json(const json& j) {
    ConstructionTrace t;
    t.path = j.value("path", "");
    t.modulus = j.value("modulus", "");
    t.basis = j.value("basis", "default");
    if (j.contains("offset")) t.offset = j.at("offset").get<int>();
    if (j.contains("embedded")) t.embedded = diagram_from_json(j.at("embedded"));
    if (j.contains("adjoint")) t.adjoint_diagram = diagram_from_json(j.at("adjoint"));
    if (j.contains("j")) t.j = j.at("j").get<int>();
    if (j.contains("Y")) t.y_set = j.at("Y").get<std::vector<int>>();
    if (j.contains("ell")) t.ell = j.at("ell").get<int>();
    if (j.contains("D_prime")) t.d_prime = diagram_from_json(j.at("D_prime"));
    if (j.contains("D_second")) t.d_second = diagram_from_json(j.at("D_second"));
    if (j.contains("nu_min_D_second")) t.nu_min_d_second = j.at("nu_min_D_second").get<int>();
    if (j.contains("dropped_cells")) t.dropped_cells = j.at("dropped_cells").get<int>();
    if (j.contains("notes")) t.notes = j.at("notes").get<std::vector<std::string>>();
    return t;
}

inline json code_to_json(const FerrersCode& c) {
    json gens = json::array();
    for (const MatrixOverF& g : c.generators) gens.push_back(matrix_to_json(g));
    return json{{"q", c.field->q()}, {"p", c.p},           {"e", c.e},
                {"n", c.n},          {"d", c.d},           {"diagram", diagram_to_json(c.diagram)},
                {"dimension", c.dimension()},              {"path", c.trace.path},
                {"trace", trace_to_json(c.trace)},         {"generators", std::move(gens)}};
}

inline FerrersCode code_from_json(const json& j) {
    FerrersCode c;
    c.p = j.at("p").get<std::uint64_t>();
    c.e = j.at("e").get<int>();
    c.field = BaseField::make(c.p, c.e);
    if (j.contains("q") && j.at("q").get<std::uint64_t>() != c.field->q())
        fail(Errc::ParseError, "q does not equal p^e in the code artifact");
    c.n = j.at("n").get<int>();
    c.d = j.at("d").get<int>();
    c.diagram = diagram_from_json(j.at("diagram"));
    if (c.diagram.order() != c.n) fail(Errc::ParseError, "diagram order does not match n");
    if (j.contains("trace")) c.trace = trace_from_json(j.at("trace"));
    if (j.contains("path")) c.trace.path = j.at("path").get<std::string>();
    for (const json& g : j.at("generators")) {
        MatrixOverF m = matrix_from_json(c.field, g);
        if (m.rows() != c.n || m.cols() != c.n) fail(Errc::ParseError, "generator is not n x n");
        c.generators.push_back(std::move(m));
    }
    if (j.contains("dimension") && j.at("dimension").get<int>() != c.dimension())
        fail(Errc::ParseError, "stated dimension does not match the generator count");
    return c;
}

inline json report_to_json(const VerificationReport& r) {
    json j{{"support_ok", r.support_ok},
           {"dimension", r.dimension},
           {"expected_dimension", r.expected_dimension},
           {"method", r.method},
           {"certified", r.certified},
           {"not_a_proof", r.not_a_proof},
           {"rank_violation", r.rank_violation},
           {"codewords_checked", r.codewords_checked},
           {"pass", r.pass},
           {"elapsed_seconds", r.elapsed_seconds}};
    j["min_rank"] = r.min_rank ? json(*r.min_rank) : json(nullptr);
    j["witness"] = r.witness ? matrix_to_json(*r.witness) : json(nullptr);
    return j;
}

/// Text rendering: one row per line, entries space-separated; extension-field
/// entries print as bracketed ascending coefficient lists.
inline std::string format_matrix(const MatrixOverF& m) {
    std::ostringstream os;
    const BaseField& f = *m.field();
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            if (f.e() == 1) {
                os << m.at(i, j);
            } else {
                const auto cs = f.code_coeffs(m.at(i, j));
                os << '[';
                for (std::size_t t = 0; t < cs.size(); ++t) {
                    if (t) os << ',';
                    os << cs[t];
                }
                os << ']';
            }
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace mfd
