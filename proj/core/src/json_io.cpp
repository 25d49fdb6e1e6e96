#include "qcanon/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qcanon {

namespace {

using njson = nlohmann::ordered_json;

njson poly_json(const LaurentPoly& p) {
    njson a = njson::array();
    for (const auto& [e, c] : p.terms()) a.push_back(njson::array({e, c.str()}));
    return a;
}

LaurentPoly poly_from(const njson& a) {
    if (!a.is_array()) throw std::invalid_argument("polynomial: expected array");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : a) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("polynomial: expected [exponent, coefficient] pair");
        int e = t[0].get<int>();
        BigInt c(t[1].get<std::string>());
        terms.emplace_back(e, std::move(c));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

njson matrix_json(const ExponentMatrix& m) {
    njson rows = njson::array();
    for (int i = 0; i < m.n(); ++i) {
        njson row = njson::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExponentMatrix matrix_from(const njson& rows) {
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix: expected rows");
    std::vector<std::vector<int>> data;
    for (const auto& row : rows) data.push_back(row.get<std::vector<int>>());
    return ExponentMatrix::from_rows(data);
}

const char* basis_name(BasisTag b) {
    switch (b) {
        case BasisTag::plain: return "plain";
        case BasisTag::modified: return "modified";
        case BasisTag::canonical: return "canonical";
    }
    throw std::logic_error("unknown basis tag");
}

BasisTag basis_from(const std::string& s) {
    if (s == "plain") return BasisTag::plain;
    if (s == "modified") return BasisTag::modified;
    if (s == "canonical") return BasisTag::canonical;
    throw std::invalid_argument("unknown basis \"" + s + "\"");
}

// decreasing stat, then lex: the canonical term order for serialization
std::vector<const std::pair<const ExponentMatrix, LaurentPoly>*> sorted_terms(
    const AlgebraElement& e) {
    std::vector<const std::pair<const ExponentMatrix, LaurentPoly>*> ts;
    ts.reserve(e.terms().size());
    for (const auto& t : e.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* x, auto* y) {
        long long sx = x->first.stat(), sy = y->first.stat();
        if (sx != sy) return sx > sy;
        return x->first < y->first;
    });
    return ts;
}

}  // namespace

std::string to_json(const LaurentPoly& p) { return poly_json(p).dump(); }

LaurentPoly laurent_from_json(const std::string& text) {
    return poly_from(njson::parse(text));
}

std::string to_json(const AlgebraElement& e) {
    njson out;
    out["n"] = e.n();
    out["basis"] = basis_name(e.basis());
    njson terms = njson::array();
    for (auto* t : sorted_terms(e)) {
        njson term;
        term["matrix"] = matrix_json(t->first);
        term["coeff"] = poly_json(t->second);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out.dump();
}

AlgebraElement element_from_json(const std::string& text) {
    njson in = njson::parse(text);
    int n = in.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("element: n must be positive");
    AlgebraElement e(n, basis_from(in.at("basis").get<std::string>()));
    for (const auto& term : in.at("terms")) {
        ExponentMatrix m = matrix_from(term.at("matrix"));
        if (m.n() != n) throw std::invalid_argument("element: matrix size mismatch");
        e.add_term(m, poly_from(term.at("coeff")));
    }
    return e;
}

std::string to_json(const SolvedBlock& b) {
    njson out;
    out["ro"] = b.ro;
    out["co"] = b.co;
    njson elements = njson::array();
    for (size_t a = 0; a < b.order.size(); ++a) {
        njson el;
        el["top"] = matrix_json(b.order[a]);
        njson coeffs = njson::array();
        for (size_t k = a; k < b.order.size(); ++k) {
            if (b.transition[a][k].is_zero()) continue;
            njson c;
            c["matrix"] = matrix_json(b.order[k]);
            c["h"] = poly_json(b.transition[a][k]);
            coeffs.push_back(std::move(c));
        }
        el["coeffs"] = std::move(coeffs);
        elements.push_back(std::move(el));
    }
    out["elements"] = std::move(elements);
    return out.dump();
}

SolvedBlock block_from_json(const std::string& text) {
    njson in = njson::parse(text);
    SolvedBlock b;
    b.ro = in.at("ro").get<std::vector<int>>();
    b.co = in.at("co").get<std::vector<int>>();
    b.order = enumerate_block(b.ro, b.co);
    for (size_t k = 0; k < b.order.size(); ++k) b.index.emplace(b.order[k], static_cast<int>(k));
    const auto& elements = in.at("elements");
    if (elements.size() != b.order.size())
        throw std::invalid_argument("block: element count mismatch");
    b.transition.assign(b.order.size(), std::vector<LaurentPoly>(b.order.size()));
    for (size_t a = 0; a < elements.size(); ++a) {
        if (matrix_from(elements[a].at("top")) != b.order[a])
            throw std::invalid_argument("block: top out of order");
        for (const auto& c : elements[a].at("coeffs")) {
            ExponentMatrix m = matrix_from(c.at("matrix"));
            auto it = b.index.find(m);
            if (it == b.index.end()) throw std::invalid_argument("block: stray matrix");
            b.transition[a][static_cast<size_t>(it->second)] = poly_from(c.at("h"));
        }
    }
    return b;
}

}  // namespace qcanon
