/*
 * json_io.hpp
 * -----------
 * JSON encodings.  Rationals serialize as the string "num/den" (denominator
 * omitted when 1).  The polynomial schema is
 *
 *   {"ring": <name>, "terms": [{"mono": {<var>: <exp>, ...}, "coeff": "num/den"}, ...]}
 *
 * with terms sorted by degree then lexicographic exponent order, so output
 * is deterministic.
 */
#pragma once

#include "chcalc/dvr.hpp"
#include "chcalc/lie.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace chcalc {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(static_cast<long long>(j));
    return parse_rational(j.get<std::string>());
}

inline Json poly_to_json(const GradedPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {  // map order is (degree, lex) already
        Json mono = Json::object();
        for (const auto& [v, e] : m.factors())
            mono[p.ring()->var(v).name] = e;
        terms.push_back({{"mono", mono}, {"coeff", rational_to_json(c)}});
    }
    return Json{{"ring", p.ring()->name()}, {"terms", terms}};
}

inline GradedPoly poly_from_json(const Json& j, const RingSpecPtr& ring) {
    if (j.at("ring").get<std::string>() != ring->name())
        throw std::invalid_argument("poly_from_json: ring name mismatch");
    GradedPoly p(ring);
    for (const auto& term : j.at("terms")) {
        Monomial m;
        for (const auto& [name, exp] : term.at("mono").items())
            m = m * Monomial::variable(ring->index_of(name), exp.get<int>());
        p.add_term(m, rational_from_json(term.at("coeff")));
    }
    return p;
}

inline Json tensor_to_json(const TripleTensor& t) {
    Json terms = Json::array();
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            for (int w = 0; w < 3; ++w) {
                const Rational& c = t.at(u, v, w);
                if (c == 0)
                    continue;
                terms.push_back({{"factors", {susp_name(u), susp_name(v), susp_name(w)}},
                                 {"coeff", rational_to_json(c)}});
            }
    return Json{{"terms", terms}};
}

inline Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rational& x : v)
        out.push_back(rational_to_json(x));
    return out;
}

inline Vec vec_from_json(const Json& j) {
    Vec out;
    for (const auto& x : j)
        out.push_back(rational_from_json(x));
    return out;
}

inline Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (const Vec& row : m)
        out.push_back(vec_to_json(row));
    return out;
}

inline Mat mat_from_json(const Json& j) {
    Mat out;
    for (const auto& row : j)
        out.push_back(vec_from_json(row));
    return out;
}

inline Json valuation_to_json(const Valuation& v) {
    return v ? Json(*v) : Json("+infinity");
}

inline Json certificate_to_json(const DVRCertificate& cert) {
    Json j;
    j["verdict"] = cert.verdict == DVRVerdict::Solvable ? "SOLVABLE" : "UNSOLVABLE";
    j["witness"] = vec_to_json(cert.witness);
    if (cert.verdict == DVRVerdict::Unsolvable)
        j["ut_valuation"] = valuation_to_json(cert.ut_valuation);
    return j;
}

inline Json verdict_to_json(const Verdict& v) {
    return Json{{"answer", answer_name(v.answer)}, {"cited", v.cited}};
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace chcalc
