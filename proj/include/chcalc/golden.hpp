/*
 * golden.hpp
 * ----------
 * Golden reference data: deterministic JSON snapshots of every headline
 * computation.  The files ship under data/ and double as acceptance
 * artifacts; the CLI --self-test recomputes everything and compares.
 */
#pragma once

#include "chcalc/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace chcalc {

/*
 * One engine per invocation.  The G2/triple layers need every class up to
 * degree 36, so they are built on demand and reject truncations below that.
 */
class Engine {
public:
    explicit Engine(int truncation = 40) : chern(std::max(1, truncation / 2), truncation) {}

    ChernCalculus chern;

    G2Model& g2() {
        ensure_degree_36();
        if (!g2_)
            g2_.emplace(chern);
        return *g2_;
    }

    TripleCalculus& triple() {
        if (!triple_)
            triple_.emplace(chern, g2());
        return *triple_;
    }

private:
    void ensure_degree_36() const {
        if (chern.ring()->truncation() < 36 || chern.max_index() < 18)
            throw std::invalid_argument(
                "this computation needs classes up to degree 36; raise --max-degree");
    }

    std::optional<G2Model> g2_;
    std::optional<TripleCalculus> triple_;
};

inline Json golden_lemma_ec(Engine& e) {
    Json entries = Json::array();
    for (auto& [n, poly] : e.chern.table())
        entries.push_back({{"n", n}, {"poly", poly_to_json(poly)}});
    return Json{{"entries", entries}};
}

inline Json golden_jz(Engine& e) {
    Json entries = Json::array();
    MonomialFilter word4 = e.g2().y_word_filter();
    for (int n = 1; n <= 5; ++n) {
        GradedPoly full = e.g2().jz(n);
        entries.push_back({{"n", n},
                           {"degree", 8 * n - 4},
                           {"poly", poly_to_json(full)},
                           {"reduced", poly_to_json(reduce_mod(full, word4))}});
    }
    return Json{{"entries", entries}};
}

inline MonomialFilter transgression_congruence_filter(const G2Model&, int d) {
    // degree 20: (z4^5); degree 28: (z20) + (z4,z12)^4; degree 36: (z20,z28) + (z4,z12)^4
    if (d == 20)
        return MonomialFilter::weighted_word({1, 0, 0, 0, 0}, 5);
    std::vector<std::size_t> killed = {2};
    if (d == 36)
        killed.push_back(3);
    return MonomialFilter::containing_vars(std::move(killed))
        .unioned_with(MonomialFilter::weighted_word({1, 1, 0, 0, 0}, 4));
}

inline Json golden_transgressions(Engine& e) {
    Json entries = Json::array();
    for (int d : {20, 28, 36}) {
        GradedPoly rep = e.g2().transgression_basis(d);
        entries.push_back(
            {{"degree", d},
             {"rep", poly_to_json(rep)},
             {"congruence_class",
              poly_to_json(reduce_mod(rep, transgression_congruence_filter(e.g2(), d)))},
             {"kernel_dimension", e.g2().kernel_dimension(d)},
             {"lower_product_span_dimension", e.g2().lower_product_span_dimension(d)}});
    }
    return Json{{"entries", entries}};
}

inline Json golden_mu(Engine& e) {
    Json entries = Json::array();
    for (int i : {19, 27, 35}) {
        GradedPoly rep = e.g2().transgression_basis(i + 1);
        TripleTensor full = e.triple().mu_tilde_pullback(rep);
        entries.push_back({{"index", i},
                           {"multiple", rational_to_json(e.triple().mu_star(i))},
                           {"tensor", tensor_to_json(full.tri_positive_part())}});
    }
    return Json{{"entries", entries}};
}

inline Json golden_ch_table(Engine&) {
    Json entries = Json::array();
    for (const auto& xi : TripleCalculus::k_generators())
        for (int m : {10, 14, 18}) {
            TripleTensor t = TripleCalculus::ch_component(xi, m);
            entries.push_back({{"generator", std::string{xi[0]} + "(x)" + xi[1] + "(x)" + xi[2]},
                               {"m", m},
                               {"tensor", tensor_to_json(t)}});
        }
    return Json{{"entries", entries}};
}

inline Json golden_phi(Engine& e) {
    auto sym = e.triple().phi_system();
    auto full = e.triple().phi_system_full();
    return Json{{"matrix", mat_to_json(sym.matrix)},
                {"target", vec_to_json(sym.target)},
                {"columns", sym.column_names},
                {"full_matrix", mat_to_json(full.matrix)},
                {"full_target", vec_to_json(full.target)},
                {"full_columns", full.column_names}};
}

inline Json forced_report_to_json(const ForcedValuationReport& r) {
    Json gammas = Json::array();
    for (const auto& [col, g] : r.gammas)
        gammas.push_back({{"col", col}, {"coeff", rational_to_json(g)}});
    return Json{{"free_cols", r.free_cols},
                {"d0", rational_to_json(r.d0)},
                {"d0_valuation", valuation_to_json(r.d0_valuation)},
                {"gammas", gammas},
                {"proves_unsolvable", r.proves_unsolvable}};
}

inline Json golden_theorem_d(Engine& e) {
    TheoremDReport rep = theorem_d_verdict(e.triple());
    Json forced = Json::array();
    for (const auto& r : rep.forced_d)
        forced.push_back(forced_report_to_json(r));
    return Json{{"certificate", certificate_to_json(rep.certificate)},
                {"certificate_verified", rep.certificate_verified},
                {"negated_certificate", certificate_to_json(rep.negated_certificate)},
                {"negated_verified", rep.negated_verified},
                {"full_certificate", certificate_to_json(rep.full_certificate)},
                {"full_verified", rep.full_verified},
                {"forced_d", forced}};
}

inline Json golden_oracle(Engine&) {
    Json entries = Json::array();
    auto add = [&](const std::string& kind, const std::string& group, long p, int k,
                   const Json& extra, const Verdict& v) {
        Json q{{"kind", kind}, {"group", group}, {"p", p}, {"k", k}};
        for (const auto& [key, val] : extra.items())
            q[key] = val;
        q["answer"] = answer_name(v.answer);
        q["cited"] = v.cited;
        entries.push_back(q);
    };
    struct W { const char* g; long p; int k; };
    for (auto [g, p, k] : {W{"Sp(2)", 3, 2}, W{"G2", 5, 2}, W{"G2", 5, 3}, W{"G2", 5, 4},
                           W{"G2", 7, 2}, W{"G2", 13, 2}, W{"SU(2)", 7, 3}})
        add("williams", g, p, k, Json::object(), williams_local(group_type(g), p, k));
    for (auto [g, p, k] : {W{"G2", 13, 2}, W{"G2", 11, 2}, W{"SU(2)", 7, 3}})
        add("sugawara", g, p, k, Json::object(), sugawara_local(group_type(g), p, k));
    add("gauge", "SU(2)", 11, 3, Json{{"n", 2}}, gauge_projective(group_type("SU(2)"), 11, 2, 3));
    add("gauge", "SU(2)", 7, 3, Json{{"n", 2}}, gauge_projective(group_type("SU(2)"), 7, 2, 3));
    add("gauge", "G2", 13, 1, Json{{"n", 1}}, gauge_projective(group_type("G2"), 13, 1, 1));
    add("gauge-cat", "G2", 31, 3, Json{{"cat_b", 2}}, gauge_cat(group_type("G2"), 31, 2, 3));
    add("gauge-cat", "G2", 29, 3, Json{{"cat_b", 2}}, gauge_cat(group_type("G2"), 29, 2, 3));
    add("gauge-cat", "SU(3)", 13, 3, Json{{"cat_b", 1}}, gauge_cat(group_type("SU(3)"), 13, 1, 3));
    add("gauge-sphere", "SU(2)", 7, 2, Json{{"i", 1}}, gauge_sphere(group_type("SU(2)"), 7, 1, 2));
    add("gauge-sphere", "G2", 13, 2, Json{{"i", 1}}, gauge_sphere(group_type("G2"), 13, 1, 2));
    add("gauge-sphere", "G2", 17, 2, Json{{"i", 2}}, gauge_sphere(group_type("G2"), 17, 2, 2));
    return Json{{"entries", entries}};
}

inline const std::vector<std::pair<std::string, Json (*)(Engine&)>>& golden_sections() {
    static const std::vector<std::pair<std::string, Json (*)(Engine&)>> sections = {
        {"lemma_ec", &golden_lemma_ec},         {"jz", &golden_jz},
        {"transgressions", &golden_transgressions}, {"mu", &golden_mu},
        {"ch_table", &golden_ch_table},         {"phi", &golden_phi},
        {"theorem_d", &golden_theorem_d},       {"oracle", &golden_oracle}};
    return sections;
}

inline void write_golden(Engine& e, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, fn] : golden_sections()) {
        std::ofstream out(dir + "/" + name + ".json");
        if (!out)
            throw std::invalid_argument("cannot write " + dir + "/" + name + ".json");
        out << fn(e).dump(2) << "\n";
    }
}

// Returns the failing section names (empty means the self-test passed).
inline std::vector<std::string> self_test(Engine& e, const std::string& dir,
                                          std::ostream& out) {
    std::vector<std::string> failures;
    for (const auto& [name, fn] : golden_sections()) {
        std::string path = dir + "/" + name + ".json";
        Json expected;
        try {
            expected = load_json_file(path);
        } catch (const std::exception& ex) {
            out << "[FAIL] " << name << ": " << ex.what() << "\n";
            failures.push_back(name);
            continue;
        }
        Json actual = fn(e);
        if (actual == expected) {
            out << "[ok]   " << name << "\n";
        } else {
            out << "[FAIL] " << name << ": recomputed value differs from " << path << "\n";
            failures.push_back(name);
        }
    }
    return failures;
}

}  // namespace chcalc
