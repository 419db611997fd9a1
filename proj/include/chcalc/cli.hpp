/*
 * cli.hpp
 * -------
 * Command-line front end.  Every subcommand prints a deterministic text
 * report, or the JSON encoding under --json.  Exit codes: 0 for any
 * computed verdict (UNSOLVABLE / NO / UNKNOWN are answers, not errors),
 * 1 for invalid input, 2 for an internal consistency failure (certificate
 * re-verification or --self-test mismatch).
 */
#pragma once

#include "chcalc/golden.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace chcalc::cli {

struct Options {
    bool json = false;
    bool factorial = false;
};

inline std::string scalar(const Rational& q, const Options& opt) {
    return opt.factorial ? factorial_form(q) : to_string(q);
}

inline std::string tensor_str(const TripleTensor& t, const Options& opt) {
    if (t.is_zero())
        return "0";
    std::string out;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            for (int w = 0; w < 3; ++w) {
                const Rational& c = t.at(u, v, w);
                if (c == 0)
                    continue;
                if (!out.empty())
                    out += " + ";
                out += "(" + scalar(c, opt) + ")" + susp_name(u) + "(x)" + susp_name(v) + "(x)" +
                       susp_name(w);
            }
    return out;
}

inline void print_system(std::ostream& out, const DVRSystem& sys,
                         const std::vector<std::string>& cols, const Options& opt) {
    out << "columns:";
    for (const auto& c : cols)
        out << " " << c;
    out << "\n";
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < sys.cols(); ++j)
            out << (j ? ", " : "") << scalar(sys.matrix[i][j], opt);
        out << " | " << scalar(sys.target[i], opt) << "]\n";
    }
}

inline void print_certificate(std::ostream& out, const DVRSystem& sys,
                              const DVRCertificate& cert, bool verified, const Options& opt) {
    out << "verdict: " << (cert.verdict == DVRVerdict::Solvable ? "SOLVABLE" : "UNSOLVABLE")
        << "\n";
    out << (cert.verdict == DVRVerdict::Solvable ? "witness x = [" : "dual witness u = [");
    for (std::size_t i = 0; i < cert.witness.size(); ++i)
        out << (i ? ", " : "") << scalar(cert.witness[i], opt);
    out << "]\n";
    if (cert.verdict == DVRVerdict::Unsolvable) {
        out << "nu_" << sys.p << "(u^T t) = "
            << (cert.ut_valuation ? std::to_string(*cert.ut_valuation) : "+infinity") << "\n";
    }
    out << "certificate re-verified: " << (verified ? "yes" : "NO") << "\n";
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chcalc: exact Chern character calculus with p-local certificates"};
    app.require_subcommand(0, 1);

    Options opt;
    bool selftest = false;
    std::string data_dir = "data";
    int max_degree = 40;
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_flag("--factorial-form", opt.factorial, "render large scalars as factorials");
    app.add_flag("--self-test", selftest, "recompute the golden suite and compare against --data");
    app.add_option("--data", data_dir, "golden data directory (default: data)");
    app.add_option("--max-degree", max_degree, "ring truncation degree (default 40)")
        ->check(CLI::Range(2, 200));

    int girard_n = 1;
    auto* cmd_girard = app.add_subcommand("girard", "power sum s_i via Girard's formula");
    cmd_girard->add_option("--n", girard_n, "index i >= 1")->required();

    int newton_max = 18;
    auto* cmd_newton = app.add_subcommand("newton-check", "Newton identity residuals (all zero)");
    cmd_newton->add_option("--max-n", newton_max, "check n = 1..max (default 18)");

    int ep_n = 2;
    bool ep_reduced = false, ep_raw = false;
    auto* cmd_ep = app.add_subcommand("e-pullback", "the class E*c_n");
    cmd_ep->add_option("--n", ep_n, "index n >= 0")->required();
    cmd_ep->add_flag("--reduced", ep_reduced, "reduce modulo the table congruence ideal");
    cmd_ep->add_flag("--raw", ep_raw, "print the exact class (default)");

    auto* cmd_table = app.add_subcommand("lemma-ec", "the nine reduced classes E*c_2..E*c_18");

    int jz_n = 1;
    auto* cmd_jz = app.add_subcommand("jz", "the class j*z_{8n-4} in y4, y12");
    cmd_jz->add_option("--n", jz_n, "index n in 1..5")->required();

    int tr_d = 20;
    auto* cmd_tr = app.add_subcommand("transgression", "normalized kernel representative");
    cmd_tr->add_option("--degree", tr_d, "degree in {20, 28, 36}")->required();

    int mu_i = 19;
    auto* cmd_mu = app.add_subcommand("mu", "mu*(a_i) as a multiple of the b-class");
    cmd_mu->add_option("--index", mu_i, "index in {19, 27, 35}")->required();

    auto* cmd_ch = app.add_subcommand("ch-table", "scaled Chern characters of the 8 generators");

    bool phi_full = false;
    auto* cmd_phi = app.add_subcommand("phi-matrix", "the obstruction linear system");
    cmd_phi->add_flag("--full", phi_full, "also print the unsymmetrized 7x8 system");

    auto* cmd_thm = app.add_subcommand("theorem-d", "solve the obstruction system over Z_(5)");

    std::string solve_matrix, solve_target;
    long solve_p = 5;
    auto* cmd_solve = app.add_subcommand("solve", "solvability of A x = t over Z_(p)");
    cmd_solve->add_option("--matrix", solve_matrix, "JSON file: array of rows of rationals")
        ->required();
    cmd_solve->add_option("--target", solve_target, "JSON file: array of rationals")->required();
    cmd_solve->add_option("--prime", solve_p, "the prime p (default 5)");

    std::string or_group;
    long or_p = 5;
    int or_k = 2;
    int or_gauge_n = -1, or_cat_b = -1, or_sphere_i = -1;
    bool or_sugawara = false, or_monotone = false;
    auto* cmd_or = app.add_subcommand("oracle", "higher homotopy commutativity verdicts");
    cmd_or->add_option("--group", or_group, "SU(n), Sp(n), Spin(n), G2, F4, E6, E7, E8")
        ->required();
    cmd_or->add_option("--prime", or_p, "the prime p")->required();
    cmd_or->add_option("--k", or_k, "commutativity height k")->required();
    auto* og = cmd_or->add_option("--gauge-n", or_gauge_n, "gauge group over the n-th projective space");
    auto* oc = cmd_or->add_option("--cat-b", or_cat_b, "gauge group over a base of this category");
    auto* os = cmd_or->add_option("--sphere-i", or_sphere_i, "gauge group over S^{2 n_i}");
    og->excludes(oc)->excludes(os);
    oc->excludes(os);
    cmd_or->add_flag("--sugawara", or_sugawara, "ask the Sugawara question instead of Williams");
    cmd_or->add_flag("--assume-williams-monotone", or_monotone,
                     "propagate negative Williams verdicts upward in k");

    std::string golden_dir;
    auto* cmd_golden = app.add_subcommand("golden", "regenerate the golden data files");
    cmd_golden->add_option("--write", golden_dir, "output directory")->required();

    // global flags remain usable after a subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (selftest) {
            Engine engine(max_degree);
            auto failures = self_test(engine, data_dir, out);
            if (failures.empty()) {
                out << "self-test: all golden sections match\n";
                return 0;
            }
            out << "self-test: " << failures.size() << " section(s) FAILED\n";
            return 2;
        }
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 1;
        }

        Engine engine(max_degree);
        ChernCalculus& chern = engine.chern;

        if (cmd_girard->parsed()) {
            const GradedPoly& s = chern.power_sum(girard_n);
            if (opt.json)
                out << Json{{"n", girard_n}, {"poly", poly_to_json(s)}}.dump(2) << "\n";
            else
                out << "s" << girard_n << " = " << s.str() << "\n";
            return 0;
        }

        if (cmd_newton->parsed()) {
            bool all_zero = true;
            Json rows = Json::array();
            for (int n = 1; n <= newton_max; ++n) {
                bool zero = chern.newton_residual(n).is_zero();
                all_zero = all_zero && zero;
                if (opt.json)
                    rows.push_back({{"n", n}, {"zero", zero}});
                else
                    out << "newton_residual(" << n << ") = " << (zero ? "0" : "NONZERO") << "\n";
            }
            if (opt.json)
                out << Json{{"max_n", newton_max}, {"all_zero", all_zero}, {"rows", rows}}.dump(2)
                    << "\n";
            else
                out << (all_zero ? "all residuals vanish\n" : "RESIDUAL FAILURE\n");
            return all_zero ? 0 : 2;
        }

        if (cmd_ep->parsed()) {
            GradedPoly p = chern.e_pullback_c(ep_n);
            if (ep_reduced)
                p = reduce_mod(p, chern.table_filter());
            if (opt.json)
                out << Json{{"n", ep_n},
                            {"reduced", ep_reduced},
                            {"poly", poly_to_json(p)}}
                           .dump(2)
                    << "\n";
            else
                out << "E*c" << ep_n << (ep_reduced ? " == " : " = ") << p.str() << "\n";
            return 0;
        }

        if (cmd_table->parsed()) {
            if (opt.json) {
                out << golden_lemma_ec(engine).dump(2) << "\n";
            } else {
                for (auto& [n, p] : chern.table())
                    out << "E*c" << n << " == " << p.str() << "\n";
            }
            return 0;
        }

        if (cmd_jz->parsed()) {
            GradedPoly full = engine.g2().jz(jz_n);
            GradedPoly red = reduce_mod(full, engine.g2().y_word_filter());
            if (opt.json)
                out << Json{{"n", jz_n},
                            {"poly", poly_to_json(full)},
                            {"reduced", poly_to_json(red)}}
                           .dump(2)
                    << "\n";
            else
                out << "j*z" << 8 * jz_n - 4 << " = " << full.str() << "\n"
                    << "        == " << red.str() << "  (mod (y4,y12)^4)\n";
            return 0;
        }

        if (cmd_tr->parsed()) {
            GradedPoly rep = engine.g2().transgression_basis(tr_d);
            GradedPoly cls = reduce_mod(rep, transgression_congruence_filter(engine.g2(), tr_d));
            if (opt.json)
                out << Json{{"degree", tr_d},
                            {"rep", poly_to_json(rep)},
                            {"congruence_class", poly_to_json(cls)},
                            {"kernel_dimension", engine.g2().kernel_dimension(tr_d)},
                            {"lower_product_span_dimension",
                             engine.g2().lower_product_span_dimension(tr_d)}}
                           .dump(2)
                    << "\n";
            else
                out << "tau(a" << tr_d - 1 << ") rep = " << rep.str() << "\n"
                    << "             == " << cls.str() << "  (mod stated ideal)\n"
                    << "kernel dimension " << engine.g2().kernel_dimension(tr_d)
                    << ", lower-product span " << engine.g2().lower_product_span_dimension(tr_d)
                    << "\n";
            return 0;
        }

        if (cmd_mu->parsed()) {
            Rational m = engine.triple().mu_star(mu_i);
            GradedPoly rep = engine.g2().transgression_basis(mu_i + 1);
            TripleTensor t = engine.triple().mu_tilde_pullback(rep).tri_positive_part();
            if (opt.json)
                out << Json{{"index", mu_i},
                            {"multiple", rational_to_json(m)},
                            {"tensor", tensor_to_json(t)}}
                           .dump(2)
                    << "\n";
            else
                out << "mu*(a" << mu_i << ") = (" << scalar(m, opt) << ") b" << mu_i << "\n"
                    << "  = " << tensor_str(t, opt) << "\n";
            return 0;
        }

        if (cmd_ch->parsed()) {
            if (opt.json) {
                out << golden_ch_table(engine).dump(2) << "\n";
            } else {
                for (const auto& xi : TripleCalculus::k_generators()) {
                    for (int m : {10, 14, 18}) {
                        TripleTensor t = TripleCalculus::ch_component(xi, m);
                        out << m - 1 << "!ch" << m << "(" << xi[0] << "(x)" << xi[1] << "(x)"
                            << xi[2] << ") = " << tensor_str(t, opt) << "\n";
                    }
                }
            }
            return 0;
        }

        if (cmd_phi->parsed()) {
            auto sym = engine.triple().phi_system();
            if (opt.json) {
                out << golden_phi(engine).dump(2) << "\n";
            } else {
                print_system(out, DVRSystem{sym.matrix, sym.target, 5}, sym.column_names, opt);
                if (phi_full) {
                    auto full = engine.triple().phi_system_full();
                    out << "unsymmetrized:\n";
                    print_system(out, DVRSystem{full.matrix, full.target, 5}, full.column_names,
                                 opt);
                }
            }
            return 0;
        }

        if (cmd_thm->parsed()) {
            TheoremDReport rep = theorem_d_verdict(engine.triple());
            if (opt.json) {
                Json j = golden_theorem_d(engine);
                j["system"] = Json{{"matrix", mat_to_json(rep.system.matrix)},
                                   {"target", vec_to_json(rep.system.target)},
                                   {"p", rep.system.p}};
                out << j.dump(2) << "\n";
            } else {
                out << "obstruction system over Z_(5):\n";
                print_system(out, rep.system, rep.column_names, opt);
                print_certificate(out, rep.system, rep.certificate, rep.certificate_verified,
                                  opt);
                out << "forced-valuation analysis of the last unknown:\n";
                for (const auto& f : rep.forced_d) {
                    out << "  free columns {";
                    for (std::size_t i = 0; i < f.free_cols.size(); ++i)
                        out << (i ? ", " : "") << rep.column_names[f.free_cols[i]];
                    out << "}: d = " << scalar(f.d0, opt);
                    for (const auto& [col, gm] : f.gammas)
                        out << " + (" << scalar(gm, opt) << ")*" << rep.column_names[col];
                    out << ", nu_5(d0) = "
                        << (f.d0_valuation ? std::to_string(*f.d0_valuation) : "+infinity")
                        << (f.proves_unsolvable ? "  [forces non-integrality]" : "") << "\n";
                }
                out << "negated target: "
                    << (rep.negated_certificate.verdict == DVRVerdict::Solvable ? "SOLVABLE"
                                                                                : "UNSOLVABLE")
                    << "\n";
                out << "unsymmetrized 7x8 system: "
                    << (rep.full_certificate.verdict == DVRVerdict::Solvable ? "SOLVABLE"
                                                                             : "UNSOLVABLE")
                    << "\n";
            }
            bool all_verified =
                rep.certificate_verified && rep.negated_verified && rep.full_verified;
            return all_verified ? 0 : 2;
        }

        if (cmd_solve->parsed()) {
            DVRSystem sys{mat_from_json(load_json_file(solve_matrix)),
                          vec_from_json(load_json_file(solve_target)), solve_p};
            DVRCertificate cert = solve_over_zp(sys);
            bool verified = verify_certificate(sys, cert);
            if (opt.json) {
                Json j = certificate_to_json(cert);
                j["verified"] = verified;
                out << j.dump(2) << "\n";
            } else {
                print_certificate(out, sys, cert, verified, opt);
            }
            return verified ? 0 : 2;
        }

        if (cmd_or->parsed()) {
            LieType g = group_type(or_group);
            Verdict v;
            if (or_gauge_n > 0)
                v = gauge_projective(g, or_p, or_gauge_n, or_k);
            else if (or_cat_b > 0)
                v = gauge_cat(g, or_p, or_cat_b, or_k);
            else if (or_sphere_i > 0)
                v = gauge_sphere(g, or_p, or_sphere_i, or_k);
            else if (or_sugawara)
                v = sugawara_local(g, or_p, or_k);
            else
                v = williams_local(g, or_p, or_k, or_monotone);
            if (opt.json)
                out << verdict_to_json(v).dump() << "\n";
            else
                out << answer_name(v.answer) << " (" << v.cited << ")\n";
            return 0;
        }

        if (cmd_golden->parsed()) {
            write_golden(engine, golden_dir);
            out << "golden data written to " << golden_dir << "\n";
            return 0;
        }

        out << app.help();
        return 1;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace chcalc::cli
