/*
 * acceptance.cpp
 * --------------
 * The acceptance suite: one criterion per invocation (1..10), or all when
 * no argument is given.  Prints [PASS]/[FAIL] per criterion; exit code 0
 * iff every requested criterion passed.  All checks are exact.
 */
#include "chcalc/cli.hpp"

#include "support/residue_oracle.hpp"
#include "support/symmfn_oracle.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <random>
#include <sstream>

using namespace chcalc;

namespace {

struct Checker {
    bool ok = true;
    std::ostream& out;

    explicit Checker(std::ostream& o) : out(o) {}

    void check(bool cond, const std::string& what) {
        out << "  " << (cond ? "[ok]  " : "[FAIL]") << " " << what << "\n";
        ok = ok && cond;
    }
};

Monomial m246(int a, int b, int c) {
    return Monomial::variable(1, a) * Monomial::variable(3, b) * Monomial::variable(5, c);
}

TripleTensor perm_sum(int a, int b, int c) {
    std::array<int, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    TripleTensor t;
    do {
        t += TripleTensor::basis(v[0], v[1], v[2]);
    } while (std::next_permutation(v.begin(), v.end()));
    return t;
}

bool criterion1(Engine& e, Checker& c) {
    std::ostringstream out, err;
    int code = cli::run({"lemma-ec"}, out, err);
    c.check(code == 0, "lemma-ec exits 0");
    c.check(out.str() == "E*c2 == c2\n"
                         "E*c4 == (1/2)c2^2\n"
                         "E*c6 == c6 - c2 c4 + (1/2)c2^3\n"
                         "E*c8 == c2 c6\n"
                         "E*c10 == -c4 c6 + (3/2)c2^2 c6\n"
                         "E*c12 == (1/2)c6^2\n"
                         "E*c14 == (3/2)c2 c6^2\n"
                         "E*c16 == 0\n"
                         "E*c18 == (1/2)c6^3\n",
            "lemma-ec output equals the nine displayed congruence classes");

    auto rows = e.chern.table();
    auto poly = [&](std::vector<std::tuple<int, int, int, Rational>> terms) {
        GradedPoly p(e.chern.ring());
        for (auto& [a, b, cc, q] : terms)
            p.add_term(m246(a, b, cc), q);
        return p;
    };
    std::map<int, GradedPoly> want;
    want.emplace(2, poly({{1, 0, 0, 1}}));
    want.emplace(4, poly({{2, 0, 0, Rational(1, 2)}}));
    want.emplace(6, poly({{0, 0, 1, 1}, {1, 1, 0, -1}, {3, 0, 0, Rational(1, 2)}}));
    want.emplace(8, poly({{1, 0, 1, 1}}));
    want.emplace(10, poly({{0, 1, 1, -1}, {2, 0, 1, Rational(3, 2)}}));
    want.emplace(12, poly({{0, 0, 2, Rational(1, 2)}}));
    want.emplace(14, poly({{1, 0, 2, Rational(3, 2)}}));
    want.emplace(16, poly({}));
    want.emplace(18, poly({{0, 0, 3, Rational(1, 2)}}));
    bool exact = rows.size() == 9;
    for (auto& [n, p] : rows)
        exact = exact && want.count(n) && want.at(n) == p;
    c.check(exact, "table matches term-for-term as polynomials");
    return c.ok;
}

bool criterion2(Engine& e, Checker& c) {
    bool zero = true;
    for (int n = 1; n <= 18; ++n)
        zero = zero && e.chern.newton_residual(n).is_zero();
    c.check(zero, "newton_residual(n) = 0 for all n <= 18");
    bool agrees = true;
    for (int i = 1; i <= 18; ++i)
        agrees = agrees && e.chern.power_sum(i) == testing::oracle_power_sum(e.chern, i);
    c.check(agrees, "girard_power_sum agrees with the formal-roots oracle for i <= 18");
    return c.ok;
}

bool criterion3(Engine& e, Checker& c) {
    c.check(e.chern.characterization_check(18),
            "power sums on {E*c_i} give s_m iff m = 2 mod 4, else 0 (m <= 18)");
    c.check(e.chern.e_idempotence_check(36), "E^2 = E up to degree 36");
    return c.ok;
}

bool criterion4(Engine& e, Checker& c) {
    auto ring = e.g2().bg2_ring();
    auto ypoly = [&](std::vector<std::tuple<int, int, Rational>> terms) {
        GradedPoly p(ring);
        for (auto& [a, b, q] : terms)
            p.add_term(Monomial::variable(0, a) * Monomial::variable(1, b), q);
        return p;
    };
    c.check(e.g2().jz(1) == ypoly({{1, 0, -1}}), "j*z4 = -y4 exactly");
    c.check(e.g2().jz(2) == ypoly({{0, 1, -1}, {3, 0, Rational(-1, 4)}}),
            "j*z12 = -y12 - 1/4 y4^3 exactly");
    MonomialFilter word4 = e.g2().y_word_filter();
    c.check(reduce_mod(e.g2().jz(3), word4) == ypoly({{2, 1, Rational(-5, 4)}}),
            "j*z20 == -5/4 y12 y4^2 mod (y4,y12)^4");
    c.check(reduce_mod(e.g2().jz(4), word4) == ypoly({{1, 2, Rational(-3, 2)}}),
            "j*z28 == -3/2 y12^2 y4 mod (y4,y12)^4");
    c.check(reduce_mod(e.g2().jz(5), word4) == ypoly({{0, 3, Rational(-1, 2)}}),
            "j*z36 == -1/2 y12^3 mod (y4,y12)^4");
    return c.ok;
}

bool criterion5(Engine& e, Checker& c) {
    auto zv = [&](const char* n) { return e.g2().b_ring()->index_of(n); };
    GradedPoly rep20 = e.g2().transgression_basis(20);
    GradedPoly rep28 = e.g2().transgression_basis(28);
    GradedPoly rep36 = e.g2().transgression_basis(36);
    c.check(rep20.coefficient(Monomial::variable(zv("z20"))) == 1 &&
                rep20.coefficient(Monomial::variable(zv("z12")) *
                                  Monomial::variable(zv("z4"), 2)) == Rational(-5, 4),
            "degree 20: z20 - 5/4 z12 z4^2 + ...");
    c.check(rep28.coefficient(Monomial::variable(zv("z28"))) == 1 &&
                rep28.coefficient(Monomial::variable(zv("z12"), 2) *
                                  Monomial::variable(zv("z4"))) == Rational(-3, 2),
            "degree 28: z28 - 3/2 z12^2 z4 + ...");
    c.check(rep36.coefficient(Monomial::variable(zv("z36"))) == 1 &&
                rep36.coefficient(Monomial::variable(zv("z12"), 3)) == Rational(-1, 2),
            "degree 36: z36 - 1/2 z12^3 + ...");
    c.check(e.g2().j_star().apply(rep20).is_zero() && e.g2().j_star().apply(rep28).is_zero() &&
                e.g2().j_star().apply(rep36).is_zero(),
            "j* kills all three representatives exactly");
    c.check(e.g2().kernel_dimension(20) == 1 && e.g2().kernel_dimension(28) == 2 &&
                e.g2().kernel_dimension(36) == 4,
            "kernel dimensions 1, 2, 4");
    c.check(e.g2().lower_product_span_dimension(28) == 1 &&
                e.g2().lower_product_span_dimension(36) == 3,
            "kernels are 1-dimensional modulo lower products");
    return c.ok;
}

bool criterion6(Engine& e, Checker& c) {
    for (int i : {19, 27, 35}) {
        TripleTensor t =
            e.triple().mu_tilde_pullback(e.g2().transgression_basis(i + 1)).tri_positive_part();
        c.check(t.is_symmetric(), "mu-tilde tensor for a" + std::to_string(i) + " is symmetric");
    }
    c.check(e.triple().mu_star(19) == Rational(-3, 2), "mu*(a19) = -3/2 b19");
    c.check(e.triple().mu_star(27) == Rational(-2), "mu*(a27) = -2 b27");
    c.check(e.triple().mu_star(35) == Rational(-2), "mu*(a35) = -2 b35");
    return c.ok;
}

bool criterion7(Engine&, Checker& c) {
    using KG = std::array<char, 3>;
    auto F = [](int n) { return Rational(factorial(n)); };
    Rational f5 = F(5);
    auto CH = [](KG xi, int m) { return TripleCalculus::ch_component(xi, m); };

    c.check(CH(KG{'g', 'g', 'g'}, 10) == perm_sum(2, 1, 1).scaled(F(9) / f5), "9!/5! on ggg");
    c.check(CH(KG{'g', 'g', 'g'}, 14) == perm_sum(2, 2, 1).scaled(F(13) / (f5 * f5)),
            "13!/(5!5!) on ggg");
    c.check(CH(KG{'g', 'g', 'g'}, 18) == TripleTensor::basis(2, 2, 2).scaled(F(17) / (f5 * f5 * f5)),
            "17!/(5!5!5!) on ggg");
    c.check(CH(KG{'h', 'g', 'g'}, 10) == TripleTensor::basis(2, 1, 1).scaled(F(9)), "9! on hgg");
    c.check(CH(KG{'h', 'g', 'g'}, 14) ==
                (TripleTensor::basis(2, 2, 1) + TripleTensor::basis(2, 1, 2)).scaled(F(13) / f5),
            "13!/5! (two-term sum) on hgg");
    c.check(CH(KG{'h', 'g', 'g'}, 18) == TripleTensor::basis(2, 2, 2).scaled(F(17) / (f5 * f5)),
            "17!/(5!5!) on hgg");
    c.check(CH(KG{'h', 'h', 'g'}, 10).is_zero(), "0 on hhg at m=10");
    c.check(CH(KG{'h', 'h', 'g'}, 14) == TripleTensor::basis(2, 2, 1).scaled(F(13)),
            "13! on hhg");
    c.check(CH(KG{'h', 'h', 'g'}, 18) == TripleTensor::basis(2, 2, 2).scaled(F(17) / f5),
            "17!/5! on hhg");
    c.check(CH(KG{'h', 'h', 'h'}, 10).is_zero() && CH(KG{'h', 'h', 'h'}, 14).is_zero(),
            "0, 0 on hhh at m=10,14");
    c.check(CH(KG{'h', 'h', 'h'}, 18) == TripleTensor::basis(2, 2, 2).scaled(F(17)),
            "17! on hhh");

    bool perms = true;
    for (int m : {10, 14, 18}) {
        perms = perms && CH(KG{'g', 'h', 'g'}, m) == CH(KG{'h', 'g', 'g'}, m).permuted(1, 0, 2);
        perms = perms && CH(KG{'g', 'g', 'h'}, m) == CH(KG{'h', 'g', 'g'}, m).permuted(2, 1, 0);
        perms = perms && CH(KG{'h', 'g', 'h'}, m) == CH(KG{'h', 'h', 'g'}, m).permuted(0, 2, 1);
        perms = perms && CH(KG{'g', 'h', 'h'}, m) == CH(KG{'h', 'h', 'g'}, m).permuted(2, 1, 0);
    }
    c.check(perms, "unsymmetrized variants match by factor permutation");
    return c.ok;
}

bool criterion8(Engine& e, Checker& c) {
    TheoremDReport rep = theorem_d_verdict(e.triple());
    c.check(rep.certificate_verified, "certificate checker validates the emitted witness");
    c.check(rep.certificate.verdict == DVRVerdict::Unsolvable,
            "theorem_d_verdict returns UNSOLVABLE at p = 5");
    bool forced = false;
    for (const auto& f : rep.forced_d)
        forced = forced ||
                 (f.proves_unsolvable && f.d0_valuation && *f.d0_valuation <= -3);
    c.check(forced, "forced-d analysis reports nu_5 <= -3 for all Z_(5) free choices");
    c.check(rep.full_certificate.verdict == DVRVerdict::Unsolvable && rep.full_verified,
            "8-unknown unsymmetrized system is also UNSOLVABLE");
    c.check(rep.negated_certificate.verdict == rep.certificate.verdict && rep.negated_verified,
            "verdict invariant under target negation");
    testing::ResidueResult bf = testing::residue_brute_force(rep.system, 6, 3000000);
    bool concurs =
        (rep.certificate.verdict == DVRVerdict::Unsolvable &&
         bf.status == testing::ResidueResult::Status::Empty) ||
        (rep.certificate.verdict == DVRVerdict::Solvable &&
         bf.status == testing::ResidueResult::Status::NonEmpty);
    c.check(bf.status == testing::ResidueResult::Status::Empty,
            "residue brute force modulo 5^6 finds no solution of the cleared system");
    if (!c.ok) {
        c.out << "  note: every ingredient above reproduces its displayed value, yet the\n"
              << "  assembled system is solvable over Z_(5); the computed certificate is a\n"
              << "  verified explicit solution (printed below), the residue oracle finds\n"
              << "  solutions at every level 5^k"
              << (concurs ? " (concurring with the computed verdict)" : "") << ", and no\n"
              << "  parametrization of the solution line forces a denominator of 125: the\n"
              << "  free=a parametrization has nu_5(d0) = -3 but its coefficient has\n"
              << "  nu_5 = -3 as well, so a unit choice of a cancels d entirely.\n";
        std::ostringstream txt, err;
        cli::run({"theorem-d"}, txt, err);
        std::istringstream lines(txt.str());
        std::string line;
        while (std::getline(lines, line))
            c.out << "    | " << line << "\n";
    }
    return c.ok;
}

bool criterion9(Engine&, Checker& c) {
    std::mt19937_64 rng(192837465);
    std::uniform_int_distribution<long> num(-10, 10);
    static const long dens[] = {1, 2, 5};
    std::uniform_int_distribution<int> di(0, 2);
    auto entry = [&] { return Rational(num(rng), dens[di(rng)]); };

    int failures = 0, budget = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Mat a(3, Vec(3));
        Vec t(3);
        for (auto& row : a)
            for (auto& x : row)
                x = entry();
        for (auto& x : t)
            x = entry();
        DVRSystem sys{a, t, 5};
        DVRCertificate cert = solve_over_zp(sys);
        if (!verify_certificate(sys, cert))
            ++failures;

        std::vector<std::size_t> perm = {0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        Mat pa;
        Vec pt;
        for (std::size_t i : perm) {
            pa.push_back(a[i]);
            pt.push_back(t[i]);
        }
        if (solve_over_zp(DVRSystem{pa, pt, 5}).verdict != cert.verdict)
            ++failures;

        DVRSystem scaled = sys;
        for (auto& x : scaled.matrix[trial % 3])
            x *= Rational(3, 2);
        scaled.target[trial % 3] *= Rational(3, 2);
        if (solve_over_zp(scaled).verdict != cert.verdict)
            ++failures;

        DVRSystem negated = sys;
        for (auto& x : negated.target)
            x = -x;
        if (solve_over_zp(negated).verdict != cert.verdict)
            ++failures;

        testing::ResidueResult bf = testing::residue_brute_force(sys, 6);
        if (bf.status == testing::ResidueResult::Status::Budget) {
            ++budget;
        } else {
            bool agree = (cert.verdict == DVRVerdict::Solvable) ==
                         (bf.status == testing::ResidueResult::Status::NonEmpty);
            if (!agree)
                ++failures;
        }
    }
    c.check(failures == 0, "500 randomized systems: soundness, invariances, residue agreement "
                           "(budget skips: " +
                               std::to_string(budget) + ")");
    return c.ok;
}

bool criterion10(Engine&, Checker& c) {
    auto g2 = group_type("G2");
    auto sp2 = group_type("Sp(2)");
    auto su2 = group_type("SU(2)");
    auto su3 = group_type("SU(3)");

    c.check(williams_local(sp2, 3, 2).answer == Answer::Yes, "(Sp(2),3,2) YES");
    c.check(williams_local(g2, 5, 2).answer == Answer::Yes, "(G2,5,2) YES");
    c.check(williams_local(g2, 5, 3).answer == Answer::No &&
                williams_local(g2, 5, 3).cited == "Thm D",
            "(G2,5,3) NO via Thm D");
    c.check(williams_local(g2, 5, 4).answer == Answer::Unknown, "(G2,5,4) UNKNOWN by default");
    c.check(williams_local(g2, 7, 2).answer == Answer::No, "(G2,7,2) NO");
    c.check(sugawara_local(g2, 13, 2).answer == Answer::Yes &&
                sugawara_local(g2, 11, 2).answer == Answer::Unknown &&
                sugawara_local(su2, 7, 3).answer == Answer::Yes,
            "Thm A threshold examples");
    c.check(gauge_projective(su2, 11, 2, 3).answer == Answer::Yes &&
                gauge_projective(su2, 7, 2, 3).answer == Answer::No &&
                gauge_projective(g2, 13, 1, 1).answer == Answer::Yes,
            "Thm B threshold examples");
    c.check(gauge_cat(g2, 31, 2, 3).answer == Answer::Yes &&
                gauge_cat(g2, 29, 2, 3).answer == Answer::Unknown &&
                gauge_cat(su3, 13, 1, 3).answer == Answer::Yes,
            "Thm B' threshold examples");
    c.check(gauge_sphere(su2, 7, 1, 2).answer == Answer::Yes &&
                gauge_sphere(g2, 13, 1, 2).answer == Answer::Unknown &&
                gauge_sphere(g2, 17, 2, 2).answer == Answer::Unknown,
            "Thm C threshold examples");

    bool dims = true;
    for (const std::string& name : known_groups()) {
        LieType t = group_type(name);
        int sum = 0;
        for (int n : t.exponents)
            sum += 2 * n - 1;
        dims = dims && sum == t.dimension;
    }
    c.check(dims, "type-table dimension identity for all rows");

    bool consistent = true;
    for (const std::string& name : known_groups()) {
        LieType g = group_type(name);
        for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
            for (int k = 2; k <= 5; ++k)
                if (sugawara_local(g, p, k).answer == Answer::Yes)
                    consistent = consistent && williams_local(g, p, k).answer != Answer::No;
    }
    c.check(consistent, "Sugawara YES implies Williams not NO");
    return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
    static const std::array<std::pair<const char*, bool (*)(Engine&, Checker&)>, 10> criteria = {
        {{"E*c congruence table reproduction", &criterion1},
         {"Newton/Girard cross-check against the formal-roots oracle", &criterion2},
         {"E-characterization oracle and idempotence", &criterion3},
         {"j*z values", &criterion4},
         {"transgression representatives and kernel dimensions", &criterion5},
         {"mu* values with exact permutation symmetry", &criterion6},
         {"Chern character table", &criterion7},
         {"obstruction-system certificate (expected UNSOLVABLE, nu_5 <= -3)", &criterion8},
         {"DVR solver property suite (500 randomized systems)", &criterion9},
         {"Lie oracle suite", &criterion10}}};

    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 10) {
            std::cerr << "usage: acceptance [1..10]\n";
            return 2;
        }
    }

    Engine engine;
    bool all_ok = true;
    for (int i = 1; i <= 10; ++i) {
        if (only && i != only)
            continue;
        Checker checker(std::cout);
        std::cout << "criterion " << i << ": " << criteria[i - 1].first << "\n";
        bool ok = criteria[i - 1].second(engine, checker);
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
