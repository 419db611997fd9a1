/*
 * dvr.hpp
 * -------
 * Solvability of rational linear systems A x = t with x ranging over
 * Z_(p)^n, decided by elimination over the discrete valuation ring (pivot
 * of minimal p-adic valuation, so every multiplier stays p-integral), with
 * self-contained certificates:
 *
 *   SOLVABLE    carries x with every entry in Z_(p) and A x = t exactly;
 *   UNSOLVABLE  carries a dual witness u with u^T A in Z_(p)^n but
 *               u^T t not in Z_(p)  (if some x in Z_(p)^n solved the system,
 *               u^T t = u^T A x would be p-integral).
 *
 * verify_certificate() re-checks either witness by direct arithmetic and is
 * kept independent of the solver.
 */
#pragma once

#include "chcalc/linalg.hpp"
#include "chcalc/triple.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chcalc {

struct DVRSystem {
    Mat matrix;
    Vec target;
    long p = 5;

    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? 0 : matrix[0].size(); }

    void validate() const {
        require_prime(p);
        if (matrix.size() != target.size())
            throw std::invalid_argument("DVRSystem: matrix/target row mismatch");
        for (const Vec& row : matrix)
            if (row.size() != cols())
                throw std::invalid_argument("DVRSystem: ragged matrix");
    }
};

enum class DVRVerdict { Solvable, Unsolvable };

struct DVRCertificate {
    DVRVerdict verdict;
    Vec witness;              // x for Solvable, dual u for Unsolvable
    Valuation ut_valuation;   // nu_p(u^T t) for Unsolvable (negative)
};

inline bool verify_certificate(const DVRSystem& sys, const DVRCertificate& cert) {
    sys.validate();
    if (cert.verdict == DVRVerdict::Solvable) {
        if (cert.witness.size() != sys.cols())
            return false;
        for (const Rational& x : cert.witness)
            if (!in_zp(x, sys.p))
                return false;
        Vec ax = matvec(sys.matrix, cert.witness);
        for (std::size_t i = 0; i < sys.rows(); ++i)
            if (ax[i] != sys.target[i])
                return false;
        return true;
    }
    if (cert.witness.size() != sys.rows())
        return false;
    Vec ua = vecmat(cert.witness, sys.matrix);
    for (const Rational& x : ua)
        if (!in_zp(x, sys.p))
            return false;
    return !in_zp(dot(cert.witness, sys.target), sys.p);
}

/*
 * Elimination over Z_(p).  Row/column operations are tracked so that both
 * kinds of witness come out exactly:
 *
 *   D = G A W  with G, W products of elementary matrices whose multipliers
 *   lie in Z_(p) (guaranteed by minimal-valuation pivoting).  A x = t is
 *   equivalent to D y = G t with x = W y, and W is Z_(p)-invertible, so x is
 *   p-integral iff y is.
 */
inline DVRCertificate solve_over_zp(const DVRSystem& sys) {
    sys.validate();
    const long p = sys.p;
    const std::size_t m = sys.rows(), n = sys.cols();
    Mat a = sys.matrix;
    Mat g(m, Vec(m, Rational(0)));  // accumulated row operations
    Mat w(n, Vec(n, Rational(0)));  // accumulated column operations
    for (std::size_t i = 0; i < m; ++i)
        g[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j)
        w[j][j] = 1;

    std::size_t rank = 0;
    while (rank < std::min(m, n)) {
        // pivot of minimal valuation in the remaining submatrix
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        Valuation best = valuation_infinity();
        for (std::size_t i = rank; i < m; ++i)
            for (std::size_t j = rank; j < n; ++j) {
                if (a[i][j] == 0)
                    continue;
                Valuation v = valuation(a[i][j], p);
                if (!pivot || valuation_less(v, best)) {
                    pivot = {i, j};
                    best = v;
                }
            }
        if (!pivot)
            break;
        auto [pi, pj] = *pivot;
        std::swap(a[rank], a[pi]);
        std::swap(g[rank], g[pi]);
        for (std::size_t i = 0; i < m; ++i)
            std::swap(a[i][rank], a[i][pj]);
        for (std::size_t j = 0; j < n; ++j)
            std::swap(w[j][rank], w[j][pj]);

        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || a[i][rank] == 0)
                continue;
            Rational f = a[i][rank] / a[rank][rank];
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] -= f * a[rank][j];
            for (std::size_t j = 0; j < m; ++j)
                g[i][j] -= f * g[rank][j];
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == rank || a[rank][j] == 0)
                continue;
            Rational f = a[rank][j] / a[rank][rank];
            for (std::size_t i = 0; i < m; ++i)
                a[i][j] -= f * a[i][rank];
            for (std::size_t i = 0; i < n; ++i)
                w[i][j] -= f * w[i][rank];
        }
        ++rank;
    }

    Vec s = matvec(g, sys.target);

    // Pivot rows: p^{a_i} y_i = s_i needs nu_p(s_i) >= nu_p(pivot).
    for (std::size_t i = 0; i < rank; ++i) {
        Rational q = s[i] / a[i][i];
        if (!in_zp(q, p)) {
            Vec u(m);
            for (std::size_t j = 0; j < m; ++j)
                u[j] = g[i][j] / a[i][i];
            DVRCertificate cert{DVRVerdict::Unsolvable, std::move(u), valuation(q, p)};
            return cert;
        }
    }
    // Zero rows: s_i must vanish; otherwise scale the row combination until
    // u^T t has valuation exactly -1.
    for (std::size_t i = rank; i < m; ++i) {
        if (s[i] == 0)
            continue;
        Valuation v = valuation(s[i], p);
        Rational scale(1);
        long shift = *v + 1;
        for (long k = 0; k < shift; ++k)
            scale /= p;
        for (long k = 0; k < -shift; ++k)
            scale *= p;
        Vec u(m);
        for (std::size_t j = 0; j < m; ++j)
            u[j] = g[i][j] * scale;
        DVRCertificate cert{DVRVerdict::Unsolvable, std::move(u),
                            valuation(s[i] * scale, p)};
        return cert;
    }

    Vec y(n, Rational(0));
    for (std::size_t i = 0; i < rank; ++i)
        y[i] = s[i] / a[i][i];
    Vec x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x[i] += w[i][j] * y[j];
    return DVRCertificate{DVRVerdict::Solvable, std::move(x), valuation_infinity()};
}

/*
 * Forced-valuation analysis of one coordinate.  For a rationally consistent
 * system, parametrize the rational solution set with the target variable
 * dependent and a chosen set of free coordinates F:
 *
 *   x_target = d0 + sum_{f in F} gamma_f x_f.
 *
 * When nu_p(d0) < 0 and nu_p(gamma_f) > nu_p(d0) for every f, the ultrametric
 * inequality forces nu_p(x_target) = nu_p(d0) for all Z_(p) choices of the
 * free coordinates, which proves the system has no Z_(p) solution.  One
 * report per valid parametrization (free sets in lexicographic order).
 */
struct ForcedValuationReport {
    std::vector<std::size_t> free_cols;
    Rational d0;
    std::vector<std::pair<std::size_t, Rational>> gammas;  // (free column, coefficient)
    Valuation d0_valuation;
    bool proves_unsolvable;  // nu_p(d0) < 0 and every gamma strictly larger
};

inline std::vector<ForcedValuationReport> forced_valuation_analysis(const DVRSystem& sys,
                                                                    std::size_t target_col) {
    sys.validate();
    if (target_col >= sys.cols())
        throw std::invalid_argument("forced_valuation_analysis: bad target column");
    const std::size_t n = sys.cols();
    const std::size_t r = rank(sys.matrix);
    const std::size_t nullity = n - r;

    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < n; ++j)
        if (j != target_col)
            candidates.push_back(j);

    std::vector<ForcedValuationReport> reports;
    std::vector<std::size_t> stack;

    auto try_free_set = [&](const std::vector<std::size_t>& free_cols) {
        std::vector<bool> is_free(n, false);
        for (std::size_t f : free_cols)
            is_free[f] = true;
        std::vector<std::size_t> piv_order;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_free[j])
                piv_order.push_back(j);

        Mat aug(sys.rows(), Vec(n + 1, Rational(0)));
        for (std::size_t i = 0; i < sys.rows(); ++i) {
            for (std::size_t j = 0; j < n; ++j)
                aug[i][j] = sys.matrix[i][j];
            aug[i][n] = sys.target[i];
        }
        std::vector<std::size_t> pivots = rref(aug, piv_order);
        if (pivots.size() != r)
            return;  // chosen pivot columns are dependent; not a parametrization
        // rational consistency: a zero row with nonzero rhs kills the analysis
        for (std::size_t i = pivots.size(); i < sys.rows(); ++i)
            if (aug[i][n] != 0)
                return;
        std::size_t target_row = SIZE_MAX;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] == target_col)
                target_row = i;
        if (target_row == SIZE_MAX)
            return;

        ForcedValuationReport rep;
        rep.free_cols = free_cols;
        rep.d0 = aug[target_row][n];
        rep.d0_valuation = valuation(rep.d0, sys.p);
        rep.proves_unsolvable = rep.d0 != 0 && *rep.d0_valuation < 0;
        for (std::size_t f : free_cols) {
            Rational gamma = -aug[target_row][f];
            if (gamma != 0) {
                rep.gammas.emplace_back(f, gamma);
                if (!valuation_less(rep.d0_valuation, valuation(gamma, sys.p)))
                    rep.proves_unsolvable = false;
            }
        }
        reports.push_back(std::move(rep));
    };

    // lexicographic subsets of the candidate columns, size = nullity
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (stack.size() == nullity) {
            try_free_set(stack);
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            stack.push_back(candidates[i]);
            rec(i + 1);
            stack.pop_back();
        }
    };
    rec(0);
    return reports;
}

/*
 * The G2 obstruction systems at p = 5 and their verified verdicts: the
 * symmetrized 3x4 system, the negated-target variant, and the full 7x8
 * unsymmetrized system, plus the forced-valuation reports for the last
 * unknown of the symmetrized system.
 */
struct TheoremDReport {
    DVRSystem system;
    DVRCertificate certificate;
    bool certificate_verified = false;

    DVRSystem negated_system;
    DVRCertificate negated_certificate;
    bool negated_verified = false;

    DVRSystem full_system;
    DVRCertificate full_certificate;
    bool full_verified = false;

    std::vector<ForcedValuationReport> forced_d;
    std::vector<std::string> column_names;
    std::vector<std::string> full_column_names;
};

inline TheoremDReport theorem_d_verdict(const TripleCalculus& triple) {
    TheoremDReport rep;
    TripleCalculus::LinearSystem sym = triple.phi_system();
    rep.system = DVRSystem{sym.matrix, sym.target, 5};
    rep.certificate = solve_over_zp(rep.system);
    rep.certificate_verified = verify_certificate(rep.system, rep.certificate);
    rep.column_names = sym.column_names;

    Vec neg = sym.target;
    for (Rational& x : neg)
        x = -x;
    rep.negated_system = DVRSystem{sym.matrix, std::move(neg), 5};
    rep.negated_certificate = solve_over_zp(rep.negated_system);
    rep.negated_verified = verify_certificate(rep.negated_system, rep.negated_certificate);

    TripleCalculus::LinearSystem full = triple.phi_system_full();
    rep.full_system = DVRSystem{full.matrix, full.target, 5};
    rep.full_certificate = solve_over_zp(rep.full_system);
    rep.full_verified = verify_certificate(rep.full_system, rep.full_certificate);
    rep.full_column_names = full.column_names;

    rep.forced_d = forced_valuation_analysis(rep.system, rep.system.cols() - 1);
    return rep;
}

}  // namespace chcalc
