/*
 * g2.hpp
 * ------
 * The ring maps into H*(BG2; Z_(5)) = Z_(5)[y4, y12]:
 *
 *   rho*(c2) = -y4,  rho*(c4) = (1/4) y4^2,  rho*(c6) = -y12,  rho*(c_i) = 0 otherwise,
 *
 * the classes j*z_{8n-4} = rho*(E*c_{4n-2}), and the degree-20/28/36
 * transgression representatives computed as kernel elements of j* on
 * H*(B) = Z_(5)[z4, z12, z20, z28, z36] (below degree 40).
 */
#pragma once

#include "chcalc/chern.hpp"
#include "chcalc/linalg.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

namespace chcalc {

class G2Model {
public:
    explicit G2Model(ChernCalculus& chern) : chern_(chern) {
        bg2_ = make_ring("BG2", {{"y4", 4}, {"y12", 12}}, chern.ring()->truncation());
        b_ = make_ring("B", {{"z4", 4}, {"z12", 12}, {"z20", 20}, {"z28", 28}, {"z36", 36}},
                       chern.ring()->truncation());

        std::vector<GradedPoly> rho_images;
        for (std::size_t i = 0; i < chern.ring()->var_count(); ++i)
            rho_images.push_back(GradedPoly::zero(bg2_));
        GradedPoly y4 = GradedPoly::generator(bg2_, "y4");
        GradedPoly y12 = GradedPoly::generator(bg2_, "y12");
        rho_images[chern.ring()->index_of("c2")] = y4.scaled(-1);
        rho_images[chern.ring()->index_of("c4")] = (y4 * y4).scaled(Rational(1, 4));
        rho_images[chern.ring()->index_of("c6")] = y12.scaled(-1);
        rho_ = std::make_unique<RingMap>(chern.ring(), bg2_, std::move(rho_images));

        std::vector<GradedPoly> j_images;
        for (int n = 1; n <= 5; ++n)
            j_images.push_back(jz(n));
        jstar_ = std::make_unique<RingMap>(b_, bg2_, std::move(j_images));
    }

    const RingSpecPtr& bg2_ring() const { return bg2_; }
    const RingSpecPtr& b_ring() const { return b_; }
    const RingMap& rho_star() const { return *rho_; }
    const RingMap& j_star() const { return *jstar_; }

    // j*z_{8n-4} = rho*(E*c_{4n-2}), exact (unreduced).
    GradedPoly jz(int n) const {
        if (n < 1 || n > 5)
            throw std::invalid_argument("jz: index must be in 1..5");
        return rho_->apply(chern_.e_pullback_c(4 * n - 2));
    }

    // Monomials y4^p y12^q with p + q >= 4.
    MonomialFilter y_word_filter(int threshold = 4) const {
        return MonomialFilter::weighted_word({1, 1}, threshold);
    }

    // All degree-d monomials of H*(B), in the map order of the ring.
    std::vector<Monomial> b_monomials(int d) const { return monomials_of_degree(*b_, d); }

    // Kernel of j* restricted to the degree-d component, as coefficient
    // vectors over b_monomials(d).
    std::vector<Vec> kernel_of_jstar(int d) const {
        std::vector<Monomial> cols = b_monomials(d);
        std::vector<Monomial> rows = monomials_of_degree(*bg2_, d);
        Mat m(rows.size(), Vec(cols.size(), Rational(0)));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            GradedPoly zpoly(b_);
            zpoly.add_term(cols[j], Rational(1));
            GradedPoly im = jstar_->apply(zpoly);
            for (std::size_t i = 0; i < rows.size(); ++i)
                m[i][j] = im.coefficient(rows[i]);
        }
        return kernel_basis(std::move(m));
    }

    std::size_t kernel_dimension(int d) const { return kernel_of_jstar(d).size(); }

    /*
     * Normalized transgression representative in degree d of {20, 28, 36}:
     * the reduced-echelon kernel element whose leading monomial, under the
     * priority order  z36 > z28 > z20 > short z4/z12 words,  is the pure
     * generator z_d with coefficient 1.
     */
    GradedPoly transgression_basis(int d) const {
        if (d != 20 && d != 28 && d != 36)
            throw std::invalid_argument("transgression_basis: degree must be 20, 28 or 36");
        std::vector<Monomial> cols = b_monomials(d);
        std::vector<Vec> kernel = kernel_of_jstar(d);
        if (kernel.empty())
            throw std::runtime_error("transgression_basis: kernel is empty in degree " +
                                     std::to_string(d));

        std::vector<std::size_t> order(cols.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return priority_less(cols[a], cols[b]);
        });

        Mat basis(kernel.size(), Vec(cols.size(), Rational(0)));
        for (std::size_t i = 0; i < kernel.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                basis[i][j] = kernel[i][order[j]];

        std::vector<std::size_t> pivots = rref(basis);
        // The pure generator z_d is the top-priority column by construction.
        std::optional<std::size_t> row;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] == 0)
                row = i;
        if (!row)
            throw std::runtime_error(
                "transgression_basis: no kernel element leads with the pure generator in degree " +
                std::to_string(d));

        GradedPoly rep(b_);
        for (std::size_t j = 0; j < cols.size(); ++j)
            rep.add_term(cols[order[j]], basis[*row][j]);
        return rep;
    }

    // Span dimension of z-monomial multiples of lower-degree representatives
    // inside the degree-d kernel; guards the normalization claims.
    std::size_t lower_product_span_dimension(int d) const {
        std::vector<Monomial> cols = b_monomials(d);
        std::vector<GradedPoly> products;
        for (int lower : {20, 28}) {
            if (lower >= d)
                continue;
            GradedPoly rep = transgression_basis(lower);
            for (const Monomial& m : monomials_of_degree(*b_, d - lower)) {
                GradedPoly mono(b_);
                mono.add_term(m, Rational(1));
                products.push_back(rep * mono);
            }
        }
        if (products.empty())
            return 0;
        Mat m(products.size(), Vec(cols.size(), Rational(0)));
        for (std::size_t i = 0; i < products.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m[i][j] = products[i].coefficient(cols[j]);
        return rank(std::move(m));
    }

    static std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int d) {
        std::vector<Monomial> out;
        Monomial cur;
        enumerate(ring, 0, d, cur, out);
        std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
            return MonomialOrder{&ring}(a, b);
        });
        return out;
    }

private:
    static void enumerate(const RingSpec& ring, std::size_t idx, int left, Monomial& cur,
                          std::vector<Monomial>& out) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (idx >= ring.var_count())
            return;
        int dv = ring.var(idx).degree;
        for (int e = left / dv; e >= 0; --e) {
            Monomial next = cur * Monomial::variable(idx, e);
            enumerate(ring, idx + 1, left - e * dv, next, out);
        }
    }

    // Priority for kernel normalization: higher z36 exponent first, then z28,
    // then z20, then shorter z4/z12 words, then graded-lex as a tiebreak.
    bool priority_less(const Monomial& a, const Monomial& b) const {
        auto key = [&](const Monomial& m) {
            return std::tuple(-m.exponent(4), -m.exponent(3), -m.exponent(2),
                              m.exponent(0) + m.exponent(1));
        };
        auto ka = key(a), kb = key(b);
        if (ka != kb)
            return ka < kb;
        return MonomialOrder{b_.get()}(a, b);
    }

    ChernCalculus& chern_;
    RingSpecPtr bg2_;
    RingSpecPtr b_;
    std::unique_ptr<RingMap> rho_;
    std::unique_ptr<RingMap> jstar_;
};

}  // namespace chcalc
