/*
 * chern.hpp
 * ---------
 * Newton power sums via Girard's formula, and the pullbacks E*c_n of Chern
 * classes along the idempotent E : BU -> BU that kills ch_n for n != 2 mod 4.
 *
 * Two derivations are kept deliberately separate so they can cross-check
 * each other: power sums come from direct partition enumeration, while the
 * E-pullbacks come from the rearranged Newton recursion
 *
 *   E*c_m = -(1/m) * sum_{j = 2 mod 4, 2 <= j <= m} (E*c_{m-j}) s_j,
 *
 * with E*c_0 = 1 (the j = m term contributes the bare s_m summand exactly
 * when m = 2 mod 4).  newton_residual() checks the classical identity
 * binding the two.
 */
#pragma once

#include "chcalc/ring.hpp"

#include <string>
#include <vector>

namespace chcalc {

class ChernCalculus {
public:
    // Ring Z[c_1..c_max_index] with deg c_i = 2i.
    explicit ChernCalculus(int max_index = 18, int truncation = 40)
        : max_index_(max_index) {
        if (max_index < 1)
            throw std::invalid_argument("ChernCalculus: max_index must be >= 1");
        std::vector<RingSpec::Var> vars;
        for (int i = 1; i <= max_index; ++i)
            vars.push_back({"c" + std::to_string(i), 2 * i});
        ring_ = make_ring("BU", std::move(vars), truncation);
    }

    const RingSpecPtr& ring() const { return ring_; }
    int max_index() const { return max_index_; }

    GradedPoly c(int i) const {
        require_index(i);
        return GradedPoly::generator(ring_, static_cast<std::size_t>(i - 1));
    }

    // Girard's formula by partition enumeration:
    //   s_i = sum over r_1 + 2 r_2 + ... + i r_i = i of
    //         (-1)^(i + r_1 + ... + r_i) * i (r_1+...+r_i - 1)! / (r_1! ... r_i!)
    //         * c_1^{r_1} ... c_i^{r_i}.
    const GradedPoly& power_sum(int i) {
        require_index(i);
        auto it = power_sums_.find(i);
        if (it != power_sums_.end())
            return it->second;
        GradedPoly s(ring_);
        std::vector<int> part;
        enumerate_partitions(i, i, part, [&](const std::vector<int>& lambda) {
            std::vector<int> mult(i + 1, 0);
            int parts = 0;
            for (int p : lambda) {
                ++mult[p];
                ++parts;
            }
            Rational coeff(factorial(parts - 1) * i);
            for (int k = 1; k <= i; ++k)
                coeff /= factorial(mult[k]);
            if ((i + parts) % 2 != 0)
                coeff = -coeff;
            Monomial m;
            for (int k = 1; k <= i; ++k)
                if (mult[k] > 0)
                    m = m * Monomial::variable(static_cast<std::size_t>(k - 1), mult[k]);
            s.add_term(m, coeff);
        });
        return power_sums_.emplace(i, std::move(s)).first->second;
    }

    // s_n - c_1 s_{n-1} + ... + (-1)^{n-1} c_{n-1} s_1 + (-1)^n n c_n.
    // The contract is that this is identically zero for every n.
    GradedPoly newton_residual(int n) {
        require_index(n);
        GradedPoly acc = power_sum(n);
        for (int i = 1; i < n; ++i) {
            GradedPoly term = c(i) * power_sum(n - i);
            acc += (i % 2 != 0) ? term.scaled(-1) : term;
        }
        Rational lead(n);
        if (n % 2 != 0)
            lead = -lead;
        acc += c(n).scaled(lead);
        return acc;
    }

    // E*c_n; index 0 gives 1, odd indices come out of the same recursion.
    const GradedPoly& e_pullback_c(int n) {
        if (n < 0 || n > max_index_)
            throw std::invalid_argument("e_pullback_c: index out of range");
        auto it = e_pullbacks_.find(n);
        if (it != e_pullbacks_.end())
            return it->second;
        GradedPoly val(ring_);
        if (n == 0) {
            val = GradedPoly::one(ring_);
        } else {
            GradedPoly acc(ring_);
            for (int j = 2; j <= n; j += 4)
                acc += e_pullback_c(n - j) * power_sum(j);
            val = acc.scaled(Rational(-1, n));
        }
        return e_pullbacks_.emplace(n, std::move(val)).first->second;
    }

    // The congruence ideal of the E*c table: monomials containing c_k for
    // odd k or k >= 7, or c_2^p c_4^q c_6^r with p + 2q + r >= 4.
    MonomialFilter table_filter() const {
        std::vector<std::size_t> killed;
        for (int k = 1; k <= max_index_; ++k)
            if (k % 2 != 0 || k >= 7)
                killed.push_back(static_cast<std::size_t>(k - 1));
        std::vector<int> weights(static_cast<std::size_t>(max_index_), 0);
        weights[1] = 1;  // c2
        weights[3] = 2;  // c4
        weights[5] = 1;  // c6
        return MonomialFilter::containing_vars(std::move(killed))
            .unioned_with(MonomialFilter::weighted_word(std::move(weights), 4));
    }

    // The nine reduced classes E*c_2, E*c_4, ..., E*c_18.
    std::vector<std::pair<int, GradedPoly>> table() {
        std::vector<std::pair<int, GradedPoly>> rows;
        MonomialFilter filter = table_filter();
        for (int n = 2; n <= 18; n += 2)
            rows.emplace_back(n, reduce_mod(e_pullback_c(n), filter));
        return rows;
    }

    // Coefficient of the plain monomial c_n in E*c_n; 1 iff n = 2 mod 4.
    Rational indecomposable_coefficient(int n) {
        require_index(n);
        return e_pullback_c(n).coefficient(Monomial::variable(static_cast<std::size_t>(n - 1)));
    }

    // Substitutes c_i -> E*c_i into x.
    GradedPoly substitute_e(const GradedPoly& x) {
        std::vector<GradedPoly> images;
        for (int i = 1; i <= max_index_; ++i)
            images.push_back(e_pullback_c(i));
        return RingMap(ring_, ring_, std::move(images)).apply(x);
    }

    // E^2 = E on every class of degree <= max_degree.
    bool e_idempotence_check(int max_degree) {
        if (max_degree > ring_->truncation())
            throw std::invalid_argument("e_idempotence_check: degree beyond ring truncation");
        for (int n = 1; 2 * n <= max_degree && n <= max_index_; ++n)
            if (substitute_e(e_pullback_c(n)) != e_pullback_c(n))
                return false;
        return true;
    }

    // The defining property of E, independent of the recursion: power sums
    // evaluated on {E*c_i} give s_m when m = 2 mod 4 and 0 otherwise.
    bool characterization_check(int max_m) {
        for (int m = 1; m <= max_m && m <= max_index_; ++m) {
            GradedPoly lhs = substitute_e(power_sum(m));
            GradedPoly rhs = (m % 4 == 2) ? power_sum(m) : GradedPoly::zero(ring_);
            if (lhs != rhs)
                return false;
        }
        return true;
    }

private:
    void require_index(int i) const {
        if (i < 1 || i > max_index_)
            throw std::invalid_argument("ChernCalculus: index " + std::to_string(i) +
                                        " out of range [1, " + std::to_string(max_index_) + "]");
    }

    template <typename F>
    static void enumerate_partitions(int left, int max_part, std::vector<int>& cur, F&& emit) {
        if (left == 0) {
            emit(cur);
            return;
        }
        for (int k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            enumerate_partitions(left - k, k, cur, emit);
            cur.pop_back();
        }
    }

    int max_index_;
    RingSpecPtr ring_;
    std::map<int, GradedPoly> power_sums_;
    std::map<int, GradedPoly> e_pullbacks_;
};

}  // namespace chcalc
