/*
 * triple.hpp
 * ----------
 * The Sigma A cohomology model and the threefold tensor calculus of the
 * obstruction computation: restriction of BU classes to Sigma A, the Cartan
 * triple comultiplication, the mu-tilde/mu pullbacks, the Chern character
 * table on K(Sigma A)^{(x)3}, and the resulting linear systems.
 *
 * H*(Sigma A; Z_(5)) has basis 1, Sx3 (degree 4), Sx11 (degree 12) with all
 * products of positive-degree classes zero.
 */
#pragma once

#include "chcalc/g2.hpp"

#include <array>
#include <string>
#include <vector>

namespace chcalc {

// Basis slots of H*(Sigma A).
enum class SuspBasis : int { One = 0, Sx3 = 1, Sx11 = 2 };

inline int susp_degree(int b) { return b == 0 ? 0 : (b == 1 ? 4 : 12); }
inline const char* susp_name(int b) { return b == 0 ? "1" : (b == 1 ? "Sx3" : "Sx11"); }

struct SuspClass {
    std::array<Rational, 3> coef{Rational(0), Rational(0), Rational(0)};

    bool operator==(const SuspClass& o) const { return coef == o.coef; }

    static SuspClass basis(SuspBasis b) {
        SuspClass s;
        s.coef[static_cast<int>(b)] = 1;
        return s;
    }
};

/*
 * restrict_to_A: the ring map c2 -> Sx3, c6 -> Sx11, every other generator
 * and every decomposable to 0 (the composite of rho* with y4 -> -Sx3,
 * y12 -> -Sx11 on the suspension).
 */
inline SuspClass restrict_to_A(const GradedPoly& x) {
    SuspClass out;
    const RingSpec& ring = *x.ring();
    for (const auto& [m, c] : x.terms()) {
        if (m.is_one()) {
            out.coef[0] += c;
            continue;
        }
        if (m.word_length() != 1)
            continue;
        std::size_t v = m.factors().front().first;
        const std::string& name = ring.var(v).name;
        if (name == "c2")
            out.coef[1] += c;
        else if (name == "c6")
            out.coef[2] += c;
    }
    return out;
}

/*
 * TripleTensor: element of H*(Sigma A)^{(x)3}, dense on the 27 basis tensors
 * u (x) v (x) w.  Index = 9u + 3v + w.  Multiplication is factor-wise and a
 * factor of two positive-degree classes annihilates the term.
 */
class TripleTensor {
public:
    TripleTensor() { coef_.fill(Rational(0)); }

    static TripleTensor one() {
        TripleTensor t;
        t.coef_[0] = 1;
        return t;
    }

    static TripleTensor basis(int u, int v, int w) {
        TripleTensor t;
        t.at(u, v, w) = 1;
        return t;
    }

    static TripleTensor pure(const SuspClass& a, const SuspClass& b, const SuspClass& c) {
        TripleTensor t;
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v)
                for (int w = 0; w < 3; ++w)
                    t.at(u, v, w) = a.coef[u] * b.coef[v] * c.coef[w];
        return t;
    }

    Rational& at(int u, int v, int w) { return coef_[9 * u + 3 * v + w]; }
    const Rational& at(int u, int v, int w) const { return coef_[9 * u + 3 * v + w]; }

    bool is_zero() const {
        for (const auto& c : coef_)
            if (c != 0)
                return false;
        return true;
    }

    bool operator==(const TripleTensor& o) const { return coef_ == o.coef_; }
    bool operator!=(const TripleTensor& o) const { return !(*this == o); }

    TripleTensor operator+(const TripleTensor& o) const {
        TripleTensor r;
        for (std::size_t i = 0; i < 27; ++i)
            r.coef_[i] = coef_[i] + o.coef_[i];
        return r;
    }

    TripleTensor& operator+=(const TripleTensor& o) { return *this = *this + o; }

    TripleTensor scaled(const Rational& s) const {
        TripleTensor r;
        for (std::size_t i = 0; i < 27; ++i)
            r.coef_[i] = coef_[i] * s;
        return r;
    }

    TripleTensor operator*(const TripleTensor& o) const {
        TripleTensor r;
        for (int i = 0; i < 27; ++i) {
            if (coef_[i] == 0)
                continue;
            int u1 = i / 9, v1 = (i / 3) % 3, w1 = i % 3;
            for (int j = 0; j < 27; ++j) {
                if (o.coef_[j] == 0)
                    continue;
                int u = mul_slot(u1, j / 9), v = mul_slot(v1, (j / 3) % 3),
                    w = mul_slot(w1, j % 3);
                if (u < 0 || v < 0 || w < 0)
                    continue;
                r.at(u, v, w) += coef_[i] * o.coef_[j];
            }
        }
        return r;
    }

    // Total degree = sum of the three factor degrees.
    TripleTensor degree_component(int d) const {
        TripleTensor r;
        for (int i = 0; i < 27; ++i)
            if (susp_degree(i / 9) + susp_degree((i / 3) % 3) + susp_degree(i % 3) == d)
                r.coef_[i] = coef_[i];
        return r;
    }

    // All three factors of positive degree: the desuspension to Sigma^2 A^^3.
    TripleTensor tri_positive_part() const {
        TripleTensor r;
        for (int i = 0; i < 27; ++i)
            if (i / 9 != 0 && (i / 3) % 3 != 0 && i % 3 != 0)
                r.coef_[i] = coef_[i];
        return r;
    }

    TripleTensor permuted(int p0, int p1, int p2) const {
        TripleTensor r;
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v)
                for (int w = 0; w < 3; ++w) {
                    int f[3] = {u, v, w};
                    r.at(f[p0], f[p1], f[p2]) = at(u, v, w);
                }
        return r;
    }

    bool is_symmetric() const {
        return *this == permuted(1, 0, 2) && *this == permuted(0, 2, 1);
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (int i = 0; i < 27; ++i) {
            if (coef_[i] == 0)
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + to_string(coef_[i]) + ")" + std::string(susp_name(i / 9)) + "(x)" +
                   susp_name((i / 3) % 3) + "(x)" + susp_name(i % 3);
        }
        return out;
    }

private:
    static int mul_slot(int a, int b) {
        if (a == 0)
            return b;
        if (b == 0)
            return a;
        return -1;  // positive * positive dies on a suspension
    }

    std::array<Rational, 27> coef_;
};

/*
 * The b-classes: symmetric sums of the permutations of (Sx11, Sx3, Sx3),
 * (Sx11, Sx11, Sx3) and (Sx11, Sx11, Sx11); degrees 20, 28, 36 here,
 * desuspending to 19, 27, 35.
 */
inline TripleTensor b_class(int degree) {
    TripleTensor t;
    if (degree == 20) {
        t += TripleTensor::basis(2, 1, 1);
        t += TripleTensor::basis(1, 2, 1);
        t += TripleTensor::basis(1, 1, 2);
    } else if (degree == 28) {
        t += TripleTensor::basis(2, 2, 1);
        t += TripleTensor::basis(2, 1, 2);
        t += TripleTensor::basis(1, 2, 2);
    } else if (degree == 36) {
        t += TripleTensor::basis(2, 2, 2);
    } else {
        throw std::invalid_argument("b_class: degree must be 20, 28 or 36");
    }
    return t;
}

struct CartanSummand {
    GradedPoly a, b, c;
};

class TripleCalculus {
public:
    explicit TripleCalculus(ChernCalculus& chern, G2Model& g2) : chern_(chern), g2_(g2) {}

    // The formal sum  sum_{p+q+r=n} E*c_p (x) E*c_q (x) E*c_r  (zero
    // summands included; E*c of odd index vanishes).
    std::vector<CartanSummand> triple_cartan(int n) const {
        if (n < 0 || 2 * n > chern_.ring()->truncation())
            throw std::invalid_argument("triple_cartan: index out of range");
        std::vector<CartanSummand> out;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n - p; ++q) {
                int r = n - p - q;
                out.push_back({chern_.e_pullback_c(p), chern_.e_pullback_c(q),
                               chern_.e_pullback_c(r)});
            }
        return out;
    }

    // triple_cartan(n) with every factor restricted to Sigma A.
    TripleTensor cartan_tensor(int n) const {
        TripleTensor acc;
        for (const CartanSummand& s : triple_cartan(n))
            acc += TripleTensor::pure(restrict_to_A(s.a), restrict_to_A(s.b),
                                      restrict_to_A(s.c));
        return acc;
    }

    // mu-tilde pullback of a z-polynomial: z_{8n-4} -> cartan_tensor(4n-2),
    // extended multiplicatively factor-wise.
    TripleTensor mu_tilde_pullback(const GradedPoly& zeta) const {
        if (*zeta.ring() != *g2_.b_ring())
            throw std::invalid_argument("mu_tilde_pullback: expected a polynomial over B");
        TripleTensor acc;
        for (const auto& [m, c] : zeta.terms()) {
            TripleTensor term = TripleTensor::one();
            for (const auto& [v, e] : m.factors()) {
                TripleTensor gen = cartan_tensor(4 * static_cast<int>(v + 1) - 2);
                for (int i = 0; i < e; ++i)
                    term = term * gen;
            }
            acc += term.scaled(c);
        }
        return acc;
    }

    /*
     * mu*(a_i) for i in {19, 27, 35}: the tri-positive component of the
     * mu-tilde pullback of the transgression representative in degree i+1,
     * expressed as a multiple of the matching b-class.
     */
    Rational mu_star(int i) const {
        if (i != 19 && i != 27 && i != 35)
            throw std::invalid_argument("mu_star: index must be 19, 27 or 35");
        TripleTensor value =
            mu_tilde_pullback(g2_.transgression_basis(i + 1)).tri_positive_part();
        return multiple_of_b_class(value, i + 1);
    }

    // ch of the K-theory generators of Sigma A (per tensor factor):
    //   ch g = Sx3 + (1/5!) Sx11   (components in ch-degrees 2 and 6),
    //   ch h = Sx11                (component in ch-degree 6).
    static SuspClass ch_factor(char gen, int ch_degree) {
        SuspClass s;
        if (gen == 'g') {
            if (ch_degree == 2)
                s.coef[1] = 1;
            else if (ch_degree == 6)
                s.coef[2] = Rational(1, 120);
        } else if (gen == 'h') {
            if (ch_degree == 6)
                s.coef[2] = 1;
        } else {
            throw std::invalid_argument("ch_factor: generator must be 'g' or 'h'");
        }
        return s;
    }

    /*
     * The degree-2m Chern character component of a tensor monomial in
     * {g,h}^{(x)3}, scaled by (m-1)! (9!, 13!, 17! for m = 10, 14, 18).
     */
    static TripleTensor ch_component(const std::array<char, 3>& xi, int m) {
        if (m != 10 && m != 14 && m != 18)
            throw std::invalid_argument("ch_component: m must be 10, 14 or 18");
        TripleTensor acc;
        for (int i : {2, 6})
            for (int j : {2, 6}) {
                int k = m - i - j;
                if (k != 2 && k != 6)
                    continue;
                acc += TripleTensor::pure(ch_factor(xi[0], i), ch_factor(xi[1], j),
                                          ch_factor(xi[2], k));
            }
        TripleTensor scaled = acc.scaled(Rational(factorial(m - 1)));
        if (!scaled.is_zero() && scaled.degree_component(2 * m) != scaled)
            throw std::runtime_error("ch_component: value escaped total degree 2m");
        return scaled;
    }

    static const std::array<std::array<char, 3>, 8>& k_generators() {
        static const std::array<std::array<char, 3>, 8> gens = {{{'g', 'g', 'g'},
                                                                 {'h', 'g', 'g'},
                                                                 {'g', 'h', 'g'},
                                                                 {'g', 'g', 'h'},
                                                                 {'h', 'h', 'g'},
                                                                 {'h', 'g', 'h'},
                                                                 {'g', 'h', 'h'},
                                                                 {'h', 'h', 'h'}}};
        return gens;
    }

    struct LinearSystem {
        Mat matrix;
        Vec target;
        std::vector<std::string> column_names;
        std::vector<std::string> row_names;
    };

    /*
     * The symmetrized 3x4 system: columns g(x)g(x)g, sym(h,g,g), sym(h,h,g),
     * h(x)h(x)h; rows m = 10, 14, 18 read off on the matching b-class;
     * target (3/2, 2, 2).
     */
    LinearSystem phi_system() const {
        static const std::vector<std::vector<std::array<char, 3>>> classes = {
            {{'g', 'g', 'g'}},
            {{'h', 'g', 'g'}, {'g', 'h', 'g'}, {'g', 'g', 'h'}},
            {{'h', 'h', 'g'}, {'h', 'g', 'h'}, {'g', 'h', 'h'}},
            {{'h', 'h', 'h'}}};
        LinearSystem sys;
        sys.column_names = {"g(x)g(x)g", "sym(h,g,g)", "sym(h,h,g)", "h(x)h(x)h"};
        sys.row_names = {"9!ch10", "13!ch14", "17!ch18"};
        for (int m : {10, 14, 18}) {
            Vec row;
            for (const auto& cls : classes) {
                TripleTensor acc;
                for (const auto& xi : cls)
                    acc += ch_component(xi, m);
                row.push_back(multiple_of_b_class(acc, 2 * m));
            }
            sys.matrix.push_back(std::move(row));
        }
        sys.target = {Rational(3, 2), Rational(2), Rational(2)};
        return sys;
    }

    // The unsymmetrized 7x8 system over all tensor monomials; rows are the
    // permutation coordinates of the b-classes, with the same targets.
    LinearSystem phi_system_full() const {
        LinearSystem sys;
        const auto& gens = k_generators();
        for (const auto& xi : gens)
            sys.column_names.push_back(std::string{xi[0]} + "(x)" + xi[1] + "(x)" + xi[2]);
        struct Row {
            int m;
            int u, v, w;
            Rational target;
        };
        std::vector<Row> rows = {{10, 2, 1, 1, Rational(3, 2)}, {10, 1, 2, 1, Rational(3, 2)},
                                 {10, 1, 1, 2, Rational(3, 2)}, {14, 2, 2, 1, Rational(2)},
                                 {14, 2, 1, 2, Rational(2)},    {14, 1, 2, 2, Rational(2)},
                                 {18, 2, 2, 2, Rational(2)}};
        for (const Row& r : rows) {
            Vec row;
            for (const auto& xi : gens)
                row.push_back(ch_component(xi, r.m).at(r.u, r.v, r.w));
            sys.matrix.push_back(std::move(row));
            sys.target.push_back(r.target);
            sys.row_names.push_back(std::to_string(r.m - 1) + "!ch" + std::to_string(r.m) + "[" +
                                    susp_name(r.u) + "," + susp_name(r.v) + "," + susp_name(r.w) +
                                    "]");
        }
        return sys;
    }

    // Expresses a symmetric tri-positive tensor as a multiple of the
    // degree-d b-class; throws if it is not such a multiple.
    static Rational multiple_of_b_class(const TripleTensor& t, int d) {
        TripleTensor basis = b_class(d);
        Rational mult(0);
        bool seen = false;
        for (int i = 0; i < 27; ++i) {
            int u = i / 9, v = (i / 3) % 3, w = i % 3;
            const Rational& bc = basis.at(u, v, w);
            const Rational& tc = t.at(u, v, w);
            if (bc == 0) {
                if (tc != 0)
                    throw std::runtime_error("tensor is not a multiple of the b-class");
                continue;
            }
            Rational q = tc / bc;
            if (seen && q != mult)
                throw std::runtime_error("tensor has unequal permutation coordinates");
            mult = q;
            seen = true;
        }
        return mult;
    }

private:
    ChernCalculus& chern_;
    G2Model& g2_;
};

}  // namespace chcalc
