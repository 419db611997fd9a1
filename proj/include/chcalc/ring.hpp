/*
 * ring.hpp
 * --------
 * Sparse graded polynomial rings over Rational, ring maps given by generator
 * images, and reduction modulo monomial filters.
 *
 * All rings in scope are concentrated in even topological degrees, so they
 * are honestly commutative and sign-free.  A ring carries an explicit
 * truncation degree; multiplication silently drops monomials above it.
 */
#pragma once

#include "chcalc/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace chcalc {

class RingSpec {
public:
    struct Var {
        std::string name;
        int degree;  // even, positive
    };

    RingSpec(std::string name, std::vector<Var> vars, int truncation = 40)
        : name_(std::move(name)), vars_(std::move(vars)), truncation_(truncation) {
        if (truncation_ <= 0)
            throw std::invalid_argument("RingSpec: truncation must be positive");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].degree <= 0 || vars_[i].degree % 2 != 0)
                throw std::invalid_argument("RingSpec: variable degrees must be even and positive");
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i].name == vars_[j].name)
                    throw std::invalid_argument("RingSpec: duplicate variable " + vars_[i].name);
        }
    }

    const std::string& name() const { return name_; }
    int truncation() const { return truncation_; }
    std::size_t var_count() const { return vars_.size(); }
    const Var& var(std::size_t i) const { return vars_.at(i); }

    std::size_t index_of(const std::string& var_name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == var_name)
                return i;
        throw std::invalid_argument("RingSpec " + name_ + ": no variable " + var_name);
    }

    bool operator==(const RingSpec& o) const {
        if (name_ != o.name_ || truncation_ != o.truncation_ || vars_.size() != o.vars_.size())
            return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name != o.vars_[i].name || vars_[i].degree != o.vars_[i].degree)
                return false;
        return true;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

private:
    std::string name_;
    std::vector<Var> vars_;
    int truncation_;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

inline RingSpecPtr make_ring(std::string name, std::vector<RingSpec::Var> vars,
                             int truncation = 40) {
    return std::make_shared<const RingSpec>(std::move(name), std::move(vars), truncation);
}

/*
 * Monomial: sparse exponent vector, stored as (variable index, exponent)
 * pairs sorted by index with no zero exponents.
 */
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t idx, int exp = 1) {
        Monomial m;
        if (exp < 0)
            throw std::invalid_argument("Monomial: negative exponent");
        if (exp > 0)
            m.factors_.emplace_back(idx, exp);
        return m;
    }

    bool is_one() const { return factors_.empty(); }

    int exponent(std::size_t idx) const {
        for (const auto& [v, e] : factors_)
            if (v == idx)
                return e;
        return 0;
    }

    int degree(const RingSpec& ring) const {
        int d = 0;
        for (const auto& [v, e] : factors_)
            d += ring.var(v).degree * e;
        return d;
    }

    // Total exponent; "decomposable" means word_length() >= 2.
    int word_length() const {
        int w = 0;
        for (const auto& [v, e] : factors_)
            w += e;
        return w;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first)
                r.factors_.push_back(*a++);
            else if (a->first > b->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        r.factors_.insert(r.factors_.end(), b, o.factors_.end());
        return r;
    }

    // Lexicographic on dense exponent vectors read from variable 0 upward:
    // the first variable with differing exponent decides, smaller exponent first.
    bool lex_less(const Monomial& o) const {
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            std::size_t va = a == factors_.end() ? SIZE_MAX : a->first;
            std::size_t vb = b == o.factors_.end() ? SIZE_MAX : b->first;
            if (va < vb)
                return false;  // this has a positive exponent where o has 0
            if (vb < va)
                return true;
            if (a->second != b->second)
                return a->second < b->second;
            ++a, ++b;
        }
        return false;
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    const std::vector<std::pair<std::size_t, int>>& factors() const { return factors_; }

private:
    std::vector<std::pair<std::size_t, int>> factors_;
};

// Map order: graded, then lexicographic.  Needs the owning ring for grading.
struct MonomialOrder {
    const RingSpec* ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(*ring), db = b.degree(*ring);
        if (da != db)
            return da < db;
        return a.lex_less(b);
    }
};

/*
 * MonomialFilter: a predicate selecting the monomials of a monomial ideal
 * (if a monomial is dropped, every multiple of it is dropped).  Built from
 * the factory functions below; unions preserve the ideal property.
 */
class MonomialFilter {
public:
    using Pred = std::function<bool(const Monomial&)>;

    explicit MonomialFilter(Pred drop) : drop_(std::move(drop)) {}

    bool drops(const Monomial& m) const { return drop_(m); }

    MonomialFilter unioned_with(const MonomialFilter& o) const {
        Pred a = drop_, b = o.drop_;
        return MonomialFilter([a, b](const Monomial& m) { return a(m) || b(m); });
    }

    // Drops monomials containing any variable from the given set.
    static MonomialFilter containing_vars(std::vector<std::size_t> vars) {
        return MonomialFilter([vars = std::move(vars)](const Monomial& m) {
            for (std::size_t v : vars)
                if (m.exponent(v) > 0)
                    return true;
            return false;
        });
    }

    // Drops monomials whose weighted total exponent reaches the threshold.
    // weights[i] applies to variable i; missing entries weigh 0.
    static MonomialFilter weighted_word(std::vector<int> weights, int threshold) {
        return MonomialFilter([weights = std::move(weights), threshold](const Monomial& m) {
            long w = 0;
            for (const auto& [v, e] : m.factors())
                if (v < weights.size())
                    w += static_cast<long>(weights[v]) * e;
            return w >= threshold;
        });
    }

    // Decomposables: total exponent >= 2.
    static MonomialFilter decomposables() {
        return MonomialFilter([](const Monomial& m) { return m.word_length() >= 2; });
    }

private:
    Pred drop_;
};

class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit GradedPoly(RingSpecPtr ring)
        : ring_(std::move(ring)), terms_(MonomialOrder{ring_.get()}) {}

    static GradedPoly zero(RingSpecPtr ring) { return GradedPoly(std::move(ring)); }

    static GradedPoly one(RingSpecPtr ring) {
        GradedPoly p(std::move(ring));
        p.add_term(Monomial(), Rational(1));
        return p;
    }

    static GradedPoly constant(RingSpecPtr ring, const Rational& c) {
        GradedPoly p(std::move(ring));
        p.add_term(Monomial(), c);
        return p;
    }

    static GradedPoly generator(RingSpecPtr ring, std::size_t idx) {
        if (idx >= ring->var_count())
            throw std::invalid_argument("GradedPoly::generator: index out of range");
        GradedPoly p(std::move(ring));
        p.add_term(Monomial::variable(idx), Rational(1));
        return p;
    }

    static GradedPoly generator(const RingSpecPtr& ring, const std::string& name) {
        return generator(ring, ring->index_of(name));
    }

    const RingSpecPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Adds c*m, respecting truncation and dropping cancellations.
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0 || m.degree(*ring_) > ring_->truncation())
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    GradedPoly operator+(const GradedPoly& o) const {
        require_same_ring(o);
        GradedPoly r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }

    GradedPoly operator-(const GradedPoly& o) const {
        require_same_ring(o);
        GradedPoly r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }

    GradedPoly operator*(const GradedPoly& o) const {
        require_same_ring(o);
        GradedPoly r(ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    GradedPoly scaled(const Rational& s) const {
        GradedPoly r(ring_);
        if (s == 0)
            return r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, c * s);
        return r;
    }

    GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
    GradedPoly& operator-=(const GradedPoly& o) { return *this = *this - o; }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    GradedPoly pow(int e) const {
        if (e < 0)
            throw std::invalid_argument("GradedPoly::pow: negative exponent");
        GradedPoly acc = one(ring_);
        for (int i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    bool operator==(const GradedPoly& o) const {
        if (*ring_ != *o.ring_ || terms_.size() != o.terms_.size())
            return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second != b->second)
                return false;
        return true;
    }
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    // Homogeneous part in topological degree d.
    GradedPoly degree_component(int d) const {
        GradedPoly r(ring_);
        for (const auto& [m, c] : terms_)
            if (m.degree(*ring_) == d)
                r.terms_.emplace(m, c);
        return r;
    }

    // A polynomial is homogeneous iff all monomials share one degree
    // (0 is homogeneous of every degree; we report degree -1 for it).
    bool is_homogeneous(int* degree_out = nullptr) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int md = m.degree(*ring_);
            if (d == -1)
                d = md;
            else if (md != d)
                return false;
        }
        if (degree_out)
            *degree_out = d;
        return true;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree(*ring_));
        return d;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0)
                    a = -a;
            }
            first = false;
            std::string mono;
            for (const auto& [v, e] : m.factors()) {
                if (!mono.empty())
                    mono += " ";
                mono += ring_->var(v).name;
                if (e > 1)
                    mono += "^" + std::to_string(e);
            }
            if (mono.empty())
                out += to_string(a);
            else if (a == 1)
                out += mono;
            else
                out += "(" + to_string(a) + ")" + mono;
        }
        return out;
    }

private:
    void require_same_ring(const GradedPoly& o) const {
        if (*ring_ != *o.ring_)
            throw std::invalid_argument("GradedPoly: mismatched rings " + ring_->name() + " vs " +
                                        o.ring_->name());
    }

    RingSpecPtr ring_;
    TermMap terms_;
};

// Drops exactly the monomials matched by the filter; idempotent.
inline GradedPoly reduce_mod(const GradedPoly& x, const MonomialFilter& filter) {
    GradedPoly r(x.ring());
    for (const auto& [m, c] : x.terms())
        if (!filter.drops(m))
            r.add_term(m, c);
    return r;
}

/*
 * RingMap: degree-preserving homomorphism given by generator images.
 * Every image must be homogeneous of the generator's degree in the target.
 */
class RingMap {
public:
    RingMap(RingSpecPtr source, RingSpecPtr target, std::vector<GradedPoly> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != source_->var_count())
            throw std::invalid_argument("RingMap: need one image per source variable");
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (*images_[i].ring() != *target_)
                throw std::invalid_argument("RingMap: image not in target ring");
            int d = -1;
            if (!images_[i].is_homogeneous(&d) || (d != -1 && d != source_->var(i).degree))
                throw std::invalid_argument("RingMap: image of " + source_->var(i).name +
                                            " is not homogeneous of its degree");
        }
    }

    const RingSpecPtr& source() const { return source_; }
    const RingSpecPtr& target() const { return target_; }
    const GradedPoly& image(std::size_t i) const { return images_.at(i); }

    GradedPoly apply(const GradedPoly& x) const {
        if (*x.ring() != *source_)
            throw std::invalid_argument("RingMap::apply: polynomial not over the source ring");
        GradedPoly acc(target_);
        for (const auto& [m, c] : x.terms()) {
            GradedPoly term = GradedPoly::constant(target_, c);
            for (const auto& [v, e] : m.factors()) {
                if (images_[v].is_zero()) {
                    term = GradedPoly::zero(target_);
                    break;
                }
                for (int i = 0; i < e; ++i)
                    term = term * images_[v];
            }
            acc += term;
        }
        return acc;
    }

private:
    RingSpecPtr source_;
    RingSpecPtr target_;
    std::vector<GradedPoly> images_;
};

}  // namespace chcalc
