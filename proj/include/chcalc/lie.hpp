/*
 * lie.hpp
 * -------
 * Queryable decision predicates for the higher homotopy commutativity of
 * p-localized compact simple Lie groups and their gauge groups.
 *
 * The type of a group is the sequence {n_1 <= ... <= n_l} with rational
 * exterior generators in degrees 2 n_i - 1.  Each table row is validated by
 * the dimension identity  sum (2 n_i - 1) = dim G.  Every YES/NO verdict
 * carries the criterion it cites; UNKNOWN means no criterion applies, and
 * the oracle never extrapolates.
 */
#pragma once

#include "chcalc/rational.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace chcalc {

struct LieType {
    std::string name;
    std::vector<int> exponents;  // the type sequence, nondecreasing
    int dimension = 0;

    int top() const { return exponents.back(); }
    int rank() const { return static_cast<int>(exponents.size()); }

    void validate() const {
        if (exponents.empty() || exponents.front() != 2)
            throw std::logic_error("LieType " + name + ": type must start with n_1 = 2");
        if (!std::is_sorted(exponents.begin(), exponents.end()))
            throw std::logic_error("LieType " + name + ": type must be nondecreasing");
        int sum = 0;
        for (int n : exponents)
            sum += 2 * n - 1;
        if (sum != dimension)
            throw std::logic_error("LieType " + name + ": dimension identity violated");
    }
};

// Parses SU(n), Sp(n), Spin(n) (n != 4), G2, F4, E6, E7, E8.
inline LieType group_type(const std::string& name) {
    auto classical = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        if (name[prefix.size()] != '(' || name.back() != ')')
            return std::nullopt;
        std::string digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(digits);
    };

    LieType t;
    t.name = name;
    if (auto n = classical("SU")) {
        if (*n < 2)
            throw std::invalid_argument("SU(n) needs n >= 2");
        for (int k = 2; k <= *n; ++k)
            t.exponents.push_back(k);
        t.dimension = *n * *n - 1;
    } else if (auto n = classical("Sp")) {
        if (*n < 1)
            throw std::invalid_argument("Sp(n) needs n >= 1");
        for (int k = 1; k <= *n; ++k)
            t.exponents.push_back(2 * k);
        t.dimension = *n * (2 * *n + 1);
    } else if (auto n = classical("Spin")) {
        if (*n < 3 || *n == 4)
            throw std::invalid_argument("Spin(n) needs n >= 3, n != 4 (simple groups only)");
        if (*n % 2 == 1) {
            int m = (*n - 1) / 2;
            for (int k = 1; k <= m; ++k)
                t.exponents.push_back(2 * k);
        } else {
            int m = *n / 2;
            for (int k = 1; k + 1 <= m; ++k)
                t.exponents.push_back(2 * k);
            t.exponents.push_back(m);
            std::sort(t.exponents.begin(), t.exponents.end());
        }
        t.dimension = *n * (*n - 1) / 2;
    } else if (name == "G2") {
        t.exponents = {2, 6};
        t.dimension = 14;
    } else if (name == "F4") {
        t.exponents = {2, 6, 8, 12};
        t.dimension = 52;
    } else if (name == "E6") {
        t.exponents = {2, 5, 6, 8, 9, 12};
        t.dimension = 78;
    } else if (name == "E7") {
        t.exponents = {2, 6, 8, 10, 12, 14, 18};
        t.dimension = 133;
    } else if (name == "E8") {
        t.exponents = {2, 8, 12, 14, 18, 20, 24, 30};
        t.dimension = 248;
    } else {
        throw std::invalid_argument("unknown group: " + name);
    }
    t.validate();
    return t;
}

inline const std::vector<std::string>& known_groups() {
    static const std::vector<std::string> names = {
        "SU(2)", "SU(3)", "SU(4)", "SU(5)", "SU(6)",  "SU(7)",  "Sp(1)", "Sp(2)",
        "Sp(3)", "Sp(4)", "Spin(5)", "Spin(7)", "Spin(8)", "Spin(9)", "Spin(10)", "Spin(11)",
        "G2",    "F4",    "E6",    "E7",    "E8"};
    return names;
}

enum class Answer { Yes, No, Unknown };

inline const char* answer_name(Answer a) {
    switch (a) {
        case Answer::Yes: return "YES";
        case Answer::No: return "NO";
        default: return "UNKNOWN";
    }
}

struct Verdict {
    Answer answer = Answer::Unknown;
    std::string cited;  // criterion tag; "none" when UNKNOWN

    static Verdict yes(std::string tag) { return {Answer::Yes, std::move(tag)}; }
    static Verdict no(std::string tag) { return {Answer::No, std::move(tag)}; }
    static Verdict unknown() { return {Answer::Unknown, "none"}; }
};

// Sugawara C_k criterion for G_(p): YES when p > k n_l; one-sided.
inline Verdict sugawara_local(const LieType& g, long p, int k) {
    require_prime(p);
    if (k < 1)
        throw std::invalid_argument("sugawara_local: k must be >= 1");
    if (p > static_cast<long>(k) * g.top())
        return Verdict::yes("Thm A");
    return Verdict::unknown();
}

/*
 * Williams C_k criterion for G_(p), k >= 2.  The two-sided threshold has
 * exceptional triples: (Sp(2), 3, 2) and (G2, 5, k) for k <= 4.  Among
 * those, Sp(2)_(3) and (G2)_(5) are homotopy commutative (k = 2 YES),
 * (G2, 5, 3) is settled NO, and (G2, 5, 4) is open unless "not C_k implies
 * not C_{k+1}" is assumed (assume_monotone).
 */
inline Verdict williams_local(const LieType& g, long p, int k, bool assume_monotone = false) {
    require_prime(p);
    if (k < 2)
        throw std::invalid_argument("williams_local: k must be >= 2");
    long bound = static_cast<long>(k) * g.top();
    if (p > bound)
        return Verdict::yes("Thm 1.1(1)");
    if (p == bound)
        return Verdict::unknown();

    bool exception = (g.name == "Sp(2)" && p == 3 && k == 2) ||
                     (g.name == "G2" && p == 5 && k <= 4);
    if (!exception)
        return Verdict::no("Thm 1.1(2)");
    if (k == 2)
        return Verdict::yes("McGibbon");
    if (g.name == "G2" && p == 5 && k == 3)
        return Verdict::no("Thm D");
    if (g.name == "G2" && p == 5 && k == 4 && assume_monotone)
        return Verdict::no("Thm D + monotonicity");
    return Verdict::unknown();
}

// Gauge group of E_n G -> B_n G: Sugawara C_k YES above (n+k) n_l, not a
// Williams C_k-space strictly between (n+1) n_l and (n+k) n_l.
inline Verdict gauge_projective(const LieType& g, long p, int n, int k) {
    require_prime(p);
    if (n < 1 || k < 1)
        throw std::invalid_argument("gauge_projective: n, k must be >= 1");
    long top = g.top();
    if (p > static_cast<long>(n + k) * top)
        return Verdict::yes("Thm B(1)");
    if (static_cast<long>(n + 1) * top < p && p < static_cast<long>(n + k) * top)
        return Verdict::no("Thm B(2)");
    return Verdict::unknown();
}

// Arbitrary base with cat B given: Sugawara C_k YES above (cat B + k) n_l.
inline Verdict gauge_cat(const LieType& g, long p, int cat_b, int k) {
    require_prime(p);
    if (cat_b < 1 || k < 1)
        throw std::invalid_argument("gauge_cat: cat B, k must be >= 1");
    if (p > static_cast<long>(cat_b + k) * g.top())
        return Verdict::yes("Thm B'");
    return Verdict::unknown();
}

// Bundles over S^{2 n_i}: Sugawara C_k YES when p >= k n_l + n_i.
inline Verdict gauge_sphere(const LieType& g, long p, int i, int k) {
    require_prime(p);
    if (k < 1)
        throw std::invalid_argument("gauge_sphere: k must be >= 1");
    if (i < 1 || i > g.rank())
        throw std::invalid_argument("gauge_sphere: sphere index out of range");
    if (p >= static_cast<long>(k) * g.top() + g.exponents[static_cast<std::size_t>(i - 1)])
        return Verdict::yes("Thm C");
    return Verdict::unknown();
}

}  // namespace chcalc
