#pragma once

// Finite-type root systems: Cartan matrices (Bourbaki labelling), positive
// roots in the simple-root basis, Weyl group elements as integer matrices.

#include "okseed/linalg.hpp"
#include "okseed/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace okseed {

struct CartanData {
    char family = 'A';
    int rank = 0;
    IntMatrix cartan;                 // a_{ij} = <alpha_i^vee, alpha_j>
    std::vector<IntVector> positive_roots;  // sorted by (height, coefficients)
    IntVector heights;

    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    bool is_exceptional() const { return family == 'E' || family == 'F' || family == 'G'; }

    IntVector simple_root(int i) const {  // i is 1-based
        IntVector v(rank, 0);
        v[i - 1] = 1;
        return v;
    }

    // <alpha_i^vee, beta>, i 1-based.
    int pairing(int i, const IntVector& beta) const {
        int s = 0;
        for (int j = 0; j < rank; ++j) s += cartan[i - 1][j] * beta[j];
        return s;
    }

    IntVector reflect(int i, IntVector beta) const {
        beta[i - 1] -= pairing(i, beta);
        return beta;
    }

    std::optional<int> root_index(const IntVector& beta) const {
        auto it = index_.find(beta);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool is_root(const IntVector& beta) const {
        if (root_index(beta)) return true;
        IntVector neg(beta.size());
        std::transform(beta.begin(), beta.end(), neg.begin(), [](int x) { return -x; });
        return root_index(neg).has_value();
    }

    void rebuild_index() {
        index_.clear();
        for (int k = 0; k < num_positive_roots(); ++k) index_[positive_roots[k]] = k;
    }

private:
    std::map<IntVector, int> index_;
};

inline int height(const IntVector& beta) {
    int h = 0;
    for (int c : beta) h += c;
    return h;
}

inline bool is_positive_vector(const IntVector& v) {
    bool nonzero = false;
    for (int x : v) {
        if (x < 0) return false;
        nonzero |= x != 0;
    }
    return nonzero;
}

inline bool is_negative_vector(const IntVector& v) {
    bool nonzero = false;
    for (int x : v) {
        if (x > 0) return false;
        nonzero |= x != 0;
    }
    return nonzero;
}

inline int expected_positive_root_count(char family, int n) {
    switch (family) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
        default: return -1;
    }
}

inline bool is_valid_type(char family, int n) {
    switch (family) {
        case 'A': return n >= 1;
        case 'B':
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

inline CartanData build_cartan(char family, int n) {
    if (!is_valid_type(family, n))
        throw InvalidArgument(std::string("invalid finite type ") + family + std::to_string(n));

    IntMatrix a(n, IntVector(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) {  // simply-laced edge, 1-based
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    switch (family) {
        case 'A':
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (int i = 1; i < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case 'C':  // alpha_n long
            for (int i = 1; i < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case 'D':
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case 'E':
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < n; ++i) link(i, i + 1);
            break;
        case 'F':  // alpha_1, alpha_2 long
            link(1, 2);
            link(3, 4);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case 'G':  // alpha_1 short
            a[0][1] = -3;
            a[1][0] = -1;
            break;
    }

    CartanData cd;
    cd.family = family;
    cd.rank = n;
    cd.cartan = a;

    // Breadth-first closure of the simple roots under simple reflections,
    // keeping the positive images.
    std::set<IntVector> seen;
    std::vector<IntVector> frontier;
    for (int i = 1; i <= n; ++i) {
        frontier.push_back(cd.simple_root(i));
        seen.insert(frontier.back());
    }
    while (!frontier.empty()) {
        std::vector<IntVector> next;
        for (const auto& beta : frontier)
            for (int i = 1; i <= n; ++i) {
                IntVector gamma = cd.reflect(i, beta);
                if (is_positive_vector(gamma) && seen.insert(gamma).second) next.push_back(gamma);
            }
        frontier = std::move(next);
    }
    cd.positive_roots.assign(seen.begin(), seen.end());
    std::stable_sort(cd.positive_roots.begin(), cd.positive_roots.end(),
                     [](const IntVector& x, const IntVector& y) {
                         int hx = height(x), hy = height(y);
                         if (hx != hy) return hx < hy;
                         return x > y;  // alpha_1 before alpha_2 within a height
                     });
    for (const auto& beta : cd.positive_roots) cd.heights.push_back(height(beta));
    cd.rebuild_index();

    if (cd.num_positive_roots() != expected_positive_root_count(family, n))
        throw InvariantViolation("root closure produced " + std::to_string(cd.num_positive_roots()) +
                                 " roots for " + cd.name());
    return cd;
}

// Smallest positive integers d_i with d_i a_ij = d_j a_ji.
inline IntVector symmetrizer(const CartanData& cd) {
    std::vector<Rational> d(cd.rank, Rational(0));
    d[0] = 1;
    for (bool grown = true; grown;) {
        grown = false;
        for (int i = 0; i < cd.rank; ++i)
            for (int j = 0; j < cd.rank; ++j)
                if (d[i] != 0 && d[j] == 0 && cd.cartan[i][j] != 0) {
                    d[j] = d[i] * cd.cartan[i][j] / cd.cartan[j][i];
                    grown = true;
                }
    }
    BigInt l = 1;
    for (const auto& x : d) l = lcm_big(l, denominator_of(x));
    IntVector out;
    for (const auto& x : d) out.push_back(static_cast<int>(numerator_of(x * l)));
    int gg = 0;
    for (int x : out) gg = std::gcd(gg, x);
    for (int& x : out) x /= gg;
    return out;
}

inline CartanData parse_type(const std::string& text) {
    if (text.size() < 2) throw InvalidArgument("malformed type '" + text + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int n = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidArgument("malformed type '" + text + "'");
        n = n * 10 + (text[i] - '0');
        if (n > 64) throw InvalidArgument("rank too large in '" + text + "'");
    }
    return build_cartan(family, n);
}

struct ReducedWord {
    IntVector letters;  // 1-based simple reflection indices

    std::size_t size() const { return letters.size(); }
    int operator[](std::size_t k) const { return letters[k]; }
    bool operator==(const ReducedWord&) const = default;
};

// Weyl group element acting on the simple-root basis. Column j of `matrix` is
// w(alpha_j). Elements compare and hash by their matrix.
struct WeylElement {
    IntMatrix matrix;
    IntMatrix inverse;
    int length = 0;

    IntVector apply(const IntVector& v) const { return multiply(matrix, v); }
    IntVector apply_inverse(const IntVector& v) const { return multiply(inverse, v); }

    bool is_identity() const { return length == 0; }
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

inline IntMatrix simple_reflection_matrix(const CartanData& cd, int i) {
    IntMatrix s(cd.rank, IntVector(cd.rank, 0));
    for (int j = 0; j < cd.rank; ++j) s[j][j] = 1;
    for (int j = 0; j < cd.rank; ++j) s[i - 1][j] -= cd.cartan[i - 1][j];
    return s;
}

inline int inversion_count(const CartanData& cd, const IntMatrix& m) {
    int count = 0;
    for (const auto& beta : cd.positive_roots)
        if (is_negative_vector(multiply(m, beta))) ++count;
    return count;
}

inline WeylElement identity_element(const CartanData& cd) {
    IntMatrix id(cd.rank, IntVector(cd.rank, 0));
    for (int j = 0; j < cd.rank; ++j) id[j][j] = 1;
    return {id, id, 0};
}

// w * s_i
inline WeylElement right_multiply(const CartanData& cd, const WeylElement& w, int i) {
    IntMatrix s = simple_reflection_matrix(cd, i);
    WeylElement r;
    r.matrix = multiply(w.matrix, s);
    r.inverse = multiply(s, w.inverse);
    r.length = inversion_count(cd, r.matrix);
    return r;
}

inline void check_letters(const CartanData& cd, const IntVector& letters) {
    for (int i : letters)
        if (i < 1 || i > cd.rank)
            throw InvalidArgument("letter " + std::to_string(i) + " out of range for " + cd.name());
}

struct WordEvaluation {
    WeylElement element;
    bool reduced = false;
};

inline WordEvaluation weyl_from_word(const CartanData& cd, const IntVector& letters) {
    check_letters(cd, letters);
    WeylElement w = identity_element(cd);
    for (int i : letters) {
        IntMatrix s = simple_reflection_matrix(cd, i);
        w.matrix = multiply(w.matrix, s);
        w.inverse = multiply(s, w.inverse);
    }
    w.length = inversion_count(cd, w.matrix);
    return {w, w.length == static_cast<int>(letters.size())};
}

inline WeylElement longest_element(const CartanData& cd) {
    // Greedily extend by right descents until every simple root is inverted.
    WeylElement w = identity_element(cd);
    for (bool grown = true; grown;) {
        grown = false;
        for (int i = 1; i <= cd.rank; ++i)
            if (is_positive_vector(w.apply(cd.simple_root(i)))) {
                w = right_multiply(cd, w, i);
                grown = true;
            }
    }
    return w;
}

// Phi_+^w = Phi_+ cap w Phi_-, in the root order of `cd`.
inline std::vector<IntVector> inversion_set(const CartanData& cd, const WeylElement& w) {
    std::vector<IntVector> out;
    for (const auto& beta : cd.positive_roots)
        if (is_negative_vector(w.apply_inverse(beta))) out.push_back(beta);
    return out;
}

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}).
inline std::vector<IntVector> beta_sequence(const CartanData& cd, const ReducedWord& word) {
    auto eval = weyl_from_word(cd, word.letters);
    if (!eval.reduced) throw InvalidArgument("beta_sequence: word is not reduced");
    std::vector<IntVector> betas;
    IntMatrix prefix = identity_element(cd).matrix;
    for (int i : word.letters) {
        betas.push_back(multiply(prefix, cd.simple_root(i)));
        prefix = multiply(prefix, simple_reflection_matrix(cd, i));
    }
    return betas;
}

// Number of reduced expressions of w, via R(w) = sum over right descents s_i
// of R(w s_i). The memo only ever holds elements below w in the weak order.
class ReducedExpressionCounter {
public:
    explicit ReducedExpressionCounter(const CartanData& cd) : cd_(cd) {}

    BigInt count(const WeylElement& w) {
        if (w.length == 0) return 1;
        if (auto it = memo_.find(w.matrix); it != memo_.end()) return it->second;
        BigInt total = 0;
        for (int i = 1; i <= cd_.rank; ++i)
            if (is_negative_vector(w.apply(cd_.simple_root(i)))) total += count(right_multiply(cd_, w, i));
        memo_.emplace(w.matrix, total);
        return total;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    const CartanData& cd_;
    std::map<IntMatrix, BigInt> memo_;
};

inline BigInt count_reduced_expressions(const CartanData& cd, const WeylElement& w) {
    ReducedExpressionCounter counter(cd);
    return counter.count(w);
}

}  // namespace okseed
