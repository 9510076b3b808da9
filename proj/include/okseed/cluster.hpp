#pragma once

// Seeds of the cluster structure attached to (type, order, w): the initial
// seed of the order-induced reduced word, epsilon-tropical mutation of the
// valuation vectors, breadth-first seed enumeration and the dominance order.

#include "okseed/linalg.hpp"
#include "okseed/lyndon.hpp"
#include "okseed/revlex.hpp"
#include "okseed/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace okseed {

// Raised when the Lyndon order restricted to Phi_+^w is not the convex order
// of any reduced word of w.
class OrderIncompatible : public UnsupportedConfiguration {
public:
    using UnsupportedConfiguration::UnsupportedConfiguration;
};

// Sorts Phi_+^w by good Lyndon words and peels off simple roots one at a time.
inline ReducedWord reduced_word_for_order(const GoodLyndonTable& table, const WeylElement& w) {
    if (w.is_identity()) throw InvalidArgument("reduced_word_for_order: w is the identity");
    const CartanData& cd = table.cartan();
    auto roots = inversion_set(cd, w);
    std::sort(roots.begin(), roots.end(), [&](const IntVector& a, const IntVector& b) {
        return lex_compare(table.order(), table.word_of_root(a), table.word_of_root(b)) < 0;
    });
    ReducedWord word;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const IntVector& head = roots[k];
        if (height(head) != 1)
            throw OrderIncompatible("the Lyndon order on Phi_+^w is not induced by a reduced word of w");
        int i = static_cast<int>(std::find(head.begin(), head.end(), 1) - head.begin()) + 1;
        word.letters.push_back(i);
        for (std::size_t m = k + 1; m < roots.size(); ++m) roots[m] = cd.reflect(i, roots[m]);
    }
    auto eval = weyl_from_word(cd, word.letters);
    if (!eval.reduced || !(eval.element == w))
        throw InvariantViolation("peeled word does not represent w");
    return word;
}

struct SeedContext {
    CartanData cartan;
    AlphabetOrder order;
    GoodLyndonTable table;
    WeylElement w;
    ReducedWord word;
    std::vector<IntVector> betas;
    std::vector<Word> gl_words;
    IntVector kplus;   // 0-based; value N stands for "N+1"
    IntVector kminus;  // 0-based; -1 when absent
    std::vector<bool> frozen;
    IntVector exchangeable;  // J_ex, increasing
    IntVector frozen_indices;  // J_fr, increasing
    IntVector lambda;  // heights of the betas

    int size() const { return static_cast<int>(word.size()); }
    bool is_frozen(int k) const { return frozen.at(k); }

    // wt(c) = sum_k c_k beta_k
    template <class T>
    std::vector<T> wt(const std::vector<T>& c) const {
        std::vector<T> out(cartan.rank, T(0));
        for (int k = 0; k < size(); ++k)
            for (int i = 0; i < cartan.rank; ++i) out[i] += c.at(k) * T(betas[k][i]);
        return out;
    }

    // Dominant word with exponent vector c over (i_1 < ... < i_N).
    Word dominant_word(const IntVector& c) const {
        Word w;
        for (int k = size() - 1; k >= 0; --k)
            for (int r = 0; r < c.at(k); ++r) w = w + gl_words[k];
        return w;
    }

    long long degree(const IntVector& c) const { return dot_int(lambda, c); }
};

inline SeedContext make_context(const CartanData& cd, const AlphabetOrder& order, const WeylElement& w) {
    SeedContext ctx;
    ctx.cartan = cd;
    ctx.order = order;
    ctx.table = compute_good_lyndon(cd, order);
    ctx.w = w;
    ctx.word = reduced_word_for_order(ctx.table, w);
    ctx.betas = beta_sequence(cd, ctx.word);
    int n = ctx.size();
    for (int k = 0; k < n; ++k) {
        ctx.gl_words.push_back(ctx.table.word_of_root(ctx.betas[k]));
        ctx.lambda.push_back(height(ctx.betas[k]));
        if (k > 0 && lex_compare(order, ctx.gl_words[k - 1], ctx.gl_words[k]) >= 0)
            throw InvariantViolation("betas are not increasing in the Lyndon order");
    }
    ctx.kplus.assign(n, n);
    ctx.kminus.assign(n, -1);
    for (int k = 0; k < n; ++k)
        for (int s = k + 1; s < n; ++s)
            if (ctx.word[s] == ctx.word[k]) {
                ctx.kplus[k] = s;
                ctx.kminus[s] = k;
                break;
            }
    ctx.frozen.assign(n, false);
    for (int k = 0; k < n; ++k) {
        ctx.frozen[k] = ctx.kplus[k] == n;
        (ctx.frozen[k] ? ctx.frozen_indices : ctx.exchangeable).push_back(k);
    }
    return ctx;
}

inline SeedContext make_context(const CartanData& cd, const AlphabetOrder& order, const IntVector& letters) {
    auto eval = weyl_from_word(cd, letters);
    if (!eval.reduced) throw InvalidArgument("word is not reduced");
    return make_context(cd, order, eval.element);
}

struct Seed {
    IntMatrix B;                      // N x N, b_{ij} with i = row
    std::vector<IntVector> psi;       // Psi(x_j)
    std::vector<IntVector> muhat;     // sum_i b_{ij} psi_i; weight zero for exchangeable j
    std::vector<RatVector> nvec;      // normal-fan rays n_j
    int depth = 0;
    IntVector path;                   // mutation directions from the initial seed (0-based)

    int size() const { return static_cast<int>(psi.size()); }
};

inline IntVector compute_muhat(const IntMatrix& B, const std::vector<IntVector>& psi, int j) {
    int n = static_cast<int>(psi.size());
    IntVector m(n, 0);
    for (int i = 0; i < n; ++i)
        if (B[i][j] != 0)
            for (int c = 0; c < n; ++c) m[c] += B[i][j] * psi[i][c];
    return m;
}

inline Rational lambda_norm2(const SeedContext& ctx) {
    long long s = 0;
    for (int x : ctx.lambda) s += static_cast<long long>(x) * x;
    return Rational(s);
}

// Exchange matrix of the initial seed; row/column indices are positions in
// the reduced word.
inline IntMatrix initial_exchange_matrix(const SeedContext& ctx) {
    int n = ctx.size();
    IntMatrix B(n, IntVector(n, 0));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            if (k == l || (ctx.is_frozen(k) && ctx.is_frozen(l))) continue;
            int kp = ctx.kplus[k], lp = ctx.kplus[l];
            int a = ctx.cartan.cartan[ctx.word[k] - 1][ctx.word[l] - 1];
            if (l == kp)
                B[k][l] = 1;
            else if (k == lp)
                B[k][l] = -1;
            else if (l < k && k < lp && lp < kp)
                B[k][l] = -a;
            else if (k < l && l < kp && kp < lp)
                B[k][l] = a;
        }
    return B;
}

inline Seed initial_seed(const SeedContext& ctx) {
    int n = ctx.size();
    Seed s;
    s.B = initial_exchange_matrix(ctx);
    s.psi.assign(n, IntVector(n, 0));
    for (int k = 0; k < n; ++k)
        for (int j = k; j >= 0; j = ctx.kminus[j]) s.psi[k][j] = 1;
    for (int j = 0; j < n; ++j) s.muhat.push_back(compute_muhat(s.B, s.psi, j));

    Rational norm2 = lambda_norm2(ctx);
    for (int j = 0; j < n; ++j) {
        RatVector v(n, Rational(0));
        v[j] = 1;
        Rational shift = ctx.lambda[j];
        if (!ctx.is_frozen(j)) {
            v[ctx.kplus[j]] -= 1;
            shift -= ctx.lambda[ctx.kplus[j]];
        }
        for (int c = 0; c < n; ++c) v[c] -= shift * ctx.lambda[c] / norm2;
        s.nvec.push_back(std::move(v));
    }
    return s;
}

// +1 iff muhat_k > 0 in the reversed lexicographic order.
inline int mutation_sign(const Seed& seed, int k) { return revlex_positive(seed.muhat.at(k)) ? 1 : -1; }

inline IntMatrix mutate_matrix(const IntMatrix& B, int k) {
    int n = static_cast<int>(B.size());
    IntMatrix R = B;
    auto pos = [](int x) { return x > 0 ? x : 0; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                R[i][j] = -B[i][j];
            else
                R[i][j] = B[i][j] + pos(B[i][k]) * pos(B[k][j]) - pos(-B[i][k]) * pos(-B[k][j]);
        }
    return R;
}

inline Seed mutate(const Seed& seed, const SeedContext& ctx, int k) {
    int n = seed.size();
    if (k < 0 || k >= n) throw InvalidArgument("mutation direction out of range");
    if (ctx.is_frozen(k)) throw InvalidArgument("cannot mutate at frozen index " + std::to_string(k + 1));
    int eta = mutation_sign(seed, k);
    auto pos = [](int x) { return x > 0 ? x : 0; };

    Seed out = seed;
    IntVector fresh(n, 0);
    for (int c = 0; c < n; ++c) fresh[c] = -seed.psi[k][c];
    for (int i = 0; i < n; ++i) {
        int coeff = pos(eta * seed.B[i][k]);
        if (coeff == 0) continue;
        for (int c = 0; c < n; ++c) fresh[c] += coeff * seed.psi[i][c];
    }
    for (int x : fresh)
        if (x < 0) throw InvariantViolation("mutation produced a negative valuation vector");
    out.psi[k] = fresh;
    out.B = mutate_matrix(seed.B, k);
    for (int j = 0; j < n; ++j) out.muhat[j] = compute_muhat(out.B, out.psi, j);

    for (int j = 0; j < n; ++j) {
        if (j == k) {
            for (auto& x : out.nvec[k]) x = -x;
            continue;
        }
        int coeff = pos(eta * seed.B[j][k]);
        if (coeff == 0) continue;
        for (int c = 0; c < n; ++c) out.nvec[j][c] += coeff * seed.nvec[k][c];
    }
    out.depth = seed.depth + 1;
    out.path.push_back(k);
    return out;
}

inline Seed mutate_along(Seed seed, const SeedContext& ctx, const IntVector& directions) {
    for (int k : directions) seed = mutate(seed, ctx, k);
    return seed;
}

// Seeds are identified up to permutation of the exchangeable positions; the
// frozen columns never move, so the sorted exchangeable columns suffice.
inline std::vector<IntVector> canonical_key(const Seed& seed, const SeedContext& ctx) {
    std::vector<IntVector> key;
    for (int k : ctx.exchangeable) key.push_back(seed.psi[k]);
    std::sort(key.begin(), key.end());
    return key;
}

struct Enumeration {
    std::vector<Seed> seeds;
    bool finite = false;
};

inline Enumeration enumerate_seeds(const SeedContext& ctx, std::size_t cap) {
    if (cap < 1) throw InvalidArgument("enumerate_seeds: cap must be positive");
    Enumeration result;
    std::set<std::vector<IntVector>> seen;
    Seed start = initial_seed(ctx);
    seen.insert(canonical_key(start, ctx));
    result.seeds.push_back(std::move(start));
    bool overflow = false;
    for (std::size_t head = 0; head < result.seeds.size() && !overflow; ++head) {
        for (int k : ctx.exchangeable) {
            Seed next = mutate(result.seeds[head], ctx, k);
            if (!seen.insert(canonical_key(next, ctx)).second) continue;
            if (result.seeds.size() == cap) {
                overflow = true;
                break;
            }
            result.seeds.push_back(std::move(next));
        }
    }
    result.finite = !overflow;
    return result;
}

// Coordinates of d in the basis (muhat_j)_{j in J_ex} of ker(wt), or nullopt
// when wt(d) != 0.
inline std::optional<RatVector> dominance_coordinates(const Seed& seed, const SeedContext& ctx, const IntVector& d) {
    for (int x : ctx.wt(d))
        if (x != 0) return std::nullopt;
    std::vector<RatVector> cols;
    for (int j : ctx.exchangeable) cols.push_back(to_rational(seed.muhat[j]));
    if (cols.empty()) {
        if (std::any_of(d.begin(), d.end(), [](int x) { return x != 0; }))
            throw InvariantViolation("nonzero weight-zero vector with no exchangeable directions");
        return RatVector{};
    }
    auto gamma = solve_unique(from_columns(cols), to_rational(d));
    if (!gamma) throw InvariantViolation("muhat vectors do not span ker(wt)");
    return gamma;
}

// v <= v' iff v' - v is a nonnegative integer combination of the muhat_j.
inline bool dominance_leq(const Seed& seed, const SeedContext& ctx, const IntVector& v, const IntVector& vp) {
    if (v.size() != vp.size()) throw InvalidArgument("dominance_leq: dimension mismatch");
    IntVector d(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) d[c] = vp[c] - v[c];
    auto gamma = dominance_coordinates(seed, ctx, d);
    if (!gamma) return false;
    return std::all_of(gamma->begin(), gamma->end(), [](const Rational& g) { return g >= 0 && is_integer(g); });
}

// In the sign convention of the exchange matrix above, ŷ_j of the initial
// seed is the inverse of the GLS monomial x_{j+} x_{j-}^{-1} ..., whose
// leading term is x_{j+}. Compatibility therefore reads -muhat_j > 0 for
// every exchangeable j.
inline bool initial_seed_is_compatible(const Seed& initial, const SeedContext& ctx) {
    for (int j : ctx.exchangeable) {
        IntVector neg = initial.muhat[j];
        for (auto& x : neg) x = -x;
        if (!revlex_positive(neg)) return false;
    }
    return true;
}

}  // namespace okseed
