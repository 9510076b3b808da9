#pragma once

// Newton-Okounkov simplices: Delta(A), the seed simplices Delta_S inside the
// hyperplane <lambda, x> = 1, their normal fans, decomposition of rational
// points into cluster monomials, and an exact disjointness test.

#include "okseed/cluster.hpp"
#include "okseed/linalg.hpp"
#include "okseed/revlex.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace okseed {

inline IntVector psi_of_monomial(const Seed& seed, const IntVector& a) {
    int n = seed.size();
    if (static_cast<int>(a.size()) != n) throw InvalidArgument("psi_of_monomial: dimension mismatch");
    IntVector out(n, 0);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c) out[c] += a[j] * seed.psi[j][c];
    return out;
}

struct Hyperplane {
    IntVector lambda;

    Rational pairing(const RatVector& x) const { return dot(lambda, x); }
    bool contains(const RatVector& x) const { return pairing(x) == 1; }
};

inline Hyperplane hyperplane(const SeedContext& ctx) { return {ctx.lambda}; }

struct RationalSimplex {
    std::vector<RatVector> vertices;
    std::vector<RatVector> normals_N;
    std::vector<RatVector> normals_n;
    Rational volume;
};

// Columns of the psi matrix as a row-major N x N matrix.
inline RatMatrix psi_matrix(const Seed& seed) { return from_columns(to_rational(IntMatrix(seed.psi))); }

// N_j = j-th column of the inverse transpose of the psi matrix, so <psi_i, N_j> = delta_ij.
inline std::vector<RatVector> dual_normals(const Seed& seed) {
    auto inv = inverse(psi_matrix(seed));
    if (!inv) throw InvariantViolation("psi matrix is singular");
    return *inv;  // rows of M^{-1} are the columns of M^{-T}
}

inline RatVector project_to_hyperplane_direction(const SeedContext& ctx, const RatVector& v) {
    Rational coeff = dot(ctx.lambda, v) / lambda_norm2(ctx);
    RatVector out = v;
    for (std::size_t c = 0; c < v.size(); ++c) out[c] -= coeff * ctx.lambda[c];
    return out;
}

inline RationalSimplex delta_total(const SeedContext& ctx) {
    int n = ctx.size();
    RationalSimplex s;
    s.volume = 1;
    for (int k = 0; k < n; ++k) {
        RatVector v(n, Rational(0));
        v[k] = Rational(1, ctx.lambda[k]);
        s.vertices.push_back(v);
        RatVector e(n, Rational(0));
        e[k] = 1;
        s.normals_N.push_back(e);
        s.normals_n.push_back(project_to_hyperplane_direction(ctx, e));
        s.volume /= ctx.lambda[k];
    }
    return s;
}

inline RationalSimplex delta_seed(const Seed& seed, const SeedContext& ctx) {
    RationalSimplex s;
    s.volume = 1;
    for (const auto& p : seed.psi) {
        long long deg = ctx.degree(p);
        if (deg <= 0) throw InvariantViolation("cluster variable of nonpositive degree");
        RatVector v = to_rational(p);
        for (auto& x : v) x /= deg;
        s.vertices.push_back(std::move(v));
        s.volume /= deg;
    }
    s.normals_N = dual_normals(seed);
    s.normals_n = seed.nvec;
    return s;
}

struct PointDecomposition {
    IntVector exponents;  // cluster-monomial exponents in the seed's variables
    BigInt scale;         // degree of that monomial
};

// Writes p (a point of H, or a raw valuation vector) as psi-matrix * a / l
// with a in N^N. Empty when p is not in the closed cone of the seed.
inline std::optional<PointDecomposition> decompose_point(const Seed& seed, const RatVector& p) {
    if (static_cast<int>(p.size()) != seed.size()) throw InvalidArgument("decompose_point: dimension mismatch");
    auto a = solve_unique(psi_matrix(seed), p);
    if (!a) throw InvariantViolation("psi matrix is singular");
    BigInt l = 1;
    for (const auto& x : *a) {
        if (x < 0) return std::nullopt;
        l = lcm_big(l, denominator_of(x));
    }
    PointDecomposition d;
    for (std::size_t j = 0; j < a->size(); ++j) {
        Rational scaled = (*a)[j] * l;
        d.exponents.push_back(static_cast<int>(numerator_of(scaled)));
    }
    d.scale = l;
    return d;
}

inline std::optional<PointDecomposition> decompose_point(const Seed& seed, const SeedContext& ctx, const IntVector& v) {
    auto d = decompose_point(seed, to_rational(v));
    if (d) d->scale = ctx.degree(v);
    return d;
}

struct NormalFanReport {
    std::vector<RatVector> N;
    std::vector<RatVector> n;
    bool dual_ok = true;        // tN M = Id
    bool projection_ok = true;  // n_j = N_j - (<lambda,N_j>/|lambda|^2) lambda
    bool facets_ok = true;      // <n_j, v_p - v_q> = 0, <n_j, v_j - v_p> > 0
    std::vector<std::string> failures;

    bool ok() const { return dual_ok && projection_ok && facets_ok; }
};

inline std::string describe_path(const Seed& seed) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < seed.path.size(); ++i) os << (i ? "," : "") << seed.path[i] + 1;
    os << "]";
    return os.str();
}

inline NormalFanReport check_normal_fan(const Seed& seed, const SeedContext& ctx) {
    int n = seed.size();
    NormalFanReport r;
    r.N = dual_normals(seed);
    r.n = seed.nvec;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dot(seed.psi[i], r.N[j]) != (i == j ? 1 : 0)) {
                r.dual_ok = false;
                r.failures.push_back("<psi_" + std::to_string(i + 1) + ", N_" + std::to_string(j + 1) + "> wrong");
            }
    for (int j = 0; j < n; ++j)
        if (project_to_hyperplane_direction(ctx, r.N[j]) != r.n[j]) {
            r.projection_ok = false;
            r.failures.push_back("n_" + std::to_string(j + 1) + " is not the projection of N_" + std::to_string(j + 1));
        }
    auto simplex = delta_seed(seed, ctx);
    const auto& v = simplex.vertices;
    auto diff_dot = [&](int j, int p, int q) {
        Rational s = 0;
        for (int c = 0; c < n; ++c) s += r.n[j][c] * (v[p][c] - v[q][c]);
        return s;
    };
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < n; ++p) {
            if (p == j) continue;
            if (diff_dot(j, j, p) <= 0) {
                r.facets_ok = false;
                r.failures.push_back("n_" + std::to_string(j + 1) + " does not separate vertex " + std::to_string(j + 1));
            }
            for (int q = p + 1; q < n; ++q)
                if (q != j && diff_dot(j, p, q) != 0) {
                    r.facets_ok = false;
                    r.failures.push_back("n_" + std::to_string(j + 1) + " is not normal to its facet");
                }
        }
    return r;
}

// Same checks, but any failure is fatal.
inline NormalFanReport normal_fan(const Seed& seed, const SeedContext& ctx) {
    auto r = check_normal_fan(seed, ctx);
    if (!r.ok()) throw InvariantViolation("normal fan check failed at seed path " + describe_path(seed) + ": " + r.failures.front());
    return r;
}

// The linear map on ker(wt) with T(muhat_j) = n_j for the exchangeable j of
// the initial seed, extended by zero on a complement spanned by rows of wt.
struct TMap {
    RatMatrix matrix;  // N x N

    RatVector apply(const IntVector& v) const { return multiply(matrix, to_rational(v)); }
};

namespace detail {

inline TMap tmap_with_scales(const Seed& initial, const SeedContext& ctx, const IntVector& scale) {
    int n = ctx.size();
    std::vector<RatVector> domain, image;
    for (int j : ctx.exchangeable) {
        domain.push_back(to_rational(initial.muhat[j]));
        RatVector v = initial.nvec[j];
        for (auto& x : v) x *= scale[j];
        image.push_back(std::move(v));
    }
    // Complete with a basis of the row space of wt.
    RatMatrix acc;
    for (int i = 0; i < ctx.cartan.rank; ++i) {
        RatVector row(n);
        for (int k = 0; k < n; ++k) row[k] = ctx.betas[k][i];
        acc.push_back(row);
        if (rank(acc) < acc.size()) {
            acc.pop_back();
            continue;
        }
        domain.push_back(row);
        image.push_back(RatVector(n, Rational(0)));
    }
    if (static_cast<int>(domain.size()) != n) throw InvariantViolation("muhat and wt rows do not span Q^N");
    auto inv = inverse(from_columns(domain));
    if (!inv) throw InvariantViolation("initial muhat vectors are linearly dependent");
    return {multiply(from_columns(image), *inv)};
}

}  // namespace detail

inline TMap build_tmap(const Seed& initial, const SeedContext& ctx) {
    return detail::tmap_with_scales(initial, ctx, IntVector(ctx.size(), 1));
}

// d_{i_j}, the Cartan symmetrizer read off at each position of the word.
inline IntVector position_symmetrizer(const SeedContext& ctx) {
    IntVector d = symmetrizer(ctx.cartan), out;
    for (int i : ctx.word.letters) out.push_back(d[i - 1]);
    return out;
}

// Outside simply-laced types muhat and n mutate with transposed rules, and
// T(muhat_j) = n_j only survives after weighting by the symmetrizer:
// T_D(muhat_j^S) = d_j n_j^S with T_D fixed on the initial seed.
inline TMap build_symmetrized_tmap(const Seed& initial, const SeedContext& ctx) {
    return detail::tmap_with_scales(initial, ctx, position_symmetrizer(ctx));
}

namespace detail {

// max obj.x subject to A x <= b, x >= 0, with b >= 0 (origin feasible).
// Dense tableau simplex with Bland's rule; returns nullopt if unbounded.
inline std::optional<Rational> maximize(const RatMatrix& A, const RatVector& b, const RatVector& obj) {
    std::size_t m = A.size(), n = obj.size();
    for (const auto& x : b)
        if (x < 0) throw InvalidArgument("maximize: infeasible origin");
    // Tableau rows: [A | I | b], objective row: [-obj | 0 | 0].
    RatMatrix t(m + 1, RatVector(n + m + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -obj[j];
    while (true) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return std::nullopt;
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return t[m][n + m];
}

}  // namespace detail

// Relative interiors of Delta_A and Delta_B meet iff some c > 0 has
// M_B^{-1} M_A c > 0; decided by maximizing the smallest coordinate.
inline bool interiors_disjoint(const Seed& a, const Seed& b) {
    int n = a.size();
    if (b.size() != n) throw InvalidArgument("interiors_disjoint: seeds of different size");
    auto minv = inverse(psi_matrix(b));
    if (!minv) throw InvariantViolation("psi matrix is singular");
    RatMatrix G = multiply(*minv, psi_matrix(a));
    // variables: c_1..c_n, t
    RatMatrix A;
    RatVector rhs;
    for (int i = 0; i < n; ++i) {
        RatVector row(n + 1, Rational(0));
        row[i] = -1;
        row[n] = 1;
        A.push_back(row);
        rhs.push_back(0);
    }
    for (int i = 0; i < n; ++i) {
        RatVector row(n + 1, Rational(0));
        for (int j = 0; j < n; ++j) row[j] = -G[i][j];
        row[n] = 1;
        A.push_back(row);
        rhs.push_back(0);
    }
    RatVector sum(n + 1, Rational(1));
    sum[n] = 0;
    A.push_back(sum);
    rhs.push_back(1);
    RatVector cap(n + 1, Rational(0));
    cap[n] = 1;
    A.push_back(cap);
    rhs.push_back(1);
    RatVector obj(n + 1, Rational(0));
    obj[n] = 1;
    auto opt = detail::maximize(A, rhs, obj);
    if (!opt) throw InvariantViolation("bounded LP reported unbounded");
    return *opt == 0;
}

// OFF surface of the given simplices, keeping three coordinates (0-based).
inline std::string export_off(const std::vector<RationalSimplex>& simplices, const IntVector& keep) {
    if (keep.size() != 3) throw InvalidArgument("OFF export needs exactly three coordinates");
    std::ostringstream vs, fs;
    std::size_t nv = 0, nf = 0;
    for (const auto& s : simplices) {
        std::size_t base = nv;
        for (const auto& v : s.vertices) {
            for (std::size_t c = 0; c < 3; ++c) {
                if (keep[c] < 0 || keep[c] >= static_cast<int>(v.size()))
                    throw InvalidArgument("projection coordinate out of range");
                vs << (c ? " " : "") << to_double(v[keep[c]]);
            }
            vs << "\n";
            ++nv;
        }
        std::size_t k = s.vertices.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                for (std::size_t l = j + 1; l < k; ++l) {
                    fs << "3 " << base + i << " " << base + j << " " << base + l << "\n";
                    ++nf;
                }
    }
    std::ostringstream os;
    os << "OFF\n" << nv << " " << nf << " 0\n" << vs.str() << fs.str();
    return os.str();
}

}  // namespace okseed
