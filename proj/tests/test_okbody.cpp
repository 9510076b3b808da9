#include "okseed/okbody.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace okseed;

namespace {

SeedContext ctx_of(const std::string& type, IntVector order, IntVector letters) {
    auto cd = parse_type(type);
    if (letters.empty()) return make_context(cd, AlphabetOrder(order), longest_element(cd));
    return make_context(cd, AlphabetOrder(order), letters);
}

RatVector rv(std::initializer_list<Rational> l) { return RatVector(l); }

}  // namespace

TEST_CASE("revlex_compare") {
    CHECK(revlex_compare(IntVector{1, 0, 0}, IntVector{0, 1, 0}) < 0);
    CHECK(revlex_compare(IntVector{4, 2}, IntVector{4, 2}) == 0);
    CHECK(revlex_compare(IntVector{0, 1, 1}, IntVector{1, 1, 0}) > 0);
    CHECK_THROWS_AS(revlex_compare(IntVector{1}, IntVector{1, 2}), InvalidArgument);
    CHECK(revlex_positive(IntVector{-5, 1}));
    CHECK_FALSE(revlex_positive(IntVector{5, -1}));
}

TEST_CASE("psi_of_monomial") {
    auto ctx = ctx_of("A2", {1, 2}, {});
    auto s = initial_seed(ctx);
    CHECK(psi_of_monomial(s, {0, 0, 1}) == s.psi[2]);
    CHECK(psi_of_monomial(s, {1, 1, 0}) == IntVector{1, 1, 0});
    CHECK(psi_of_monomial(s, {-1, 0, 1}) == IntVector{0, 0, 1});
    // phi("1") + phi("12") = phi("1" (.) "12")
    auto t = compute_good_lyndon(ctx.cartan, ctx.order);
    auto prod = odot(t, *is_dominant(t, parse_word("1", 2)), *is_dominant(t, parse_word("12", 2)));
    CHECK(prod.exponents == IntVector{1, 1, 0});
}

TEST_CASE("delta_total") {
    auto a2 = ctx_of("A2", {1, 2}, {});
    auto d = delta_total(a2);
    CHECK(d.vertices == std::vector<RatVector>{rv({1, 0, 0}), rv({0, Rational(1, 2), 0}), rv({0, 0, 1})});
    CHECK(d.volume == Rational(1, 2));

    auto a3 = ctx_of("A3", {1, 2, 3}, {1, 2, 3, 1, 2});
    CHECK(hyperplane(a3).lambda == IntVector{1, 2, 3, 1, 2});

    auto one = ctx_of("A3", {1, 2, 3}, {3});
    auto d1 = delta_total(one);
    CHECK(d1.vertices == std::vector<RatVector>{rv({1})});
    CHECK(d1.volume == 1);
}

TEST_CASE("delta_seed") {
    auto a2 = ctx_of("A2", {1, 2}, {});
    auto d = delta_seed(initial_seed(a2), a2);
    CHECK(d.vertices ==
          std::vector<RatVector>{rv({1, 0, 0}), rv({0, Rational(1, 2), 0}), rv({Rational(1, 2), 0, Rational(1, 2)})});
    CHECK(d.volume == Rational(1, 4));

    auto ex = ctx_of("A3", {2, 1, 3}, {2, 1, 3, 2});
    CHECK(delta_seed(initial_seed(ex), ex).volume == Rational(1, 16));
}

TEST_CASE("vertices lie on H and inside Delta(A)") {
    for (auto ctx : {ctx_of("A3", {1, 2, 3}, {}), ctx_of("B2", {2, 1}, {})}) {
        auto h = hyperplane(ctx);
        auto total = delta_total(ctx);
        for (const auto& s : enumerate_seeds(ctx, 100).seeds)
            for (const auto& v : delta_seed(s, ctx).vertices) {
                CHECK(h.contains(v));
                // coefficients over the vertices e_k/ht(beta_k) are v_k * ht(beta_k) >= 0
                for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] * ctx.lambda[k] >= 0);
            }
        for (const auto& v : total.vertices) CHECK(h.contains(v));
    }
}

TEST_CASE("decompose_point") {
    auto a2 = ctx_of("A2", {1, 2}, {});
    auto s = initial_seed(a2);
    CHECK_FALSE(decompose_point(s, a2, IntVector{0, 0, 1}));
    auto d = decompose_point(s, a2, IntVector{1, 1, 0});
    REQUIRE(d);
    CHECK(d->exponents == IntVector{1, 1, 0});
    CHECK(d->scale == 3);

    auto simplex = delta_seed(s, a2);
    for (int j = 0; j < 3; ++j) {
        auto v = decompose_point(s, simplex.vertices[j]);
        REQUIRE(v);
        IntVector e(3, 0);
        e[j] = 1;
        CHECK(v->exponents == e);
        CHECK(v->scale == a2.degree(s.psi[j]));
    }
    CHECK_THROWS_AS(decompose_point(s, RatVector{1, 2}), InvalidArgument);
}

TEST_CASE("decompose_point round trip") {
    std::mt19937 rng(5);
    auto ctx = ctx_of("A3", {1, 2, 3}, {});
    for (const auto& s : enumerate_seeds(ctx, 100).seeds)
        for (int rep = 0; rep < 20; ++rep) {
            IntVector a(ctx.size());
            for (auto& x : a) x = static_cast<int>(rng() % 6);
            if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) a[0] = 1;
            auto d = decompose_point(s, ctx, psi_of_monomial(s, a));
            REQUIRE(d);
            CHECK(d->exponents == a);
        }
}

TEST_CASE("normal_fan") {
    auto a2 = ctx_of("A2", {1, 2}, {});
    auto s = initial_seed(a2);
    auto r = normal_fan(s, a2);
    CHECK(r.ok());
    // frozen j = 2: e2 - 2 lambda / |lambda|^2 with lambda = (1,2,1)
    CHECK(r.n[1] == rv({Rational(-1, 3), Rational(1, 3), Rational(-1, 3)}));

    auto a3 = ctx_of("A3", {1, 2, 3}, {1, 2, 3, 1, 2});
    auto s3 = initial_seed(a3);
    for (int j : a3.exchangeable)
        if (a3.lambda[j] == a3.lambda[a3.kplus[j]]) {
            RatVector e(a3.size(), Rational(0));
            e[j] = 1;
            e[a3.kplus[j]] = -1;
            CHECK(s3.nvec[j] == e);
        }

    auto m = mutate(s, a2, 0);
    RatVector neg = s.nvec[0];
    for (auto& x : neg) x = -x;
    CHECK(m.nvec[0] == neg);
    CHECK(normal_fan(m, a2).ok());

    auto broken = s;
    broken.nvec[0][0] += 1;
    CHECK_FALSE(check_normal_fan(broken, a2).ok());
    CHECK_THROWS_AS(normal_fan(broken, a2), InvariantViolation);
}

TEST_CASE("build_tmap") {
    auto a2 = ctx_of("A2", {1, 2}, {});
    auto s = initial_seed(a2);
    auto t = build_tmap(s, a2);
    CHECK(a2.exchangeable.size() == 1);
    CHECK(t.apply(s.muhat[0]) == s.nvec[0]);

    for (auto ctx : {ctx_of("A3", {1, 2, 3}, {}), ctx_of("A3", {1, 2, 3}, {1, 2, 3, 1, 2})}) {
        auto e = enumerate_seeds(ctx, 100);
        auto tm = build_tmap(e.seeds[0], ctx);
        for (const auto& seed : e.seeds)
            for (int j : ctx.exchangeable) CHECK(tm.apply(seed.muhat[j]) == seed.nvec[j]);
    }
}

TEST_CASE("symmetrized tmap in types B and C") {
    for (auto ctx : {ctx_of("B2", {1, 2}, {}), ctx_of("C2", {2, 1}, {})}) {
        auto e = enumerate_seeds(ctx, 100);
        auto tm = build_symmetrized_tmap(e.seeds[0], ctx);
        auto d = position_symmetrizer(ctx);
        for (const auto& seed : e.seeds)
            for (int j : ctx.exchangeable) {
                RatVector target = seed.nvec[j];
                for (auto& x : target) x *= d[j];
                CHECK(tm.apply(seed.muhat[j]) == target);
            }
    }
}

TEST_CASE("interiors_disjoint") {
    auto a2 = ctx_of("A2", {1, 2}, {});
    auto e2 = enumerate_seeds(a2, 10);
    REQUIRE(e2.seeds.size() == 2);
    CHECK(interiors_disjoint(e2.seeds[0], e2.seeds[1]));
    CHECK_FALSE(interiors_disjoint(e2.seeds[0], e2.seeds[0]));

    auto a3 = ctx_of("A3", {1, 2, 3}, {1, 2, 3, 1, 2});
    auto e3 = enumerate_seeds(a3, 10);
    REQUIRE(e3.seeds.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(interiors_disjoint(e3.seeds[i], e3.seeds[j]) == (i != j));
}

TEST_CASE("volumes of seed simplices add up to Delta(A)") {
    for (auto ctx : {ctx_of("A2", {1, 2}, {}), ctx_of("A3", {1, 2, 3}, {1, 2, 3, 1, 2}), ctx_of("B2", {1, 2}, {})}) {
        Rational sum = 0;
        for (const auto& s : enumerate_seeds(ctx, 100).seeds) sum += delta_seed(s, ctx).volume;
        CHECK(sum == delta_total(ctx).volume);
    }
}

TEST_CASE("export_off") {
    auto a2 = ctx_of("A2", {1, 2}, {});
    auto s = delta_seed(initial_seed(a2), a2);
    auto off = export_off({s}, {0, 1, 2});
    CHECK(off.rfind("OFF\n3 1 0\n", 0) == 0);
    CHECK_THROWS_AS(export_off({s}, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(export_off({s}, {0, 1, 5}), InvalidArgument);
}
