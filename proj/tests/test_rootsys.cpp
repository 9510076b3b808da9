#include "okseed/rootsys.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace okseed;

namespace {

// All elements of W as matrices, by closing {id} under right multiplication.
std::set<IntMatrix> whole_group(const CartanData& cd) {
    std::set<IntMatrix> seen{identity_element(cd).matrix};
    std::vector<IntMatrix> frontier{identity_element(cd).matrix};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier)
            for (int i = 1; i <= cd.rank; ++i) {
                auto p = multiply(m, simple_reflection_matrix(cd, i));
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return seen;
}

// Positive roots as the positive part of the W-orbit of the simple roots.
std::set<IntVector> orbit_roots(const CartanData& cd) {
    std::set<IntVector> out;
    for (const auto& m : whole_group(cd))
        for (int i = 1; i <= cd.rank; ++i) {
            auto v = multiply(m, cd.simple_root(i));
            if (is_positive_vector(v)) out.insert(v);
        }
    return out;
}

// Counts words of length l(w) that multiply to w.
long long brute_force_reduced_count(const CartanData& cd, const WeylElement& w) {
    long long count = 0;
    IntVector word;
    auto rec = [&](auto&& self, const IntMatrix& m) -> void {
        if (static_cast<int>(word.size()) == w.length) {
            if (m == w.matrix) ++count;
            return;
        }
        for (int i = 1; i <= cd.rank; ++i) {
            word.push_back(i);
            auto next = multiply(m, simple_reflection_matrix(cd, i));
            if (inversion_count(cd, next) == static_cast<int>(word.size())) self(self, next);
            word.pop_back();
        }
    };
    rec(rec, identity_element(cd).matrix);
    return count;
}

}  // namespace

TEST_CASE("build_cartan: A2 has roots a1, a2, a1+a2") {
    auto cd = build_cartan('A', 2);
    REQUIRE(cd.num_positive_roots() == 3);
    std::set<IntVector> roots(cd.positive_roots.begin(), cd.positive_roots.end());
    CHECK(roots == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(cd.heights == IntVector{1, 1, 2});
}

TEST_CASE("build_cartan: A3 highest root has height 3") {
    auto cd = build_cartan('A', 3);
    REQUIRE(cd.num_positive_roots() == 6);
    auto idx = cd.root_index({1, 1, 1});
    REQUIRE(idx);
    CHECK(cd.heights[*idx] == 3);
}

TEST_CASE("build_cartan agrees with the Weyl orbit of the simple roots") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{
             {'A', 1}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
        auto cd = build_cartan(f, n);
        std::set<IntVector> roots(cd.positive_roots.begin(), cd.positive_roots.end());
        INFO(cd.name());
        CHECK(roots == orbit_roots(cd));
    }
    CHECK(build_cartan('D', 4).num_positive_roots() == 12);
}

TEST_CASE("build_cartan: Cartan matrices are valid finite type") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{
             {'A', 5}, {'B', 4}, {'C', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) {
        auto cd = build_cartan(f, n);
        INFO(cd.name());
        CHECK(cd.num_positive_roots() == expected_positive_root_count(f, n));
        // symmetrization D A is symmetric with positive leading minors
        auto d = symmetrizer(cd);
        RatMatrix s(n, RatVector(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CHECK(d[i] * cd.cartan[i][j] == d[j] * cd.cartan[j][i]);
                if (i == j) CHECK(cd.cartan[i][j] == 2);
                if (i != j) CHECK(cd.cartan[i][j] <= 0);
                s[i][j] = d[i] * cd.cartan[i][j];
            }
        for (int k = 1; k <= n; ++k) {
            RatMatrix minor(k, RatVector(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor[i][j] = s[i][j];
            CHECK(determinant(minor) > 0);
        }
    }
}

TEST_CASE("build_cartan rejects invalid types") {
    CHECK_THROWS_AS(build_cartan('E', 9), InvalidArgument);
    CHECK_THROWS_AS(build_cartan('D', 3), InvalidArgument);
    CHECK_THROWS_AS(build_cartan('X', 2), InvalidArgument);
    CHECK_THROWS_AS(parse_type("E9"), InvalidArgument);
    CHECK_THROWS_AS(parse_type("A"), InvalidArgument);
    CHECK(parse_type("b3").name() == "B3");
}

TEST_CASE("root closure under addition") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        auto cd = build_cartan(f, n);
        std::set<IntVector> roots(cd.positive_roots.begin(), cd.positive_roots.end());
        for (const auto& a : cd.positive_roots)
            for (const auto& b : cd.positive_roots) {
                IntVector s(n);
                for (int i = 0; i < n; ++i) s[i] = a[i] + b[i];
                if (cd.is_root(s)) CHECK(roots.count(s) == 1);
            }
    }
}

TEST_CASE("weyl_from_word") {
    auto a2 = build_cartan('A', 2);
    auto w0 = weyl_from_word(a2, {1, 2, 1});
    CHECK(w0.reduced);
    CHECK(w0.element.length == 3);
    CHECK(w0.element == longest_element(a2));

    auto a3 = build_cartan('A', 3);
    auto w = weyl_from_word(a3, {1, 2, 3, 1, 2});
    CHECK(w.reduced);
    CHECK(w.element.length == 5);

    auto id = weyl_from_word(a2, {1, 1});
    CHECK_FALSE(id.reduced);
    CHECK(id.element.length == 0);
    CHECK(id.element == identity_element(a2));

    CHECK_THROWS_AS(weyl_from_word(a2, {3}), InvalidArgument);
}

TEST_CASE("length is at most the word length, equal iff reduced") {
    auto cd = build_cartan('B', 3);
    std::vector<IntVector> words{{1, 2, 3}, {1, 1}, {3, 2, 3, 2}, {3, 2, 3, 2, 3}, {1, 2, 1, 2, 1}};
    for (const auto& word : words) {
        auto e = weyl_from_word(cd, word);
        CHECK(e.element.length <= static_cast<int>(word.size()));
        CHECK(e.reduced == (e.element.length == static_cast<int>(word.size())));
    }
}

TEST_CASE("inversion_set") {
    auto a3 = build_cartan('A', 3);
    auto w = weyl_from_word(a3, {2, 1, 3, 2}).element;
    auto inv = inversion_set(a3, w);
    std::set<IntVector> got(inv.begin(), inv.end());
    CHECK(got == std::set<IntVector>{{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
    CHECK(inversion_set(a3, identity_element(a3)).empty());
    auto a2 = build_cartan('A', 2);
    CHECK(inversion_set(a2, longest_element(a2)).size() == 3);
}

TEST_CASE("beta_sequence") {
    auto a3 = build_cartan('A', 3);
    auto betas = beta_sequence(a3, {{1, 2, 3, 1, 2}});
    CHECK(betas == std::vector<IntVector>{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}});
    auto a2 = build_cartan('A', 2);
    CHECK(beta_sequence(a2, {{1, 2, 1}}) == std::vector<IntVector>{{1, 0}, {1, 1}, {0, 1}});
    CHECK(beta_sequence(a2, {{2, 1, 2}}) == std::vector<IntVector>{{0, 1}, {1, 1}, {1, 0}});
    CHECK_THROWS_AS(beta_sequence(a2, {{1, 1}}), InvalidArgument);
}

TEST_CASE("beta_sequence permutes the inversion set for every reduced word") {
    auto cd = build_cartan('B', 3);
    auto w0 = longest_element(cd);
    auto inv = inversion_set(cd, w0);
    std::set<IntVector> target(inv.begin(), inv.end());
    // walk a few reduced words of w0 by peeling different descents
    for (int first = 1; first <= 3; ++first) {
        IntVector word{first};
        WeylElement w = right_multiply(cd, identity_element(cd), first);
        while (w.length < w0.length)
            for (int i = 3; i >= 1; --i)
                if (is_positive_vector(w.apply(cd.simple_root(i)))) {
                    w = right_multiply(cd, w, i);
                    word.push_back(i);
                    break;
                }
        auto betas = beta_sequence(cd, {word});
        std::set<IntVector> got(betas.begin(), betas.end());
        CHECK(got.size() == betas.size());
        CHECK(got == target);
    }
}

TEST_CASE("count_reduced_expressions against exhaustive search") {
    auto a2 = build_cartan('A', 2);
    CHECK(count_reduced_expressions(a2, longest_element(a2)) == 2);

    auto a3 = build_cartan('A', 3);
    auto w = weyl_from_word(a3, {2, 1, 3, 2}).element;
    CHECK(count_reduced_expressions(a3, w) == 2);
    CHECK(brute_force_reduced_count(a3, w) == 2);
    CHECK(count_reduced_expressions(a3, longest_element(a3)) == 16);
    CHECK(brute_force_reduced_count(a3, longest_element(a3)) == 16);

    for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'G', 2}, {'A', 4}}) {
        auto cd = build_cartan(f, n);
        auto w0 = longest_element(cd);
        CHECK(count_reduced_expressions(cd, w0) == brute_force_reduced_count(cd, w0));
    }
    CHECK(count_reduced_expressions(a3, identity_element(a3)) == 1);
}

TEST_CASE("reduced-expression count does not depend on the word used to build w") {
    auto a3 = build_cartan('A', 3);
    auto x = weyl_from_word(a3, {1, 2, 1, 3}).element;
    auto y = weyl_from_word(a3, {2, 1, 2, 3}).element;
    REQUIRE(x == y);
    CHECK(count_reduced_expressions(a3, x) == count_reduced_expressions(a3, y));
}
