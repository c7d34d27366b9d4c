#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skewcat/algebra.hpp>
#include <skewcat/builtins.hpp>

#include <random>

using namespace skewcat;

namespace {

// Independent product oracle: computes (sum f_m u_m)(sum g_n u_n) from
// the convolution definition -- for composable (m, n) the term is
// (f_m * (g_n o s_m)) u_{mn} -- without touching the precomputed
// structure-constant table.
Element convolve(const Algebra& a, const Element& x, const Element& y) {
    const Category& g = a.sys.cat;
    Element out = zero_element(a);
    for (int m = 0; m < g.n_mor(); ++m)
        for (int n = 0; n < g.n_mor(); ++n) {
            if (!g.composable(m, n)) continue;
            const int mn = g.compose(m, n);
            for (int px = 0; px < a.sys.space_size(g.cod[m]); ++px) {
                const Rational fm = x[a.index_of(m, px)];
                if (fm == 0) continue;
                const Rational gn = y[a.index_of(n, a.sys.pointmap[m][px])];
                if (gn == 0) continue;
                out[a.index_of(mn, px)] += fm * gn;
            }
        }
    return out;
}

Element random_element(const Algebra& a, std::mt19937_64& rng) {
    Element v = zero_element(a);
    for (auto& c : v)
        c = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4));
    return v;
}

bool in_subspace(const Subspace& s, const Vec& v) { return subspace_contains(s, v); }

}  // namespace

TEST_CASE("basis layout, unit, associativity and grading") {
    for (const char* name : {"swap", "triv2", "prod", "abs", "arrow", "fix3", "twoswap", "pair3",
                             "subsets2"}) {
        CAPTURE(name);
        const Algebra a = build_algebra(builtins::by_name(name));
        CHECK(unit_is_two_sided_identity(a));
        CHECK(product_table_associative(a));
        CHECK(is_strongly_graded(a));
        int total = 0;
        for (const auto& part : a.grading) total += static_cast<int>(part.size());
        CHECK(total == a.dim);
    }
    CHECK(build_algebra(builtins::make_abs()).dim == 13);
    CHECK(build_algebra(builtins::make_prod()).dim == 8);
    CHECK(build_algebra(builtins::make_subsets(2)).dim == 20);
    CHECK(build_algebra(builtins::make_arrow()).dim == 3);
    CHECK_THROWS_WITH_AS(build_algebra(builtins::make_abs(), 4),
                         doctest::Contains("DimensionCapExceeded"), Error);
}

TEST_CASE("pair groupoid algebras are matrix algebras with u_a as units") {
    for (int n : {2, 3}) {
        const DynSys d = builtins::make_pair(n);
        const Algebra a = build_algebra(d);
        REQUIRE(a.dim == n * n);
        auto unit_of = [&](int i, int j) {
            return u_element(a, d.cat.morphism_index("a" + std::to_string(i) + std::to_string(j)));
        };
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        const Element prod = multiply(a, unit_of(i, j), unit_of(k, l));
                        if (j == k)
                            CHECK(prod == unit_of(i, l));
                        else
                            CHECK(is_zero(prod));
                    }
        const auto s = is_simple_over_C(a);
        CHECK(s.simple);
        CHECK(s.radical_dim == 0);
        CHECK(s.center_dim == 1);
    }
    for (int n : {4, 5, 6}) {
        const auto s = is_simple_over_C(build_algebra(builtins::make_pair(n)));
        CHECK(s.simple);
    }
}

TEST_CASE("multiplication agrees with the convolution definition") {
    std::mt19937_64 rng(2024);
    for (const char* name : {"abs", "subsets2", "prod", "fix3"}) {
        CAPTURE(name);
        const Algebra a = build_algebra(builtins::by_name(name));
        for (int trial = 0; trial < 8; ++trial) {
            const Element x = random_element(a, rng), y = random_element(a, rng);
            CHECK(multiply(a, x, y) == convolve(a, x, y));
        }
        // left/right basis actions match full multiplication
        const Element v = random_element(a, rng);
        for (int i = 0; i < a.dim; i += 3) {
            CHECK(left_mul_basis(a, i, v) == multiply(a, basis_element(a, i), v));
            CHECK(right_mul_basis(a, v, i) == multiply(a, v, basis_element(a, i)));
        }
    }
}

TEST_CASE("center and radical dimensions of the built-ins") {
    auto dims = [](const char* name) {
        const Algebra a = build_algebra(builtins::by_name(name));
        const auto s = is_simple_over_C(a);
        return std::pair<int, int>{s.radical_dim, s.center_dim};
    };
    CHECK(dims("swap") == std::pair<int, int>{0, 1});
    CHECK(dims("triv2") == std::pair<int, int>{0, 2});
    CHECK(dims("prod") == std::pair<int, int>{0, 2});
    CHECK(dims("abs") == std::pair<int, int>{2, 4});
    CHECK(dims("arrow") == std::pair<int, int>{1, 1});  // triangular: central scalars only
    CHECK(dims("fix3") == std::pair<int, int>{0, 3});
    CHECK(dims("twoswap") == std::pair<int, int>{0, 2});
    CHECK(dims("subsets2") == std::pair<int, int>{0, 2});  // semisimple with two blocks

    // the radical is a nilpotent two-sided ideal
    for (const char* name : {"abs", "arrow", "subsets2"}) {
        CAPTURE(name);
        const Algebra a = build_algebra(builtins::by_name(name));
        const Subspace rad = radical(a);
        for (const auto& r : rad.rows)
            for (int i = 0; i < a.dim; ++i) {
                CHECK(in_subspace(rad, left_mul_basis(a, i, r)));
                CHECK(in_subspace(rad, right_mul_basis(a, r, i)));
            }
        // rad^k = 0 for some k <= dim: powers of the generating rows die
        std::vector<Element> layer(rad.rows.begin(), rad.rows.end());
        bool nilpotent = false;
        for (int k = 0; k < a.dim && !nilpotent; ++k) {
            std::vector<Element> next;
            for (const auto& x : layer)
                for (const auto& r : rad.rows) {
                    Element p = multiply(a, x, r);
                    if (!is_zero(p)) next.push_back(std::move(p));
                }
            nilpotent = next.empty();
            layer = std::move(next);
        }
        CHECK(nilpotent);
    }
}

TEST_CASE("simplicity agrees with the enveloping-rank oracle") {
    int rank = 0;
    CHECK(enveloping_rank_oracle(build_algebra(builtins::make_pair(2)), 36, &rank));
    CHECK(rank == 16);
    CHECK(enveloping_rank_oracle(build_algebra(builtins::make_swap()), 36, &rank));
    CHECK(rank == 16);
    CHECK_FALSE(enveloping_rank_oracle(build_algebra(builtins::make_triv2()), 36, &rank));
    CHECK(rank == 2);
    CHECK_FALSE(enveloping_rank_oracle(build_algebra(builtins::make_abs()), 36, &rank));
    CHECK(rank == 49);
    for (const char* name : {"swap", "triv2", "prod", "abs", "arrow", "fix3", "twoswap", "pair4",
                             "subsets2"}) {
        CAPTURE(name);
        const Algebra a = build_algebra(builtins::by_name(name));
        CHECK(is_simple_over_C(a).simple == enveloping_rank_oracle(a));
    }
    CHECK_THROWS_WITH_AS(enveloping_rank_oracle(build_algebra(builtins::make_pair(7)), 36),
                         doctest::Contains("DimensionCapExceeded"), Error);
}

TEST_CASE("the ideal generated by u_abs") {
    const DynSys d = builtins::make_abs();
    const Algebra a = build_algebra(d);
    const Category& g = d.cat;
    const int X = g.object_index("{-1,0,1}");
    const int Y = g.object_index("{0,1}");

    const Element gen = u_element(a, g.morphism_index("abs"));
    const Subspace ideal = ideal_generated(a, {gen});

    // the ideal picks up every graded piece that factors through abs,
    // including A_Y u_{id_Y} = u_sqrt (A_X u_abs) u_sqr, so its dimension
    // is 3 + 3 + 2 + 2
    CHECK(ideal.dim() == 10);
    CHECK_FALSE(is_whole_algebra(a, ideal));

    // direct certificate that any span omitting the id_Y piece cannot be
    // an ideal: u_sqrt (u_abs u_sqr) = u_sqrt u_sqr = u_{id_Y}
    const Element u_sqrt = u_element(a, g.morphism_index("sqrt"));
    const Element u_sqr = u_element(a, g.morphism_index("sqr"));
    const Element inner = multiply(a, u_sqrt, multiply(a, gen, u_sqr));
    CHECK(inner == u_element(a, g.identity[Y]));
    CHECK(in_subspace(ideal, inner));

    const auto inters = intersect_with_components(a, ideal);
    CHECK(inters[X].dim() == 0);  // proper at X: ideal misses A_X entirely
    CHECK(inters[Y].dim() == 2);  // but swallows all of A_Y

    // membership sanity: u_abs, u_sqr, u_sqrt are in; u_{id_X} is not
    CHECK(in_subspace(ideal, gen));
    CHECK(in_subspace(ideal, u_sqr));
    CHECK(in_subspace(ideal, u_sqrt));
    CHECK_FALSE(in_subspace(ideal, u_element(a, g.identity[X])));

    // the unit generates everything
    CHECK(is_whole_algebra(a, ideal_generated(a, {a.unit})));
}

TEST_CASE("kernel ideals avoid the diagonal") {
    const DynSys d = builtins::make_prod();
    const Algebra a = build_algebra(d);
    const Category& g = d.cat;
    const Element gen = [&] {
        Element v = u_element(a, g.morphism_index("g00"));
        const Element w = u_element(a, g.morphism_index("g01"));
        for (int i = 0; i < a.dim; ++i) v[i] -= w[i];
        return v;
    }();
    const Subspace ideal = ideal_generated(a, {gen});
    CHECK_FALSE(is_whole_algebra(a, ideal));
    for (const auto& inter : intersect_with_components(a, ideal)) CHECK(inter.dim() == 0);

    CHECK(class_sum_ideals_avoid_diagonal(a, sigma_kernel(d)));
    CHECK(class_sum_ideals_avoid_diagonal(build_algebra(builtins::make_triv2()),
                        sigma_kernel(builtins::make_triv2())));

    // a congruence not inside the kernel is rejected
    const DynSys swap = builtins::make_swap();
    const Congruence merge = validate_congruence(swap.cat, {{"1", "g"}});
    CHECK_THROWS_WITH_AS(class_sum_ideals_avoid_diagonal(build_algebra(swap), merge),
                         doctest::Contains("NotContainedInKernel"), Error);
}

TEST_CASE("corner algebras") {
    const DynSys d = builtins::make_abs();
    const Algebra a = build_algebra(d);
    const int X = d.cat.object_index("{-1,0,1}");
    const int Y = d.cat.object_index("{0,1}");

    const CornerAlgebra cx = corner_algebra(a, X);
    CHECK(cx.algebra.dim == 6);  // id_X and abs over three points
    CHECK(unit_is_two_sided_identity(cx.algebra));
    CHECK(product_table_associative(cx.algebra));
    CHECK(center(cx.algebra).dim() == 4);
    // corner products agree with parent products
    for (int i = 0; i < cx.algebra.dim; ++i)
        for (int j = 0; j < cx.algebra.dim; ++j) {
            const int k = cx.algebra.product(i, j);
            const int pk = a.product(cx.parent_index[i], cx.parent_index[j]);
            CHECK((k < 0 ? -1 : cx.parent_index[k]) == pk);
        }

    const CornerAlgebra cy = corner_algebra(a, Y);
    CHECK(cy.algebra.dim == 2);
    CHECK(center(cy.algebra).dim() == 2);

    CHECK_THROWS_AS(corner_algebra(a, 9), Error);
}

TEST_CASE("maximal commutativity of the diagonal subalgebra") {
    CHECK(is_A_maximal_commutative(build_algebra(builtins::make_swap())));
    CHECK(is_A_maximal_commutative(build_algebra(builtins::make_pair(2))));
    CHECK(is_A_maximal_commutative(build_algebra(builtins::make_twoswap())));
    CHECK(is_A_maximal_commutative(build_algebra(builtins::make_arrow())));
    CHECK_FALSE(is_A_maximal_commutative(build_algebra(builtins::make_triv2())));
    CHECK_FALSE(is_A_maximal_commutative(build_algebra(builtins::make_prod())));
    CHECK_FALSE(is_A_maximal_commutative(build_algebra(builtins::make_fix3())));
    CHECK_FALSE(is_A_maximal_commutative(build_algebra(builtins::make_subsets(2))));

    // the commutant really commutes with the diagonal
    const Algebra a = build_algebra(builtins::make_triv2());
    const Subspace diag = diagonal_subspace(a);
    const Subspace comm = commutant(a, diag);
    CHECK(comm.dim() > diag.dim());
    for (const auto& z : comm.rows)
        for (const auto& s : diag.rows) CHECK(multiply(a, z, s) == multiply(a, s, z));
}

TEST_CASE("minimal polynomials and rational ideal witnesses") {
    const Algebra swap = build_algebra(builtins::make_swap());
    CHECK(minimal_polynomial(swap, swap.unit) == std::vector<Rational>{-1, 1});
    const Element ug = u_element(swap, swap.sys.cat.morphism_index("g"));
    CHECK(minimal_polynomial(swap, ug) == std::vector<Rational>{-1, 0, 1});

    // a nonzero radical element of the arrow algebra squares to zero
    const Algebra arrow = build_algebra(builtins::make_arrow());
    const Subspace rad = radical(arrow);
    REQUIRE(rad.dim() == 1);
    CHECK(minimal_polynomial(arrow, rad.rows[0]) == std::vector<Rational>{0, 0, 1});

    // central witness of a non-simple algebra yields a proper ideal
    const Algebra triv2 = build_algebra(builtins::make_triv2());
    const auto s = is_simple_over_C(triv2);
    REQUIRE_FALSE(s.simple);
    REQUIRE(s.central_witness.has_value());
    const auto witness = rational_ideal_witness(triv2, *s.central_witness);
    REQUIRE(witness.has_value());
    const Subspace ideal = ideal_generated(triv2, {*witness});
    CHECK(ideal.dim() > 0);
    CHECK_FALSE(is_whole_algebra(triv2, ideal));
}
