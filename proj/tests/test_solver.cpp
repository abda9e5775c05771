#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tailspec/families.hpp"
#include "tailspec/tail_solver.hpp"
#include "test_util.hpp"

using namespace tailspec;

namespace {

Graph anchored_triangle() {
    Graph g = build_flower({2});
    return g;  // root-anchored triangle
}

std::vector<double> lambdas_of(const SpectrumReport& r) {
    std::vector<double> out;
    for (const auto& rec : r.eigenvalues) out.push_back(rec.lambda);
    return out;
}

std::vector<double> lambdas_of(const FamilyReport& r) {
    std::vector<double> out;
    for (const auto& rec : r.eigenvalues) out.push_back(rec.lambda);
    return out;
}

}  // namespace

TEST_CASE("green_free closed-form values") {
    CHECK(green_free(0.5, 1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(green_free(0.5, 1, 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(green_free(0.3, 2, 2) == doctest::Approx(0.327).epsilon(1e-12));
    GreenEntry e = green_entry(0.5, 2, 1);
    CHECK(e.value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(green_free(1.0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(green_free(0.0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(green_free(0.5, 0, 1), std::invalid_argument);
}

TEST_CASE("green_free symmetry in (i,j)") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> zs(-0.95, 0.95);
    std::uniform_int_distribution<int> idx(1, 12);
    for (int trial = 0; trial < 50; ++trial) {
        double z = zs(rng);
        if (std::abs(z) < 1e-3) z = 0.4;
        int i = idx(rng), j = idx(rng);
        CHECK(green_free(z, i, j) == doctest::Approx(green_free(z, j, i)).epsilon(1e-13));
    }
}

TEST_CASE("joukowski maps are mutually inverse") {
    for (double lambda : {2.0001, 2.5, 5.0, -2.3, -40.0}) {
        double x = x_from_lambda(lambda);
        CHECK(std::abs(x) < 1.0);
        CHECK(lambda_from_x(x) == doctest::Approx(lambda).epsilon(1e-14));
        CHECK(std::signbit(x) == std::signbit(lambda));
    }
    CHECK_THROWS_AS(x_from_lambda(1.5), std::invalid_argument);
}

TEST_CASE("discrete spectrum of the anchored triangle") {
    SpectrumReport r = discrete_spectrum(anchored_triangle());
    REQUIRE(r.eigenvalues.size() == 1);
    CHECK(r.eigenvalues[0].lambda == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(r.eigenvalues[0].x ==
          doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-12));
    CHECK(r.eigenvalues[0].side == BandSide::above);
    CHECK(!r.eigenvalues[0].near_band);
    CHECK(r.band_lo == -2.0);
    CHECK(r.band_hi == 2.0);
    CHECK(r.s_degree == 4);
}

TEST_CASE("discrete spectrum of the center-anchored star K_{1,3}") {
    SpectrumReport r = discrete_spectrum(build_multistar({1, 1, 1}));
    REQUIRE(r.eigenvalues.size() == 2);
    const double target = 3.0 / std::sqrt(2.0);
    CHECK(r.eigenvalues[0].lambda == doctest::Approx(-target).epsilon(1e-12));
    CHECK(r.eigenvalues[1].lambda == doctest::Approx(target).epsilon(1e-12));
    CHECK(r.eigenvalues[0].side == BandSide::below);
    CHECK(r.eigenvalues[1].side == BandSide::above);
    CHECK(r.eigenvalues[1].x == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("discrete spectrum of the bowtie flower") {
    SpectrumReport r = discrete_spectrum(build_flower({2, 2}));
    REQUIRE(r.eigenvalues.size() == 2);
    // roots of 3x^2 + x - 1 mapped through lambda = x + 1/x
    const double s13 = std::sqrt(13.0);
    CHECK(r.eigenvalues[0].lambda ==
          doctest::Approx((1.0 - 2.0 * s13) / 3.0).epsilon(1e-12));
    CHECK(r.eigenvalues[1].lambda ==
          doctest::Approx((1.0 + 2.0 * s13) / 3.0).epsilon(1e-12));
}

TEST_CASE("roots of S at the band edges are discarded and counted") {
    // K_{1,3} anchored at a leaf is the two-short-rays star in disguise:
    // S(x) = x^4 - 1 vanishes only at x = +-1, so the spectrum is band-only
    Graph k13 = build_multistar({1, 1, 1});
    k13.anchor = 2;
    SpectrumReport r = discrete_spectrum(k13);
    CHECK(r.eigenvalues.empty());
    CHECK(r.band_edge_roots_discarded == 2);
    CHECK(r.s_degree == 4);
}

TEST_CASE("components detached from the anchor still report their eigenvalues") {
    // K_4 plus an isolated anchored vertex: the coupling is K_4 next to a
    // plain ray, so sigma_d is the K_4 eigenvalue 3 (the -1 triple lies
    // inside the band); P and Pv share the K_4 factor and need no special
    // handling
    Graph g(5);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) g.add_edge(i, j);
    g.anchor = 5;
    SpectrumReport r = discrete_spectrum(g);
    REQUIRE(r.eigenvalues.size() == 1);
    CHECK(r.eigenvalues[0].lambda == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("ray-only couplings have no discrete spectrum") {
    Graph v1(1);
    v1.anchor = 1;
    CHECK(discrete_spectrum(v1).eigenvalues.empty());

    Graph p2 = build_path(2);
    p2.anchor = 1;
    CHECK(discrete_spectrum(p2).eigenvalues.empty());

    CHECK_THROWS_AS(discrete_spectrum(build_path(2)), std::invalid_argument);
}

TEST_CASE("residuals and reported roots satisfy the tail equation") {
    for (Graph g : {build_multistar({2, 3}), build_flower({3, 2}),
                    build_multistar({1, 1, 1, 1})}) {
        SpectrumReport r = discrete_spectrum(g);
        IntPoly p = charpoly(g);
        for (const auto& rec : r.eigenvalues) {
            CHECK(std::abs(rec.lambda) > 2.0);
            CHECK(rec.lambda ==
                  doctest::Approx(rec.x + 1.0 / rec.x).epsilon(1e-12));
            CHECK(rec.residual <= 1e-8 * (1.0 + p.coeff_norm_l1()));
        }
    }
}

TEST_CASE("bipartite stars give symmetric spectra") {
    for (auto kappa :
         std::vector<std::vector<int>>{{1, 1, 1}, {2, 2}, {3, 1, 2}, {4, 2, 1, 1}}) {
        auto ls = lambdas_of(discrete_spectrum(build_multistar(kappa)));
        REQUIRE(ls.size() % 2 == 0);
        for (size_t k = 0; k < ls.size() / 2; ++k)
            CHECK(std::abs(ls[k] + ls[ls.size() - 1 - k]) <= 1e-10);
    }
}

TEST_CASE("schur complement determinant vanishes exactly at the spectrum") {
    Graph tri = anchored_triangle();
    const double root5 = std::sqrt(5.0);
    CHECK(std::abs(determinant(schur_complement_matrix(tri, root5))) <= 1e-10);
    CHECK(std::abs(determinant(schur_complement_matrix(tri, 3.0))) > 0.1);

    Graph k13 = build_multistar({1, 1, 1});
    CHECK(std::abs(determinant(
              schur_complement_matrix(k13, 3.0 / std::sqrt(2.0)))) <= 1e-10);

    CHECK_THROWS_AS(schur_complement_matrix(tri, 1.9), std::invalid_argument);
}

TEST_CASE("theorem consistency: every reported eigenvalue kills the complement") {
    for (Graph g : {build_multistar({2, 2, 1}), build_flower({2, 3})}) {
        SpectrumReport r = discrete_spectrum(g);
        REQUIRE(!r.eigenvalues.empty());
        for (const auto& rec : r.eigenvalues) {
            double det = determinant(schur_complement_matrix(g, rec.lambda));
            double scale = std::pow(1.0 + std::abs(rec.lambda), g.n);
            CHECK(std::abs(det) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("absorbing one tail vertex into the finite part is spectrum-neutral") {
    for (Graph g : {anchored_triangle(), build_multistar({1, 1, 1}),
                    build_flower({2, 2})}) {
        Graph one = build_path(1);
        one.anchor = 1;
        Graph grown = couple(g, one);
        grown.anchor = g.n + 1;  // anchor moves to the absorbed tail vertex
        auto before = lambdas_of(discrete_spectrum(g));
        auto after = lambdas_of(discrete_spectrum(grown));
        REQUIRE(before.size() == after.size());
        for (size_t k = 0; k < before.size(); ++k)
            CHECK(std::abs(before[k] - after[k]) <= 1e-10);
    }
}

TEST_CASE("star family worked examples") {
    FamilyReport r = star_spectrum({1, 1, 1});
    REQUIRE(r.t_plus.has_value());
    CHECK(*r.t_plus == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(*r.lambda_plus == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(*r.lambda_minus == doctest::Approx(-3.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r.phi_zero_limit_plus == doctest::Approx(1.5).epsilon(1e-14));

    FamilyReport s22 = star_spectrum({2, 2});
    REQUIRE(s22.lambda_plus.has_value());
    const double x = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
    CHECK(*s22.lambda_plus == doctest::Approx(x + 1.0 / x).epsilon(1e-12));

    // the two-short-rays configuration carries no discrete spectrum
    FamilyReport trivial = star_spectrum({1, 1});
    CHECK(!trivial.t_plus.has_value());
    CHECK(trivial.eigenvalues.empty());
    CHECK(trivial.phi_zero_limit_plus == doctest::Approx(1.0).epsilon(1e-14));

    // a single ray is just a longer ray: no discrete spectrum either
    CHECK(star_spectrum({3}).eigenvalues.empty());
}

TEST_CASE("uniform star polynomial special case") {
    UniformStarRoots u31 = star_uniform_poly(3, 1);
    CHECK(u31.poly == IntPoly{1, 0, -3, 0, 2});
    REQUIRE(u31.roots.size() == 2);
    CHECK(u31.roots[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(u31.lambdas[1] == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-12));

    UniformStarRoots u22 = star_uniform_poly(2, 2);
    CHECK(u22.poly == IntPoly{1, 0, -2, 0, 0, 0, 1});
    CHECK(u22.poly == IntPoly{-1, 0, 1} * IntPoly{-1, 0, 1, 0, 1});
    REQUIRE(u22.roots.size() == 2);
    FamilyReport star22 = star_spectrum({2, 2});
    CHECK(u22.lambdas[1] == doctest::Approx(*star22.lambda_plus).epsilon(1e-10));

    // p = 1, n = 2 degenerates: (x^2-1)^2 has no interior roots
    UniformStarRoots u21 = star_uniform_poly(2, 1);
    CHECK(u21.poly == IntPoly{1, 0, -2, 0, 1});
    CHECK(u21.roots.empty());

    CHECK_THROWS_AS(star_uniform_poly(1, 1), std::invalid_argument);
}

TEST_CASE("flower family worked examples") {
    // single triangle petal: only the above-band eigenvalue exists
    FamilyReport tri = flower_spectrum({2});
    REQUIRE(tri.lambda_plus.has_value());
    CHECK(*tri.lambda_plus == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(!tri.lambda_minus.has_value());
    CHECK(tri.phi_zero_limit_minus == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(tri.phi_zero_limit_plus == doctest::Approx(2.0).epsilon(1e-14));

    FamilyReport bowtie = flower_spectrum({2, 2});
    const double s13 = std::sqrt(13.0);
    REQUIRE(bowtie.lambda_plus.has_value());
    REQUIRE(bowtie.lambda_minus.has_value());
    CHECK(*bowtie.lambda_plus == doctest::Approx((1.0 + 2.0 * s13) / 3.0).epsilon(1e-11));
    CHECK(*bowtie.lambda_minus == doctest::Approx((1.0 - 2.0 * s13) / 3.0).epsilon(1e-11));

    // single square petal: both sides exist
    FamilyReport c4 = flower_spectrum({3});
    CHECK(c4.phi_zero_limit_minus == doctest::Approx(2.0).epsilon(1e-14));
    REQUIRE(c4.lambda_plus.has_value());
    REQUIRE(c4.lambda_minus.has_value());
    auto generic = lambdas_of(discrete_spectrum(build_flower({3})));
    REQUIRE(generic.size() == 2);
    CHECK(*c4.lambda_minus == doctest::Approx(generic[0]).epsilon(1e-10));
    CHECK(*c4.lambda_plus == doctest::Approx(generic[1]).epsilon(1e-10));
}

TEST_CASE("family charpolys equal the determinant route exactly") {
    // stars: every kappa with n <= 4 and sum k_j <= 12
    int checked = 0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> kappa(n, 1);
        while (true) {
            int sum = 0;
            for (int k : kappa) sum += k;
            if (sum <= 12) {
                FamilySpec spec{Family::star, kappa};
                auto [p, pv] = family_charpoly(spec);
                Graph g = build_multistar(kappa);
                CHECK(p == charpoly(g));
                CHECK(pv == charpoly(delete_vertices(g, {1})));
                ++checked;
                if (std::all_of(kappa.begin(), kappa.end(),
                                [](int k) { return k >= 2; })) {
                    FamilySpec fspec{Family::flower, kappa};
                    auto [fp, fpv] = family_charpoly(fspec);
                    Graph f = build_flower(kappa);
                    CHECK(fp == charpoly(f));
                    CHECK(fpv == charpoly(delete_vertices(f, {1})));
                }
            }
            // next tuple with entries in [1, 12]
            int pos = n - 1;
            while (pos >= 0 && kappa[pos] == 12) kappa[pos--] = 1;
            if (pos < 0) break;
            ++kappa[pos];
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("family charpoly closed forms on the worked examples") {
    auto [p1, pv1] = family_charpoly({Family::star, {1, 1, 1}});
    CHECK(p1 == IntPoly{0, 0, -3, 0, 1});
    CHECK(pv1 == IntPoly{0, 0, 0, 1});

    auto [p2, pv2] = family_charpoly({Family::flower, {2}});
    CHECK(p2 == IntPoly{-2, -3, 0, 1});
    CHECK(pv2 == IntPoly{-1, 0, 1});

    auto [p3, pv3] = family_charpoly({Family::flower, {2, 2}});
    CHECK(p3 == IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-1, 1} *
                    IntPoly{-4, -1, 1});
    CHECK(pv3 == IntPoly{-1, 0, 1} * IntPoly{-1, 0, 1});
}

TEST_CASE("family solvers agree with the generic solver") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> nrays(1, 4);
    std::uniform_int_distribution<int> klen(1, 5);

    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> kappa(nrays(rng));
        for (auto& k : kappa) k = klen(rng);

        auto family = lambdas_of(star_spectrum(kappa));
        auto generic = lambdas_of(discrete_spectrum(build_multistar(kappa)));
        REQUIRE(family.size() == generic.size());
        for (size_t k = 0; k < family.size(); ++k)
            CHECK(std::abs(family[k] - generic[k]) <= 1e-10);
    }
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<int> kappa(nrays(rng));
        for (auto& k : kappa) k = 1 + klen(rng) % 4 + 1;

        auto family = lambdas_of(flower_spectrum(kappa));
        auto generic = lambdas_of(discrete_spectrum(build_flower(kappa)));
        REQUIRE(family.size() == generic.size());
        for (size_t k = 0; k < family.size(); ++k)
            CHECK(std::abs(family[k] - generic[k]) <= 1e-10);
    }
}

TEST_CASE("phi functions are monotone decreasing and overflow-safe") {
    const std::vector<int> star_kappa{2, 3, 5};
    const std::vector<int> flower_kappa{2, 3, 4};
    double prev_star = 1e18, prev_plus = 1e18, prev_minus = 1e18;
    for (double t = 0.05; t <= 10.0; t += 0.35) {
        double s = star_phi(star_kappa, t);
        double fp = flower_phi_plus(flower_kappa, t);
        double fm = flower_phi_minus(flower_kappa, t);
        CHECK(s < prev_star);
        CHECK(fp < prev_plus);
        CHECK(fm < prev_minus);
        prev_star = s;
        prev_plus = fp;
        prev_minus = fm;
    }
    CHECK(std::isfinite(star_phi(star_kappa, 500.0)));
    CHECK(std::isfinite(flower_phi_plus(flower_kappa, 500.0)));
    CHECK(std::isfinite(flower_phi_minus(flower_kappa, 500.0)));
}

TEST_CASE("safe hyperbolic ratios match the naive forms up to t = 20") {
    const std::vector<int> kappa{1, 2, 4, 7};
    for (double t = 0.01; t <= 20.0; t += 0.83) {
        double naive = 0.0;
        for (int k : kappa) naive += std::sinh(k * t) / std::sinh((k + 1) * t);
        CHECK(star_phi(kappa, t) == doctest::Approx(naive).epsilon(1e-12));
    }
}

TEST_CASE("slowly emerging eigenvalues stay consistent between routes") {
    // long equal rays push the eigenvalue toward the band edge
    FamilyReport r = star_spectrum({6, 6});
    REQUIRE(r.t_plus.has_value());
    SpectrumReport generic = discrete_spectrum(build_multistar({6, 6}));
    REQUIRE(generic.eigenvalues.size() == 2);
    CHECK(std::abs(generic.eigenvalues[1].lambda - *r.lambda_plus) <= 1e-10);
    CHECK(generic.eigenvalues[1].lambda > 2.0);
}
