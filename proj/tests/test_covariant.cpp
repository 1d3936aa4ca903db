#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "covosc/coupled.hpp"
#include "covosc/covariant.hpp"
#include "covosc/quadrature.hpp"

using namespace covosc;

TEST_CASE("light-cone map examples")
{
    {
        const LightConePoint lc = to_light_cone({1.0, 0.0});
        CHECK(lc.u == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(lc.v == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    }
    {
        const LightConePoint lc = to_light_cone({1.0, 1.0});
        CHECK(lc.u == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(lc.v == 0.0);
    }
    {
        const LightConePoint lc = to_light_cone({0.3, -0.4});
        CHECK(lc.u == doctest::Approx(-0.07071067811865477).epsilon(1e-13));
        CHECK(lc.v == doctest::Approx(0.4949747468305832).epsilon(1e-13));
    }
}

TEST_CASE("light-cone round trip")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const SpacetimePoint p{dist(rng), dist(rng)};
        const SpacetimePoint back = from_light_cone(to_light_cone(p));
        CHECK(back.z == doctest::Approx(p.z).epsilon(1e-15));
        CHECK(back.t == doctest::Approx(p.t).epsilon(1e-15));
    }
}

TEST_CASE("boost_point examples")
{
    const SpacetimePoint p{1.0, 0.0};
    const SpacetimePoint id = boost_point(0.0, p);
    CHECK(id.z == 1.0);
    CHECK(id.t == 0.0);

    const SpacetimePoint b = boost_point(2.0, p);
    CHECK(b.z == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(b.t == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(b.z * b.z - b.t * b.t == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("boost invariants on random draws")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> rap(-4.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        const SpacetimePoint p{coord(rng), coord(rng)};
        const double eta = rap(rng);

        const SpacetimePoint b = boost_point(eta, p);
        const double inv0 = p.z * p.z - p.t * p.t;
        const double inv1 = b.z * b.z - b.t * b.t;
        CHECK(std::abs(inv1 - inv0) <= 1e-12 * std::max(1.0, std::abs(inv0)));

        const LightConePoint lc = to_light_cone(p);
        const LightConePoint blc = boost_light_cone(eta, lc);
        CHECK(std::abs(blc.u * blc.v - lc.u * lc.v)
              <= 1e-12 * std::max(1.0, std::abs(lc.u * lc.v)));
    }
}

TEST_CASE("boosts form a one-parameter group")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> rap(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const SpacetimePoint p{coord(rng), coord(rng)};
        const double e1 = rap(rng), e2 = rap(rng);
        const SpacetimePoint a = boost_point(e1, boost_point(e2, p));
        const SpacetimePoint b = boost_point(e1 + e2, p);
        CHECK(a.z == doctest::Approx(b.z).epsilon(1e-12));
        CHECK(a.t == doctest::Approx(b.t).epsilon(1e-12));
    }
}

TEST_CASE("boost in light-cone coordinates")
{
    const LightConePoint id = boost_light_cone(0.0, {0.7, -0.2});
    CHECK(id.u == 0.7);
    CHECK(id.v == -0.2);

    const LightConePoint b = boost_light_cone(2.0, {1.0, 1.0});
    CHECK(b.u == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(b.v == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(b.u * b.v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("light-cone boost conjugates the point boost")
{
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> rap(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const SpacetimePoint p{coord(rng), coord(rng)};
        const double eta = rap(rng);
        const LightConePoint a = to_light_cone(boost_point(eta, p));
        const LightConePoint b = boost_light_cone(eta, to_light_cone(p));
        CHECK(a.u == doctest::Approx(b.u).epsilon(1e-12));
        CHECK(a.v == doctest::Approx(b.v).epsilon(1e-12));
    }
}

TEST_CASE("boosted wave function values and covariance")
{
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    CHECK(boosted_wavefunction(0.0, {0.0, 0.0}) == doctest::Approx(inv_sqrt_pi).epsilon(1e-15));
    CHECK(boosted_wavefunction(5.0, {0.0, 0.0}) == doctest::Approx(inv_sqrt_pi).epsilon(1e-15));

    // matches the coupled-oscillator ground state with (x1, x2) -> (z, t)
    CHECK(boosted_wavefunction(1.2, {0.4, -0.9})
          == doctest::Approx(ground_state(1.2, 0.4, -0.9)).epsilon(1e-15));

    // psi_eta = psi_0 composed with the inverse boost
    for (double eta : {-2.0, 0.7, 1.5})
        for (int i = 0; i < 41; ++i)
            for (int j = 0; j < 41; ++j) {
                const SpacetimePoint p{-3.0 + 0.15 * i, -3.0 + 0.15 * j};
                const double lhs = boosted_wavefunction(eta, p);
                const double rhs = boosted_wavefunction(0.0, boost_point(-eta, p));
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }

    CHECK_THROWS_AS(boosted_wavefunction(20.5, {0.0, 0.0}), std::range_error);
}

TEST_CASE("boosted wave function stays normalized")
{
    const QuadratureRule rule = gauss_hermite(96);
    for (double eta : {0.0, 1.0, -1.5}) {
        double acc = 0.0;
        for (std::size_t a = 0; a < rule.order(); ++a)
            for (std::size_t b = 0; b < rule.order(); ++b) {
                const double psi = boosted_wavefunction(eta, {rule.nodes[a], rule.nodes[b]});
                acc += rule.total_weights[a] * rule.total_weights[b] * psi * psi;
            }
        CHECK(std::abs(acc - 1.0) < 1e-10);
    }
}

TEST_CASE("invariant equation residual")
{
    const GridSpec grid = GridSpec::centered(4.0, 401); // h = 0.02

    SUBCASE("rest frame")
    {
        const ResidualReport r = invariant_equation_residual(0.0, grid);
        CHECK(r.max_analytic < 1e-12);
        CHECK(r.max_discrepancy < 5e-3);
    }

    SUBCASE("boosted frames keep eigenvalue zero")
    {
        for (double eta : {1.5, 3.0}) {
            const ResidualReport r = invariant_equation_residual(eta, grid);
            CHECK(r.max_analytic < 1e-10);
            CHECK(r.max_discrepancy < 5e-3);
            CHECK(r.max_finite_difference < 5e-3);
        }
    }

    SUBCASE("grid preconditions")
    {
        CHECK_THROWS_AS(invariant_equation_residual(1.0, GridSpec::centered(5.0, 401)),
                        std::domain_error);
        CHECK_THROWS_AS(invariant_equation_residual(1.0, GridSpec::centered(4.0, 41)),
                        std::domain_error); // spacing 0.2 > 0.05
    }
}

TEST_CASE("squeeze ellipse")
{
    const SqueezeEllipse rest = squeeze_ellipse(0.0);
    CHECK(rest.semi_axis_u == 1.0);
    CHECK(rest.semi_axis_v == 1.0);
    CHECK(rest.area == doctest::Approx(std::numbers::pi).epsilon(1e-15));

    const SqueezeEllipse boosted = squeeze_ellipse(2.0);
    CHECK(boosted.semi_axis_u == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(boosted.semi_axis_v == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(boosted.semi_axis_u * boosted.semi_axis_v == doctest::Approx(1.0).epsilon(1e-14));

    const SqueezeEllipse fast = squeeze_ellipse(4.0);
    CHECK(fast.semi_axis_u / fast.semi_axis_v == doctest::Approx(std::exp(4.0)).epsilon(1e-13));

    CHECK_THROWS_AS(squeeze_ellipse(30.0), std::range_error);
}

TEST_CASE("spatial marginal variance")
{
    CHECK(spatial_marginal_variance(0.0) == 0.5);
    CHECK(spatial_marginal_variance(1.0) == doctest::Approx(0.7715403174076219).epsilon(1e-14));
    CHECK(spatial_marginal_variance(-1.7) == spatial_marginal_variance(1.7));

    // quadrature oracle: Var(z) = \iint z^2 |psi|^2 dz dt
    const QuadratureRule rule = gauss_hermite(256);
    for (double eta : {0.0, 1.0, 2.0}) {
        double var = 0.0;
        for (std::size_t a = 0; a < rule.order(); ++a)
            for (std::size_t b = 0; b < rule.order(); ++b) {
                const double z = rule.nodes[a];
                const double psi = boosted_wavefunction(eta, {z, rule.nodes[b]});
                var += rule.total_weights[a] * rule.total_weights[b] * z * z * psi * psi;
            }
        CHECK(std::abs(var - spatial_marginal_variance(eta)) < 1e-8);
    }
}

TEST_CASE("spatial marginal density integrates the 2D density")
{
    const QuadratureRule rule = gauss_hermite(128);
    for (double eta : {0.0, 1.5}) {
        for (double z : {-1.0, 0.0, 0.8}) {
            double marg = 0.0;
            for (std::size_t b = 0; b < rule.order(); ++b) {
                const double psi = boosted_wavefunction(eta, {z, rule.nodes[b]});
                marg += rule.total_weights[b] * psi * psi;
            }
            CHECK(marg == doctest::Approx(spatial_marginal_density(eta, z)).epsilon(1e-10));
        }
    }
}
