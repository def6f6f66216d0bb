#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "anc/closed_forms.hpp"
#include "anc/stationarity.hpp"
#include "anc/propagation.hpp"
#include "support.hpp"

using namespace anc;
using namespace anc::testing;

TEST_CASE("zero-signal line points are degenerate stationary points") {
    const LayeredNetwork net = make_reference_diamond();
    for (double beta2 : {0.25, 1.0, -0.5, 3.0}) {
        const double beta1 = diamond_null_line_beta1(net, beta2);
        CHECK(beta1 == doctest::Approx(-0.1 * beta2).epsilon(1e-14));
        const ScalingVector beta({{beta1, beta2}});
        CHECK(snr_destination(net, beta) <= 1e-18);

        const StationarityReport report = stationarity_check(net, beta);
        CHECK(report.gradient_norm < 1e-6);
        CHECK(report.kind == StationaryKind::Degenerate);
        // curvature along (1, 0.1): positive second derivative, singular Hessian
        CHECK(report.hessian[0][0] > 0.0);
        const double scale = report.hessian[0][0] * report.hessian[1][1];
        CHECK(std::abs(report.hessian_determinant) < 1e-4 * std::max(1.0, scale));
    }
}

TEST_CASE("generic points are not stationary") {
    const LayeredNetwork net = make_reference_diamond();
    const StationarityReport report =
        stationarity_check(net, ScalingVector({{0.5, 0.7}}));
    CHECK(report.kind == StationaryKind::NotStationary);
    CHECK(report.gradient_norm > 1e-3);
}

TEST_CASE("a single relay has a minimum at zero") {
    const LinearChainSpec spec{1, {1.0, 1.0}, 2.0, {2.0}, 0.5};
    const LayeredNetwork net = build_chain(spec);
    const ScalingVector origin(std::vector<std::vector<double>>{{0.0}});
    const StationarityReport report = stationarity_check(net, origin);
    CHECK(report.kind == StationaryKind::Minimum);
}

TEST_CASE("relay-count guard") {
    EcgalSpec spec;
    spec.nodes_per_layer = 2;
    spec.num_layers = 2;
    spec.relay_power = spec.source_power = 1.0;
    CHECK_THROWS_AS(
        stationarity_check(build_ecgal(spec), ScalingVector({{0, 0}, {0, 0}})),
        std::invalid_argument);
}

TEST_CASE("the interior stationary system has no real solution") {
    // multiplying the two first-order conditions gives
    // p*q = (1+p)(1+q) with p, q >= 0, which is impossible, so the search
    // must come back empty for any diamond
    const LayeredNetwork reference = make_reference_diamond();
    CHECK(diamond_interior_stationary_points(reference).empty());

    const LayeredNetwork skew = make_diamond(1.0, 2.0, 1.0, 0.5, 5.0, 3.0, 8.0, 0.7);
    CHECK(diamond_interior_stationary_points(skew).empty());

    const LayeredNetwork negative =
        make_diamond(-0.8, 1.1, 0.9, -1.3, 2.0, 4.0, 4.0, 0.3);
    CHECK(diamond_interior_stationary_points(negative).empty());
}

TEST_CASE("diamond helpers reject other shapes") {
    const LayeredNetwork chain = build_chain({2, {1, 1, 1}, 1.0, {1, 1}, 1.0});
    CHECK_FALSE(is_diamond(chain));
    CHECK_THROWS_AS(diamond_null_line_beta1(chain, 1.0), std::invalid_argument);
    CHECK(is_diamond(make_reference_diamond()));
}
