#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "idealtop/circle.hpp"
#include "idealtop/labs.hpp"
#include "idealtop/onepoint.hpp"

using namespace idealtop;

TEST_CASE("one-point extension of small spaces") {
    auto d2 = build_onepoint(discrete_space({"a", "b"}), ideal_fin());
    CHECK(d2.space.opens.size() == 8); // discrete on three points
    CHECK(d2.alpha_isolated);
    CHECK(!d2.base_dense);

    auto pt = build_onepoint(make_space({"p"}, {0, 1}), ideal_fin());
    CHECK(pt.space.opens.size() == 4);

    auto sp = build_onepoint(sierpinski(), ideal_fin());
    CHECK(sp.space.opens == std::vector<Mask>{0, 1, 3, 4, 5, 7});

    CHECK_THROWS_AS(build_onepoint(sierpinski(), ideal_fin(), "a"), std::invalid_argument);
}

TEST_CASE("hausdorffness of extensions") {
    CHECK(is_hausdorff(build_onepoint(discrete_space({"a", "b"}), ideal_fin())));
    CHECK(!is_hausdorff(build_onepoint(sierpinski(), ideal_fin())));
    CHECK(is_hausdorff(build_onepoint(make_space({"p"}, {0, 1}), ideal_fin())));
    CHECK(!is_hausdorff(indiscrete_space({"a", "b"})));
}

TEST_CASE("hausdorff extension exactly over discrete bases") {
    for (const auto& S : enumerate_topologies(3)) {
        bool discrete = S.opens.size() == (std::size_t{1} << S.size());
        CHECK(is_hausdorff(build_onepoint(S, ideal_fin())) == discrete);
    }
}

TEST_CASE("map extension") {
    auto d2 = discrete_space({"a", "b"});
    auto id = extend_map(make_finmap(d2, d2, {{"a", "a"}, {"b", "b"}}), ideal_fin());
    CHECK(id.fhat_continuous);
    CHECK(id.fhat_open);
    CHECK(id.base_report.b_pass);
    CHECK(id.base_report.c_pass);
    CHECK(id.fhat.assign == std::vector<std::size_t>{0, 1, 2}); // alpha to alpha

    auto pt = make_space({"p"}, {0, 1});
    auto c = extend_map(make_finmap(d2, pt, {{"a", "p"}, {"b", "p"}}), ideal_fin());
    CHECK(c.fhat_continuous);

    auto swap = extend_map(make_finmap(d2, d2, {{"a", "b"}, {"b", "a"}}), ideal_fin());
    CHECK(swap.fhat_continuous);
    CHECK(swap.fhat_open);
}

TEST_CASE("uniqueness of the extension up to base-fixing bijection") {
    auto a = build_onepoint(sierpinski(), ideal_fin());
    auto b = build_onepoint(sierpinski(), ideal_fin());
    auto found = homeo_search(a, b);
    REQUIRE(found.has_value());
    CHECK(*found == std::vector<std::size_t>{0, 1, 2});

    auto relabeled = build_onepoint(make_space({"x", "y"}, {0, 1, 3}), ideal_fin());
    CHECK(homeo_search(a, relabeled).has_value());

    OnePointSpace indiscrete3;
    indiscrete3.base = indiscrete_space({"a", "b"});
    indiscrete3.space = indiscrete_space({"a", "b", "*"});
    indiscrete3.alpha = 2;
    CHECK(!homeo_search(build_onepoint(discrete_space({"a", "b"}), ideal_fin()), indiscrete3)
               .has_value());
}

TEST_CASE("extension lab over all small bases") {
    auto r = lab_onepoint(4, true);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
    CHECK(r.instances == 389 * 6);
}

TEST_CASE("circle embedding") {
    CHECK(same_value(circle_e(0), Value::plane(0, 1)));
    CHECK(same_value(circle_e(1), Value::plane(1, 0)));
    CHECK(same_value(circle_e(-1), Value::plane(-1, 0)));
    CHECK(same_value(circle_e(3), Value::plane(0.6, -0.8)));
    CHECK(distance(circle_e(1 + 1e-8), circle_e(1)) < 1e-3); // branches agree at the boundary

    // as printed, the outer branch retraces the upper semicircle
    CHECK(same_value(circle_e_printed(3), circle_e(0.6)));
    CHECK(!same_value(circle_e(3), circle_e(0.6)));
}

TEST_CASE("circle embedding is injective on a dense grid") {
    std::vector<double> xs, images_angle;
    for (int i = 0; i < 10000; ++i) xs.push_back(-50.0 + 100.0 * i / 9999.0);
    for (double x : xs) {
        auto p = circle_e(x);
        CHECK(std::abs(std::hypot(p.x, p.y) - 1) <= 1e-9);
        CHECK(circle_e_inverse(p) == doctest::Approx(x).epsilon(1e-9));
        images_angle.push_back(std::atan2(p.y, p.x));
    }
    std::sort(images_angle.begin(), images_angle.end());
    CHECK(std::adjacent_find(images_angle.begin(), images_angle.end()) == images_angle.end());
}

TEST_CASE("circle inverse guards") {
    CHECK_THROWS_AS(circle_e_inverse(circle_alpha()), std::invalid_argument);
    CHECK_THROWS_AS(circle_e_inverse(Value::plane(0.5, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(circle_e_inverse(Value::real(1)), std::invalid_argument);
}

TEST_CASE("convergence to the point at infinity") {
    auto finite_then_alpha = fiber_map({{circle_e(1), finite(std::vector<std::uint64_t>{1})},
                                        {circle_e(2), finite(std::vector<std::uint64_t>{2})},
                                        {circle_alpha(), tail(3)}},
                                       naturals(), Codomain::Plane);
    CHECK(circle_converges_to_alpha(finite_then_alpha, ideal_fin()).converges == Tri::Yes);

    auto constant = fiber_map({{circle_e(0), naturals()}}, naturals(), Codomain::Plane);
    for (const auto& ideal : catalog_ideals())
        CHECK(circle_converges_to_alpha(constant, ideal).converges == Tri::No);

    auto two = fiber_map({{circle_e(1), arith(0, 2)}, {circle_e(2), arith(1, 2)}},
                         naturals(), Codomain::Plane);
    CHECK(circle_converges_to_alpha(two, ideal_i1()).converges == Tri::No);

    auto odd_alpha = fiber_map({{circle_alpha(), arith(1, 2)}, {circle_e(5), arith(0, 2)}},
                               naturals(), Codomain::Plane);
    CHECK(circle_converges_to_alpha(odd_alpha, ideal_i1()).converges == Tri::Yes);
    CHECK(circle_converges_to_alpha(odd_alpha, ideal_fin()).converges == Tri::No);
}

TEST_CASE("alpha convergence matches cofinite-open enumeration") {
    // over a sampled universe, neighbourhoods of alpha are the complements of
    // finite sets of other points; entering each of them ideal-eventually is
    // the same as every finite value-exclusion having its index set in the
    // ideal
    std::vector<Seq> seqs = {
        fiber_map({{circle_alpha(), arith(1, 2)}, {circle_e(5), arith(0, 2)}}, naturals(),
                  Codomain::Plane),
        fiber_map({{circle_e(1), arith(1, 2)}, {circle_e(2), arith(0, 2)}}, naturals(),
                  Codomain::Plane),
        fiber_map({{circle_alpha(), set_compl(counted_squares())},
                   {circle_e(3), counted_squares()}},
                  naturals(), Codomain::Plane),
    };
    for (const auto& ideal : {ideal_fin(), ideal_i1(), ideal_id()})
        for (const auto& s : seqs) {
            std::vector<std::size_t> others;
            for (std::size_t i = 0; i < s.fibers.size(); ++i)
                if (!same_value(s.fibers[i].first, circle_alpha())) others.push_back(i);
            bool all_excursions_small = true;
            for (std::uint64_t f = 1; f < (std::uint64_t{1} << others.size()); ++f) {
                SetPtr excluded = empty_set();
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (f >> k & 1) excluded = set_union(excluded, s.fibers[others[k]].second);
                if (contains(ideal, excluded).verdict != MembershipVerdict::V::In)
                    all_excursions_small = false;
            }
            auto got = circle_converges_to_alpha(s, ideal);
            if (got.converges != Tri::Unknown)
                CHECK((got.converges == Tri::Yes) == all_excursions_small);
        }
}

TEST_CASE("separation on the circle") {
    auto at_zero = circle_separation(circle_alpha(), circle_e(0));
    CHECK(!at_zero.separable);
    CHECK(at_zero.steps.size() == 4);

    CHECK(circle_separation(circle_e(0), circle_e(5)).separable);
    CHECK(!circle_separation(circle_alpha(), circle_e(100)).separable);
    CHECK_THROWS_AS(circle_separation(circle_e(2), circle_e(2)), std::invalid_argument);
}
