#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idealtop/seq.hpp"

using namespace idealtop;
using V = MembershipVerdict::V;
using CV = ConvergenceVerdict::V;

namespace {

Seq alternating() { // -1 on odds, +1 on evens
    return fiber_map({{Value::real(-1), arith(1, 2)}, {Value::real(1), arith(0, 2)}});
}

Seq zero_one() { // 0 on odds, 1 on evens
    return fiber_map({{Value::real(0), arith(1, 2)}, {Value::real(1), arith(0, 2)}});
}

Seq square_indicator() {
    return fiber_map({{Value::real(1), counted_squares()},
                      {Value::real(0), set_compl(counted_squares())}});
}

// direct tail inspection, independent of the counted-set machinery
bool oracle_converges(const Seq& s, double xi, const std::vector<double>& grid) {
    for (double eps : grid)
        for (std::uint64_t n = std::uint64_t{1} << 12; n <= (std::uint64_t{1} << 16); ++n)
            if (std::abs(s.eval(n).x - xi) >= eps) return false;
    return true;
}

std::uint64_t lis_dp(const std::vector<double>& v) { // quadratic reference
    std::vector<std::uint64_t> best(v.size(), 1);
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (v[j] < v[i]) best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

} // namespace

TEST_CASE("closed form evaluation and exceedance sets") {
    auto s = closed_form("1/n");
    CHECK(s.eval(4).x == doctest::Approx(0.25));
    CHECK(members(a_eps(s, Value::real(0), 0.1), 4096) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(members(near_eps(s, Value::real(0), 0.1), 20) ==
          std::vector<std::uint64_t>{11, 12, 13, 14, 15, 16, 17, 18, 19, 20});
    CHECK_THROWS_AS(a_eps(s, Value::real(0), 0.0), std::invalid_argument);
}

TEST_CASE("fiber maps partition the domain") {
    CHECK_THROWS_AS(fiber_map({{Value::real(0), arith(1, 2)}, {Value::real(1), tail(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fiber_map({{Value::real(0), arith(1, 2)}}), std::invalid_argument);
    auto s = zero_one();
    CHECK(s.eval(7).x == 0);
    CHECK(s.eval(8).x == 1);
    CHECK(members(a_eps(s, Value::real(0), 0.5), 8) == std::vector<std::uint64_t>{2, 4, 6, 8});
}

TEST_CASE("convergence verdicts against a direct tail oracle") {
    auto grid = default_eps_grid();
    struct Case { const char* body; double xi; };
    for (auto [body, xi] : {Case{"1/n", 0}, Case{"1/n^2", 0}, Case{"(n+1)/n", 1},
                            Case{"(n+1)/n", 0}, Case{"n", 0}}) {
        auto s = closed_form(body);
        auto v = i_converges(s, Value::real(xi), ideal_fin(), grid);
        INFO(body << " at " << xi);
        CHECK(v.verdict == (oracle_converges(s, xi, grid) ? CV::Converges : CV::Diverges));
    }
}

TEST_CASE("larger ideals admit more limits") {
    auto grid = default_eps_grid();
    auto s = closed_form("1/n");
    for (const auto& ideal : {ideal_fin(), ideal_i1(), ideal_id()})
        CHECK(i_converges(s, Value::real(0), ideal, grid).verdict == CV::Converges);

    // 0 on odds, 1 on evens: no limit over the finite-set ideal, but the even
    // fiber is negligible once even sets are small
    auto z = zero_one();
    CHECK(i_converges(z, Value::real(0), ideal_fin(), grid).verdict == CV::Diverges);
    CHECK(i_converges(z, Value::real(1), ideal_fin(), grid).verdict == CV::Diverges);
    CHECK(i_converges(z, Value::real(0), ideal_i1(), grid).verdict == CV::Converges);
    CHECK(i_converges(z, Value::real(1), ideal_i1(), grid).verdict == CV::Diverges);

    auto q = square_indicator();
    CHECK(i_converges(q, Value::real(0), ideal_fin(), grid).verdict == CV::Diverges);
    CHECK(i_converges(q, Value::real(0), ideal_id(), grid).verdict == CV::Converges);
}

TEST_CASE("eventually constant values") {
    auto z = zero_one();
    auto v = i_eventually_constant(z, ideal_i1());
    REQUIRE(v.has_value());
    CHECK(v->x == 0);
    CHECK(!i_eventually_constant(z, ideal_fin()).has_value());

    auto q = square_indicator();
    auto w = i_eventually_constant(q, ideal_id());
    REQUIRE(w.has_value());
    CHECK(w->x == 0);

    // on an I1-thin domain the trace ideal swallows everything and no value is
    // singled out
    auto thin = fiber_map({{Value::real(0), arith(0, 4)}, {Value::real(1), arith(2, 4)}},
                          arith(0, 2));
    CHECK(is_nonthin(thin, ideal_i1()).nonthin == Tri::No);
    CHECK_THROWS_AS(i_eventually_constant(thin, ideal_i1()), std::logic_error);
}

TEST_CASE("nonthin domains") {
    CHECK(is_nonthin(closed_form("1/n"), ideal_fin()).nonthin == Tri::Yes);
    CHECK(is_nonthin(closed_form("n", counted_squares()), ideal_id()).nonthin == Tri::No);
    CHECK(is_nonthin(zero_one(), ideal_i2()).nonthin == Tri::Yes);
}

TEST_CASE("eventually inside a region") {
    Region band{Region::Kind::Interval, {}, -0.1, 0.1};
    auto v = i_eventually_in(closed_form("1/n"), band, ideal_fin());
    CHECK(v.in == Tri::Yes);
    CHECK(members(v.outside, 100) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

    Region minus_one{Region::Kind::Points, {Value::real(-1)}, 0, 0};
    CHECK(i_eventually_in(alternating(), minus_one, ideal_fin()).in == Tri::No);
    CHECK(i_eventually_in(alternating(), minus_one, ideal_i1()).in == Tri::Yes);

    Region both{Region::Kind::Points, {Value::real(-1), Value::real(1)}, 0, 0};
    CHECK(i_eventually_in(alternating(), both, ideal_fin()).in == Tri::Yes);
}

TEST_CASE("cluster points") {
    auto grid = default_eps_grid();
    std::vector<Value> cand{Value::real(-1), Value::real(0), Value::real(1)};

    auto got = i_cluster_points(alternating(), ideal_fin(), cand, grid);
    REQUIRE(got.size() == 2);
    CHECK(got[0].x == -1);
    CHECK(got[1].x == 1);

    // same sequence through the evaluation-backed path
    auto closed = i_cluster_points(closed_form("(0-1)^n"), ideal_fin(), cand, grid);
    REQUIRE(closed.size() == 2);
    CHECK(closed[0].x == -1);
    CHECK(closed[1].x == 1);

    auto over_i1 = i_cluster_points(zero_one(), ideal_i1(), {Value::real(0), Value::real(1)}, grid);
    REQUIRE(over_i1.size() == 1);
    CHECK(over_i1[0].x == 0);
}

TEST_CASE("dyadic block sequence values") {
    auto s = prop26_sequence(4);
    std::vector<double> first;
    for (std::uint64_t n = 1; n <= 8; ++n) first.push_back(s.eval(n).x);
    CHECK(first == std::vector<double>{2, 1, 4, 3, 8, 7, 6, 5});
    CHECK(s.eval(16).x == 9);
    CHECK(i_converges(s, Value::real(0), ideal_fin(), default_eps_grid()).verdict == CV::Diverges);
}

TEST_CASE("no dense increasing subsequence in the dyadic block sequence") {
    auto a = prop26_counterexample(3);
    CHECK(a.per_block_decreasing);
    CHECK(a.window == 16);
    CHECK(a.pigeonhole_bound == 5);
    std::vector<double> v;
    auto s = prop26_sequence(3);
    for (std::uint64_t n = 1; n <= 16; ++n) v.push_back(s.eval(n).x);
    CHECK(a.lis_length == lis_dp(v));
    CHECK(a.lis_length <= a.pigeonhole_bound);
    CHECK(a.range_density_bound == Rational(static_cast<std::int64_t>(a.lis_length), 16));

    auto big = prop26_counterexample(15);
    CHECK(big.per_block_decreasing);
    CHECK(big.lis_length <= 17);
    CHECK(!(Rational(17, 65536) < big.range_density_bound));

    CHECK_THROWS_AS(prop26_counterexample(2), std::invalid_argument);
}

TEST_CASE("witness-guided increasing extraction") {
    auto witness = least_per_block(naturals(), Tri::Yes);

    auto powers = [](std::uint64_t i) {
        return i % 2 ? std::uint64_t{1} << ((i - 1) / 2) : std::uint64_t{1};
    };
    auto r = prop26_extract(powers, 40, ideal_i2(), witness);
    CHECK(r.realized_every_witness_value);
    CHECK(r.range_verdict.verdict == V::Out);
    REQUIRE(r.picks.size() == 20);
    for (std::size_t i = 1; i < r.picks.size(); ++i) {
        CHECK(r.picks[i - 1].first < r.picks[i].first);
        CHECK(r.picks[i - 1].second < r.picks[i].second);
    }

    // witness value 1 never attained by an even-valued sequence
    CHECK_THROWS_AS(prop26_extract([](std::uint64_t i) { return 2 * i; }, 40, ideal_i2(), witness),
                    std::invalid_argument);
    // witness inside the ideal carries no divergence information
    CHECK_THROWS_AS(prop26_extract([](std::uint64_t i) { return i; }, 40, ideal_i2(), arith(1, 2)),
                    std::invalid_argument);
}
