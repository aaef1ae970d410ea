#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealtop/setexpr.hpp"

#include <numeric>

using namespace idealtop;

namespace {

// independent oracle: 2-adic valuation by repeated division
std::vector<std::uint64_t> brute_block(std::uint64_t i, std::uint64_t N) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= N; ++n) {
        std::uint64_t v = 0, x = n;
        while (x % 2 == 0) { x /= 2; ++v; }
        if (v == i - 1) out.push_back(n);
    }
    return out;
}

std::vector<SetPtr> corpus() {
    return {
        empty_set(),
        finite({1, 2, 3}),
        arith(0, 2),
        arith(1, 2),
        arith(2, 5),
        block(1),
        block(2),
        block(3),
        tail(1),
        tail(17),
        counted_squares(),
        set_union(arith(1, 4), block(2)),
        set_inter(arith(0, 2), tail(10)),
        set_diff(tail(1), arith(0, 2)),
        set_compl(arith(0, 3)),
        set_union(counted_squares(), arith(0, 2)),
        set_diff(block(1), finite({1, 3})),
    };
}

} // namespace

TEST_CASE("members basics") {
    CHECK(members(arith(0, 2), 6) == std::vector<std::uint64_t>{2, 4, 6});
    CHECK(members(block(1), 10) == std::vector<std::uint64_t>{1, 3, 5, 7, 9});
    CHECK(members(set_diff(tail(1), arith(0, 2)), 5) == std::vector<std::uint64_t>{1, 3, 5});
    CHECK(members(block(1), 10) == brute_block(1, 10));
    CHECK(members(block(4), 200) == brute_block(4, 200));
}

TEST_CASE("count_prefix matches members") {
    CHECK(count_prefix(arith(0, 2), 100) == 50);
    CHECK(members(block(2), 16) == std::vector<std::uint64_t>{2, 6, 10, 14});
    CHECK(count_prefix(block(2), 16) == 4);
    CHECK(count_prefix(counted_squares(), 100) == 10);

    for (const auto& e : corpus())
        for (std::uint64_t N : {1u, 7u, 64u, 4096u})
            CHECK(count_prefix(e, N) == members(e, N).size());
}

TEST_CASE("block partition of [1..N]") {
    const std::uint64_t N = 4096;
    std::vector<bool> seen(N + 1, false);
    for (std::uint64_t i = 1; i <= 13; ++i) {
        for (auto n : members(block(i), N)) {
            CHECK(!seen[n]);
            seen[n] = true;
        }
    }
    for (std::uint64_t n = 1; n <= N; ++n) CHECK(seen[n]);
}

TEST_CASE("classify_finiteness") {
    CHECK(classify_finiteness(finite({1, 2, 3})) == Finiteness::Finite);
    CHECK(classify_finiteness(arith(1, 2)) == Finiteness::Infinite);
    CHECK(classify_finiteness(block(5)) == Finiteness::Infinite);
    CHECK(classify_finiteness(set_inter(counted_squares(), arith(0, 2))) == Finiteness::Unknown);
    CHECK(classify_finiteness(set_diff(arith(0, 2), tail(100))) == Finiteness::Finite);
    CHECK(classify_finiteness(set_inter(arith(0, 2), arith(1, 2))) == Finiteness::Finite);
    CHECK(classify_finiteness(set_inter(arith(2, 4), block(2))) == Finiteness::Infinite);
}

TEST_CASE("density rule table") {
    auto d = density(arith(0, 2), 16);
    REQUIRE(d.kind == DensityResult::Kind::Exact);
    CHECK(d.exact == Rational(1, 2));

    d = density(block(3), 16);
    REQUIRE(d.kind == DensityResult::Kind::Exact);
    CHECK(d.exact == Rational(1, 8));

    d = density(counted_squares(), 16);
    REQUIRE(d.kind == DensityResult::Kind::Exact);
    CHECK(d.exact == Rational(0));

    d = density(tail(9), 16);
    REQUIRE(d.kind == DensityResult::Kind::Exact);
    CHECK(d.exact == Rational(1));

    d = density(set_compl(arith(0, 4)), 16);
    REQUIRE(d.kind == DensityResult::Kind::Exact);
    CHECK(d.exact == Rational(3, 4));

    d = density(set_union(counted_squares(), arith(0, 2)), 64);
    REQUIRE(d.kind == DensityResult::Kind::Exact);
    CHECK(d.exact == Rational(1, 2));
}

TEST_CASE("exact density agrees with prefix ratio at 2^16") {
    const std::uint64_t N = 1 << 16;
    for (const auto& e : corpus()) {
        auto d = density(e, 4096);
        if (d.kind != DensityResult::Kind::Exact) continue;
        double ratio = static_cast<double>(count_prefix(e, N)) / static_cast<double>(N);
        CHECK(std::abs(ratio - d.exact.to_double()) <= 1.0 / 256.0);
    }
}

TEST_CASE("boolean laws on windows") {
    const std::uint64_t N = 512;
    for (const auto& e : corpus()) {
        CHECK(members(set_compl(set_compl(e)), N) == members(e, N));
    }
    for (const auto& a : corpus()) {
        for (const auto& b : corpus()) {
            auto lhs = members(set_compl(set_union(a, b)), N);
            auto rhs = members(set_inter(set_compl(a), set_compl(b)), N);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("malformed counted set is a hard error") {
    auto def = std::make_shared<CountedDef>();
    def->name = "broken";
    def->enumerate = [](std::uint64_t) { return std::vector<std::uint64_t>{3, 2, 5}; };
    def->count = [](std::uint64_t) { return std::uint64_t{3}; };
    CHECK_THROWS_AS(members(counted(def), 10), std::runtime_error);

    auto def2 = std::make_shared<CountedDef>();
    def2->name = "miscount";
    def2->enumerate = [](std::uint64_t) { return std::vector<std::uint64_t>{2, 4}; };
    def2->count = [](std::uint64_t) { return std::uint64_t{7}; };
    CHECK_THROWS_AS(members(counted(def2), 10), std::runtime_error);
}

TEST_CASE("derived counted sets") {
    auto eo = every_other(arith(0, 2)); // 4, 8, 12, ...
    CHECK(members(eo, 13) == std::vector<std::uint64_t>{4, 8, 12});
    auto d = density(eo, 64);
    REQUIRE(d.kind == DensityResult::Kind::Exact);
    CHECK(d.exact == Rational(1, 4));

    auto th = thin_at_squares(tail(1)); // squares again
    CHECK(members(th, 20) == std::vector<std::uint64_t>{1, 4, 9, 16});

    auto lb = least_per_block(naturals(), Tri::Yes); // 1, 2, 4, 8, ...
    CHECK(members(lb, 20) == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
}
