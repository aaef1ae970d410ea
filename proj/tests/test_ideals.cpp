#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealtop/ideals.hpp"

using namespace idealtop;
using V = MembershipVerdict::V;

namespace {

std::vector<IdealPtr> catalog() {
    return {ideal_fin(), ideal_i1(), ideal_i2(), ideal_i3(), ideal_id(), ideal_local_blocks()};
}

std::vector<SetPtr> corpus() {
    return {
        finite({1, 2, 3}),
        arith(0, 2),
        arith(1, 2),
        arith(3, 4),
        arith(1, 3),
        block(1),
        block(2),
        tail(1),
        tail(50),
        counted_squares(),
        set_union(arith(1, 4), block(3)),
        set_inter(arith(0, 2), tail(10)),
        set_diff(tail(1), arith(0, 2)),
    };
}

} // namespace

TEST_CASE("catalog membership spot checks") {
    CHECK(contains(ideal_i1(), arith(0, 2)).verdict == V::In);
    CHECK(contains(ideal_i1(), arith(1, 2)).verdict == V::Out);
    CHECK(contains(ideal_id(), counted_squares()).verdict == V::In);
    CHECK(contains(ideal_i3(), block(1)).verdict == V::Out);

    CHECK(contains(ideal_fin(), finite({5, 9})).verdict == V::In);
    CHECK(contains(ideal_fin(), arith(2, 7)).verdict == V::Out);
    CHECK(contains(ideal_i2(), block(4)).verdict == V::In);   // meets one block
    CHECK(contains(ideal_i2(), arith(0, 2)).verdict == V::Out); // multiples of 2 meet all high blocks
    CHECK(contains(ideal_i2(), arith(1, 2)).verdict == V::In);  // odds = Δ1
    CHECK(contains(ideal_i2(), tail(3)).verdict == V::Out);
    CHECK(contains(ideal_i3(), finite({4, 5})).verdict == V::In);
    CHECK(contains(ideal_local_blocks(), block(2)).verdict == V::In);
    CHECK(contains(ideal_local_blocks(), tail(1)).verdict == V::Out);
    CHECK(contains(ideal_local_blocks(), counted_squares()).verdict == V::Out);
    CHECK(contains(ideal_id(), arith(0, 16)).verdict == V::Out);
}

TEST_CASE("admissibility") {
    for (const auto& I : catalog()) {
        auto rep = is_admissible(I);
        CHECK_MESSAGE(rep.admissible, I->name(), ": ", rep.report);
    }
    auto r = restrict_ideal(ideal_fin(), arith(0, 2));
    CHECK_FALSE(is_admissible(r.ideal).admissible); // odd singletons excluded
}

TEST_CASE("restriction (trace ideal)") {
    auto r1 = restrict_ideal(ideal_fin(), arith(0, 2)).ideal;
    CHECK(contains(r1, finite({2, 4})).verdict == V::In);
    CHECK(contains(r1, finite({2, 3})).verdict == V::Out); // 3 outside the domain

    auto r2 = restrict_ideal(ideal_id(), arith(0, 2)).ideal;
    CHECK(contains(r2, arith(0, 4)).verdict == V::Out); // density 1/4 > 0

    auto r3 = restrict_ideal(ideal_i1(), arith(1, 2)).ideal;
    CHECK(contains(r3, finite({1, 3})).verdict == V::In);

    auto warn = restrict_ideal(ideal_fin(), finite({1, 2}));
    CHECK(warn.warning.has_value());
}

TEST_CASE("downward closure on windows") {
    for (const auto& I : catalog()) {
        for (const auto& A : corpus()) {
            if (contains(I, A).verdict != V::In) continue;
            for (const auto& e : corpus()) {
                auto v = contains(I, set_inter(A, e));
                CHECK_MESSAGE(v.verdict != V::Out, I->name(), " not downward closed on ",
                              A->str(), " ∩ ", e->str());
            }
        }
    }
}

TEST_CASE("finite-union closure on windows") {
    for (const auto& I : catalog()) {
        for (const auto& A : corpus()) {
            if (contains(I, A).verdict != V::In) continue;
            for (const auto& B : corpus()) {
                if (contains(I, B).verdict != V::In) continue;
                auto v = contains(I, set_union(A, B));
                CHECK_MESSAGE(v.verdict != V::Out, I->name(), " union rule broken on ",
                              A->str(), " ∪ ", B->str());
            }
        }
    }
}

TEST_CASE("nontriviality") {
    for (const auto& I : catalog()) CHECK(contains(I, tail(1)).verdict == V::Out);
}

TEST_CASE("i2 members meet boundedly many blocks on windows") {
    // every corpus member of I2 meets a bounded number of blocks on any window
    const std::uint64_t N = 4096;
    for (const auto& A : corpus()) {
        if (contains(ideal_i2(), A).verdict != V::In) continue;
        std::set<std::uint64_t> blocks_small, blocks_large;
        for (auto n : members(A, 256)) blocks_small.insert(val2(n));
        for (auto n : members(A, N)) blocks_large.insert(val2(n));
        // block count stabilizes: enlarging the window reveals no new blocks
        CHECK(blocks_small.size() == blocks_large.size());
    }
}

TEST_CASE("class-union fast path agrees with generic contains") {
    for (const auto& I : catalog()) {
        for (std::uint64_t m = 1; m <= 4; ++m) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                std::vector<std::uint64_t> residues;
                SetPtr u = empty_set();
                for (std::uint64_t r = 0; r < m; ++r) {
                    if (mask & (std::uint64_t{1} << r)) {
                        residues.push_back(r);
                        u = set_union(u, arith(r, m));
                    }
                }
                Tri fast = class_union_in_ideal(I, m, residues);
                auto ref = contains(I, u);
                REQUIRE(fast != Tri::Unknown);
                REQUIRE(ref.verdict != V::Unknown);
                CHECK_MESSAGE((fast == Tri::Yes) == (ref.verdict == V::In),
                              I->name(), " m=", m, " mask=", mask, " ref=", ref.certificate);
            }
        }
    }
}
