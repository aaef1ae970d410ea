#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealtop/labs.hpp"

using namespace idealtop;

namespace {

// topologies on n labeled points are exactly the preorders on them, so an
// independent count comes from enumerating reflexive transitive relations
std::uint64_t count_preorders(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) off.emplace_back(i, j);

    std::uint64_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
        bool rel[4][4] = {};
        for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
        for (std::size_t k = 0; k < off.size(); ++k)
            if (bits >> k & 1) rel[off[k].first][off[k].second] = true;
        bool transitive = true;
        for (std::size_t a = 0; a < n && transitive; ++a)
            for (std::size_t b = 0; b < n && transitive; ++b)
                for (std::size_t c = 0; c < n && transitive; ++c)
                    if (rel[a][b] && rel[b][c] && !rel[a][c]) transitive = false;
        if (transitive) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("space validation") {
    CHECK_NOTHROW(make_space({"a", "b"}, {0, 3}));
    CHECK_THROWS_AS(make_space({"a", "b"}, {0, 1, 2}), std::invalid_argument);    // full set missing
    CHECK_THROWS_AS(make_space({"a", "b", "c"}, {0, 1, 2, 7}), std::invalid_argument); // no union
    CHECK_THROWS_AS(make_space({"a", "a"}, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_space({"a"}, {0, 1, 2}), std::invalid_argument); // stray point
}

TEST_CASE("minimal neighbourhoods") {
    auto sp = sierpinski();
    CHECK(min_nbhd(sp, "a") == std::vector<std::string>{"a"});
    CHECK(min_nbhd(sp, "b") == std::vector<std::string>{"a", "b"});
    auto d3 = discrete_space({"a", "b", "c"});
    for (const auto& x : d3.points) CHECK(min_nbhd(d3, x) == std::vector<std::string>{x});
    CHECK_THROWS_AS(min_nbhd(sp, "z"), std::invalid_argument);
    for (std::size_t i = 0; i < sp.size(); ++i) CHECK(sp.is_open(sp.min_nbhd_mask(i)));
}

TEST_CASE("topology counts match the preorder count") {
    CHECK(enumerate_topologies(1).size() == 1);
    CHECK(enumerate_topologies(2).size() == 4);
    CHECK(enumerate_topologies(3).size() == 29);
    CHECK(enumerate_topologies(4).size() == 355);
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(enumerate_topologies(n).size() == count_preorders(n));
    CHECK_THROWS_AS(enumerate_topologies(5), std::invalid_argument);
}

TEST_CASE("sequence limits in finite spaces") {
    auto sp = sierpinski();
    auto const_a = make_finseq(sp, {{"a", naturals()}});
    CHECK(seq_limits(const_a, ideal_fin()) == 0b11); // a in every neighbourhood of b

    auto d2 = discrete_space({"a", "b"});
    auto split = make_finseq(d2, {{"a", arith(1, 2)}, {"b", arith(0, 2)}});
    CHECK(seq_limits(split, ideal_i1()) == 0b01);
    CHECK(seq_limits(split, ideal_fin()) == 0);

    auto thin = make_finseq(d2, {{"a", arith(0, 2)}}, arith(0, 2));
    CHECK_THROWS_AS(seq_limits(thin, ideal_i1()), std::invalid_argument);
    CHECK_THROWS_AS(make_finseq(d2, {{"a", naturals()}, {"b", arith(0, 2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_finseq(d2, {{"z", naturals()}}), std::invalid_argument);
}

TEST_CASE("closure, closed and open sets") {
    auto sp = sierpinski();
    CHECK(i_closure(sp, 0b01, ideal_fin()) == 0b11);
    CHECK(i_closure(sp, 0b10, ideal_fin()) == 0b10);
    CHECK(i_closure(sp, 0, ideal_fin()) == 0);
    CHECK(!is_i_closed(sp, 0b01, ideal_fin()));
    CHECK(is_i_closed(sp, 0b10, ideal_fin()));
    CHECK(is_i_open(sp, 0b01, ideal_fin()));
    auto d3 = discrete_space({"a", "b", "c"});
    for (Mask A = 0; A <= d3.full(); ++A) CHECK(is_i_closed(d3, A, ideal_fin()));
}

TEST_CASE("unique limits exactly on T1 spaces") {
    CHECK(is_i_us(discrete_space({"a", "b"}), ideal_fin()));
    CHECK(!is_i_us(sierpinski(), ideal_fin()));
    CHECK(!is_i_us(indiscrete_space({"a", "b"}), ideal_fin()));
}

TEST_CASE("residue kernel agrees with the symbolic engine") {
    for (const auto& S : {sierpinski(), discrete_space({"a", "b", "c"})})
        for (const auto& ideal : catalog_ideals())
            for (const auto& s : res_corpus(S.size()))
                CHECK(res_limits(S, s, ideal) == seq_limits(to_finseq(S, s), ideal));
}

TEST_CASE("continuity characterizations") {
    auto sp = sierpinski();
    auto d2 = discrete_space({"a", "b"});
    CHECK(is_i_continuous(make_finmap(sp, sp, {{"a", "a"}, {"b", "b"}}), ideal_fin()));
    CHECK(is_i_continuous(make_finmap(sp, d2, {{"a", "a"}, {"b", "a"}}), ideal_fin()));
    CHECK(!is_i_continuous(make_finmap(sp, d2, {{"a", "a"}, {"b", "b"}}), ideal_fin()));
    CHECK_THROWS_AS(make_finmap(sp, d2, {{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("compact preimage reports") {
    auto sp = sierpinski();
    auto d3 = discrete_space({"a", "b", "c"});
    auto pt = make_space({"p"}, {0, 1});

    auto id_rep = check_thm212_bc(make_finmap(sp, sp, {{"a", "a"}, {"b", "b"}}), ideal_fin());
    CHECK(id_rep.b_pass);
    CHECK(id_rep.c_pass);

    auto const_rep = check_thm212_bc(
        make_finmap(d3, pt, {{"a", "p"}, {"b", "p"}, {"c", "p"}}), ideal_fin());
    CHECK(const_rep.b_pass);
    CHECK(const_rep.c_pass);

    auto incl = check_thm212_bc(make_finmap(pt, sp, {{"p", "a"}}), ideal_fin());
    CHECK(incl.b_pass);
    CHECK(incl.c_pass);

    CHECK_THROWS_AS(check_thm212_bc(make_finmap(sp, d3, {{"a", "a"}, {"b", "b"}}), ideal_fin()),
                    std::invalid_argument);
}

TEST_CASE("every finite space is compact and sequential for the catalog") {
    for (const auto& S : enumerate_topologies(3))
        for (const auto& ideal : catalog_ideals()) {
            CHECK(is_i_compact(S, ideal).compact);
            CHECK(is_i_sequential(S, ideal));
        }
}

TEST_CASE("exhaustive labs at four points") {
    auto collapse = lab_closure_collapse(4, true, false);
    CHECK(collapse.failures == 0);
    CHECK(collapse.instances == (1 * 2 + 4 * 4 + 29 * 8 + 355 * 16) * 6);

    auto us = lab_us_t1(4, true, false);
    CHECK(us.failures == 0);
    CHECK(us.instances == 389 * 6);

    CHECK(lab_sequential(4, true).failures == 0);
    CHECK(lab_compact(4, true).failures == 0);
}

TEST_CASE("reference engine labs at three points") {
    auto collapse = lab_closure_collapse(3, false, true);
    CHECK(collapse.failures == 0);
    auto us = lab_us_t1(3, false, true);
    CHECK(us.failures == 0);
    auto fast = lab_closure_collapse(3, true, false);
    CHECK(fast.instances == collapse.instances);
}

TEST_CASE("continuity agreement lab") {
    auto r = lab_continuity(2, true);
    CHECK(r.failures == 0);
    // 5 topologies on <= 2 points; maps counted per (source, target, ideal)
    std::uint64_t maps = 0;
    std::vector<std::size_t> sizes = {1, 2, 2, 2, 2};
    for (auto s : sizes)
        for (auto t : sizes) maps += s == 1 ? t : t * t;
    CHECK(r.instances == maps * 2);
}
