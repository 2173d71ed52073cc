#include <doctest.h>

#include <random>

#include "rearr/error.hpp"
#include "rearr/multi_index.hpp"

using namespace rearr;

TEST_CASE("product_count") {
    CHECK(product_count(MultiIndex{3, 4}) == 12);
    CHECK(product_count(MultiIndex{5}) == 5);
    CHECK(product_count(MultiIndex{2, 2, 2}) == 8);

    CHECK_THROWS_AS(product_count(MultiIndex{3, 0}), error);
    CHECK_THROWS_AS(product_count(MultiIndex{-1}), error);
    try {
        product_count(MultiIndex{0});
        FAIL("expected invalid-index error");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_index);
    }
}

TEST_CASE("componentwise order and arithmetic") {
    CHECK(componentwise_le(MultiIndex{1, 2}, MultiIndex{2, 2}));
    CHECK_FALSE(componentwise_le(MultiIndex{3, 1}, MultiIndex{2, 2}));
    CHECK(MultiIndex{1, 2} + MultiIndex{3, 4} == MultiIndex{4, 6});
    CHECK(MultiIndex{3, 4} - MultiIndex{1, 1} == MultiIndex{2, 3});
    CHECK(MultiIndex{7, 3}.to_string() == "7x3");
    CHECK_THROWS_AS((MultiIndex{1, 2} + MultiIndex{1}), error);
}

TEST_CASE("lex_iterate matches the d=2 ordering") {
    const std::vector<MultiIndex> seq = lex_iterate(IndexRange(MultiIndex{1, 1}, MultiIndex{2, 2}));
    const std::vector<MultiIndex> expected = {
        MultiIndex{1, 1}, MultiIndex{1, 2}, MultiIndex{2, 1}, MultiIndex{2, 2}};
    CHECK(seq == expected);
}

TEST_CASE("lex_iterate degenerate ranges") {
    CHECK(lex_iterate(IndexRange(MultiIndex{7, 3}, MultiIndex{7, 3})) ==
          std::vector<MultiIndex>{MultiIndex{7, 3}});
    CHECK(lex_iterate(IndexRange(MultiIndex{1}, MultiIndex{3})) ==
          std::vector<MultiIndex>{MultiIndex{1}, MultiIndex{2}, MultiIndex{3}});
    CHECK_THROWS_AS(IndexRange(MultiIndex{2}, MultiIndex{1}), error);
}

TEST_CASE("index ranges enumerate each box index exactly once, in order") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim_dist(1, 4);
    std::uniform_int_distribution<std::int64_t> low_dist(-3, 3);
    std::uniform_int_distribution<std::int64_t> extent_dist(1, 5);

    for (int iter = 0; iter < 200; ++iter) {
        const int d = dim_dist(rng);
        std::vector<std::int64_t> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            lo[static_cast<std::size_t>(j)] = low_dist(rng);
            hi[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)] + extent_dist(rng) - 1;
        }
        const IndexRange range{MultiIndex(lo), MultiIndex(hi)};
        const std::vector<MultiIndex> seq = lex_iterate(range);

        REQUIRE(static_cast<std::int64_t>(seq.size()) == range.count());
        CHECK(range.count() == product_count(range.high() - range.low() + MultiIndex::ones(d)));
        for (std::size_t k = 1; k < seq.size(); ++k) CHECK(lex_less(seq[k - 1], seq[k]));
        for (std::size_t k = 0; k < seq.size(); ++k) {
            CHECK(range.contains(seq[k]));
            CHECK(range.at(static_cast<std::int64_t>(k)) == seq[k]);
            CHECK(range.rank(seq[k]) == static_cast<std::int64_t>(k));
        }
    }
}
