#include <doctest.h>

#include <cmath>
#include <random>

#include "rearr/error.hpp"
#include "rearr/grid.hpp"

using namespace rearr;

namespace {

Rectangle unit_interval() { return Rectangle({0.0}, {1.0}); }

} // namespace

TEST_CASE("cell bounds") {
    const Rectangle c1 = cell(unit_interval(), MultiIndex{4}, MultiIndex{2});
    CHECK(c1.a[0] == 0.25);
    CHECK(c1.b[0] == 0.5);

    const Rectangle c2 =
        cell(Rectangle({0.0, 0.0}, {1.0, 2.0}), MultiIndex{2, 2}, MultiIndex{1, 2});
    CHECK(c2.a == Point{0.0, 1.0});
    CHECK(c2.b == Point{0.5, 2.0});

    const Rectangle c3 = cell(Rectangle({-1.0}, {1.0}), MultiIndex{1}, MultiIndex{1});
    CHECK(c3.a[0] == -1.0);
    CHECK(c3.b[0] == 1.0);

    CHECK_THROWS_AS(cell(unit_interval(), MultiIndex{4}, MultiIndex{5}), error);
    CHECK_THROWS_AS(cell(unit_interval(), MultiIndex{4}, MultiIndex{0}), error);
}

TEST_CASE("generate places points per spec") {
    const Grid ref = generate({unit_interval(), MultiIndex{2}, Placement::reference, {}});
    CHECK(ref.size() == 2);
    CHECK(ref.point(0)[0] == 0.5);
    CHECK(ref.point(1)[0] == 1.0);

    const Grid mid = generate({unit_interval(), MultiIndex{2}, Placement::midpoint, {}});
    CHECK(mid.point(0)[0] == 0.25);
    CHECK(mid.point(1)[0] == 0.75);

    const Grid corner = generate({unit_interval(), MultiIndex{2}, Placement::corner, {}});
    CHECK(corner.point(0)[0] == 0.0);
    CHECK(corner.point(1)[0] == 0.5);

    const Grid square = generate(
        {Rectangle({0.0, 0.0}, {1.0, 1.0}), MultiIndex{2, 2}, Placement::reference, {}});
    REQUIRE(square.size() == 4);
    CHECK(square.point(0)[0] == 0.5);
    CHECK(square.point(0)[1] == 0.5);
    CHECK(square.point(1)[0] == 0.5);
    CHECK(square.point(1)[1] == 1.0);
    CHECK(square.point(2)[0] == 1.0);
    CHECK(square.point(2)[1] == 0.5);
    CHECK(square.point(3)[0] == 1.0);
    CHECK(square.point(3)[1] == 1.0);
}

TEST_CASE("jittered placement requires a seed") {
    try {
        generate({unit_interval(), MultiIndex{4}, Placement::jittered, {}});
        FAIL("expected config error");
    } catch (const error& e) {
        CHECK(e.code() == errc::config);
    }
}

TEST_CASE("au_deviation") {
    SUBCASE("zero for reference grids") {
        for (auto n : {MultiIndex{7}, MultiIndex{13}}) {
            const Grid g = generate({Rectangle({-2.0}, {3.0}), n, Placement::reference, {}});
            CHECK(au_deviation(g) == 0.0);
        }
        const Grid g2 = generate(
            {Rectangle({0.0, -1.0}, {2.0, 1.0}), MultiIndex{5, 9}, Placement::reference, {}});
        CHECK(au_deviation(g2) == 0.0);
    }

    SUBCASE("midpoint on [0,1] with n=4 deviates by half a cell") {
        const Grid g = generate({unit_interval(), MultiIndex{4}, Placement::midpoint, {}});
        // direct enumeration: |(i-1/2)/4 - i/4| = 1/8 for every i
        double expected = 0.0;
        for (int i = 1; i <= 4; ++i)
            expected = std::max(expected, std::abs((i - 0.5) / 4.0 - i / 4.0));
        CHECK(expected == 0.125);
        CHECK(au_deviation(g) == 0.125);
    }

    SUBCASE("jittered deviation stays below midpoint offset plus jitter amplitude") {
        const Grid g = generate({unit_interval(), MultiIndex{4}, Placement::jittered, 123u});
        const double bound = 0.125 + kJitterFraction * 0.125;
        double enumerated = 0.0;
        for (std::int64_t k = 0; k < g.size(); ++k) {
            const double ref = (static_cast<double>(k) + 1.0) * 0.25;
            enumerated = std::max(enumerated, std::abs(g.point(k)[0] - ref));
        }
        CHECK(au_deviation(g) == doctest::Approx(enumerated).epsilon(1e-15));
        CHECK(au_deviation(g) >= 0.0);
        CHECK(au_deviation(g) <= bound);
    }
}

TEST_CASE("every point lies in its own closed cell, any placement") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dim_dist(1, 3);
    std::uniform_int_distribution<std::int64_t> n_dist(1, 6);
    std::uniform_real_distribution<double> a_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> w_dist(0.1, 4.0);
    const Placement placements[] = {Placement::reference, Placement::midpoint,
                                    Placement::jittered, Placement::corner};

    for (int iter = 0; iter < 1000; ++iter) {
        const int d = dim_dist(rng);
        Point a, b;
        std::vector<std::int64_t> n;
        for (int j = 0; j < d; ++j) {
            const double lo = a_dist(rng);
            a.push_back(lo);
            b.push_back(lo + w_dist(rng));
            n.push_back(n_dist(rng));
        }
        const GridSpec spec{Rectangle(a, b), MultiIndex(n),
                            placements[static_cast<std::size_t>(iter % 4)], rng()};
        const Grid grid = generate(spec);

        double max_cell_width = 0.0;
        for (int j = 0; j < d; ++j)
            max_cell_width =
                std::max(max_cell_width, spec.rect.width(j) / static_cast<double>(spec.n[j]));

        std::int64_t k = 0;
        for (const MultiIndex& i : grid.index_range()) {
            const Rectangle c = cell(spec.rect, spec.n, i);
            CHECK(c.contains(grid.point(k++)));
        }
        CHECK(au_deviation(grid) <= max_cell_width + 1e-15);
    }
}

TEST_CASE("generation is deterministic for a fixed spec") {
    const GridSpec spec{Rectangle({0.0, 0.0}, {1.0, 3.0}), MultiIndex{9, 5}, Placement::jittered,
                        987654321u};
    const Grid g1 = generate(spec);
    const Grid g2 = generate(spec);
    REQUIRE(g1.size() == g2.size());
    for (std::int64_t k = 0; k < g1.size(); ++k)
        for (int j = 0; j < g1.dim(); ++j)
            CHECK(g1.point(k)[static_cast<std::size_t>(j)] ==
                  g2.point(k)[static_cast<std::size_t>(j)]);

    const Grid g3 = generate({spec.rect, spec.n, Placement::jittered, 987654322u});
    bool any_difference = false;
    for (std::int64_t k = 0; k < g1.size() && !any_difference; ++k)
        for (int j = 0; j < g1.dim(); ++j)
            if (g1.point(k)[static_cast<std::size_t>(j)] != g3.point(k)[static_cast<std::size_t>(j)])
                any_difference = true;
    CHECK(any_difference); // different seed, different grid
}

TEST_CASE("au_deviation halves when n doubles for midpoint and corner") {
    for (auto placement : {Placement::midpoint, Placement::corner}) {
        const Rectangle rect({0.0, 0.0}, {1.0, 1.0});
        double prev = au_deviation(generate({rect, MultiIndex{4, 4}, placement, {}}));
        for (std::int64_t n = 8; n <= 64; n *= 2) {
            const double dev = au_deviation(generate({rect, MultiIndex{n, n}, placement, {}}));
            CHECK(dev == prev / 2.0);
            prev = dev;
        }
    }
}

TEST_CASE("grid spec digest carries the reproducibility inputs") {
    const GridSpec spec{unit_interval(), MultiIndex{8}, Placement::jittered, 5u};
    const std::string digest = spec.digest();
    CHECK(digest.find("n=8") != std::string::npos);
    CHECK(digest.find("jittered") != std::string::npos);
    CHECK(digest.find("seed=5") != std::string::npos);
}
