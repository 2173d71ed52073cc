#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rearr/domain.hpp"
#include "rearr/error.hpp"

using namespace rearr;

namespace {

RegularSet unit_disk() { return make_disk({0.0, 0.0}, 1.0); }

} // namespace

TEST_CASE("contains uses the closed-set convention for built-ins") {
    const RegularSet disk = unit_disk();
    CHECK(disk.contains(Point{0.0, 0.0}));
    CHECK_FALSE(disk.contains(Point{1.0, 1.0}));
    CHECK(disk.contains(Point{1.0, 0.0})); // boundary point
    CHECK(disk.exact_measure().has_value());
    CHECK(*disk.exact_measure() == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK(disk.declared_connected());
}

TEST_CASE("built-in measures") {
    CHECK(*make_rectangle_set(Rectangle({0.0, 0.0}, {2.0, 3.0})).exact_measure() == 6.0);
    CHECK(*make_disk({0.0}, 2.0).exact_measure() == doctest::Approx(4.0));     // 1-ball: [-2,2]
    CHECK(*make_disk({0.0, 0.0, 0.0}, 1.0).exact_measure() ==
          doctest::Approx(4.0 / 3.0 * std::numbers::pi));
    CHECK(*make_annulus({0.0, 0.0}, 0.5, 1.0).exact_measure() ==
          doctest::Approx(std::numbers::pi * 0.75));
    CHECK(*make_l_shape(Rectangle({0.0, 0.0}, {1.0, 1.0})).exact_measure() == 0.75);
    CHECK_THROWS_AS(make_annulus({0.0, 0.0}, 1.0, 0.5), error);
    CHECK_THROWS_AS(make_disk({0.0}, -1.0), error);
}

TEST_CASE("l-shape membership") {
    const RegularSet l = make_l_shape(Rectangle({0.0, 0.0}, {1.0, 1.0}));
    CHECK(l.contains(Point{0.25, 0.25}));
    CHECK(l.contains(Point{0.25, 0.75}));
    CHECK(l.contains(Point{0.75, 0.25}));
    CHECK_FALSE(l.contains(Point{0.75, 0.75})); // removed corner block
    CHECK(l.contains(Point{0.5, 0.5}));         // notch is open, its corner stays
    CHECK_FALSE(l.contains(Point{1.5, 0.5}));
}

TEST_CASE("set combinators") {
    const RegularSet left = make_rectangle_set(Rectangle({0.0, 0.0}, {1.0, 1.0}));
    const RegularSet right = make_rectangle_set(Rectangle({0.5, 0.0}, {2.0, 1.0}));

    const RegularSet u = set_union(left, right);
    CHECK(u.contains(Point{0.1, 0.5}));
    CHECK(u.contains(Point{1.9, 0.5}));
    CHECK_FALSE(u.contains(Point{2.5, 0.5}));
    CHECK(u.bounding().a == Point{0.0, 0.0});
    CHECK(u.bounding().b == Point{2.0, 1.0});

    const RegularSet inter = set_intersection(left, right);
    CHECK(inter.contains(Point{0.7, 0.5}));
    CHECK_FALSE(inter.contains(Point{0.1, 0.5}));
    CHECK_FALSE(inter.contains(Point{1.5, 0.5}));

    const RegularSet diff = set_difference(left, right);
    CHECK(diff.contains(Point{0.1, 0.5}));
    CHECK_FALSE(diff.contains(Point{0.7, 0.5}));
    CHECK_FALSE(diff.exact_measure().has_value());
}

TEST_CASE("expression-defined domains: inside iff value > 0") {
    const RegularSet disk = make_expression_set(ScalarField::expression("1 - x1^2 - x2^2", 2),
                                                Rectangle({-1.0, -1.0}, {1.0, 1.0}), "expr-disk");
    CHECK(disk.contains(Point{0.0, 0.0}));
    CHECK_FALSE(disk.contains(Point{1.0, 0.0})); // boundary excluded by the > 0 convention
    CHECK_FALSE(disk.contains(Point{0.9, 0.9}));
}

TEST_CASE("indices_in") {
    SUBCASE("domain equal to the rectangle keeps every index") {
        const Grid g = generate({Rectangle({0.0}, {1.0}), MultiIndex{4}, Placement::reference, {}});
        const RegularSet all = make_rectangle_set(Rectangle({0.0}, {1.0}));
        const std::vector<MultiIndex> inside = indices_in(g, all);
        CHECK(inside == std::vector<MultiIndex>{MultiIndex{1}, MultiIndex{2}, MultiIndex{3},
                                                MultiIndex{4}});
    }

    SUBCASE("half interval keeps the first half of the reference points") {
        const Grid g = generate({Rectangle({0.0}, {1.0}), MultiIndex{4}, Placement::reference, {}});
        const RegularSet half = make_rectangle_set(Rectangle({0.0}, {0.5}));
        const std::vector<MultiIndex> inside = indices_in(g, half);
        CHECK(inside == std::vector<MultiIndex>{MultiIndex{1}, MultiIndex{2}});
    }

    SUBCASE("dimension mismatch is a config error") {
        const Grid g = generate({Rectangle({0.0}, {1.0}), MultiIndex{4}, Placement::reference, {}});
        try {
            indices_in(g, unit_disk());
            FAIL("expected config error");
        } catch (const error& e) {
            CHECK(e.code() == errc::config);
        }
    }

    SUBCASE("inside samples outside the grid rectangle are rejected") {
        // hand-built grid with a stray point; the domain reaches beyond [a,b]
        const GridSpec spec{Rectangle({0.0}, {1.0}), MultiIndex{2}, Placement::reference, {}};
        const Grid stray(spec, {0.5, 2.0});
        const RegularSet wide = make_rectangle_set(Rectangle({0.0}, {3.0}));
        CHECK_THROWS_AS(indices_in(stray, wide), error);
    }

    SUBCASE("disk fraction approaches pi/4 on a 512x512 midpoint grid") {
        const GridSpec spec{Rectangle({-1.0, -1.0}, {1.0, 1.0}), MultiIndex{512, 512},
                            Placement::midpoint, {}};
        const Grid g = generate(spec);
        const std::vector<MultiIndex> inside = indices_in(g, unit_disk());

        // independent enumeration of the same count
        std::int64_t direct = 0;
        for (std::int64_t i = 1; i <= 512; ++i)
            for (std::int64_t j = 1; j <= 512; ++j) {
                const double x = -1.0 + (static_cast<double>(i) - 0.5) * (2.0 / 512.0);
                const double y = -1.0 + (static_cast<double>(j) - 0.5) * (2.0 / 512.0);
                if (x * x + y * y <= 1.0) ++direct;
            }
        CHECK(static_cast<std::int64_t>(inside.size()) == direct);

        const double fraction = static_cast<double>(inside.size()) / (512.0 * 512.0);
        CHECK(std::abs(fraction - std::numbers::pi / 4.0) <= 0.01);
    }
}

TEST_CASE("indices_in depends only on membership, not on placement") {
    const Rectangle rect({0.0}, {1.0});
    const RegularSet half = make_rectangle_set(Rectangle({0.0}, {0.5}));
    const Grid ref = generate({rect, MultiIndex{10}, Placement::reference, {}});
    const Grid mid = generate({rect, MultiIndex{10}, Placement::midpoint, {}});
    // both placements keep the same per-cell membership for this domain
    CHECK(indices_in(ref, half) == indices_in(mid, half));
}

TEST_CASE("estimate_measure") {
    SUBCASE("axis-aligned rectangle is counted exactly at aligned resolution") {
        const RegularSet quarter = make_rectangle_set(Rectangle({0.0, 0.0}, {0.5, 0.5}));
        // bounding of the set itself is [0,0.5]^2, so embed it in the unit square instead
        const RegularSet embedded(Rectangle({0.0, 0.0}, {1.0, 1.0}),
                                  [](std::span<const double> x) {
                                      return x[0] >= 0.0 && x[0] <= 0.5 && x[1] >= 0.0 &&
                                             x[1] <= 0.5;
                                  },
                                  0.25, "quarter", true);
        CHECK(std::abs(estimate_measure(embedded, MultiIndex{100, 100}) - 0.25) <= 0.01);
        CHECK(std::abs(estimate_measure(quarter, MultiIndex{50, 50}) - 0.25) <= 1e-12);
    }

    SUBCASE("unit disk measure approaches pi") {
        CHECK(std::abs(estimate_measure(unit_disk(), MultiIndex{1000, 1000}) - std::numbers::pi) <=
              0.01);
    }

    SUBCASE("empty indicator gives zero") {
        const RegularSet empty(Rectangle({0.0}, {1.0}),
                               [](std::span<const double>) { return false; }, std::nullopt,
                               "empty");
        CHECK(estimate_measure(empty, MultiIndex{64}) == 0.0);
    }
}

TEST_CASE("inside points of the built-ins always lie in the bounding rectangle") {
    std::mt19937_64 rng(97);
    const RegularSet sets[] = {
        make_rectangle_set(Rectangle({-1.0, 2.0}, {0.5, 3.0})),
        make_disk({1.0, -1.0}, 0.7),
        make_annulus({0.0, 0.0}, 0.3, 1.2),
        make_l_shape(Rectangle({0.0, 0.0}, {2.0, 2.0})),
        set_union(make_disk({0.0, 0.0}, 1.0), make_disk({1.5, 0.0}, 0.5)),
    };
    for (const RegularSet& set : sets) {
        const Rectangle& box = set.bounding();
        std::uniform_real_distribution<double> x_dist(box.a[0] - 1.0, box.b[0] + 1.0);
        std::uniform_real_distribution<double> y_dist(box.a[1] - 1.0, box.b[1] + 1.0);
        for (int iter = 0; iter < 2000; ++iter) {
            const Point x{x_dist(rng), y_dist(rng)};
            if (set.contains(x)) CHECK(box.contains(x));
        }
    }
}

TEST_CASE("estimate_measure refines in a Cauchy fashion on the built-ins") {
    const RegularSet sets[] = {
        make_rectangle_set(Rectangle({0.0, 0.0}, {1.0, 1.0})),
        unit_disk(),
        make_annulus({0.0, 0.0}, 0.4, 0.9),
        make_l_shape(Rectangle({0.0, 0.0}, {1.0, 1.0})),
    };
    for (const RegularSet& set : sets) {
        const double e1 = estimate_measure(set, MultiIndex{50, 50});
        const double e2 = estimate_measure(set, MultiIndex{100, 100});
        const double e4 = estimate_measure(set, MultiIndex{200, 200});
        CHECK(std::abs(e4 - e2) <= std::abs(e2 - e1) + 1e-12);
        if (set.exact_measure()) CHECK(std::abs(e4 - *set.exact_measure()) <= 0.02);
    }
}
