#include <doctest.h>

#include "frc/csv.hpp"
#include "frc/distances.hpp"
#include "test_support.hpp"

using namespace frc;

TEST_CASE("pairwise distances: 3-4-5 triangle") {
    PointCloud cloud(2, 2, {0.0, 0.0, 3.0, 4.0});
    const DistanceMatrix dist = pairwise_distances(cloud);
    CHECK(dist.at(0, 1) == 5.0);
    CHECK(dist.at(1, 0) == 5.0);
    CHECK(dist.at(0, 0) == 0.0);
}

TEST_CASE("pairwise distances: single point gives the 1x1 zero matrix") {
    PointCloud cloud(1, 3, {0.5, -2.0, 7.0});
    const DistanceMatrix dist = pairwise_distances(cloud);
    CHECK(dist.size() == 1);
    CHECK(dist.at(0, 0) == 0.0);
}

TEST_CASE("pairwise distances: non-finite coordinate is rejected") {
    CHECK_THROWS_AS(PointCloud(1, 2, {1.0, std::nan("")}), InputError);
}

TEST_CASE("pairwise distances: max entry matches an independent double loop") {
    const PointCloud cloud = test::random_cloud(40, 2, 17);
    const DistanceMatrix dist = pairwise_distances(cloud);

    double expected = 0.0;
    for (std::int64_t i = 0; i < cloud.rows(); ++i)
        for (std::int64_t j = 0; j < cloud.rows(); ++j) {
            double sq = 0.0;
            for (std::int64_t k = 0; k < cloud.cols(); ++k) {
                const double d = cloud.at(i, k) - cloud.at(j, k);
                sq += d * d;
            }
            expected = std::max(expected, std::sqrt(sq));
        }
    CHECK(dist.max_entry() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("pairwise distances: bundled replica diameter matches a double loop") {
    frc::CsvReadOptions options;
    options.header = true;
    const PointCloud cloud =
        read_point_cloud_csv(std::string(VRFRC_DATA_DIR) + "/datasaurus_replica.csv", options).cloud;
    const DistanceMatrix dist = pairwise_distances(cloud);

    double expected = 0.0;
    for (std::int64_t i = 0; i < cloud.rows(); ++i)
        for (std::int64_t j = 0; j < cloud.rows(); ++j) {
            const double dx = cloud.at(i, 0) - cloud.at(j, 0);
            const double dy = cloud.at(i, 1) - cloud.at(j, 1);
            expected = std::max(expected, std::sqrt(dx * dx + dy * dy));
        }
    CHECK(dist.max_entry() == expected);
}

TEST_CASE("pairwise distances: symmetry and zero diagonal on random clouds") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const DistanceMatrix dist = pairwise_distances(test::random_cloud(15, 3, seed));
        CHECK_NOTHROW(dist.validate());
    }
}

TEST_CASE("pairwise distances: custom metric hook") {
    PointCloud cloud(2, 2, {0.0, 0.0, 3.0, 4.0});
    const DistanceMatrix dist = pairwise_distances(cloud, [](auto a, auto b) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
        return s;
    });
    CHECK(dist.at(0, 1) == 7.0);
}

TEST_CASE("diameter: singleton, pair, and brute-force parity") {
    const DistanceMatrix dist = pairwise_distances(test::random_cloud(9, 2, 5));

    const std::vector<NodeId> single{3};
    CHECK(diameter(single, dist) == 0.0);

    const std::vector<NodeId> pair{2, 7};
    CHECK(diameter(pair, dist) == dist.at(2, 7));

    const std::vector<NodeId> four{1, 3, 6, 8};
    double expected = 0.0;
    for (std::size_t a = 0; a < four.size(); ++a)
        for (std::size_t b = a + 1; b < four.size(); ++b)
            expected = std::max(expected, dist.at(four[a], four[b]));
    CHECK(diameter(four, dist) == expected);
}

TEST_CASE("diameter: out-of-range node id") {
    const DistanceMatrix dist = test::equilateral();
    const std::vector<NodeId> bad{0, 9};
    CHECK_THROWS_AS(diameter(bad, dist), InputError);
}

TEST_CASE("metric parsing") {
    CHECK(parse_metric("euclidean") == Metric::Euclidean);
    CHECK_THROWS_AS(parse_metric("chebyshev"), InputError);
}
