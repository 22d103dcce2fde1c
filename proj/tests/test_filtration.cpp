#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "frc/distances.hpp"
#include "frc/filtration.hpp"
#include "test_support.hpp"

using namespace frc;

namespace {

// Independent brute force: every node subset of size 1..max_nodes whose
// diameter fits, sorted with the same total order.
std::vector<Simplex> brute_force_faces(const DistanceMatrix& dist, int d_max, double max_dist) {
    const std::int64_t m = dist.size();
    const std::size_t max_nodes = static_cast<std::size_t>(d_max) + 2;
    std::vector<Simplex> faces;
    const std::uint64_t limit = 1ull << m;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        std::vector<NodeId> nodes;
        for (std::int64_t b = 0; b < m; ++b)
            if (mask & (1ull << b)) nodes.push_back(static_cast<NodeId>(b));
        if (nodes.size() > max_nodes) continue;
        const double w = diameter(nodes, dist);
        if (w <= max_dist) faces.push_back({nodes, w});
    }
    std::sort(faces.begin(), faces.end(), face_less);
    return faces;
}

}  // namespace

TEST_CASE("enumerate: three equidistant points at full cutoff") {
    const Filtration filt = enumerate_vr_filtration(test::equilateral(), 1, 1.0);
    REQUIRE(filt.faces.size() == 7);
    for (int i = 0; i < 3; ++i) {
        CHECK(filt.faces[static_cast<std::size_t>(i)].dim() == 0);
        CHECK(filt.faces[static_cast<std::size_t>(i)].weight == 0.0);
    }
    for (int i = 3; i < 6; ++i) {
        CHECK(filt.faces[static_cast<std::size_t>(i)].dim() == 1);
        CHECK(filt.faces[static_cast<std::size_t>(i)].weight == 1.0);
    }
    CHECK(filt.faces[6].dim() == 2);
    CHECK(filt.faces[6].weight == 1.0);
}

TEST_CASE("enumerate: cutoff below all edges leaves only vertices") {
    const Filtration filt = enumerate_vr_filtration(test::equilateral(), 1, 0.5);
    REQUIRE(filt.faces.size() == 3);
    for (const Simplex& f : filt.faces) CHECK(f.dim() == 0);
}

TEST_CASE("enumerate: d_max below 1 is rejected") {
    CHECK_THROWS_AS(enumerate_vr_filtration(test::equilateral(), 0, 1.0), InputError);
}

TEST_CASE("enumerate: matches brute-force subset enumeration") {
    const PointCloud cloud = test::random_cloud(8, 2, 23);
    const DistanceMatrix dist = pairwise_distances(cloud);
    const Filtration filt =
        enumerate_vr_filtration(dist, 2, std::numeric_limits<double>::infinity());
    const std::vector<Simplex> expected =
        brute_force_faces(dist, 2, std::numeric_limits<double>::infinity());
    REQUIRE(filt.faces.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(filt.faces[i].nodes == expected[i].nodes);
        CHECK(filt.faces[i].weight == expected[i].weight);
    }
}

TEST_CASE("enumerate: closure, nesting, and diameter monotonicity") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        const DistanceMatrix dist = test::random_er_matrix(9, 0.6, seed);
        const Filtration filt = enumerate_vr_filtration(dist, 3, 1.0);

        std::map<std::vector<NodeId>, std::size_t> position;
        for (std::size_t i = 0; i < filt.faces.size(); ++i) position[filt.faces[i].nodes] = i;

        for (std::size_t i = 0; i < filt.faces.size(); ++i) {
            const Simplex& f = filt.faces[i];
            if (i > 0) CHECK(face_less(filt.faces[i - 1], f));
            CHECK(f.weight <= 1.0);
            CHECK(f.dim() <= 4);
            // Every boundary face appears earlier, with a weight no larger.
            if (f.nodes.size() > 1) {
                for (std::size_t drop = 0; drop < f.nodes.size(); ++drop) {
                    std::vector<NodeId> sub;
                    for (std::size_t j = 0; j < f.nodes.size(); ++j)
                        if (j != drop) sub.push_back(f.nodes[j]);
                    auto it = position.find(sub);
                    REQUIRE(it != position.end());
                    CHECK(it->second < i);
                    CHECK(filt.faces[it->second].weight <= f.weight);
                }
            }
        }

        // Nested prefixes: ranks at a smaller cutoff are a prefix of ranks at
        // a larger one (weights sorted ascending makes this a cutoff check).
        std::size_t below_half = 0, below_one = 0;
        for (const Simplex& f : filt.faces) {
            if (f.weight <= 0.5) ++below_half;
            if (f.weight <= 1.0) ++below_one;
        }
        CHECK(below_half <= below_one);
        for (std::size_t i = 0; i < below_half; ++i) CHECK(filt.faces[i].weight <= 0.5);
    }
}

TEST_CASE("enumerate: zero distances between distinct points are processed first") {
    DistanceMatrix dist = test::matrix_from_upper(3, {0.0, 1.0, 1.0});
    const Filtration filt = enumerate_vr_filtration(dist, 1, 2.0);
    // Vertices first, then the weight-0 edge, then the distance-1 edges.
    REQUIRE(filt.faces.size() == 7);
    CHECK(filt.faces[3].nodes == std::vector<NodeId>{0, 1});
    CHECK(filt.faces[3].weight == 0.0);
}

TEST_CASE("enumerate: thread count does not change the output") {
    const DistanceMatrix dist = pairwise_distances(test::random_cloud(20, 3, 99));
    const Filtration serial = enumerate_vr_filtration(dist, 2, 0.8, 1);
    const Filtration parallel = enumerate_vr_filtration(dist, 2, 0.8, 3);
    REQUIRE(serial.faces.size() == parallel.faces.size());
    for (std::size_t i = 0; i < serial.faces.size(); ++i) CHECK(serial.faces[i] == parallel.faces[i]);
}

TEST_CASE("enumerate: FRC_THREADS is honoured when no explicit count is given") {
    setenv("FRC_THREADS", "2", 1);
    CHECK(resolve_enumeration_threads(0) == 2);
    unsetenv("FRC_THREADS");
    CHECK(resolve_enumeration_threads(5) == 5);
}
