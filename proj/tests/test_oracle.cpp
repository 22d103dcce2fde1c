#include <doctest.h>

#include "frc/filtration.hpp"
#include "frc/oracle.hpp"
#include "test_support.hpp"

using namespace frc;

namespace {

StaticComplex lone_triangle() {
    StaticComplex cx(3, 2);
    for (NodeId v = 0; v < 3; ++v) cx.add_face(FaceKey{v});
    cx.add_face(FaceKey{0, 1});
    cx.add_face(FaceKey{0, 2});
    cx.add_face(FaceKey{1, 2});
    cx.add_face(FaceKey{0, 1, 2});
    return cx;
}

StaticComplex two_edge_path() {
    StaticComplex cx(3, 2);
    for (NodeId v = 0; v < 3; ++v) cx.add_face(FaceKey{v});
    cx.add_face(FaceKey{0, 1});
    cx.add_face(FaceKey{1, 2});
    return cx;
}

StaticComplex complete_complex(std::int64_t n, int max_dim) {
    const Filtration filt = enumerate_vr_filtration(test::complete_matrix(n), max_dim, 1.0);
    StaticComplex cx(n, max_dim + 1);
    for (const Simplex& f : filt.faces) cx.add_face(f.nodes);
    return cx;
}

}  // namespace

TEST_CASE("classify: lone triangle edge") {
    const StaticComplex cx = lone_triangle();
    const auto nc = classify_neighbours(cx, FaceKey{0, 1});
    CHECK(nc.parallel.empty());
    REQUIRE(nc.transverse.size() == 2);
    CHECK(nc.transverse[0] == FaceKey{0, 2});
    CHECK(nc.transverse[1] == FaceKey{1, 2});
    REQUIRE(nc.higher.size() == 1);
    CHECK(nc.higher[0] == FaceKey{0, 1, 2});
}

TEST_CASE("classify: path edge is parallel-only") {
    const StaticComplex cx = two_edge_path();
    const auto nc = classify_neighbours(cx, FaceKey{0, 1});
    REQUIRE(nc.parallel.size() == 1);
    CHECK(nc.parallel[0] == FaceKey{1, 2});
    CHECK(nc.transverse.empty());
    CHECK(nc.higher.empty());
}

TEST_CASE("classify: K4 edge") {
    const StaticComplex cx = complete_complex(4, 2);
    const auto nc = classify_neighbours(cx, FaceKey{0, 1});
    CHECK(nc.parallel.empty());
    CHECK(nc.transverse.size() == 4);
    CHECK(nc.higher.size() == 2);
}

TEST_CASE("classify: absent face is an input error") {
    const StaticComplex cx = two_edge_path();
    CHECK_THROWS_AS(classify_neighbours(cx, FaceKey{0, 2}), InputError);
}

TEST_CASE("frc_definition: isolated edge and lone-triangle edge") {
    StaticComplex isolated(2, 2);
    isolated.add_face(FaceKey{0});
    isolated.add_face(FaceKey{1});
    isolated.add_face(FaceKey{0, 1});
    CHECK(frc_definition(isolated, FaceKey{0, 1}) == 2);

    CHECK(frc_definition(lone_triangle(), FaceKey{0, 1}) == 3);
}

TEST_CASE("global_frc: lone triangle, empty dimension, K4 triangles") {
    CHECK(global_frc(lone_triangle(), 1) == Rational(3, 1));
    CHECK(global_frc(two_edge_path(), 2) == Rational::zero());
    CHECK(global_frc(complete_complex(4, 2), 2) == Rational(4, 1));
}

TEST_CASE("local_frc: path midpoint, isolated node, triangle node") {
    const StaticComplex path = two_edge_path();
    CHECK(local_frc(path, 1, 1) == Rational(1, 2));
    CHECK(local_frc(path, 0, 1) == Rational(1, 4));

    StaticComplex with_isolated(4, 2);
    for (NodeId v = 0; v < 4; ++v) with_isolated.add_face(FaceKey{v});
    with_isolated.add_face(FaceKey{0, 1});
    CHECK(local_frc(with_isolated, 3, 1) == Rational::zero());

    CHECK(local_frc(lone_triangle(), 2, 1) == Rational(1, 1));
}

TEST_CASE("oracle properties on random complexes") {
    for (std::uint64_t seed : {61u, 62u, 63u}) {
        const DistanceMatrix dist = test::random_er_matrix(8, 0.6, seed);
        const Filtration filt = enumerate_vr_filtration(dist, 2, 1.0);
        const StaticComplex cx = StaticComplex::from_filtration(filt, 1.0);

        for (int d = 1; d <= 2; ++d) {
            // Gauss-Bonnet: locals sum exactly to the global value.
            Rational total = Rational::zero();
            for (NodeId x = 0; x < 8; ++x) total = total + local_frc(cx, x, d);
            CHECK(total == global_frc(cx, d));

            for (const FaceKey& alpha : cx.faces(d)) {
                const auto nc = classify_neighbours(cx, alpha);

                // P and T are disjoint and exhaust the neighbour set.
                for (const FaceKey& p : nc.parallel)
                    for (const FaceKey& t : nc.transverse) CHECK(p != t);

                // |T| = (d+1)|H| and |H| = |common neighbourhood intersection|.
                CHECK(nc.transverse.size() == static_cast<std::size_t>(d + 1) * nc.higher.size());
                std::vector<NodeId> pi_cap = cx.common_neighbours(alpha);
                CHECK(pi_cap.size() == nc.higher.size());

                // |N| = sum |pi(gamma)| - (d+1) with the definitional pi.
                std::size_t pi_total = 0;
                for (std::size_t drop = 0; drop < alpha.size(); ++drop) {
                    FaceKey gamma;
                    for (std::size_t j = 0; j < alpha.size(); ++j)
                        if (j != drop) gamma.push_back(alpha[j]);
                    pi_total += cx.common_neighbours(gamma).size();
                }
                CHECK(nc.parallel.size() + nc.transverse.size() ==
                      pi_total - alpha.size());
            }
        }
    }
}
