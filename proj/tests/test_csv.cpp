#include <doctest.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "frc/csv.hpp"
#include "frc/filtration.hpp"
#include "test_support.hpp"

using namespace frc;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("format_double round-trips exactly") {
    for (double v : {0.0, 1.0, 0.1, -2.5, 1.0 / 3.0, 12345.6789, 1e-17}) {
        const std::string s = format_double(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
}

TEST_CASE("point cloud csv: plain numeric rows") {
    write_file("pc_plain.csv", "0,0\n3,4\n");
    const PointCloudCsv r = read_point_cloud_csv("pc_plain.csv");
    REQUIRE(r.cloud.rows() == 2);
    REQUIRE(r.cloud.cols() == 2);
    CHECK(r.cloud.at(1, 1) == 4.0);
    CHECK(r.row_ids == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("point cloud csv: header and named label column") {
    write_file("pc_header.csv", "x,y,group\n1,2,a\n3,4,b\n");
    CsvReadOptions options;
    options.header = true;
    options.label_name = "group";
    const PointCloudCsv r = read_point_cloud_csv("pc_header.csv", options);
    REQUIRE(r.cloud.cols() == 2);
    CHECK(r.labels == std::vector<std::string>{"a", "b"});
}

TEST_CASE("point cloud csv: malformed field carries file and line") {
    write_file("pc_bad.csv", "1,2\n3,oops\n");
    try {
        read_point_cloud_csv("pc_bad.csv");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("pc_bad.csv:2") != std::string::npos);
    }
}

TEST_CASE("point cloud csv: drop_bad_rows keeps original row ids") {
    write_file("pc_drop.csv", "1,2\n3,\n5,6\nnan,7\n8,9\n");
    CsvReadOptions options;
    options.drop_bad_rows = true;
    const PointCloudCsv r = read_point_cloud_csv("pc_drop.csv", options);
    REQUIRE(r.cloud.rows() == 3);
    CHECK(r.row_ids == std::vector<std::int64_t>{0, 2, 4});
}

TEST_CASE("point cloud csv: ragged row is rejected") {
    write_file("pc_ragged.csv", "1,2\n3,4,5\n");
    CHECK_THROWS_AS(read_point_cloud_csv("pc_ragged.csv"), InputError);
}

TEST_CASE("distance matrix csv: plain and with header row/column") {
    write_file("dm_plain.csv", "0,1\n1,0\n");
    const DistanceMatrix plain = read_distance_matrix_csv("dm_plain.csv");
    CHECK(plain.size() == 2);
    CHECK(plain.at(0, 1) == 1.0);

    write_file("dm_header.csv", "id,p0,p1\np0,0,2\np1,2,0\n");
    CsvReadOptions options;
    options.header = true;
    const DistanceMatrix with_header = read_distance_matrix_csv("dm_header.csv", options);
    CHECK(with_header.size() == 2);
    CHECK(with_header.at(0, 1) == 2.0);
}

TEST_CASE("distance matrix csv: asymmetry and non-square are rejected") {
    write_file("dm_asym.csv", "0,1\n2,0\n");
    CHECK_THROWS_AS(read_distance_matrix_csv("dm_asym.csv"), InputError);
    write_file("dm_rect.csv", "0,1,2\n1,0,3\n");
    CHECK_THROWS_AS(read_distance_matrix_csv("dm_rect.csv"), InputError);
}

TEST_CASE("point cloud csv round trip") {
    const PointCloud cloud = test::random_cloud(7, 3, 41);
    write_point_cloud_csv("pc_rt.csv", cloud);
    const PointCloudCsv back = read_point_cloud_csv("pc_rt.csv");
    REQUIRE(back.cloud.rows() == cloud.rows());
    CHECK(back.cloud.data() == cloud.data());
}

TEST_CASE("filtration dump format") {
    const Filtration filt = enumerate_vr_filtration(test::equilateral(), 1, 1.0);
    write_filtration_csv("filt.csv", filt);
    std::ifstream in("filt.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "weight,dim,node_ids");
    std::getline(in, line);
    CHECK(line == "0,0,0");
    // Last row is the triangle.
    std::string last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    CHECK(last == "1,2,0;1;2");
}

TEST_CASE("series csv layout") {
    const Filtration filt = enumerate_vr_filtration(test::equilateral(), 1, 1.0);
    const CurvatureSeries series = run_filtration(filt, 1, 0, 1.0);
    std::ostringstream out;
    write_series_csv(out, series);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "cutoff,dim,face_density,avg_frc");
    std::getline(in, line);
    CHECK(line == "0,1,0,0");
    std::getline(in, line);
    CHECK(line == "1,1,1,3");
}

TEST_CASE("node series csv layout") {
    const Filtration filt = enumerate_vr_filtration(test::equilateral(), 1, 1.0);
    const CurvatureSeries series = run_filtration(filt, 1, 0, 1.0);
    std::ostringstream out;
    write_node_series_csv(out, series);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "cutoff,dim,node_id,local_frc");
    std::getline(in, line);
    CHECK(line == "0,1,0,0");
    // Row for node 0 at cutoff 1: local value 1.
    for (int skip = 0; skip < 3; ++skip) std::getline(in, line);
    CHECK(line == "1,1,0,1");
}
