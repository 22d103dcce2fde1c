#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "frc/engine.hpp"
#include "frc/types.hpp"

namespace frc {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

struct CsvReadOptions {
    bool header = false;          // skip the first row (and first column for matrices)
    int label_column = -1;        // column carried as a label, excluded from coordinates
    std::string label_name;      // alternative to label_column when a header exists
    bool drop_bad_rows = false;   // drop rows with missing/non-numeric fields instead of failing
};

struct PointCloudCsv {
    PointCloud cloud;
    std::vector<std::string> labels;    // empty unless a label column was requested
    std::vector<std::int64_t> row_ids;  // original 0-based data-row index of each kept row
};

/// One observation per row, numeric columns only. Parse failures carry
/// file:line diagnostics unless drop_bad_rows is set.
PointCloudCsv read_point_cloud_csv(const std::string& path, const CsvReadOptions& options = {});

/// Square symmetric matrix; with header set, the first row and first column
/// are treated as labels and dropped.
DistanceMatrix read_distance_matrix_csv(const std::string& path, const CsvReadOptions& options = {});

void write_point_cloud_csv(const std::string& path, const PointCloud& cloud);

/// Debug dump: weight,dim,node_ids with ';'-separated ascending ids.
void write_filtration_csv(const std::string& path, const Filtration& filt);

/// Long-format series: cutoff,dim,face_density,avg_frc for every grid point
/// and dimension. The writers stream row groups as the callback-driven run
/// advances; these whole-series overloads are the buffered convenience form.
void write_series_csv(std::ostream& out, const CurvatureSeries& series);
void write_node_series_csv(std::ostream& out, const CurvatureSeries& series);

/// Row-group emitters used for streaming emission while a run is in flight.
void write_series_header(std::ostream& out);
void write_series_rows(std::ostream& out, double cutoff, const CurvatureSnapshot& snap);
void write_node_series_header(std::ostream& out);
void write_node_series_rows(std::ostream& out, double cutoff, const CurvatureSnapshot& snap);

/// JSON mirrors of the two series files (an array of row objects each).
void write_series_json(std::ostream& out, const CurvatureSeries& series);
void write_node_series_json(std::ostream& out, const CurvatureSeries& series);

}  // namespace frc
