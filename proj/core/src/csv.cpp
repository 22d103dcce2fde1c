#include "frc/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace frc {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        std::string f = line.substr(start, comma == std::string::npos ? comma : comma - start);
        // Trim surrounding whitespace and a trailing CR from DOS files.
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.pop_back();
        std::size_t lead = 0;
        while (lead < f.size() && (f[lead] == ' ' || f[lead] == '\t')) ++lead;
        fields.push_back(f.substr(lead));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

bool parse_number(const std::string& field, double& out) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end && !field.empty();
}

struct CsvFile {
    std::string path;
    std::vector<std::string> lines;  // raw lines, 1-based numbering preserved
};

CsvFile read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    CsvFile file{path, {}};
    std::string line;
    while (std::getline(in, line)) file.lines.push_back(line);
    return file;
}

bool blank(const std::string& line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

[[noreturn]] void fail_at(const std::string& path, std::size_t line_no, const std::string& msg) {
    throw InputError(path + ":" + std::to_string(line_no) + ": " + msg);
}

}  // namespace

PointCloudCsv read_point_cloud_csv(const std::string& path, const CsvReadOptions& options) {
    const CsvFile file = read_lines(path);

    std::size_t first = 0;
    int label_column = options.label_column;
    if (options.header) {
        while (first < file.lines.size() && blank(file.lines[first])) ++first;
        if (first >= file.lines.size()) throw InputError(path + ": empty file");
        if (!options.label_name.empty()) {
            const auto names = split_fields(file.lines[first]);
            for (std::size_t c = 0; c < names.size(); ++c)
                if (names[c] == options.label_name) label_column = static_cast<int>(c);
            if (label_column < 0)
                fail_at(path, first + 1, "label column '" + options.label_name + "' not found in header");
        }
        ++first;
    } else if (!options.label_name.empty()) {
        throw InputError(path + ": a named label column requires a header row");
    }

    PointCloudCsv out;
    std::vector<double> data;
    std::int64_t cols = -1;
    std::int64_t rows = 0;
    std::int64_t data_row = 0;
    std::vector<double> row_buf;

    for (std::size_t ln = first; ln < file.lines.size(); ++ln) {
        if (blank(file.lines[ln])) continue;
        const std::size_t line_no = ln + 1;
        const auto fields = split_fields(file.lines[ln]);
        const std::int64_t row_id = data_row++;

        row_buf.clear();
        std::string label;
        bool bad = false;
        std::string bad_msg;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (static_cast<int>(c) == label_column) {
                label = fields[c];
                continue;
            }
            double v = 0.0;
            if (!parse_number(fields[c], v) || !std::isfinite(v)) {
                bad = true;
                bad_msg = "column " + std::to_string(c + 1) + ": '" + fields[c] + "' is not a finite number";
                break;
            }
            row_buf.push_back(v);
        }
        if (!bad && cols >= 0 && static_cast<std::int64_t>(row_buf.size()) != cols) {
            bad = true;
            bad_msg = "expected " + std::to_string(cols) + " numeric columns, found " +
                      std::to_string(row_buf.size());
        }
        if (bad) {
            if (options.drop_bad_rows) continue;
            fail_at(path, line_no, bad_msg);
        }
        if (cols < 0) cols = static_cast<std::int64_t>(row_buf.size());
        if (cols == 0) fail_at(path, line_no, "row has no numeric columns");
        data.insert(data.end(), row_buf.begin(), row_buf.end());
        if (label_column >= 0) out.labels.push_back(label);
        out.row_ids.push_back(row_id);
        ++rows;
    }
    if (rows == 0) throw InputError(path + ": no usable data rows");
    out.cloud = PointCloud(rows, cols, std::move(data));
    return out;
}

DistanceMatrix read_distance_matrix_csv(const std::string& path, const CsvReadOptions& options) {
    const CsvFile file = read_lines(path);

    std::vector<std::vector<double>> rows;
    std::size_t first = 0;
    if (options.header) {
        while (first < file.lines.size() && blank(file.lines[first])) ++first;
        if (first < file.lines.size()) ++first;
    }
    for (std::size_t ln = first; ln < file.lines.size(); ++ln) {
        if (blank(file.lines[ln])) continue;
        const std::size_t line_no = ln + 1;
        auto fields = split_fields(file.lines[ln]);
        if (options.header && !fields.empty()) fields.erase(fields.begin());  // label column
        std::vector<double> row;
        row.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            double v = 0.0;
            if (!parse_number(fields[c], v))
                fail_at(path, line_no,
                        "column " + std::to_string(c + 1) + ": '" + fields[c] + "' is not a number");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError(path + ": no usable data rows");
    const std::int64_t m = static_cast<std::int64_t>(rows.size());
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(m * m));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<std::int64_t>(rows[r].size()) != m)
            throw InputError(path + ": matrix is not square (row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " of " + std::to_string(m) + " columns)");
        data.insert(data.end(), rows[r].begin(), rows[r].end());
    }
    return DistanceMatrix(m, std::move(data));
}

void write_point_cloud_csv(const std::string& path, const PointCloud& cloud) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");
    for (std::int64_t i = 0; i < cloud.rows(); ++i) {
        for (std::int64_t j = 0; j < cloud.cols(); ++j) {
            if (j) out << ',';
            out << format_double(cloud.at(i, j));
        }
        out << '\n';
    }
}

void write_filtration_csv(const std::string& path, const Filtration& filt) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");
    out << "weight,dim,node_ids\n";
    for (const Simplex& f : filt.faces) {
        out << format_double(f.weight) << ',' << f.dim() << ',';
        for (std::size_t i = 0; i < f.nodes.size(); ++i) {
            if (i) out << ';';
            out << f.nodes[i];
        }
        out << '\n';
    }
}

void write_series_header(std::ostream& out) { out << "cutoff,dim,face_density,avg_frc\n"; }

void write_series_rows(std::ostream& out, double cutoff, const CurvatureSnapshot& snap) {
    for (int d = 1; d <= snap.d_max; ++d) {
        out << format_double(cutoff) << ',' << d << ',' << format_double(snap.face_density(d).to_double())
            << ',' << format_double(snap.avg_frc(d).to_double()) << '\n';
    }
}

void write_series_csv(std::ostream& out, const CurvatureSeries& series) {
    write_series_header(out);
    for (std::size_t j = 0; j < series.size(); ++j) write_series_rows(out, series.cutoffs[j], series.at(j));
}

void write_node_series_header(std::ostream& out) { out << "cutoff,dim,node_id,local_frc\n"; }

void write_node_series_rows(std::ostream& out, double cutoff, const CurvatureSnapshot& snap) {
    for (int d = 1; d <= snap.d_max; ++d)
        for (std::int64_t x = 0; x < snap.node_count; ++x)
            out << format_double(cutoff) << ',' << d << ',' << x << ','
                << format_double(snap.node_frc(d, static_cast<NodeId>(x)).to_double()) << '\n';
}

void write_node_series_csv(std::ostream& out, const CurvatureSeries& series) {
    write_node_series_header(out);
    for (std::size_t j = 0; j < series.size(); ++j)
        write_node_series_rows(out, series.cutoffs[j], series.at(j));
}

void write_series_json(std::ostream& out, const CurvatureSeries& series) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t j = 0; j < series.size(); ++j) {
        const CurvatureSnapshot& snap = series.at(j);
        for (int d = 1; d <= snap.d_max; ++d) {
            rows.push_back({{"cutoff", series.cutoffs[j]},
                            {"dim", d},
                            {"face_density", snap.face_density(d).to_double()},
                            {"avg_frc", snap.avg_frc(d).to_double()}});
        }
    }
    out << rows.dump(1) << '\n';
}

void write_node_series_json(std::ostream& out, const CurvatureSeries& series) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t j = 0; j < series.size(); ++j) {
        const CurvatureSnapshot& snap = series.at(j);
        for (int d = 1; d <= snap.d_max; ++d)
            for (std::int64_t x = 0; x < snap.node_count; ++x)
                rows.push_back({{"cutoff", series.cutoffs[j]},
                                {"dim", d},
                                {"node_id", x},
                                {"local_frc", snap.node_frc(d, static_cast<NodeId>(x)).to_double()}});
    }
    out << rows.dump(1) << '\n';
}

}  // namespace frc
