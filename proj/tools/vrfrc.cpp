// Command-line front end: builds Vietoris-Rips filtrations from point clouds
// or distance matrices, computes global and per-node Forman-Ricci curvature
// across cutoffs, emits geometrized feature tables, runs the
// statistics-preserving randomizer, and generates random geometric clouds.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frc/csv.hpp"
#include "frc/distances.hpp"
#include "frc/engine.hpp"
#include "frc/filtration.hpp"
#include "frc/geometrize.hpp"
#include "frc/oracle.hpp"
#include "frc/perturb.hpp"
#include "frc/rng.hpp"
#include "frc/stats.hpp"
#include "frc/synth.hpp"
#include "frc/types.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::string replace_extension(const std::string& path, const std::string& ext) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
    return path.substr(0, dot) + ext;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw frc::InputError(path + ": cannot open file for writing");
    return out;
}

void write_sidecar(const std::string& out_path, const std::string& command,
                   const nlohmann::json& parameters, const std::vector<std::string>& outputs,
                   double wall_seconds, const nlohmann::json& extra = {}) {
    nlohmann::json meta{{"command", command},
                        {"version", frc::kVersion},
                        {"parameters", parameters},
                        {"outputs", outputs},
                        {"wall_time_seconds", wall_seconds}};
    for (auto it = extra.begin(); it != extra.end(); ++it) meta[it.key()] = it.value();
    std::ofstream out(out_path + ".meta.json");
    if (!out) throw frc::InputError(out_path + ".meta.json: cannot open file for writing");
    out << meta.dump(1) << '\n';
}

struct InputFlags {
    std::string path;
    std::string kind = "points";
    bool header = false;
    bool normalize = false;
    std::string metric = "euclidean";
    std::string label_column;
};

void add_input_flags(CLI::App* cmd, InputFlags& in, bool with_label = false) {
    cmd->add_option("--input", in.path, "Input CSV file")->required();
    cmd->add_option("--kind", in.kind, "Input kind: points or distances")
        ->check(CLI::IsMember({"points", "distances"}));
    cmd->add_flag("--header", in.header, "First row is a header (and first column, for distance matrices)");
    cmd->add_flag("--normalize", in.normalize, "Z-score point coordinates column-wise before distances");
    cmd->add_option("--metric", in.metric, "Point-cloud metric (built-in: euclidean)");
    if (with_label)
        cmd->add_option("--label-column", in.label_column,
                        "Column (name or 0-based index) carried through as a group label");
}

struct LoadedInput {
    frc::DistanceMatrix dist;
    std::vector<std::string> labels;
    std::vector<std::int64_t> row_ids;
};

LoadedInput load_input(const InputFlags& in, bool drop_bad_rows) {
    LoadedInput loaded;
    if (in.kind == "distances") {
        frc::CsvReadOptions options;
        options.header = in.header;
        loaded.dist = frc::read_distance_matrix_csv(in.path, options);
        for (std::int64_t i = 0; i < loaded.dist.size(); ++i) loaded.row_ids.push_back(i);
        return loaded;
    }
    frc::CsvReadOptions options;
    options.header = in.header;
    options.drop_bad_rows = drop_bad_rows;
    if (!in.label_column.empty()) {
        bool numeric = true;
        for (char c : in.label_column)
            if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
        if (numeric)
            options.label_column = std::stoi(in.label_column);
        else
            options.label_name = in.label_column;
    }
    frc::PointCloudCsv csv = frc::read_point_cloud_csv(in.path, options);
    if (in.normalize) frc::normalize_columns(csv.cloud);
    loaded.dist = frc::pairwise_distances(csv.cloud, frc::parse_metric(in.metric));
    loaded.labels = std::move(csv.labels);
    loaded.row_ids = std::move(csv.row_ids);
    return loaded;
}

int cmd_frc(const InputFlags& in, int d_max, double max_dist, int precision,
            const std::string& out_path, const std::string& format, bool verify,
            const std::string& dump_path) {
    const auto start = Clock::now();
    if (d_max < 1) throw frc::InputError("--dmax must be >= 1");
    if (precision < 0) throw frc::InputError("--precision must be >= 0");
    if (max_dist < 0.0) throw frc::InputError("--max-dist must be positive");

    const LoadedInput input = load_input(in, /*drop_bad_rows=*/false);
    double ceiling = max_dist;
    if (ceiling == 0.0) {
        const double diam = input.dist.max_entry();
        ceiling = diam > 0.0 ? diam : 1.0;
    }

    const frc::Filtration filt = frc::enumerate_vr_filtration(input.dist, d_max, ceiling);
    if (!dump_path.empty()) frc::write_filtration_csv(dump_path, filt);

    const bool json = format == "json";
    const std::string series_path = json ? replace_extension(out_path, ".json") : out_path;
    const std::string nodes_path = with_suffix(series_path, "_nodes");

    frc::RunOptions options;
    options.record_events = verify;
    options.store_grid = json;  // JSON mirrors are emitted whole at the end

    std::ofstream series_out, nodes_out;
    if (!json) {
        series_out = open_out(series_path);
        nodes_out = open_out(nodes_path);
        frc::write_series_header(series_out);
        frc::write_node_series_header(nodes_out);
        // Stream row groups as the pass advances so partial results survive
        // interruption on large runs.
        options.on_grid = [&](std::size_t, double cutoff, const frc::CurvatureSnapshot& snap) {
            frc::write_series_rows(series_out, cutoff, snap);
            frc::write_node_series_rows(nodes_out, cutoff, snap);
            series_out.flush();
            nodes_out.flush();
        };
    }

    const frc::CurvatureSeries series =
        frc::run_filtration(filt, d_max, precision, ceiling, options);

    if (json) {
        auto sout = open_out(series_path);
        frc::write_series_json(sout, series);
        auto nout = open_out(nodes_path);
        frc::write_node_series_json(nout, series);
    }

    if (verify) {
        for (const auto& snap : series.events) {
            const frc::StaticComplex cx = frc::StaticComplex::from_filtration(filt, snap->cutoff);
            for (int d = 1; d <= d_max; ++d) {
                const frc::OracleSnapshot expected = frc::oracle_snapshot(cx, d);
                const bool ok =
                    snap->face_count[static_cast<std::size_t>(d)] == expected.face_count &&
                    snap->global_sum[static_cast<std::size_t>(d)] == expected.global_sum &&
                    snap->node_sum[static_cast<std::size_t>(d)] == expected.node_sum;
                if (!ok)
                    throw frc::InvariantError(
                        "verification failed: engine snapshot at cutoff " +
                        frc::format_double(snap->cutoff) + ", dimension " + std::to_string(d) +
                        " disagrees with the oracle");
            }
        }
        std::cerr << "verify: " << series.events.size() << " snapshots cross-checked against the oracle\n";
    }

    const double wall = std::chrono::duration<double>(Clock::now() - start).count();
    nlohmann::json params{{"input", in.path},       {"kind", in.kind},
                          {"header", in.header},    {"normalize", in.normalize},
                          {"metric", in.metric},    {"dmax", d_max},
                          {"max_dist", ceiling},    {"precision", precision},
                          {"format", json ? "json" : "csv"}, {"verify", verify}};
    write_sidecar(out_path, "frc", params, {series_path, nodes_path}, wall,
                  {{"faces", filt.faces.size()}});
    return 0;
}

int cmd_geometrize(const InputFlags& in, int d, double max_dist, int precision,
                   const std::string& out_path) {
    const auto start = Clock::now();
    if (d < 1) throw frc::InputError("--dmax must be >= 1");
    if (precision < 0) throw frc::InputError("--precision must be >= 0");
    if (max_dist < 0.0) throw frc::InputError("--max-dist must be positive");

    // Rows with missing or non-numeric fields are dropped before distance
    // computation; surviving rows keep their original indices as labels.
    const LoadedInput input = load_input(in, /*drop_bad_rows=*/true);
    double ceiling = max_dist;
    if (ceiling == 0.0) {
        const double diam = input.dist.max_entry();
        ceiling = diam > 0.0 ? diam : 1.0;
    }

    frc::GeometrizeOptions options;
    for (std::int64_t id : input.row_ids) options.labels.push_back(std::to_string(id));
    const frc::GeometrizedTable table = frc::geometrize(input.dist, d, precision, ceiling, options);
    frc::write_geometrized_csv(out_path, table, precision, input.labels);

    const double wall = std::chrono::duration<double>(Clock::now() - start).count();
    nlohmann::json params{{"input", in.path},   {"kind", in.kind},         {"header", in.header},
                          {"normalize", in.normalize}, {"metric", in.metric},
                          {"label_column", in.label_column}, {"dim", d},
                          {"max_dist", ceiling}, {"precision", precision}};
    write_sidecar(out_path, "geometrize", params, {out_path}, wall,
                  {{"observations", table.observations()}, {"grid_points", table.grid_size()}});
    return 0;
}

int cmd_perturb(const InputFlags& in, std::int64_t iterations, double temp, double scale,
                std::uint64_t seed, bool population_std, const std::string& out_path) {
    const auto start = Clock::now();
    frc::CsvReadOptions read_options;
    read_options.header = in.header;
    const frc::PointCloudCsv csv = frc::read_point_cloud_csv(in.path, read_options);

    frc::PerturbParams params;
    params.iterations = iterations;
    params.temp = temp;
    params.scale = scale;
    params.seed = seed;
    params.population_std = population_std;
    const frc::PerturbRun run = frc::run_perturbation(csv.cloud, params);
    frc::write_point_cloud_csv(out_path, run.dataset);

    const double wall = std::chrono::duration<double>(Clock::now() - start).count();
    nlohmann::json meta_params{{"input", in.path}, {"header", in.header},
                               {"iterations", iterations}, {"temp", temp},
                               {"scale", scale},    {"seed", seed},
                               {"population_std", population_std}};
    write_sidecar(out_path, "perturb", meta_params, {out_path}, wall,
                  {{"effective_iterations", run.effective_iterations}, {"rng", frc::Rng::kAlgorithm}});
    return 0;
}

int cmd_gen_rgg(std::int64_t n, std::int64_t dim, double density, std::uint64_t seed,
                const std::string& out_path) {
    const auto start = Clock::now();
    const frc::RggSpec spec{n, dim, density, seed};
    const frc::PointCloud cloud = frc::gen_rgg_points(spec);
    frc::write_point_cloud_csv(out_path, cloud);

    const double radius = frc::radius_for_density(frc::pairwise_distances(cloud), density);
    const double wall = std::chrono::duration<double>(Clock::now() - start).count();
    nlohmann::json params{{"n", n}, {"dim", dim}, {"density", density}, {"seed", seed}};
    write_sidecar(out_path, "gen-rgg", params, {out_path}, wall,
                  {{"radius_for_density", radius}, {"rng", frc::Rng::kAlgorithm}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forman-Ricci curvature over Vietoris-Rips filtrations"};
    app.require_subcommand(1);
    app.set_version_flag("--app-version", frc::kVersion);

    // frc
    InputFlags frc_in;
    int frc_dmax = 1;
    double frc_max_dist = 0.0;  // 0 = use the data diameter
    int frc_precision = 2;
    std::string frc_out, frc_format = "csv", frc_dump;
    bool frc_verify = false;
    CLI::App* frc_cmd = app.add_subcommand(
        "frc", "Global and per-node curvature as a function of the cutoff distance");
    add_input_flags(frc_cmd, frc_in);
    frc_cmd->add_option("--dmax", frc_dmax, "Maximum curvature dimension (>= 1)");
    frc_cmd->add_option("--max-dist", frc_max_dist, "Cutoff ceiling (default: data diameter)");
    frc_cmd->add_option("--precision", frc_precision, "Cutoff grid step is 10^-precision");
    frc_cmd->add_option("--out", frc_out, "Series CSV path; node series lands next to it")->required();
    frc_cmd->add_option("--format", frc_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    frc_cmd->add_flag("--verify", frc_verify, "Cross-check every snapshot against the definitional oracle");
    frc_cmd->add_option("--dump-filtration", frc_dump, "Also dump the sorted face stream to this CSV");

    // geometrize
    InputFlags geo_in;
    int geo_d = 1;
    double geo_max_dist = 0.0;
    int geo_precision = 2;
    std::string geo_out;
    CLI::App* geo_cmd =
        app.add_subcommand("geometrize", "Per-observation local curvature curves as a feature table");
    add_input_flags(geo_cmd, geo_in, /*with_label=*/true);
    geo_cmd->add_option("--dmax", geo_d, "Curve dimension d (>= 1)");
    geo_cmd->add_option("--max-dist", geo_max_dist, "Cutoff ceiling (default: data diameter)");
    geo_cmd->add_option("--precision", geo_precision, "Cutoff grid step is 10^-precision");
    geo_cmd->add_option("--out", geo_out, "Output table CSV path")->required();

    // perturb
    InputFlags pert_in;
    std::int64_t pert_iterations = 0;
    double pert_temp = 1.0, pert_scale = 0.5;
    std::uint64_t pert_seed = 0;
    bool pert_population_std = false;
    std::string pert_out;
    CLI::App* pert_cmd =
        app.add_subcommand("perturb", "Statistics-preserving random perturbation of a point cloud");
    pert_cmd->add_option("--input", pert_in.path, "Input point-cloud CSV")->required();
    pert_cmd->add_flag("--header", pert_in.header, "First row is a header");
    pert_cmd->add_option("--iterations", pert_iterations, "Outer perturbation steps")->required();
    pert_cmd->add_option("--temp", pert_temp, "Acceptance temperature");
    pert_cmd->add_option("--scale", pert_scale, "Per-coordinate displacement std");
    pert_cmd->add_option("--seed", pert_seed, "RNG seed");
    pert_cmd->add_flag("--population-std", pert_population_std,
                       "Use population (n) instead of sample (n-1) standard deviation");
    pert_cmd->add_option("--out", pert_out, "Output point-cloud CSV")->required();

    // gen-rgg
    std::int64_t rgg_n = 100, rgg_dim = 2;
    double rgg_density = 0.5;
    std::uint64_t rgg_seed = 0;
    std::string rgg_out;
    CLI::App* rgg_cmd = app.add_subcommand("gen-rgg", "Random geometric point cloud in the unit box");
    rgg_cmd->add_option("--n", rgg_n, "Number of points")->required();
    rgg_cmd->add_option("--dim", rgg_dim, "Box dimension")->required();
    rgg_cmd->add_option("--density", rgg_density, "Target edge density in (0,1)")->required();
    rgg_cmd->add_option("--seed", rgg_seed, "RNG seed");
    rgg_cmd->add_option("--out", rgg_out, "Output point-cloud CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (frc_cmd->parsed())
            return cmd_frc(frc_in, frc_dmax, frc_max_dist, frc_precision, frc_out, frc_format,
                           frc_verify, frc_dump);
        if (geo_cmd->parsed())
            return cmd_geometrize(geo_in, geo_d, geo_max_dist, geo_precision, geo_out);
        if (pert_cmd->parsed())
            return cmd_perturb(pert_in, pert_iterations, pert_temp, pert_scale, pert_seed,
                               pert_population_std, pert_out);
        if (rgg_cmd->parsed())
            return cmd_gen_rgg(rgg_n, rgg_dim, rgg_density, rgg_seed, rgg_out);
    } catch (const frc::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const frc::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
