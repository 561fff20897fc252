// bggcoh command-line driver: batch queries against the exact cohomology
// engines with JSON/CSV/text output and content-addressed result caching.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bggcoh/bwb.hpp"
#include "bggcoh/parallel.hpp"
#include "bggcoh/pipeline.hpp"
#include "bggcoh/serialize.hpp"
#include "bggcoh/steinberg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kDefaultMaxDCombinatorics = 6;
constexpr int kDefaultMaxDCech = 3;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw bggcoh::InvalidInput("empty entry in integer list '" + s + "'");
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw bggcoh::InvalidInput("cannot parse integer '" + item + "'");
        }
        if (pos != item.size())
            throw bggcoh::InvalidInput("trailing characters in integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw bggcoh::InvalidInput("empty integer list");
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct OutputOpts {
    std::string format = "json";
    std::string out_file;
    std::string cache_dir;
    int threads = bggcoh::default_thread_count();
};

void emit(const OutputOpts& opts, const std::string& text) {
    if (opts.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out_file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + opts.out_file);
    f << text;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// Cache: one file per (engine version, command, config, format); the stored
// config string is compared verbatim on load so hash collisions and stale
// versions can never leak a wrong result.
std::optional<std::string> cache_lookup(const OutputOpts& opts, const std::string& config) {
    if (opts.cache_dir.empty()) return std::nullopt;
    std::ostringstream name;
    name << "bggcoh-" << std::hex << fnv1a(config) << ".json";
    fs::path path = fs::path(opts.cache_dir) / name.str();
    std::ifstream f(path);
    if (!f) return std::nullopt;
    try {
        json doc = json::parse(f);
        if (doc.value("config", "") != config) return std::nullopt;
        return doc.at("output").get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are ignored
    }
}

void cache_store(const OutputOpts& opts, const std::string& config, const std::string& output) {
    if (opts.cache_dir.empty()) return;
    std::error_code ec;
    fs::create_directories(opts.cache_dir, ec);
    if (ec) return;
    std::ostringstream name;
    name << "bggcoh-" << std::hex << fnv1a(config) << ".json";
    fs::path path = fs::path(opts.cache_dir) / name.str();
    json doc{{"schema", bggcoh::serialize::kSchema},
             {"engine", bggcoh::serialize::kEngineVersion},
             {"config", config},
             {"output", output}};
    std::ofstream f(path, std::ios::binary);
    if (f) f << doc.dump(2) << "\n";
}

template <typename T>
std::string render(const OutputOpts& opts, const T& value) {
    if (opts.format == "json") return dump_json(bggcoh::serialize::to_json(value));
    if (opts.format == "csv") return bggcoh::serialize::to_csv(value);
    return bggcoh::serialize::to_text(value);
}

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_file, "write output to a file instead of stdout");
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "result cache directory (default: $BGGCOH_CACHE_DIR)");
    cmd->add_option("--threads", opts.threads, "worker threads for windowed queries")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology engines: Borel-Weil-Bott, Cech/local cohomology on P^d, "
                 "double-complex pipelines, and q-analog Steinberg tables"};
    app.set_version_flag("--version", std::string(bggcoh::serialize::kEngineVersion));
    app.require_subcommand(1);

    OutputOpts opts;
    if (const char* env = std::getenv("BGGCOH_CACHE_DIR")) opts.cache_dir = env;

    // ---- bwb ----
    auto* bwb_cmd = app.add_subcommand("bwb", "cohomology profile of a weight, or a dual BGG table");
    int bwb_d = 1;
    std::string bwb_mu, bwb_lambda;
    bool bwb_bgg = false;
    int bwb_maxd = kDefaultMaxDCombinatorics;
    bwb_cmd->add_option("--d", bwb_d, "ambient dimension")->required();
    bwb_cmd->add_option("--mu", bwb_mu, "weight, comma separated (line-bundle solver)");
    bwb_cmd->add_option("--lambda", bwb_lambda, "dominant weight, comma separated");
    bwb_cmd->add_flag("--bgg", bwb_bgg, "emit the dual BGG complex table for --lambda");
    bwb_cmd->add_option("--max-d", bwb_maxd, "raise the rank cap")->capture_default_str();
    add_output_opts(bwb_cmd, opts);

    // ---- derham-v ----
    auto* derham_cmd = app.add_subcommand("derham-v", "de Rham cohomology of P^d - P^j");
    int dv_d = 2, dv_j = 0, dv_window = 5;
    int dv_maxd = kDefaultMaxDCech;
    derham_cmd->add_option("--d", dv_d, "ambient dimension")->required();
    derham_cmd->add_option("--j", dv_j, "dimension of the removed linear subvariety")->required();
    derham_cmd->add_option("--window", dv_window, "multidegree box bound")->capture_default_str();
    derham_cmd->add_option("--max-d", dv_maxd, "raise the dimension cap")->capture_default_str();
    add_output_opts(derham_cmd, opts);

    // ---- local ----
    auto* local_cmd = app.add_subcommand("local", "graded local cohomology along P^j");
    int lc_d = 2, lc_j = 0, lc_p = 0, lc_window = 5;
    int lc_maxd = kDefaultMaxDCech;
    local_cmd->add_option("--d", lc_d, "ambient dimension")->required();
    local_cmd->add_option("--j", lc_j, "dimension of the support subvariety")->required();
    local_cmd->add_option("--p", lc_p, "form degree")->required();
    local_cmd->add_option("--window", lc_window, "multidegree box bound")->capture_default_str();
    local_cmd->add_option("--max-d", lc_maxd, "raise the dimension cap")->capture_default_str();
    add_output_opts(local_cmd, opts);

    // ---- acyclicity ----
    auto* acyc_cmd = app.add_subcommand("acyclicity", "exactness of the reduced-module complex");
    int ac_d = 2, ac_j = 0, ac_window = 5;
    int ac_maxd = kDefaultMaxDCech;
    acyc_cmd->add_option("--d", ac_d, "ambient dimension")->required();
    acyc_cmd->add_option("--j", ac_j, "dimension of the removed linear subvariety")->required();
    acyc_cmd->add_option("--window", ac_window, "multidegree box bound")->capture_default_str();
    acyc_cmd->add_option("--max-d", ac_maxd, "raise the dimension cap")->capture_default_str();
    add_output_opts(acyc_cmd, opts);

    // ---- table ----
    auto* table_cmd = app.add_subcommand("table", "per-degree Steinberg dimension table");
    int tb_d = 2;
    std::string tb_lambda;
    int tb_maxd = kDefaultMaxDCombinatorics;
    table_cmd->add_option("--d", tb_d, "ambient dimension")->required();
    table_cmd->add_option("--lambda", tb_lambda, "dominant weight, comma separated")->required();
    table_cmd->add_option("--max-d", tb_maxd, "raise the rank cap")->capture_default_str();
    add_output_opts(table_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string config, output;
        int exit_code = 0;
        auto versioned = [](const std::string& s) {
            return std::string(bggcoh::serialize::kEngineVersion) + ";" + s;
        };

        if (bwb_cmd->parsed()) {
            if (bwb_d < 1 || bwb_d > bwb_maxd)
                throw bggcoh::InvalidInput("d out of range [1, " + std::to_string(bwb_maxd) + "]");
            if (bwb_bgg || !bwb_lambda.empty()) {
                if (bwb_lambda.empty())
                    throw bggcoh::InvalidInput("--bgg requires --lambda");
                bggcoh::weights::Weight lambda(parse_int_list(bwb_lambda));
                if (lambda.rank() != bwb_d + 1)
                    throw bggcoh::InvalidInput("lambda must have d+1 entries");
                config = versioned("cmd=bwb-bgg;d=" + std::to_string(bwb_d) + ";lambda=" +
                                   bwb_lambda + ";format=" + opts.format);
                if (auto hit = cache_lookup(opts, config)) {
                    emit(opts, *hit);
                    return 0;
                }
                output = render(opts, bggcoh::bwb::bgg_complex(lambda, bwb_d));
            } else {
                if (bwb_mu.empty()) throw bggcoh::InvalidInput("need --mu or --lambda with --bgg");
                bggcoh::weights::Weight mu(parse_int_list(bwb_mu));
                if (mu.rank() != bwb_d + 1)
                    throw bggcoh::InvalidInput("mu must have d+1 entries");
                config = versioned("cmd=bwb;d=" + std::to_string(bwb_d) + ";mu=" + bwb_mu +
                                   ";format=" + opts.format);
                if (auto hit = cache_lookup(opts, config)) {
                    emit(opts, *hit);
                    return 0;
                }
                output = render(opts, bggcoh::bwb::bwb_line_bundle(mu));
            }
        } else if (derham_cmd->parsed()) {
            if (dv_d < 1 || dv_d > dv_maxd)
                throw bggcoh::InvalidInput("d out of range [1, " + std::to_string(dv_maxd) + "]");
            config = versioned("cmd=derham-v;d=" + std::to_string(dv_d) + ";j=" +
                               std::to_string(dv_j) + ";window=" + std::to_string(dv_window) +
                               ";format=" + opts.format);
            if (auto hit = cache_lookup(opts, config)) {
                emit(opts, *hit);
                return 0;
            }
            output = render(opts, bggcoh::homology::de_rham_of_V(
                                      dv_d, dv_j, {dv_window}, opts.threads));
        } else if (local_cmd->parsed()) {
            if (lc_d < 1 || lc_d > lc_maxd)
                throw bggcoh::InvalidInput("d out of range [1, " + std::to_string(lc_maxd) + "]");
            config = versioned("cmd=local;d=" + std::to_string(lc_d) + ";j=" +
                               std::to_string(lc_j) + ";p=" + std::to_string(lc_p) +
                               ";window=" + std::to_string(lc_window) + ";format=" + opts.format);
            if (auto hit = cache_lookup(opts, config)) {
                emit(opts, *hit);
                return 0;
            }
            output = render(opts, bggcoh::cech::local_cohomology(
                                      lc_j, lc_p, lc_d, {lc_window}, opts.threads));
        } else if (acyc_cmd->parsed()) {
            if (ac_d < 1 || ac_d > ac_maxd)
                throw bggcoh::InvalidInput("d out of range [1, " + std::to_string(ac_maxd) + "]");
            config = versioned("cmd=acyclicity;d=" + std::to_string(ac_d) + ";j=" +
                               std::to_string(ac_j) + ";window=" + std::to_string(ac_window) +
                               ";format=" + opts.format);
            if (auto hit = cache_lookup(opts, config)) {
                emit(opts, *hit);
                return 0;
            }
            auto report = bggcoh::homology::proposition_acyclicity(ac_d, ac_j, {ac_window},
                                                                   opts.threads);
            output = render(opts, report);
            if (!report.acyclic) exit_code = 3;  // failed mathematical assertion; do not cache
        } else if (table_cmd->parsed()) {
            if (tb_d < 1 || tb_d > tb_maxd)
                throw bggcoh::InvalidInput("d out of range [1, " + std::to_string(tb_maxd) + "]");
            bggcoh::weights::Weight lambda(parse_int_list(tb_lambda));
            if (lambda.rank() != tb_d + 1)
                throw bggcoh::InvalidInput("lambda must have d+1 entries");
            config = versioned("cmd=table;d=" + std::to_string(tb_d) + ";lambda=" +
                               tb_lambda + ";format=" + opts.format);
            if (auto hit = cache_lookup(opts, config)) {
                emit(opts, *hit);
                return 0;
            }
            output = render(opts, bggcoh::steinberg::cohomology_table(lambda, tb_d));
        }

        emit(opts, output);
        if (exit_code == 0) cache_store(opts, config, output);
        return exit_code;
    } catch (const bggcoh::MathAssertionError& e) {
        std::cerr << "mathematical assertion failed: " << e.what() << "\n";
        return 3;
    } catch (const bggcoh::InvalidInput& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
