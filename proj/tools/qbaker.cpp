// Command-line harness: orbit generation, chaos-degree sweeps, the
// brute-force verification suite, and dense-operator dumps.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qbaker/chaos.hpp"
#include "qbaker/classical.hpp"
#include "qbaker/closedform.hpp"
#include "qbaker/io.hpp"
#include "qbaker/oracle.hpp"
#include "qbaker/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace qbaker;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;

struct ExperimentConfig {
    std::size_t n_qubits = 500;
    std::uint64_t seed = 20020906;
    std::size_t steps = 1000;
    std::size_t window = 100;
    int bins = 100;
    std::string log_base = "2";
    std::string classical_mode = "truncated";
    std::vector<std::size_t> n_sweep;
    std::string out_dir = "out";
    std::string format = "csv";
    bool emit_gnuplot = false;

    chaos::LogBase base() const {
        return log_base == "e" ? chaos::LogBase::E : chaos::LogBase::Two;
    }
    classical::ClassicalOrbitMode mode() const {
        if (classical_mode == "extended") {
            // tail bits drawn from an independent stream of the same seed
            return classical::ClassicalOrbitMode::extended(
                RandomBitSource(seed).split(1).seed());
        }
        return classical::ClassicalOrbitMode::truncated();
    }

    void validate_orbits() const {
        if (n_qubits < 1) throw CLI::ValidationError("--n-qubits must be >= 1");
    }

    void validate_chaos() const {
        validate_orbits();
        if (bins < 2) throw CLI::ValidationError("--bins must be >= 2");
        if (window < 1) throw CLI::ValidationError("--window must be >= 1");
        if (steps < window) throw CLI::ValidationError("--steps must be >= --window");
    }

    io::HeaderEcho echo(const std::string& command) const {
        io::HeaderEcho h;
        h.emplace_back("command", command);
        h.emplace_back("n_qubits", std::to_string(n_qubits));
        h.emplace_back("seed", std::to_string(seed));
        h.emplace_back("steps", std::to_string(steps));
        h.emplace_back("window", std::to_string(window));
        h.emplace_back("bins", std::to_string(bins));
        h.emplace_back("log_base", log_base);
        h.emplace_back("classical_mode", classical_mode);
        return h;
    }

    json to_json() const {
        return json{{"n_qubits", n_qubits},   {"seed", seed},
                    {"steps", steps},         {"window", window},
                    {"bins", bins},           {"log_base", log_base},
                    {"classical_mode", classical_mode},
                    {"n_sweep", n_sweep},     {"out_dir", out_dir},
                    {"format", format}};
    }
};

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return os;
}

void write_orbit_file(const fs::path& path, const OrbitSeries& series,
                      const io::HeaderEcho& echo, const std::string& format) {
    auto os = open_out(path);
    if (format == "json") {
        json rows = json::array();
        for (std::size_t n = 0; n < series.length(); ++n) {
            rows.push_back({{"n", n},
                            {"value_exact", series.at(n).to_string()},
                            {"value_float", series.at(n).to_double()},
                            {"provenance", std::string(to_string(series.provenance))}});
        }
        json meta = json::object();
        for (const auto& [k, v] : echo) meta[k] = v;
        os << json{{"meta", meta}, {"rows", rows}}.dump(2) << "\n";
    } else {
        io::write_orbit_csv(os, series, echo);
    }
}

void write_chaos_file(const fs::path& path,
                      const std::vector<std::pair<std::size_t, double>>& series,
                      const ExperimentConfig& cfg, Provenance prov,
                      const io::HeaderEcho& echo) {
    auto os = open_out(path);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& [n, d] : series) {
            rows.push_back({{"n", n},
                            {"D", d},
                            {"W", cfg.window},
                            {"K", cfg.bins},
                            {"base", cfg.log_base},
                            {"orbit_provenance", std::string(to_string(prov))}});
        }
        json meta = json::object();
        for (const auto& [k, v] : echo) meta[k] = v;
        os << json{{"meta", meta}, {"rows", rows}}.dump(2) << "\n";
    } else {
        io::write_chaos_csv(os, series, cfg.window, cfg.bins, cfg.base(), prov, echo);
    }
}

void write_report(const fs::path& out_dir, const std::string& command,
                  const ExperimentConfig& cfg, const std::vector<std::string>& files,
                  const json& summary, double wall_ms) {
    json report{{"command", command},
                {"config", cfg.to_json()},
                {"outputs", files},
                {"summary", summary},
                {"wall_time_ms", wall_ms}};
    auto os = open_out(out_dir / "report.json");
    os << report.dump(2) << "\n";
}

BitString seeded_initial_string(const ExperimentConfig& cfg, std::size_t n_qubits) {
    RandomBitSource src(cfg.seed);
    return BitString::random(n_qubits, src);
}

int cmd_orbits(const ExperimentConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    fs::create_directories(cfg.out_dir);
    const BitString xi = seeded_initial_string(cfg, cfg.n_qubits);

    const auto quantum = closedform::quantum_orbit(xi, cfg.steps);
    const auto classic = classical::classical_q_orbit(xi, cfg.steps, cfg.mode());

    const std::string ext = cfg.format == "json" ? ".json" : ".csv";
    const fs::path qpath = fs::path(cfg.out_dir) / ("orbit_quantum" + ext);
    const fs::path cpath = fs::path(cfg.out_dir) / ("orbit_classical" + ext);
    auto echo = cfg.echo("orbits");
    echo.emplace_back("initial_string", xi.to_string());
    write_orbit_file(qpath, quantum, echo, cfg.format);
    write_orbit_file(cpath, classic, echo, cfg.format);

    if (cfg.emit_gnuplot) {
        auto gp = open_out(fs::path(cfg.out_dir) / "orbits.gp");
        gp << "set datafile separator ','\n"
           << "set xlabel 'n'\nset ylabel 'value'\n"
           << "plot 'orbit_quantum.csv' using 1:3 with points title 'quantum', \\\n"
           << "     'orbit_classical.csv' using 1:3 with points title 'classical'\n";
    }

    std::size_t agree = 0;
    while (agree < quantum.length() && quantum.at(agree) == classic.at(agree)) {
        ++agree;
    }
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_report(cfg.out_dir, "orbits", cfg, {qpath.string(), cpath.string()},
                 json{{"rows", quantum.length()},
                      {"initial_string", xi.to_string()},
                      {"initial_value", quantum.at(0).to_string()},
                      {"orbits_agree_through", agree == 0 ? 0 : agree - 1}},
                 wall);
    std::cout << "orbits: wrote " << quantum.length() << " rows to " << cfg.out_dir << "\n";
    return kExitOk;
}

int cmd_chaos(ExperimentConfig cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    fs::create_directories(cfg.out_dir);
    if (cfg.n_sweep.empty()) {
        cfg.n_sweep = {cfg.n_qubits};
    }

    const std::string ext = cfg.format == "json" ? ".json" : ".csv";
    std::vector<std::string> files;
    json per_n = json::array();

    const fs::path diff_path = fs::path(cfg.out_dir) / ("chaos_difference" + ext);
    std::vector<json> diff_rows;

    for (std::size_t n_qubits : cfg.n_sweep) {
        ExperimentConfig local = cfg;
        local.n_qubits = n_qubits;
        const BitString xi = seeded_initial_string(cfg, n_qubits);
        const auto quantum = closedform::quantum_orbit(xi, cfg.steps);
        const auto classic = classical::classical_q_orbit(xi, cfg.steps, cfg.mode());

        const chaos::Partition part{cfg.bins};
        const auto dq = chaos::chaos_degree_series(quantum, cfg.window, part, cfg.base());
        const auto dc = chaos::chaos_degree_series(classic, cfg.window, part, cfg.base());

        auto echo = local.echo("chaos");
        echo.emplace_back("initial_string", xi.to_string());
        const fs::path qpath =
            fs::path(cfg.out_dir) / ("chaos_quantum_N" + std::to_string(n_qubits) + ext);
        const fs::path cpath =
            fs::path(cfg.out_dir) / ("chaos_classical_N" + std::to_string(n_qubits) + ext);
        write_chaos_file(qpath, dq, cfg, quantum.provenance, echo);
        write_chaos_file(cpath, dc, cfg, classic.provenance, echo);
        files.push_back(qpath.string());
        files.push_back(cpath.string());

        // Fig. 4 analogue: the difference at the last complete window, whose
        // transition pairs end exactly at n = steps.
        const std::size_t final_start = cfg.steps - cfg.window;
        const double dq_final = dq.at(final_start).second;
        const double dc_final = dc.at(final_start).second;
        diff_rows.push_back(json{{"N", n_qubits},
                                 {"n_star", cfg.steps},
                                 {"window_start", final_start},
                                 {"D_q", dq_final},
                                 {"D_c", dc_final},
                                 {"abs_diff", std::abs(dq_final - dc_final)}});
        per_n.push_back(diff_rows.back());
    }

    {
        auto os = open_out(diff_path);
        if (cfg.format == "json") {
            os << json(diff_rows).dump(2) << "\n";
        } else {
            io::write_header(os, cfg.echo("chaos-difference"));
            os << "N,n_star,window_start,D_q,D_c,abs_diff\n";
            for (const auto& row : diff_rows) {
                os << row["N"].get<std::size_t>() << ',' << row["n_star"].get<std::size_t>()
                   << ',' << row["window_start"].get<std::size_t>() << ','
                   << io::format_double(row["D_q"].get<double>()) << ','
                   << io::format_double(row["D_c"].get<double>()) << ','
                   << io::format_double(row["abs_diff"].get<double>()) << '\n';
            }
        }
        files.push_back(diff_path.string());
    }

    if (cfg.emit_gnuplot) {
        auto gp = open_out(fs::path(cfg.out_dir) / "chaos.gp");
        gp << "set datafile separator ','\nset xlabel 'n'\nset ylabel 'D'\nplot \\\n";
        for (std::size_t i = 0; i < cfg.n_sweep.size(); ++i) {
            gp << "  'chaos_quantum_N" << cfg.n_sweep[i] << ".csv' using 1:2 with lines title 'D_q N="
               << cfg.n_sweep[i] << "', \\\n"
               << "  'chaos_classical_N" << cfg.n_sweep[i]
               << ".csv' using 1:2 with lines title 'D_c N=" << cfg.n_sweep[i] << "'"
               << (i + 1 < cfg.n_sweep.size() ? ", \\\n" : "\n");
        }
    }

    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_report(cfg.out_dir, "chaos", cfg, files, json{{"difference_table", per_n}}, wall);
    std::cout << "chaos: wrote " << files.size() << " files to " << cfg.out_dir << "\n";
    return kExitOk;
}

int cmd_verify(int max_qubits, std::uint64_t seed) {
    if (max_qubits > verify::kMaxVerifyQubits) {
        std::cerr << "error: verification sweep capped at --n-qubits <= "
                  << verify::kMaxVerifyQubits << "\n";
        return kExitConfigError;
    }
    const auto results = verify::run_verification(max_qubits, seed);
    bool all_ok = true;
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
        all_ok = all_ok && r.pass;
        std::printf("%-6s %-*s %s\n", r.pass ? "PASS" : "FAIL", static_cast<int>(width),
                    r.name.c_str(), r.detail.c_str());
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle_dump(const ExperimentConfig& cfg, const std::string& op) {
    fs::create_directories(cfg.out_dir);
    const int n_qubits = static_cast<int>(cfg.n_qubits);
    kern::Matrix m;
    if (op == "baker") {
        m = oracle::baker_unitary(n_qubits);
    } else if (op == "qft") {
        m = oracle::qft(n_qubits);
    } else if (op == "position") {
        m = oracle::position_operator(n_qubits);
    } else if (op == "momentum") {
        m = oracle::momentum_operator(n_qubits);
    } else if (op == "weyl-u") {
        m = oracle::weyl_pair(n_qubits).first;
    } else if (op == "weyl-v") {
        m = oracle::weyl_pair(n_qubits).second;
    } else {
        std::cerr << "error: unknown operator '" << op << "'\n";
        return kExitConfigError;
    }
    auto echo = cfg.echo("oracle-dump");
    echo.emplace_back("operator", op);
    const fs::path path =
        fs::path(cfg.out_dir) / ("operator_" + op + "_N" + std::to_string(n_qubits) + ".csv");
    auto os = open_out(path);
    io::write_operator_csv(os, m, echo);
    std::cout << "oracle-dump: wrote " << path.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantized baker's map: exact orbits, brute-force oracle, chaos degree"};
    app.require_subcommand(1);
    app.set_config("--config");

    ExperimentConfig cfg;

    auto add_common = [&cfg](CLI::App* sub, bool with_chaos_opts) {
        sub->add_option("--n-qubits", cfg.n_qubits, "qubit count N");
        sub->add_option("--seed", cfg.seed, "seed for the initial string and tails");
        sub->add_option("--steps", cfg.steps, "orbit length n_max");
        sub->add_option("--classical-mode", cfg.classical_mode, "truncated|extended")
            ->check(CLI::IsMember({"truncated", "extended"}));
        sub->add_option("--out-dir", cfg.out_dir, "output directory");
        sub->add_option("--format", cfg.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--emit-gnuplot", cfg.emit_gnuplot, "also write gnuplot scripts");
        if (with_chaos_opts) {
            sub->add_option("--window", cfg.window, "sliding window length W");
            sub->add_option("--bins", cfg.bins, "partition cell count K");
            sub->add_option("--log-base", cfg.log_base, "2|e")
                ->check(CLI::IsMember({"2", "e"}));
            sub->add_option("--n-sweep", cfg.n_sweep, "comma-separated N sweep")
                ->delimiter(',');
        }
    };

    auto* orbits = app.add_subcommand("orbits", "emit quantum and classical orbit series");
    add_common(orbits, false);

    auto* chaos_cmd = app.add_subcommand("chaos", "chaos-degree series and difference table");
    add_common(chaos_cmd, true);

    int verify_max = 8;
    std::uint64_t verify_seed = 20020906;
    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force verification suite");
    verify_cmd->add_option("--n-qubits", verify_max, "largest qubit count in the sweep");
    verify_cmd->add_option("--seed", verify_seed, "seed for the random strings");

    std::string dump_op = "baker";
    auto* dump = app.add_subcommand("oracle-dump", "write a dense operator as CSV");
    dump->add_option("--n-qubits", cfg.n_qubits, "qubit count N");
    dump->add_option("--operator", dump_op, "baker|qft|position|momentum|weyl-u|weyl-v");
    dump->add_option("--out-dir", cfg.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (orbits->parsed()) {
            cfg.validate_orbits();
            return cmd_orbits(cfg);
        }
        if (chaos_cmd->parsed()) {
            cfg.validate_chaos();
            for (std::size_t n : cfg.n_sweep) {
                if (n < 1) throw CLI::ValidationError("--n-sweep entries must be >= 1");
            }
            return cmd_chaos(cfg);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_max, verify_seed);
        }
        if (dump->parsed()) {
            if (cfg.n_qubits < 1 || cfg.n_qubits > oracle::kMaxDenseQubits) {
                std::cerr << "error: --n-qubits must be in [1, " << oracle::kMaxDenseQubits
                          << "] for dense dumps\n";
                return kExitConfigError;
            }
            return cmd_oracle_dump(cfg, dump_op);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
