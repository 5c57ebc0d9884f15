// Command-line front end: verify (run the check suites), spectrum
// (diagonalize a deformed chain), partition (print partition-function
// values against the enumeration oracle), report (re-render a saved
// report.json to CSV).
//
// Exit codes: 0 all checks pass, 1 any check failed, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spinvertex/suite.hpp"

namespace sv = spinvertex;

namespace {

struct CliOptions {
    std::string config_file;
    std::string model;
    int n = -1;
    double xi = 0.0;
    double q = 0.0;
    std::string x0 = "";
    std::vector<int> L;
    int samples = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tol = 0.0;
    std::string out;
    int km_offset = 0;
    bool km_offset_set = false;
};

sv::Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return sv::Complex(std::stod(s), 0.0);
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

// Config file first, then flags override.
sv::SuiteConfig build_config(const CliOptions& o) {
    sv::SuiteConfig cfg;
    if (!o.config_file.empty()) {
        std::ifstream is(o.config_file);
        if (!is) throw sv::ConfigError("cannot read config file " + o.config_file);
        nlohmann::json j;
        try {
            is >> j;
        } catch (const std::exception& e) {
            throw sv::ConfigError(std::string("config parse error: ") + e.what());
        }
        if (j.contains("model")) cfg.model = j["model"].get<std::string>();
        if (j.contains("n")) cfg.n = j["n"].get<int>();
        if (j.contains("xi")) cfg.xi = j["xi"].get<double>();
        if (j.contains("q")) cfg.q = j["q"].get<double>();
        if (j.contains("x0"))
            cfg.x0 = {j["x0"][0].get<double>(), j["x0"][1].get<double>()};
        if (j.contains("km_offset")) cfg.km_offset = j["km_offset"].get<int>();
        if (j.contains("L_list")) cfg.L_list = j["L_list"].get<std::vector<int>>();
        if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("tol_identity"))
            cfg.tol_identity = j["tol_identity"].get<double>();
        if (j.contains("tol_fd")) cfg.tol_fd = j["tol_fd"].get<double>();
        if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    }
    if (!o.model.empty()) cfg.model = o.model;
    if (o.n >= 0) cfg.n = o.n;
    if (o.xi != 0.0) cfg.xi = o.xi;
    if (o.q != 0.0) cfg.q = o.q;
    if (!o.x0.empty()) cfg.x0 = parse_complex(o.x0);
    if (!o.L.empty()) cfg.L_list = o.L;
    if (o.samples >= 0) cfg.samples = o.samples;
    if (o.seed_set) cfg.seed = o.seed;
    if (o.tol > 0.0) cfg.tol_identity = o.tol;
    if (!o.out.empty()) cfg.out_dir = o.out;
    if (o.km_offset_set) cfg.km_offset = o.km_offset;
    return cfg;
}

void add_common_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--config", o.config_file, "JSON config file");
    cmd->add_option("--model", o.model, "potts | at | at_iso | fz | km");
    cmd->add_option("--n", o.n, "state count");
    cmd->add_option("--xi", o.xi, "Ashkin-Teller parameter xi");
    cmd->add_option("--q", o.q, "elliptic nome (real, in (0,1))");
    cmd->add_option("--x0", o.x0, "base rapidity as 're,im'");
    cmd->add_option("--L", o.L, "lattice sizes");
    cmd->add_option("--samples", o.samples, "random tuples per check");
    cmd->add_option("--seed", o.seed, "RNG seed")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_option("--tol", o.tol, "identity-check tolerance");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--km-offset", o.km_offset,
                    "Kashiwara-Miwa spin-label offset")
        ->each([&o](const std::string&) { o.km_offset_set = true; });
}

int cmd_verify(const CliOptions& o) {
    const sv::SuiteConfig cfg = build_config(o);
    const sv::Report rep = sv::run_suite(cfg);
    sv::emit_report(rep, cfg.out_dir);
    for (const auto& c : rep.checks)
        std::printf("%-28s %-12s residual=%.3e tol=%.1e %s\n",
                    c.check_name.c_str(), c.model_tag.c_str(), c.residual,
                    c.tolerance, c.pass ? "PASS" : "FAIL");
    std::printf("summary: %d total, %d passed, %d failed\n", rep.total,
                rep.passed, rep.failed);
    return rep.failed == 0 ? 0 : 1;
}

int cmd_spectrum(const CliOptions& o) {
    const sv::SuiteConfig cfg = build_config(o);
    cfg.validate();
    const int L = cfg.L_list.empty() ? 2 : cfg.L_list.front();
    sv::ChainOperator chain;
    if (cfg.model == "potts")
        chain = sv::potts_chain(cfg.n, cfg.x0, L);
    else if (cfg.model == "at_iso" || cfg.model == "at")
        chain = sv::at_chain(cfg.xi, cfg.x0, L);
    else
        throw sv::ConfigError("spectrum: no explicit chain for model '" +
                              cfg.model + "'");
    const auto ev = sv::diagonalize_hermitian(chain);
    const std::string label = chain.label + "_L" + std::to_string(L);
    sv::emit_spectrum(ev, label, cfg.out_dir);
    for (double e : ev) std::printf("%.17g\n", e);
    return 0;
}

int cmd_partition(const CliOptions& o) {
    const sv::SuiteConfig cfg = build_config(o);
    cfg.validate();
    const sv::SpinModel model = sv::model_from_config(cfg);
    const sv::Complex x = cfg.x0;
    bool ok = true;
    for (int L : cfg.L_list) {
        if (std::pow(double(model.n), L) > 4096) continue;
        const sv::LatticeSize size{L};
        const sv::Complex z_dia =
            sv::partition_trace(sv::transfer_dia(model, x, size), L);
        const sv::Complex z_row = sv::partition_trace(
            sv::transfer_row(model, x, sv::Complex(0.0), size), L);
        std::printf("L=%d Z_dia=%s Z_row=%s", L,
                    sv::complex_to_string(z_dia).c_str(),
                    sv::complex_to_string(z_row).c_str());
        const double rel = std::abs(z_dia - z_row) / std::max(std::abs(z_dia), 1e-300);
        ok = ok && rel < 1e-10;
        if (std::pow(double(model.n), double(L) * L) <= 1e6) {
            const sv::Complex z_bf = sv::brute_force_partition(model, x, size);
            std::printf(" Z_oracle=%s", sv::complex_to_string(z_bf).c_str());
            ok = ok && std::abs(z_dia - z_bf) / std::max(std::abs(z_dia), 1e-300) < 1e-10;
        }
        std::printf(" rel_dev=%.3e\n", rel);
    }
    return ok ? 0 : 1;
}

int cmd_report(const std::string& in_json, const std::string& out_dir) {
    std::ifstream is(in_json);
    if (!is) throw sv::ConfigError("cannot read " + in_json);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw sv::ConfigError(std::string("report parse error: ") + e.what());
    }
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    std::ofstream os(fs::path(out_dir) / "residuals.csv");
    if (!os) throw std::runtime_error("cannot write residuals.csv in " + out_dir);
    os << "check,model,inputs,residual,tolerance,pass\n";
    os.precision(17);
    for (const auto& c : j.at("checks")) {
        std::ostringstream in;
        bool first = true;
        for (const auto& inp : c.at("inputs")) {
            if (!first) in << ";";
            first = false;
            in << inp.at("name").get<std::string>() << "="
               << sv::complex_to_string({inp.at("value")[0].get<double>(),
                                         inp.at("value")[1].get<double>()});
        }
        os << c.at("check").get<std::string>() << ","
           << c.at("model").get<std::string>() << "," << in.str() << ","
           << c.at("residual").get<double>() << ","
           << c.at("tolerance").get<double>() << ","
           << (c.at("pass").get<bool>() ? "true" : "false") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-vertex correspondence verification workbench"};
    app.require_subcommand(1);

    CliOptions vo, so, po;
    std::string report_in, report_out = ".";

    CLI::App* verify = app.add_subcommand("verify", "run the check suites");
    add_common_flags(verify, vo);
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "diagonalize a deformed chain");
    add_common_flags(spectrum, so);
    CLI::App* partition =
        app.add_subcommand("partition", "partition-function values and oracle");
    add_common_flags(partition, po);
    CLI::App* report =
        app.add_subcommand("report", "re-render a saved report.json to CSV");
    report->add_option("--in", report_in, "saved report.json")->required();
    report->add_option("--out", report_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(vo);
        if (spectrum->parsed()) return cmd_spectrum(so);
        if (partition->parsed()) return cmd_partition(po);
        if (report->parsed()) return cmd_report(report_in, report_out);
    } catch (const sv::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
