#pragma once

// Batch runner: builds a model from a SuiteConfig, executes the check suites
// in a fixed order, and serializes machine-readable reports (report.json,
// residuals.csv, spectrum_*.csv).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinvertex/checks.hpp"
#include "spinvertex/quantum_chains.hpp"

namespace spinvertex {

using nlohmann::json;

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteConfig {
    std::string model;              // potts | at | at_iso | fz | km
    int n = 0;
    double xi = 0.0;
    double q = 0.0;
    Complex x0{0.0, 0.1};
    int km_offset = 0;
    std::vector<int> L_list{1, 2, 3, 4};
    int samples = 5;
    std::uint64_t seed = 42;
    double tol_identity = 1e-9;
    double tol_fd = 1e-6;
    std::string out_dir = ".";

    void validate() const {
        if (model != "potts" && model != "at" && model != "at_iso" &&
            model != "fz" && model != "km")
            throw ConfigError("unknown model '" + model + "'");
        if (model == "potts" || model == "fz" || model == "km") {
            if (n < 2) throw ConfigError("model '" + model + "' requires --n >= 2");
        }
        if (model == "at" || model == "at_iso") {
            if (xi == 0.0) throw ConfigError("model '" + model + "' requires --xi");
        }
        if (model == "at" || model == "km") {
            if (!(q > 0.0 && q < 1.0))
                throw ConfigError("model '" + model + "' requires --q in (0,1)");
        }
        if (samples < 1) throw ConfigError("--samples must be >= 1");
        for (int L : L_list)
            if (L < 1) throw ConfigError("--L entries must be >= 1");
    }
};

inline SpinModel model_from_config(const SuiteConfig& cfg) {
    if (cfg.model == "potts") return make_potts(cfg.n);
    if (cfg.model == "at") return make_ashkin_teller(cfg.xi, Nome(Complex(cfg.q)));
    if (cfg.model == "at_iso") return make_ashkin_teller_isotropic(cfg.xi);
    if (cfg.model == "fz") return make_fz(cfg.n);
    if (cfg.model == "km")
        return make_km(cfg.n, Nome(Complex(cfg.q)), cfg.km_offset);
    throw ConfigError("unknown model '" + cfg.model + "'");
}

struct Report {
    SuiteConfig config;
    std::vector<CheckResult> checks;
    std::vector<double> wall_ms;    // parallel to checks, excluded from stability
    int total = 0, passed = 0, failed = 0;
};

inline int chain_length(int n) {
    int L = 1;
    long d = n;
    while (L < 4 && d * n <= 256) {
        d *= n;
        ++L;
    }
    return L;
}

// Runs every applicable check suite in a fixed, documented order.
inline Report run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    const SpinModel model = model_from_config(cfg);
    Report rep;
    rep.config = cfg;

    auto timed = [&rep](CheckResult r, std::chrono::steady_clock::time_point t0) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        rep.wall_ms.push_back(
            std::chrono::duration<double, std::milli>(dt).count());
        rep.checks.push_back(std::move(r));
    };
    auto run = [&](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        timed(fn(), t0);
    };

    const double tol = cfg.tol_identity;

    run([&] { return check_weight_axioms(model, cfg.samples, cfg.seed); });

    {
        RapiditySampler s1(model, cfg.seed + 1);
        for (int i = 0; i < cfg.samples; ++i) {
            const Complex x = s1.draw_tuple(1)[0];
            run([&] { return check_inversion(model, x, tol); });
        }
    }
    {
        RapiditySampler s2(model, cfg.seed + 2);
        for (int i = 0; i < cfg.samples; ++i) {
            const auto t = s2.draw_tuple(2);
            run([&] { return check_star_triangle(model, t[0], t[1], tol); });
        }
    }
    {
        RapiditySampler s3(model, cfg.seed + 3);
        for (int i = 0; i < cfg.samples; ++i) {
            const auto t = s3.draw_tuple(2);
            run([&] { return check_yb_algebra(model, t[0], t[1], tol); });
        }
    }
    {
        RapiditySampler s4(model, cfg.seed + 4);
        for (int i = 0; i < cfg.samples; ++i) {
            const auto t = s4.draw_tuple(2);
            run([&] { return check_unitarity(model, t[0], t[1], tol); });
        }
    }
    {
        RapiditySampler s5(model, cfg.seed + 5);
        for (int i = 0; i < cfg.samples; ++i) {
            const auto t = s5.draw_tuple(3);
            run([&] { return check_ybe(model, t[0], t[1], t[2], tol); });
        }
    }
    {
        RapiditySampler s6(model, cfg.seed + 6);
        for (int i = 0; i < cfg.samples; ++i) {
            const auto t = s6.draw_tuple(3);
            run([&] { return check_ybe_reduced(model, t[0], t[1], t[2], tol); });
        }
    }
    if (model.reflection_symmetric) {
        RapiditySampler s7(model, cfg.seed + 7);
        for (int i = 0; i < cfg.samples; ++i) {
            const auto t = s7.draw_tuple(3);
            run([&] {
                return check_double_rapidity_reduction(model, t[0], t[1], t[2]);
            });
        }
    }
    {
        RapiditySampler s8(model, cfg.seed + 8);
        const auto t = s8.draw_tuple(2);
        for (int L : cfg.L_list) {
            if (std::pow(double(model.n), L) > 4096) continue;
            run([&] { return check_transfer_commutation(model, t[0], t[1], L); });
            run([&] { return check_partition_equality(model, t[0], L); });
        }
    }

    // Temperley-Lieb suite (Potts only)
    if (cfg.model == "potts") {
        RapiditySampler s9(model, cfg.seed + 9);
        run([&] {
            const auto gens = tl_generators(cfg.n, 3);
            const double root = std::sqrt(double(cfg.n));
            double res = 0.0;
            for (std::size_t a = 0; a < gens.size(); ++a) {
                const CMatrix& ea = gens[a].matrix;
                res = std::max(res, max_abs(ea * ea - root * ea));
                for (std::size_t b = 0; b < gens.size(); ++b) {
                    const CMatrix& eb = gens[b].matrix;
                    if (std::abs(long(a) - long(b)) == 1)
                        res = std::max(res, max_abs(ea * eb * ea - ea));
                    else if (std::abs(long(a) - long(b)) >= 2)
                        res = std::max(res, max_abs(ea * eb - eb * ea));
                }
            }
            return CheckResult::make("tl_relations", model, {}, res, 1e-12);
        });
        for (int i = 0; i < cfg.samples; ++i) {
            const auto t = s9.draw_tuple(2);
            run([&] {
                const double res = max_abs(potts_r_tl(cfg.n, t[0], t[1]) -
                                           r_matrix(model, t[0], t[1]));
                return CheckResult::make("tl_r_match", model,
                                         {{"x", t[0]}, {"y", t[1]}}, res, 1e-12);
            });
        }
    }

    // chain construction, hermiticity, affine match, commutation
    {
        const int L = chain_length(model.n);
        const ChainOperator hfd = hamiltonian_from_transfer(model, cfg.x0, L);

        if (cfg.model == "potts" || cfg.model == "at_iso") {
            const ChainOperator chain =
                (cfg.model == "potts")
                    ? potts_chain(cfg.n, cfg.x0, L)
                    : at_chain(cfg.xi, cfg.x0, L);
            if (std::abs(cfg.x0.real()) < 1e-14) {
                run([&] {
                    const double res = max_abs(chain.matrix -
                                               chain.matrix.adjoint().eval());
                    return CheckResult::make("chain_hermiticity", model,
                                             {{"x0", cfg.x0}}, res, 1e-10);
                });
            }
            run([&] {
                const AffineMatch fit = affine_match(hfd.matrix, chain.matrix);
                CheckResult r = CheckResult::make(
                    "chain_affine_match", model,
                    {{"x0", cfg.x0}, {"L", Complex(L)}}, fit.residual, cfg.tol_fd);
                r.estimated_scalars = {{"alpha", fit.alpha}, {"beta", fit.beta}};
                return r;
            });
        }
        {
            RapiditySampler s10(model, cfg.seed + 10);
            const Complex x = cfg.x0 + s10.draw_tuple(1)[0];
            run([&] {
                const CMatrix t = transfer_row(model, x, cfg.x0, LatticeSize{L});
                const CMatrix ht = hfd.matrix * t;
                const double scale = std::max(max_abs(ht), 1e-300);
                const double res = max_abs(ht - t * hfd.matrix) / scale;
                return CheckResult::make("chain_transfer_commutation", model,
                                         {{"x", x}, {"x0", cfg.x0}}, res,
                                         cfg.tol_fd);
            });
        }
    }

    rep.total = int(rep.checks.size());
    for (const auto& c : rep.checks)
        (c.pass ? rep.passed : rep.failed)++;
    return rep;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline std::string complex_to_string(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline json check_to_json(const CheckResult& c) {
    json in = json::array();
    for (const auto& [name, v] : c.inputs)
        in.push_back({{"name", name}, {"value", complex_to_json(v)}});
    json est = json::object();
    for (const auto& [name, v] : c.estimated_scalars)
        est[name] = complex_to_json(v);
    return {{"check", c.check_name},     {"model", c.model_tag},
            {"inputs", in},              {"residual", c.residual},
            {"tolerance", c.tolerance},  {"pass", c.pass},
            {"inconclusive", c.inconclusive}, {"estimated_scalars", est}};
}

inline json config_to_json(const SuiteConfig& cfg) {
    return {{"model", cfg.model},       {"n", cfg.n},
            {"xi", cfg.xi},             {"q", cfg.q},
            {"x0", complex_to_json(cfg.x0)}, {"km_offset", cfg.km_offset},
            {"L_list", cfg.L_list},     {"samples", cfg.samples},
            {"seed", cfg.seed},         {"tol_identity", cfg.tol_identity},
            {"tol_fd", cfg.tol_fd}};
}

// include_timing=false yields the byte-stable portion used by determinism
// comparisons.
inline json report_to_json(const Report& rep, bool include_timing = true) {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back(check_to_json(c));
    json j = {{"schema_version", 1},
              {"config", config_to_json(rep.config)},
              {"checks", checks},
              {"summary",
               {{"total", rep.total}, {"passed", rep.passed}, {"failed", rep.failed}}}};
    if (include_timing) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        json timing = {{"timestamp_ms",
                        std::chrono::duration_cast<std::chrono::milliseconds>(now)
                            .count()},
                       {"wall_ms", rep.wall_ms}};
        j["timing"] = timing;
    }
    return j;
}

inline void emit_report(const Report& rep, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const fs::path dir(out_dir);

    {
        std::ofstream os(dir / "report.json");
        if (!os) throw std::runtime_error("cannot write " + (dir / "report.json").string());
        os << report_to_json(rep).dump(2) << "\n";
    }
    {
        std::ofstream os(dir / "residuals.csv");
        if (!os) throw std::runtime_error("cannot write " + (dir / "residuals.csv").string());
        os << "check,model,inputs,residual,tolerance,pass\n";
        os.precision(17);
        for (const auto& c : rep.checks) {
            std::ostringstream in;
            for (std::size_t i = 0; i < c.inputs.size(); ++i) {
                if (i) in << ";";
                in << c.inputs[i].first << "=" << complex_to_string(c.inputs[i].second);
            }
            os << c.check_name << "," << c.model_tag << "," << in.str() << ","
               << c.residual << "," << c.tolerance << ","
               << (c.pass ? "true" : "false") << "\n";
        }
    }
}

inline void emit_spectrum(const std::vector<double>& eigenvalues,
                          const std::string& label, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const fs::path path = fs::path(out_dir) / ("spectrum_" + label + ".csv");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << "index,eigenvalue\n";
    os.precision(17);
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        os << i << "," << eigenvalues[i] << "\n";
}

} // namespace spinvertex
