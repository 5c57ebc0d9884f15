// Acceptance harness: runs the headline guarantees end to end and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include "spinvertex/checks.hpp"
#include "spinvertex/quantum_chains.hpp"
#include "spinvertex/sampling.hpp"
#include "spinvertex/suite.hpp"

#include <cstdio>
#include <iostream>
#include <set>

using namespace spinvertex;

namespace {

int g_failures = 0;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

void report(int idx, const std::string& name, bool pass,
            const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << idx << ": "
              << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

std::vector<SpinModel> model_roster() {
    std::vector<SpinModel> models;
    for (int n : {2, 3, 4, 5}) models.push_back(make_potts(n));
    models.push_back(make_ashkin_teller(0.3, Nome(Complex(0.15))));
    models.push_back(make_ashkin_teller_isotropic(0.4));
    for (int n : {2, 3, 4, 5}) models.push_back(make_fz(n));
    for (int n : {2, 3, 4}) models.push_back(make_km(n, Nome(Complex(0.2))));
    return models;
}

// -- 1: identity suite ------------------------------------------------------
void criterion_identities() {
    double worst = 0.0;
    std::string worst_at;
    for (const SpinModel& m : model_roster()) {
        RapiditySampler sampler(m, 1001);
        for (int s = 0; s < 20; ++s) {
            const auto t = sampler.draw_tuple(3);
            const CheckResult rs[] = {
                check_inversion(m, t[0]),
                check_star_triangle(m, t[0], t[1]),
                check_yb_algebra(m, t[0], t[1]),
                check_unitarity(m, t[0], t[1]),
                check_ybe(m, t[0], t[1], t[2]),
                check_ybe_reduced(m, t[0], t[1], t[2]),
            };
            for (const CheckResult& r : rs)
                if (!r.inconclusive && r.residual > worst) {
                    worst = r.residual;
                    worst_at = r.check_name + "@" + r.model_tag;
                }
        }
    }
    report(1, "six identity families < 1e-9 on 12 models x 20 tuples",
           worst < 1e-9, "max residual " + sci(worst) + " at " + worst_at);
}

// -- 2: structural counts ---------------------------------------------------
int distinct_count(const CMatrix& r, double tol, int* nonzeros = nullptr) {
    std::vector<Complex> seen;
    int nnz = 0;
    for (long i = 0; i < r.rows(); ++i)
        for (long j = 0; j < r.cols(); ++j) {
            const Complex v = r(i, j);
            if (std::abs(v) <= tol) continue;
            ++nnz;
            bool found = false;
            for (const Complex& w : seen)
                if (std::abs(v - w) <= tol) {
                    found = true;
                    break;
                }
            if (!found) seen.push_back(v);
        }
    if (nonzeros) *nonzeros = nnz;
    return int(seen.size());
}

void criterion_structure() {
    const SpinModel at = make_ashkin_teller(0.3, Nome(Complex(0.15)));
    RapiditySampler sampler(at, 1002);
    const auto xy = sampler.draw_tuple(2);
    int nnz = 0;
    const int distinct = distinct_count(r_matrix(at, xy[0], xy[1]), 1e-8, &nnz);

    const SpinModel iso = make_ashkin_teller_isotropic(0.4);
    RapiditySampler sampler2(iso, 1003);
    const auto xy2 = sampler2.draw_tuple(2);
    const int distinct_iso = distinct_count(r_matrix(iso, xy2[0], xy2[1]), 1e-8);

    report(2, "ashkin-teller r-matrix structure: 64 nonzero, 16 distinct, 10 isotropic",
           nnz == 64 && distinct == 16 && distinct_iso == 10,
           std::to_string(nnz) + " nonzero, " + std::to_string(distinct) +
               " distinct, " + std::to_string(distinct_iso) + " isotropic");
}

// -- 3: partition-function equivalences -------------------------------------
void criterion_partition() {
    bool ok = true;
    double worst = 0.0;
    for (int n : {2, 3})
        for (int L : {1, 2, 3, 4}) {
            const SpinModel m = make_potts(n);
            RapiditySampler sampler(m, 1004);
            const CheckResult r = check_partition_equality(
                m, sampler.draw_tuple(1)[0], L);
            ok = ok && r.pass;
            worst = std::max(worst, r.residual);
        }
    report(3, "Tr(T_dia^L) = Tr(T_row^L) (+ brute-force oracle) < 1e-10",
           ok && worst < 1e-10, "max relative deviation " + sci(worst));
}

// -- 4: temperley-lieb theorem ----------------------------------------------
void criterion_tl() {
    double worst = 0.0;
    for (int n : {2, 3, 4, 5}) {
        const SpinModel m = make_potts(n);
        RapiditySampler sampler(m, 1005);
        for (int s = 0; s < 20; ++s) {
            const auto xy = sampler.draw_tuple(2);
            worst = std::max(worst,
                             (r_matrix(m, xy[0], xy[1]) -
                              potts_r_tl(n, xy[0], xy[1]))
                                 .cwiseAbs()
                                 .maxCoeff());
        }
        // algebra relations on three strands
        const auto gens = tl_generators(n, 2);
        const double root = std::sqrt(double(n));
        for (std::size_t a = 0; a < gens.size(); ++a) {
            const CMatrix& ea = gens[a].matrix;
            worst = std::max(worst, (ea * ea - root * ea).cwiseAbs().maxCoeff());
            for (std::size_t b = 0; b < gens.size(); ++b) {
                if (a == b) continue;
                const CMatrix& eb = gens[b].matrix;
                if (std::abs(long(a) - long(b)) == 1)
                    worst = std::max(worst,
                                     (ea * eb * ea - ea).cwiseAbs().maxCoeff());
                else
                    worst = std::max(worst,
                                     (ea * eb - eb * ea).cwiseAbs().maxCoeff());
            }
        }
    }
    report(4, "temperley-lieb r-matrix form and relations < 1e-12",
           worst < 1e-12, "max residual " + sci(worst));
}

// -- 5: chain consistency ----------------------------------------------------
void criterion_chains() {
    const Complex x0(0.0, 0.1);
    bool ok = true;
    double worst_fit = 0.0;

    struct Case {
        SpinModel model;
        ChainOperator chain;
        int L;
    };
    std::vector<Case> cases;
    cases.push_back({make_potts(2), potts_chain(2, x0, 4), 4});
    cases.push_back({make_potts(3), potts_chain(3, x0, 3), 3});
    cases.push_back({make_ashkin_teller_isotropic(0.4), at_chain(0.4, x0, 3), 3});

    for (const Case& c : cases) {
        const ChainOperator ht = hamiltonian_from_transfer(c.model, x0, c.L);
        const AffineMatch fit = affine_match(ht.matrix, c.chain.matrix);
        worst_fit = std::max(worst_fit, fit.residual);
        ok = ok && fit.residual < 1e-6;

        const double rc = affine_match(
            hamiltonian_from_transfer(c.model, x0, c.L, 2e-2).matrix,
            c.chain.matrix).residual;
        const double rf = affine_match(
            hamiltonian_from_transfer(c.model, x0, c.L, 1e-2).matrix,
            c.chain.matrix).residual;
        ok = ok && (rf * 4.0 <= rc);

        RapiditySampler sampler(c.model, 1006);
        const Complex x = x0 + sampler.draw_tuple(1)[0];
        const CMatrix t = transfer_row(c.model, x, x0, LatticeSize{c.L});
        const CMatrix& h = c.chain.matrix;
        const double comm = (h * t - t * h).cwiseAbs().maxCoeff() /
                            (h * t).cwiseAbs().maxCoeff();
        ok = ok && comm < 1e-6;
    }
    report(5, "explicit chains match transfer hamiltonians (affine, < 1e-6)",
           ok, "max fit residual " + sci(worst_fit));
}

// -- 6: hermiticity -----------------------------------------------------------
void criterion_hermiticity() {
    const Complex x0(0.0, 0.13);
    bool ok = true;
    for (int n : {2, 3, 4})
        ok = ok && is_hermitian(potts_chain(n, x0, 3).matrix, 1e-10);
    ok = ok && is_hermitian(at_chain(0.35, x0, 2).matrix, 1e-10);
    report(6, "deformed chains hermitian at purely imaginary x0 (1e-10)", ok);
}

// -- 7: degeneration reductions ----------------------------------------------
void criterion_reductions() {
    double worst = 0.0;
    for (const SpinModel& m : model_roster()) {
        RapiditySampler sampler(m, 1007);
        const Complex x = sampler.draw_tuple(1)[0];
        const CMatrix p = permutator(m.n);
        worst = std::max(worst, (r_matrix(m, x, Complex(0.0)) - lax(m, x))
                                    .cwiseAbs()
                                    .maxCoeff());
        worst = std::max(worst,
                         (r_matrix(m, x, x) - p).cwiseAbs().maxCoeff());
        worst = std::max(worst,
                         (lax(m, Complex(0.0)) - p).cwiseAbs().maxCoeff());
    }
    report(7, "boundary reductions R(x,0)=L(x), R(x,x)=P, L(0)=P < 1e-12",
           worst < 1e-12, "max residual " + sci(worst));
}

// -- 8: double-rapidity specialization ---------------------------------------
void criterion_double_rapidity() {
    double worst = 0.0;
    bool any = false;
    for (const SpinModel& m : model_roster()) {
        if (!m.reflection_symmetric) continue;
        RapiditySampler sampler(m, 1008);
        const auto t = sampler.draw_tuple(3);
        // two distinct base points: the result must not depend on y1
        for (const Complex y1 : {t[2], t[2] + Complex(0.011, -0.007)}) {
            const CheckResult r =
                check_double_rapidity_reduction(m, t[0], t[1], y1);
            if (r.inconclusive) continue;
            any = true;
            worst = std::max(worst, r.residual);
        }
    }
    report(8, "double-rapidity lax specialization equals rho1(y) R < 1e-10",
           any && worst < 1e-10, "max residual " + sci(worst));
}

// -- 9: determinism -----------------------------------------------------------
void criterion_determinism() {
    SuiteConfig cfg;
    cfg.model = "potts";
    cfg.n = 3;
    cfg.L_list = {1, 2};
    cfg.samples = 3;
    cfg.seed = 42;
    const std::string a = report_to_json(run_suite(cfg), false).dump(2);
    const std::string b = report_to_json(run_suite(cfg), false).dump(2);
    report(9, "byte-identical report.json across reruns (timing excluded)",
           a == b);
}

} // namespace

int main() {
    criterion_identities();
    criterion_structure();
    criterion_partition();
    criterion_tl();
    criterion_chains();
    criterion_hermiticity();
    criterion_reductions();
    criterion_double_rapidity();
    criterion_determinism();
    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " +
                                        std::to_string(g_failures) +
                                        " criteria failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
