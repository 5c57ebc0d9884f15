#include <catch2/catch_amalgamated.hpp>

#include "spinvertex/checks.hpp"
#include "spinvertex/sampling.hpp"

using namespace spinvertex;

namespace {

std::vector<SpinModel> sample_models() {
    return {make_potts(2), make_potts(3), make_ashkin_teller(0.3, Nome(Complex(0.15))),
            make_ashkin_teller_isotropic(0.4), make_fz(3),
            make_km(2, Nome(Complex(0.2))), make_km(3, Nome(Complex(0.2)))};
}

} // namespace

TEST_CASE("weight axioms pass for every family") {
    for (const SpinModel& m : sample_models()) {
        INFO(m.params.tag << " n=" << m.n);
        const CheckResult r = check_weight_axioms(m, 10, 3);
        CHECK(r.pass);
        CHECK(r.residual < 1e-12);
    }
}

TEST_CASE("inversion check estimates the closed-form scalars") {
    for (const SpinModel& m : sample_models()) {
        INFO(m.params.tag << " n=" << m.n);
        RapiditySampler sampler(m, 11);
        const Complex x = sampler.draw_tuple(1)[0];
        const CheckResult r = check_inversion(m, x);
        CHECK(r.pass);
        CHECK(r.residual < 1e-9);
        CHECK(std::abs(r.estimated_scalars.at("rho1") - m.rho1(x)) < 1e-9);
        CHECK(std::abs(r.estimated_scalars.at("rho2") - m.rho2(x)) < 1e-9);
    }
}

TEST_CASE("star-triangle relations") {
    for (const SpinModel& m : sample_models()) {
        INFO(m.params.tag << " n=" << m.n);
        RapiditySampler sampler(m, 13);
        for (int s = 0; s < 5; ++s) {
            const auto xy = sampler.draw_tuple(2);
            const CheckResult r = check_star_triangle(m, xy[0], xy[1]);
            CHECK(r.pass);
            CHECK_FALSE(r.inconclusive);
            CHECK(r.residual < 1e-9);
        }
    }
}

TEST_CASE("yang-baxter algebra with the lax operator") {
    for (const SpinModel& m : sample_models()) {
        INFO(m.params.tag << " n=" << m.n);
        RapiditySampler sampler(m, 17);
        for (int s = 0; s < 5; ++s) {
            const auto xy = sampler.draw_tuple(2);
            const CheckResult r = check_yb_algebra(m, xy[0], xy[1]);
            CHECK(r.pass);
            CHECK(r.residual < 1e-9);
        }
    }
}

TEST_CASE("unitarity of the r-matrix") {
    for (const SpinModel& m : sample_models()) {
        INFO(m.params.tag << " n=" << m.n);
        RapiditySampler sampler(m, 19);
        for (int s = 0; s < 5; ++s) {
            const auto xy = sampler.draw_tuple(2);
            const CheckResult r = check_unitarity(m, xy[0], xy[1]);
            CHECK(r.pass);
            CHECK(r.residual < 1e-9);
        }
    }
}

TEST_CASE("three-rapidity yang-baxter equation") {
    for (const SpinModel& m : sample_models()) {
        INFO(m.params.tag << " n=" << m.n);
        RapiditySampler sampler(m, 23);
        for (int s = 0; s < 3; ++s) {
            const auto xyz = sampler.draw_tuple(3);
            const CheckResult full = check_ybe(m, xyz[0], xyz[1], xyz[2]);
            CHECK(full.pass);
            CHECK(full.residual < 1e-9);
            const CheckResult red =
                check_ybe_reduced(m, xyz[0], xyz[1], xyz[2]);
            CHECK(red.pass);
            CHECK(red.residual < 1e-9);
        }
    }
}

TEST_CASE("ybe at z = 0 coincides with the algebra check, bit for bit") {
    for (const SpinModel& m : {make_potts(3), make_fz(4),
                               make_ashkin_teller(0.3, Nome(Complex(0.15)))}) {
        INFO(m.params.tag);
        RapiditySampler sampler(m, 29);
        const auto xy = sampler.draw_tuple(2);
        const CheckResult a = check_ybe(m, xy[0], xy[1], Complex(0.0));
        const CheckResult b = check_yb_algebra(m, xy[0], xy[1]);
        CHECK(a.residual == b.residual);
    }
}

TEST_CASE("transfer commutation and partition equalities") {
    for (const SpinModel& m : {make_potts(2), make_potts(3), make_fz(3)}) {
        INFO(m.params.tag << " n=" << m.n);
        RapiditySampler sampler(m, 31);
        const auto pts = sampler.draw_tuple(3);
        const CheckResult tc = check_transfer_commutation(m, pts[0], pts[1], 2);
        CHECK(tc.pass);
        CHECK(tc.residual < 1e-10);
        const CheckResult pe = check_partition_equality(m, pts[0], 2);
        CHECK(pe.pass);
    }
}

TEST_CASE("double-rapidity reduction of the two-row product") {
    for (const SpinModel& m : sample_models()) {
        INFO(m.params.tag << " n=" << m.n);
        RapiditySampler sampler(m, 37);
        const auto pts = sampler.draw_tuple(3);
        const CheckResult r =
            check_double_rapidity_reduction(m, pts[0], pts[1], pts[2]);
        CHECK(r.pass);
        if (!r.inconclusive) CHECK(r.residual < 1e-10);
    }
}

TEST_CASE("checks are deterministic for fixed seeds") {
    const SpinModel m = make_potts(3);
    auto run = [&] {
        RapiditySampler sampler(m, 41);
        const auto xyz = sampler.draw_tuple(3);
        return check_ybe(m, xyz[0], xyz[1], xyz[2]).residual;
    };
    CHECK(run() == run());
}

TEST_CASE("check results carry reporting metadata") {
    const SpinModel m = make_potts(2);
    const CheckResult r = check_inversion(m, Complex(0.1));
    CHECK(r.check_name == "inversion");
    CHECK(r.model_tag == "potts_n2");
    CHECK(r.inputs.size() == 1);
    CHECK(r.inputs[0].first == "x");
    CHECK(r.tolerance > 0.0);
}
