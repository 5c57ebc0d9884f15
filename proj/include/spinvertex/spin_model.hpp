#pragma once

// Edge-weight families: scalar Potts, Ashkin-Teller (elliptic and isotropic),
// Fateev-Zamolodchikov and Kashiwara-Miwa, packaged as immutable SpinModel
// values with their closed-form inversion normalizations.

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "spinvertex/special_functions.hpp"

namespace spinvertex {

using CMatrix = Eigen::MatrixXcd;

struct ModelParams {
    std::string tag;      // potts | at | at_iso | fz | km
    int n = 0;
    double xi = 0.0;
    double q = 0.0;
    int km_offset = 0;    // spin-label offset of the KM a+b product
};

// A weight family: state count, horizontal/vertical edge-weight evaluators
// (0-based spins), inversion normalizations rho1/rho2 and a pole guard used
// by the rapidity sampler. Immutable after construction.
struct SpinModel {
    int n = 0;
    std::function<Complex(int, int, Complex)> wh;
    std::function<Complex(int, int, Complex)> wv;
    std::function<Complex(Complex)> rho1;
    std::function<Complex(Complex)> rho2;
    // Smallest |denominator| occurring in the weight closed forms at x.
    std::function<double(Complex)> min_denominator;
    ModelParams params;
    bool reflection_symmetric = false;
};

enum class EdgeDirection { Horizontal, Vertical };

inline CMatrix weight_matrix(const SpinModel& model, EdgeDirection which, Complex x) {
    CMatrix m(model.n, model.n);
    for (int i = 0; i < model.n; ++i)
        for (int j = 0; j < model.n; ++j)
            m(i, j) = (which == EdgeDirection::Horizontal) ? model.wh(i, j, x)
                                                          : model.wv(i, j, x);
    return m;
}

// (e^{Jh}-1)(e^{Jv}-1) - n; zero on the integrable self-dual manifold.
inline double potts_self_dual_residual(double Jh, double Jv, int n) {
    return (std::exp(Jh) - 1.0) * (std::exp(Jv) - 1.0) - double(n);
}

inline SpinModel make_potts(int n) {
    if (n < 2) throw std::invalid_argument("make_potts: n must be >= 2");
    const PottsScalars s = potts_scalars(n);
    const double root = std::sqrt(double(n));
    SpinModel m;
    m.n = n;
    m.params = {"potts", n, 0.0, 0.0, 0};
    m.reflection_symmetric = true;
    m.wh = [n, root](int i, int j, Complex x) {
        return Complex(1.0) + (i == j ? root * potts_f(n, x) : Complex(0.0));
    };
    m.wv = [n, root](int i, int j, Complex x) {
        return potts_f(n, x) / root + (i == j ? Complex(1.0) : Complex(0.0));
    };
    m.rho1 = [](Complex) { return Complex(1.0); };
    m.rho2 = [](Complex) { return Complex(1.0); };
    m.min_denominator = [s](Complex x) {
        switch (s.regime) {
        case PottsRegime::Trigonometric: return std::abs(std::sin(s.gamma - x));
        case PottsRegime::Rational:      return std::abs(Complex(s.gamma) - x);
        default:                         return std::abs(std::sinh(s.gamma - x));
        }
    };
    return m;
}

// ---------------------------------------------------------------------------
// Ashkin-Teller
// ---------------------------------------------------------------------------

struct EightVertexWeights {
    Complex wa, wb, wc, wd;
};

struct AshkinTellerEntries {
    // index order a, b, c, d for both orientations
    std::array<Complex, 4> horizontal;
    std::array<Complex, 4> vertical;
};

// Spin edge weights of the staggered eight-vertex reformulation, normalized
// by a_h and a_v respectively.
inline AshkinTellerEntries at_from_eight_vertex(const EightVertexWeights& w) {
    const Complex sh = w.wb + w.wc;
    const Complex sv = w.wa + w.wc;
    if (std::abs(sh) < 1e-14 || std::abs(sv) < 1e-14)
        throw std::domain_error("at_from_eight_vertex: degenerate weight sum");
    AshkinTellerEntries e;
    e.horizontal = {Complex(1.0), (w.wa - w.wd) / sh, (w.wa + w.wd) / sh,
                    (w.wc - w.wb) / sh};
    e.vertical = {Complex(1.0), (w.wb - w.wd) / sv, (w.wb + w.wd) / sv,
                  (w.wc - w.wa) / sv};
    return e;
}

namespace detail {

// 4x4 pattern shared by both AT weight matrices: entry (i,j) selects
// a,b,c,d according to i XOR j (site state = 2*sigma + tau bits).
inline int at_pattern(int i, int j) { return i ^ j; }

inline Complex theta_ratio_checked(int num1, Complex z1, int num2, Complex z2,
                                   int den1, Complex w1, int den2, Complex w2,
                                   const Nome& q) {
    const Complex d1 = theta_eval(den1, w1, q);
    const Complex d2 = theta_eval(den2, w2, q);
    if (std::abs(d1) < 1e-14 || std::abs(d2) < 1e-14)
        throw PoleError("ashkin_teller weight: theta denominator vanishes");
    return theta_eval(num1, z1, q) * theta_eval(num2, z2, q) / (d1 * d2);
}

} // namespace detail

inline SpinModel make_ashkin_teller(double xi, const Nome& q) {
    SpinModel m;
    m.n = 4;
    m.params = {"at", 4, xi, std::abs(q.value()), 0};
    m.reflection_symmetric = true;

    // entries[0..3] = a,b,c,d; theta index 3, 4, 2 picks b, c, d in turn
    auto h_entries = [xi, q](Complex x) {
        std::array<Complex, 4> e;
        const Complex zm = (xi - x) / 2.0, zp = (xi + x) / 2.0;
        e[0] = Complex(1.0);
        e[1] = detail::theta_ratio_checked(1, zm, 3, zp, 3, zm, 1, zp, q);
        e[2] = detail::theta_ratio_checked(1, zm, 4, zp, 4, zm, 1, zp, q);
        e[3] = detail::theta_ratio_checked(1, zm, 2, zp, 2, zm, 1, zp, q);
        return e;
    };
    auto v_entries = [xi, q](Complex x) {
        std::array<Complex, 4> e;
        const Complex zh = x / 2.0, zx = xi - x / 2.0;
        e[0] = Complex(1.0);
        e[1] = detail::theta_ratio_checked(1, zh, 3, zx, 3, zh, 1, zx, q);
        e[2] = detail::theta_ratio_checked(1, zh, 4, zx, 4, zh, 1, zx, q);
        e[3] = detail::theta_ratio_checked(1, zh, 2, zx, 2, zh, 1, zx, q);
        return e;
    };

    m.wh = [h_entries](int i, int j, Complex x) {
        return h_entries(x)[detail::at_pattern(i, j)];
    };
    m.wv = [v_entries](int i, int j, Complex x) {
        return v_entries(x)[detail::at_pattern(i, j)];
    };
    m.rho1 = [](Complex) { return Complex(1.0); };
    m.rho2 = [xi, q](Complex x) {
        const Complex t1h = theta_eval(1, x / 2.0, q);
        const Complex t1x = theta_eval(1, x, q);
        if (std::abs(t1x) < 1e-14)
            throw PoleError("ashkin_teller rho2: theta1(x) vanishes");
        const Complex dm = theta_eval(1, xi - x / 2.0, q);
        const Complex dp = theta_eval(1, xi + x / 2.0, q);
        if (std::abs(dm * dp) < 1e-14)
            throw PoleError("ashkin_teller rho2: theta1(xi -/+ x/2) vanishes");
        Complex r = t1h / t1x;
        return 4.0 * r * r * theta_eval(1, xi - x, q) * theta_eval(1, xi + x, q) /
               (dm * dp);
    };
    m.min_denominator = [xi, q](Complex x) {
        double d = 1e300;
        auto upd = [&](int kind, Complex z) {
            d = std::min(d, std::abs(theta_eval(kind, z, q)));
        };
        // denominators of the h- and v-entries plus those of rho2
        upd(1, (xi + x) / 2.0);
        upd(1, xi - x / 2.0);
        upd(1, xi + x / 2.0);
        upd(1, x);
        for (int kind : {2, 3, 4}) {
            upd(kind, (xi - x) / 2.0);
            upd(kind, x / 2.0);
        }
        return d;
    };
    return m;
}

// Layer-isotropic (q -> 0) limit: staggered six-vertex weights in
// trigonometric form, with the b = c degeneracy.
inline SpinModel make_ashkin_teller_isotropic(double xi) {
    if (std::abs(std::sin(xi)) < 1e-14)
        throw std::domain_error("make_ashkin_teller_isotropic: xi multiple of pi");
    SpinModel m;
    m.n = 4;
    m.params = {"at_iso", 4, xi, 0.0, 0};
    m.reflection_symmetric = true;

    auto h_entries = [xi](Complex x) {
        std::array<Complex, 4> e;
        const Complex zm = (xi - x) / 2.0, zp = (xi + x) / 2.0;
        if (std::abs(std::sin(zp)) < 1e-14 || std::abs(std::cos(zp)) < 1e-14 ||
            std::abs(std::cos(zm)) < 1e-14)
            throw PoleError("at_iso horizontal weight: trig denominator vanishes");
        e[0] = Complex(1.0);
        e[1] = e[2] = std::sin(zm) / std::sin(zp);
        e[3] = std::tan(zm) / std::tan(zp);
        return e;
    };
    auto v_entries = [xi](Complex x) {
        std::array<Complex, 4> e;
        const Complex zh = x / 2.0, zx = xi - x / 2.0;
        if (std::abs(std::sin(zx)) < 1e-14 || std::abs(std::cos(zx)) < 1e-14 ||
            std::abs(std::cos(zh)) < 1e-14)
            throw PoleError("at_iso vertical weight: trig denominator vanishes");
        e[0] = Complex(1.0);
        e[1] = e[2] = std::sin(zh) / std::sin(zx);
        e[3] = std::tan(zh) / std::tan(zx);
        return e;
    };

    m.wh = [h_entries](int i, int j, Complex x) {
        return h_entries(x)[detail::at_pattern(i, j)];
    };
    m.wv = [v_entries](int i, int j, Complex x) {
        return v_entries(x)[detail::at_pattern(i, j)];
    };
    m.rho1 = [](Complex) { return Complex(1.0); };
    m.rho2 = [xi](Complex x) {
        const Complex ch = std::cos(x / 2.0);
        const Complex dm = std::sin(xi - x / 2.0), dp = std::sin(xi + x / 2.0);
        if (std::abs(ch * dm * dp) < 1e-14)
            throw PoleError("at_iso rho2: trig denominator vanishes");
        return std::sin(xi + x) * std::sin(xi - x) / (dp * dm * ch * ch);
    };
    m.min_denominator = [xi](Complex x) {
        double d = 1e300;
        auto upd = [&](Complex v) { d = std::min(d, std::abs(v)); };
        upd(std::sin((xi + x) / 2.0));
        upd(std::cos((xi + x) / 2.0));
        upd(std::cos((xi - x) / 2.0));
        upd(std::sin(xi - x / 2.0));
        upd(std::cos(xi - x / 2.0));
        upd(std::cos(x / 2.0));
        return d;
    };
    return m;
}

// ---------------------------------------------------------------------------
// Fateev-Zamolodchikov
// ---------------------------------------------------------------------------

inline SpinModel make_fz(int n) {
    if (n < 2) throw std::invalid_argument("make_fz: n must be >= 2");
    const double lambda = M_PI / (2.0 * n);
    SpinModel m;
    m.n = n;
    m.params = {"fz", n, 0.0, 0.0, 0};
    m.reflection_symmetric = true;

    m.wh = [lambda](int a, int b, Complex x) {
        Complex w(1.0);
        for (int j = 1; j <= std::abs(a - b); ++j) {
            const Complex den = std::sin((2 * j - 1) * lambda + x);
            if (std::abs(den) < 1e-14)
                throw PoleError("fz horizontal weight: sine denominator vanishes");
            w *= std::sin((2 * j - 1) * lambda - x) / den;
        }
        return w;
    };
    m.wv = [lambda](int a, int b, Complex x) {
        Complex w(1.0);
        for (int j = 1; j <= std::abs(a - b); ++j) {
            const Complex den = std::sin(2.0 * j * lambda - x);
            if (std::abs(den) < 1e-14)
                throw PoleError("fz vertical weight: sine denominator vanishes");
            w *= std::sin((2 * j - 2) * lambda + x) / den;
        }
        return w;
    };
    m.rho1 = [](Complex) { return Complex(1.0); };
    m.rho2 = [n, lambda](Complex x) {
        Complex r{double(n)};
        for (int j = 1; j <= n / 2; ++j) {
            const Complex den =
                std::sin(2.0 * j * lambda + x) * std::sin(2.0 * j * lambda - x);
            if (std::abs(den) < 1e-14)
                throw PoleError("fz rho2: sine denominator vanishes");
            r *= std::sin((2 * j - 1) * lambda + x) *
                 std::sin((2 * j - 1) * lambda - x) / den;
        }
        return r;
    };
    m.min_denominator = [n, lambda](Complex x) {
        double d = 1e300;
        for (int j = 1; j <= n; ++j) {
            d = std::min(d, std::abs(std::sin((2 * j - 1) * lambda + x)));
            d = std::min(d, std::abs(std::sin(2.0 * j * lambda - x)));
        }
        return d;
    };
    return m;
}

// ---------------------------------------------------------------------------
// Kashiwara-Miwa
// ---------------------------------------------------------------------------

namespace detail {

// f(a) = theta4(0,q)/theta4(2 pi a / n, q); real positive for real q in (0,1).
inline double km_f(int a, int n, const Nome& q) {
    const double num = theta_eval(4, Complex(0.0), q).real();
    const double den = theta_eval(4, Complex(2.0 * M_PI * a / n), q).real();
    return num / den;
}

} // namespace detail

// offset shifts the spin labels entering the a+b product and the f(a)
// prefactors; 0 keeps the 0-based labels as stored.
inline SpinModel make_km(int n, const Nome& q, int offset = 0) {
    if (n < 2) throw std::invalid_argument("make_km: n must be >= 2");
    if (!(q.value().imag() == 0.0 && q.value().real() > 0.0 &&
          q.value().real() < 1.0))
        throw std::domain_error("make_km: q must be real in (0,1)");
    const double lambda = M_PI / (2.0 * n);
    SpinModel m;
    m.n = n;
    m.params = {"km", n, 0.0, q.value().real(), offset};
    m.reflection_symmetric = true;

    auto logf = [n, q](int a) { return std::log(detail::km_f(a, n, q)); };

    m.wh = [n, lambda, q, offset, logf](int a, int b, Complex x) {
        const int as = a + offset, bs = b + offset;
        Complex w = std::exp((-double(n) * x / M_PI) * (logf(as) + logf(bs)));
        for (int j = 1; j <= std::abs(a - b); ++j) {
            const Complex den = theta_eval(1, (2 * j - 1) * lambda + x, q);
            if (std::abs(den) < 1e-14)
                throw PoleError("km horizontal weight: theta1 denominator vanishes");
            w *= theta_eval(1, (2 * j - 1) * lambda - x, q) / den;
        }
        for (int j = 1; j <= as + bs; ++j) {
            const Complex den = theta_eval(4, (2 * j - 1) * lambda + x, q);
            if (std::abs(den) < 1e-14)
                throw PoleError("km horizontal weight: theta4 denominator vanishes");
            w *= theta_eval(4, (2 * j - 1) * lambda - x, q) / den;
        }
        return w;
    };
    m.wv = [n, lambda, q, offset, logf](int a, int b, Complex x) {
        const int as = a + offset, bs = b + offset;
        Complex w = std::exp((double(n) * (x - lambda) / M_PI) * (logf(as) + logf(bs)));
        for (int j = 1; j <= std::abs(a - b); ++j) {
            const Complex den = theta_eval(1, 2.0 * j * lambda - x, q);
            if (std::abs(den) < 1e-14)
                throw PoleError("km vertical weight: theta1 denominator vanishes");
            w *= theta_eval(1, (2 * j - 2) * lambda + x, q) / den;
        }
        for (int j = 1; j <= as + bs; ++j) {
            const Complex den = theta_eval(4, 2.0 * j * lambda - x, q);
            if (std::abs(den) < 1e-14)
                throw PoleError("km vertical weight: theta4 denominator vanishes");
            w *= theta_eval(4, (2 * j - 2) * lambda + x, q) / den;
        }
        return w;
    };
    m.rho1 = [](Complex) { return Complex(1.0); };

    auto h = [n, lambda, q](Complex x) {
        Complex r(1.0);
        for (int j = 1; j <= n / 2; ++j) {
            const Complex den = theta_eval(1, 2.0 * j * lambda + x, q) *
                                theta_eval(4, 2.0 * j * lambda + x, q);
            if (std::abs(den) < 1e-14)
                throw PoleError("km rho2: theta denominator vanishes");
            r *= theta_eval(1, (2 * j - 1) * lambda + x, q) *
                 theta_eval(4, (2 * j - 1) * lambda + x, q) / den;
        }
        return r;
    };
    m.rho2 = [h](Complex x) {
        const Complex h0 = h(Complex(0.0));
        return h(x) * h(-x) / (h0 * h0);
    };
    m.min_denominator = [n, lambda, q](Complex x) {
        double d = 1e300;
        for (int j = 1; j <= 2 * n; ++j) {
            d = std::min(d, std::abs(theta_eval(1, (2 * j - 1) * lambda + x, q)));
            d = std::min(d, std::abs(theta_eval(4, (2 * j - 1) * lambda + x, q)));
            d = std::min(d, std::abs(theta_eval(1, 2.0 * j * lambda - x, q)));
            d = std::min(d, std::abs(theta_eval(4, 2.0 * j * lambda - x, q)));
        }
        return d;
    };
    return m;
}

} // namespace spinvertex
