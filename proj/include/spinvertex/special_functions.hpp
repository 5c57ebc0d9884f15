#pragma once

// Scalar kernels shared by all weight families: Jacobi theta functions
// (truncated-product form) and the Potts scalar functions f_n, gamma_n, g_n.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace spinvertex {

using Complex = std::complex<double>;

// Thrown when a weight or scalar kernel is evaluated at (or too close to)
// a zero of one of its denominators.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Elliptic nome q with |q| < 1. Values with |q| >= 1 are rejected outright;
// |q| < 0.95 keeps the product truncation within its budget.
class Nome {
public:
    explicit Nome(Complex q) : q_(q) {
        if (!(std::abs(q) < 1.0))
            throw std::domain_error("Nome: |q| must be < 1, got |q|=" +
                                    std::to_string(std::abs(q)));
    }
    Complex value() const { return q_; }
    double modulus() const { return std::abs(q_); }

    // Number of product factors needed so the dropped tail |q|^{2K} sits
    // below 1e-17, capped at 200 for nomes close to the unit disc.
    int truncation() const {
        double m = modulus();
        if (m == 0.0) return 0;
        double k = std::ceil(std::log(1e-17) / (2.0 * std::log(m)));
        return static_cast<int>(std::min(k, 200.0));
    }

private:
    Complex q_;
};

// theta_kind(z, q), kind in {1,2,3,4}, via the truncated infinite product.
inline Complex theta_eval(int kind, Complex z, const Nome& nome) {
    if (kind < 1 || kind > 4)
        throw std::invalid_argument("theta_eval: kind must be in 1..4");
    const Complex q = nome.value();
    const int K = nome.truncation();
    const Complex c2z = std::cos(2.0 * z);

    Complex prod(1.0, 0.0);
    switch (kind) {
    case 1:
        for (int k = 1; k <= K; ++k) {
            Complex q2k = std::pow(q, 2 * k);
            prod *= (1.0 - 2.0 * q2k * c2z + q2k * q2k) * (1.0 - q2k);
        }
        return 2.0 * std::pow(q, 0.25) * std::sin(z) * prod;
    case 2:
        for (int k = 1; k <= K; ++k) {
            Complex q2k = std::pow(q, 2 * k);
            prod *= (1.0 + 2.0 * q2k * c2z + q2k * q2k) * (1.0 - q2k);
        }
        return 2.0 * std::pow(q, 0.25) * std::cos(z) * prod;
    case 3:
        for (int k = 1; k <= K; ++k) {
            Complex qo = std::pow(q, 2 * k - 1);
            prod *= (1.0 + 2.0 * qo * c2z + qo * qo) * (1.0 - std::pow(q, 2 * k));
        }
        return prod;
    case 4:
    default:
        for (int k = 1; k <= K; ++k) {
            Complex qo = std::pow(q, 2 * k - 1);
            prod *= (1.0 - 2.0 * qo * c2z + qo * qo) * (1.0 - std::pow(q, 2 * k));
        }
        return prod;
    }
}

// Regime of the Potts scalar functions: trigonometric for n=2,3, the exact
// rational case at n=4, hyperbolic for n>=5.
enum class PottsRegime { Trigonometric, Rational, Hyperbolic };

struct PottsScalars {
    int n;
    double gamma;
    PottsRegime regime;
};

inline double arccosh_principal(double w) {
    return std::log(w + std::sqrt(w * w - 1.0));
}

inline PottsScalars potts_scalars(int n) {
    if (n < 2) throw std::invalid_argument("potts_scalars: n must be >= 2");
    if (n <= 3)
        return {n, std::acos(std::sqrt(double(n)) / 2.0), PottsRegime::Trigonometric};
    if (n == 4)
        return {n, 1.0, PottsRegime::Rational};
    return {n, arccosh_principal(std::sqrt(double(n)) / 2.0), PottsRegime::Hyperbolic};
}

// f_n(x): the Baxterization function of the n-state Potts parametrization.
inline Complex potts_f(int n, Complex x) {
    const PottsScalars s = potts_scalars(n);
    switch (s.regime) {
    case PottsRegime::Trigonometric:
        return std::sin(x) / std::sin(s.gamma - x);
    case PottsRegime::Rational: {
        Complex den = s.gamma - x;
        if (std::abs(den) < 1e-14)
            throw PoleError("potts_f: pole at x = gamma_4 = 1");
        return x / den;
    }
    case PottsRegime::Hyperbolic:
    default:
        return std::sinh(x) / std::sinh(s.gamma - x);
    }
}

// g_n(x): the coupling function of the deformed Potts chain.
inline Complex potts_g(int n, Complex x) {
    const PottsScalars s = potts_scalars(n);
    switch (s.regime) {
    case PottsRegime::Trigonometric:
        return std::sin(x) * std::sin(s.gamma + x) /
               (std::sin(2.0 * s.gamma) * std::sin(s.gamma));
    case PottsRegime::Rational:
        return x * (1.0 + x) / 2.0;
    case PottsRegime::Hyperbolic:
    default:
        return std::sinh(x) * std::sinh(s.gamma + x) /
               (std::sinh(2.0 * s.gamma) * std::sinh(s.gamma));
    }
}

} // namespace spinvertex
