#pragma once

// Seeded rapidity sampling. The generator is a splitmix-style 64-bit update
// written out as arithmetic so any reimplementation reproduces the exact
// sample points:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   output = z ^ (z >> 31)

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spinvertex/spin_model.hpp"

namespace spinvertex {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit mantissa
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Characteristic rapidity scale of a model: gamma_n for Potts, xi for the
// Ashkin-Teller family, lambda = pi/(2n) for FZ and KM.
inline double rapidity_scale(const SpinModel& m) {
    if (m.params.tag == "potts") return potts_scalars(m.n).gamma;
    if (m.params.tag == "at" || m.params.tag == "at_iso") return m.params.xi;
    return M_PI / (2.0 * m.n);
}

class RapiditySampler {
public:
    RapiditySampler(const SpinModel& model, std::uint64_t seed)
        : model_(&model), rng_(seed), radius_(0.4 * rapidity_scale(model)) {}

    // One point uniform in the disc of the model's sampling radius.
    Complex draw_point() {
        const double r = radius_ * std::sqrt(rng_.uniform());
        const double phi = 2.0 * M_PI * rng_.uniform();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    // k rapidities whose pairwise differences and negations all keep every
    // weight denominator away from zero; up to 50 redraws of the whole tuple.
    std::vector<Complex> draw_tuple(int k) {
        for (int attempt = 0; attempt < 50; ++attempt) {
            std::vector<Complex> pts(k);
            for (auto& p : pts) p = draw_point();
            if (tuple_ok(pts)) return pts;
        }
        throw std::runtime_error("RapiditySampler: no pole-free tuple in 50 tries");
    }

private:
    bool tuple_ok(const std::vector<Complex>& pts) const {
        std::vector<Complex> probes;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            probes.push_back(pts[i]);
            probes.push_back(-pts[i]);
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                probes.push_back(pts[i] - pts[j]);
                probes.push_back(pts[j] - pts[i]);
            }
        }
        for (const Complex& p : probes)
            if (model_->min_denominator(p) < 1e-6) return false;
        return true;
    }

    const SpinModel* model_;
    SplitMix64 rng_;
    double radius_;
};

} // namespace spinvertex
