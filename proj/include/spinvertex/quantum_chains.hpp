#pragma once

// Clock and Temperley-Lieb operator algebra, the TL form of the Potts
// R-matrix, finite-difference Hamiltonian limits of the generalized transfer
// matrix, and the explicit deformed Potts and Ashkin-Teller chains.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "spinvertex/vertex_algebra.hpp"

namespace spinvertex {

struct ClockPair {
    int n;
    CMatrix Z;
    CMatrix X;
    Complex omega;
};

struct ChainOperator {
    int n = 0;
    int L = 0;
    CMatrix matrix;
    bool hermitian = false;
    std::string label;
};

inline ClockPair clock_ops(int n) {
    if (n < 2) throw std::invalid_argument("clock_ops: n must be >= 2");
    const Complex omega = std::exp(Complex(0.0, 2.0 * M_PI / n));
    CMatrix Z = CMatrix::Zero(n, n);
    CMatrix X = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        Z(k, k) = std::pow(omega, k);
        X(k, (k + n - 1) % n) = 1.0;   // X_{k,l} = delta_{k, l+1 mod n}
    }
    return {n, Z, X, omega};
}

// Single-site operator embedded at 0-based site j of an L-site chain.
inline CMatrix site_operator(const CMatrix& op, int n, int j, int L) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int s = 0; s < L; ++s)
        out = kron(out, s == j ? op : CMatrix::Identity(n, n));
    return out;
}

// Two-site operator acting at sites (p, p+1 mod L); written by index
// arithmetic so the periodic closure (L-1, 0) needs no special kron order.
inline CMatrix pair_operator(const CMatrix& op, int n, int p, int L) {
    const int q = (p + 1) % L;
    const long dim = dense_dim(n, L);
    CMatrix out = CMatrix::Zero(dim, dim);
    std::vector<long> stride(L);
    {
        long s = 1;
        for (int site = L - 1; site >= 0; --site) {
            stride[site] = s;
            s *= n;
        }
    }
    for (long row = 0; row < dim; ++row) {
        const int a = int(row / stride[p]) % n;
        const int b = int(row / stride[q]) % n;
        const long base = row - a * stride[p] - b * stride[q];
        for (int ap = 0; ap < n; ++ap)
            for (int bp = 0; bp < n; ++bp) {
                const Complex v = op(a * n + b, ap * n + bp);
                if (v == Complex(0.0)) continue;
                out(row, base + ap * stride[p] + bp * stride[q]) += v;
            }
    }
    return out;
}

inline bool is_hermitian(const CMatrix& m, double tol = 1e-10) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

// Temperley-Lieb generators E_1 .. E_{2L-1} in the scalar Potts clock
// representation, 1-based TL index: odd generators live on single sites,
// even generators on neighboring pairs.
inline std::vector<ChainOperator> tl_generators(int n, int L) {
    const ClockPair cp = clock_ops(n);
    const double root = std::sqrt(double(n));

    CMatrix e_odd = CMatrix::Zero(n, n);
    CMatrix x_pow = CMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k) {
        e_odd += x_pow;
        x_pow = x_pow * cp.X;
    }
    e_odd /= root;

    CMatrix e_even = CMatrix::Zero(n * n, n * n);
    CMatrix z_pow = CMatrix::Identity(n, n);
    CMatrix zd_pow = CMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k) {
        e_even += kron(z_pow, zd_pow);
        z_pow = z_pow * cp.Z;
        zd_pow = zd_pow * cp.Z.adjoint();
    }
    e_even /= root;

    std::vector<ChainOperator> gens;
    for (int idx = 1; idx <= 2 * L - 1; ++idx) {
        ChainOperator g;
        g.n = n;
        g.L = L;
        g.label = "E_" + std::to_string(idx);
        if (idx % 2 == 1)
            g.matrix = site_operator(e_odd, n, (idx - 1) / 2, L);
        else
            g.matrix = pair_operator(e_even, n, idx / 2 - 1, L);
        g.hermitian = is_hermitian(g.matrix);
        gens.push_back(std::move(g));
    }
    return gens;
}

// Temperley-Lieb form of the Potts R-matrix,
//   P12 (I + f(x-y) [E1 + E2 + f(x) E2 E1 + f(-y) E1 E2]).
inline CMatrix potts_r_tl(int n, Complex x, Complex y) {
    const auto gens = tl_generators(n, 2);
    const CMatrix& e1 = gens[0].matrix;
    const CMatrix& e2 = gens[1].matrix;
    const CMatrix id = CMatrix::Identity(n * n, n * n);
    const Complex fxy = potts_f(n, x - y);
    return permutator(n) *
           (id + fxy * (e1 + e2 + potts_f(n, x) * e2 * e1 +
                        potts_f(n, -y) * e1 * e2));
}

// Logarithmic derivative of T(x, x0) at x = x0 by central difference with
// one Richardson refinement; T(x0, x0) is the translation operator.
inline ChainOperator hamiltonian_from_transfer(const SpinModel& m, Complex x0,
                                               int L, double h = 1e-5) {
    const LatticeSize size{L};
    auto diff = [&](double step) -> CMatrix {
        // materialize: a deduced Eigen expression would dangle
        return (transfer_row(m, x0 + step, x0, size) -
                transfer_row(m, x0 - step, x0, size)) /
               (2.0 * step);
    };
    const CMatrix d = (4.0 * diff(h / 2.0) - diff(h)) / 3.0;
    const CMatrix t0 = transfer_row(m, x0, x0, size);
    ChainOperator op;
    op.n = m.n;
    op.L = L;
    op.label = "H_transfer_" + m.params.tag;
    op.matrix = t0.transpose().partialPivLu().solve(d.transpose()).transpose();
    op.hermitian = is_hermitian(op.matrix, 1e-6);
    return op;
}

// Deformed Z(n) Potts chain H(x0) = -J [sum_j H_{j,j+1} + H_{L,1}].
inline ChainOperator potts_chain(int n, Complex x0, int L, double J = 1.0) {
    const ClockPair cp = clock_ops(n);
    const Complex gp = potts_g(n, x0), gm = potts_g(n, -x0);

    std::vector<CMatrix> xp(n), zzp(n);  // powers 0..n-1
    xp[0] = CMatrix::Identity(n, n);
    zzp[0] = CMatrix::Identity(n * n, n * n);
    CMatrix zz = kron(cp.Z, cp.Z.adjoint());
    for (int k = 1; k < n; ++k) {
        xp[k] = xp[k - 1] * cp.X;
        zzp[k] = zzp[k - 1] * zz;
    }

    CMatrix h2 = CMatrix::Zero(n * n, n * n);
    const CMatrix idn = CMatrix::Identity(n, n);
    for (int k = 1; k < n; ++k) h2 += kron(xp[k], idn) + zzp[k];
    for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l)
            h2 += gp * (zzp[k] * kron(xp[l], idn)) +
                  gm * (kron(xp[k], idn) * zzp[l]);

    const long dim = dense_dim(n, L);
    CMatrix H = CMatrix::Zero(dim, dim);
    for (int j = 0; j < L; ++j) H += pair_operator(h2, n, j, L);
    H *= -J;

    ChainOperator op;
    op.n = n;
    op.L = L;
    op.matrix = std::move(H);
    op.label = "potts_chain_n" + std::to_string(n);
    op.hermitian = is_hermitian(op.matrix);
    return op;
}

// Deformed Ashkin-Teller chain on local dimension 4, built from commuting
// sigma and tau Pauli pairs.
inline ChainOperator at_chain(double xi, Complex x0, int L, double J = 1.0) {
    if (std::abs(std::cos(x0)) < 1e-12)
        throw PoleError("at_chain: cos(x0) vanishes");
    if (std::abs(std::sin(xi)) < 1e-12)
        throw PoleError("at_chain: sin(xi) vanishes");

    CMatrix px(2, 2), pz(2, 2), id2 = CMatrix::Identity(2, 2);
    px << 0, 1, 1, 0;
    pz << 1, 0, 0, -1;
    const CMatrix sx = kron(px, id2), sz = kron(pz, id2);
    const CMatrix tx = kron(id2, px), tz = kron(id2, pz);
    const CMatrix id4 = CMatrix::Identity(4, 4);

    const Complex r = std::sin(x0) / Complex(std::sin(xi));
    const Complex cc = Complex(std::cos(xi)) / std::cos(x0);

    const CMatrix szsz = kron(sz, sz), tztz = kron(tz, tz);
    const CMatrix h0 = szsz + kron(sx, id4) + tztz + kron(tx, id4) +
                       cc * (kron(sz * tz, sz * tz) + kron(sx * tx, id4));

    const CMatrix a = kron((sx + tx) * sz * tz, sz * tz) -
                      (szsz + tztz) * kron(sx * tx, id4);
    const CMatrix b = kron(sx * tz, tz) + kron(tx * sz, sz) +
                      kron(sx * tx * sz * tz, sz * tz);
    const CMatrix c = kron(sx * sz, sz) + kron(tx * tz, tz);
    const CMatrix h1 = -cc * r * a + cc * r * r * b - r * c;

    const long dim = dense_dim(4, L);
    CMatrix H = CMatrix::Zero(dim, dim);
    for (int j = 0; j < L; ++j) H += pair_operator(h0 + h1, 4, j, L);
    H *= -J;

    ChainOperator op;
    op.n = 4;
    op.L = L;
    op.matrix = std::move(H);
    op.label = "at_chain";
    op.hermitian = is_hermitian(op.matrix);
    return op;
}

// Full ascending real spectrum of a hermitian chain operator.
inline std::vector<double> diagonalize_hermitian(const ChainOperator& op) {
    if (!op.hermitian)
        throw std::invalid_argument("diagonalize_hermitian: operator not hermitian");
    if (op.matrix.rows() > 4096)
        throw std::domain_error("diagonalize_hermitian: dimension > 4096");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(op.matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("diagonalize_hermitian: eigensolver failed");
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + op.matrix.rows());
    return ev;
}

// Two-parameter affine fit target = alpha * source + beta * I, read off from
// the best-conditioned entries, then verified globally; returns the max-abs
// deviation and the fitted pair.
struct AffineMatch {
    Complex alpha;
    Complex beta;
    double residual;
};

inline AffineMatch affine_match(const CMatrix& target, const CMatrix& source) {
    const long dim = source.rows();
    long br = 0, bc = 1;
    double best = 0.0;
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            if (i != j && std::abs(source(i, j)) > best) {
                best = std::abs(source(i, j));
                br = i;
                bc = j;
            }
    const Complex alpha = target(br, bc) / source(br, bc);
    const Complex beta = target(0, 0) - alpha * source(0, 0);
    const CMatrix dev =
        target - alpha * source - beta * CMatrix::Identity(dim, dim);
    return {alpha, beta, dev.cwiseAbs().maxCoeff()};
}

} // namespace spinvertex
