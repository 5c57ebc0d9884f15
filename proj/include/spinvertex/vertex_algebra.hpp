#pragma once

// Operator layer of the spin-vertex correspondence: permutator, Lax operator
// and its h/v factorization, the non-difference R-matrix, diagonal and
// row-to-row transfer matrices, and the configuration-sum partition oracle.
//
// Tensor index convention everywhere: the composite row index of A (x) B is
// i_A * dim_B + i_B, first factor most significant.

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinvertex/spin_model.hpp"

namespace spinvertex {

struct LatticeSize {
    int L = 1;
};

inline long dense_dim(int n, int L) {
    long d = 1;
    for (int i = 0; i < L; ++i) {
        d *= n;
        if (d > 4096)
            throw std::domain_error("lattice budget exceeded: n^L > 4096");
    }
    return d;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// P = sum_{ij} e_ij (x) e_ji, the swap on C^n (x) C^n.
inline CMatrix permutator(int n) {
    CMatrix p = CMatrix::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p(i * n + j, j * n + i) = 1.0;
    return p;
}

// L_12(x) = sum_{ijk} W_h(j,i|x) W_v(j,k|x) e_ik (x) e_ji
inline CMatrix lax(const SpinModel& m, Complex x) {
    const int n = m.n;
    CMatrix l = CMatrix::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                l(i * n + j, k * n + i) = m.wh(j, i, x) * m.wv(j, k, x);
    return l;
}

// (L^(h), L^(v)) with L^(h) diagonal and L^(h) * L^(v) = lax.
inline std::pair<CMatrix, CMatrix> lax_factors(const SpinModel& m, Complex x) {
    const int n = m.n;
    CMatrix lh = CMatrix::Zero(n * n, n * n);
    CMatrix lv = CMatrix::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lh(i * n + j, i * n + j) = m.wh(j, i, x);
            for (int k = 0; k < n; ++k)
                lv(i * n + j, k * n + i) = m.wv(j, k, x);
        }
    return {lh, lv};
}

// R_{i,j}^{k,l}(x,y) = W_h(j,i|x) W_v(j,k|x-y) / W_h(k,i|y) * delta_{i,l}
inline CMatrix r_matrix(const SpinModel& m, Complex x, Complex y) {
    const int n = m.n;
    CMatrix r = CMatrix::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex den = m.wh(k, i, y);
            if (std::abs(den) < 1e-14)
                throw PoleError("r_matrix: W_h(" + std::to_string(k) + "," +
                                std::to_string(i) + "|y) vanishes");
            for (int j = 0; j < n; ++j)
                r(i * n + j, k * n + i) = m.wh(j, i, x) * m.wv(j, k, x - y) / den;
        }
    return r;
}

// Diagonal-to-diagonal transfer matrix: alternating W_v(a_m,b_m) W_h(a_m,b_{m+1})
// around the periodic ring of L sites.
inline CMatrix transfer_dia(const SpinModel& m, Complex x, LatticeSize size) {
    const int n = m.n, L = size.L;
    const long dim = dense_dim(n, L);
    const CMatrix wvm = weight_matrix(m, EdgeDirection::Vertical, x);
    const CMatrix whm = weight_matrix(m, EdgeDirection::Horizontal, x);

    std::vector<int> a(L), b(L);
    auto decode = [&](long idx, std::vector<int>& s) {
        for (int mte = L - 1; mte >= 0; --mte) {
            s[mte] = int(idx % n);
            idx /= n;
        }
    };
    CMatrix t(dim, dim);
    for (long ra = 0; ra < dim; ++ra) {
        decode(ra, a);
        for (long rb = 0; rb < dim; ++rb) {
            decode(rb, b);
            Complex w(1.0);
            for (int s = 0; s < L; ++s)
                w *= wvm(a[s], b[s]) * whm(a[s], b[(s + 1) % L]);
            t(ra, rb) = w;
        }
    }
    return t;
}

// Row-to-row transfer matrix T(x, x0) = Tr_A [ R_A1(x,x0) ... R_AL(x,x0) ],
// contracted by extending the chain one site at a time; x0 = 0 gives the
// vertex-model transfer matrix built from the Lax operator.
inline CMatrix transfer_row(const SpinModel& m, Complex x, Complex x0,
                            LatticeSize size) {
    const int n = m.n, L = size.L;
    dense_dim(n, L);
    const CMatrix r = r_matrix(m, x, x0);

    // site operator blocks M^{ab}[s,s'] = R[(b,s),(a,s')], auxiliary leg first;
    // the flipped auxiliary indices order the product as R_AL ... R_A1, which
    // keeps the logarithmic derivative aligned with left-to-right pair terms
    std::vector<CMatrix> block(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CMatrix blk(n, n);
            for (int s = 0; s < n; ++s)
                for (int sp = 0; sp < n; ++sp)
                    blk(s, sp) = r(b * n + s, a * n + sp);
            block[a * n + b] = std::move(blk);
        }

    // g[a*n+b] accumulates sum over internal auxiliary paths from a to b
    std::vector<CMatrix> g = block;
    for (int site = 1; site < L; ++site) {
        std::vector<CMatrix> next(n * n);
        const long d = g[0].rows() * n;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CMatrix acc = CMatrix::Zero(d, d);
                for (int c = 0; c < n; ++c)
                    acc += kron(g[a * n + c], block[c * n + b]);
                next[a * n + b] = std::move(acc);
            }
        g = std::move(next);
    }
    CMatrix t = CMatrix::Zero(g[0].rows(), g[0].cols());
    for (int a = 0; a < n; ++a) t += g[a * n + a];
    return t;
}

// Tr(T^L) by repeated multiplication.
inline Complex partition_trace(const CMatrix& t, int L) {
    CMatrix p = CMatrix::Identity(t.rows(), t.cols());
    for (int i = 0; i < L; ++i) p = p * t;
    return p.trace();
}

// Independent oracle for the partition function: enumerate every spin
// assignment on the L x L periodic lattice whose rows are the diagonal
// layers, multiply the edge weights, and sum.
inline Complex brute_force_partition(const SpinModel& m, Complex x,
                                     LatticeSize size) {
    const int n = m.n, L = size.L;
    double conf = std::pow(double(n), double(L) * L);
    if (conf > 1e6)
        throw std::domain_error("brute_force_partition: n^(L^2) > 1e6");
    const long total = long(conf + 0.5);

    const CMatrix wvm = weight_matrix(m, EdgeDirection::Vertical, x);
    const CMatrix whm = weight_matrix(m, EdgeDirection::Horizontal, x);

    std::vector<int> s(L * L);
    Complex z(0.0);
    for (long cfg = 0; cfg < total; ++cfg) {
        long idx = cfg;
        for (int i = 0; i < L * L; ++i) {
            s[i] = int(idx % n);
            idx /= n;
        }
        Complex w(1.0);
        for (int t = 0; t < L; ++t) {
            const int tn = (t + 1) % L;
            for (int mm = 0; mm < L; ++mm)
                w *= wvm(s[t * L + mm], s[tn * L + mm]) *
                     whm(s[t * L + mm], s[tn * L + (mm + 1) % L]);
        }
        z += w;
    }
    return z;
}

} // namespace spinvertex
