#include "jtc/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jtc/assembly.hpp"

namespace jtc {

namespace {

double off_diagonal_norm(const Matrix& w) {
    double s = 0.0;
    const std::size_t n = w.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += w(i, j) * w(i, j);
    return std::sqrt(2.0 * s);
}

inline void rotate(double& x, double& y, double s, double tau) {
    const double gx = x;
    const double hy = y;
    x = gx - s * (hy + gx * tau);
    y = hy + s * (gx - hy * tau);
}

}  // namespace

EigenDecomposition jacobi_eigh(const Matrix& a, double tol, int max_sweeps) {
    if (!a.square()) throw std::invalid_argument("jacobi_eigh: matrix must be square");
    if (!(tol > 0.0)) throw std::invalid_argument("jacobi_eigh: tol must be positive");
    const std::size_t n = a.rows();
    if (n == 0) throw std::invalid_argument("jacobi_eigh: empty matrix");

    const double scale = a.max_abs();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-13 * std::max(1.0, scale))
                throw std::invalid_argument("jacobi_eigh: input not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");

    Matrix w = a;  // only the strict upper triangle is updated below
    Matrix v = Matrix::identity(n);
    const double norm_a = a.frobenius_norm();

    std::vector<double> d(n), b(n), z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = b[i] = w(i, i);

    int sweeps = 0;
    double off = off_diagonal_norm(w);
    while (off > tol * norm_a) {
        if (sweeps >= max_sweeps) throw NonConvergenceError(off, sweeps);
        ++sweeps;

        double sm = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) sm += std::abs(w(i, j));
        // Skip small rotations during the first sweeps (classic threshold
        // strategy), then zero everything that still sticks out.
        const double tresh = (sweeps < 4) ? 0.2 * sm / static_cast<double>(n * n) : 0.0;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = w(p, q);
                const double g = 100.0 * std::abs(apq);
                if (sweeps > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
                    std::abs(d[q]) + g == std::abs(d[q])) {
                    w(p, q) = 0.0;
                    continue;
                }
                if (std::abs(apq) <= tresh) continue;

                double h = d[q] - d[p];
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                w(p, q) = 0.0;
                for (std::size_t j = 0; j < p; ++j) rotate(w(j, p), w(j, q), s, tau);
                for (std::size_t j = p + 1; j < q; ++j) rotate(w(p, j), w(j, q), s, tau);
                for (std::size_t j = q + 1; j < n; ++j) rotate(w(p, j), w(q, j), s, tau);
                for (std::size_t j = 0; j < n; ++j) rotate(v(j, p), v(j, q), s, tau);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
        off = off_diagonal_norm(w);
    }

    // Sign convention first, then the ordering, because ties in the
    // eigenvalues are broken on the sign-fixed columns.
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t arg = 0;
        double best = std::abs(v(0, c));
        for (std::size_t i = 1; i < n; ++i) {
            const double m = std::abs(v(i, c));
            if (m > best) {
                best = m;
                arg = i;
            }
        }
        if (v(arg, c) < 0.0)
            for (std::size_t i = 0; i < n; ++i) v(i, c) = -v(i, c);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (d[x] != d[y]) return d[x] < d[y];
        for (std::size_t i = 0; i < n; ++i)
            if (v(i, x) != v(i, y)) return v(i, x) < v(i, y);
        return false;
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = d[order[c]];
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, c) = v(i, order[c]);
    }
    return out;
}

std::vector<SectorSpectrum> spectrum(const SystemSpec& spec, ExcitationNumber n_max) {
    std::vector<SectorSpectrum> out;
    for (ExcitationNumber n = min_excitation(spec); n <= n_max; n = n.next()) {
        Sector sector = enumerate_sector(n, spec);
        SectorMatrix block = assemble_sector(sector, spec);
        out.push_back(SectorSpectrum{std::move(sector), jacobi_eigh(block.entries)});
    }
    return out;
}

}  // namespace jtc
