#include "flatsolv/lattice.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace flatsolv {

IntMatrix IntMatrix::identity(unsigned n) {
    IntMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (unsigned j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::pow(const Int& e) const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix::pow: not square");
    if (e < 0) throw std::invalid_argument("IntMatrix::pow: negative exponent");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

IntPolynomial IntMatrix::char_poly() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix::char_poly: not square");
    const unsigned n = rows_;
    // Faddeev-LeVerrier over exact rationals.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    auto mat_mul_add = [&](const std::vector<std::vector<Rational>>& x, const Rational& diag) {
        std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
        // out = A * (x + diag*I)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned k = 0; k < n; ++k) {
                Rational a(at(i, k));
                if (a == 0) continue;
                for (unsigned j = 0; j < n; ++j) {
                    Rational term = x[k][j];
                    if (k == j) term += diag;
                    out[i][j] += a * term;
                }
            }
        return out;
    };
    Rational prev_c = 0;  // coefficient fed back into the iteration
    for (unsigned k = 1; k <= n; ++k) {
        m = mat_mul_add(m, prev_c);
        Rational tr = 0;
        for (unsigned i = 0; i < n; ++i) tr += m[i][i];
        Rational ck = -tr / Rational(static_cast<long>(k));
        c[n - k] = ck;
        prev_c = ck;
    }
    std::vector<Int> coeffs(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        if (c[i].get_den() != 1)
            throw std::logic_error("char_poly: non-integer coefficient from integer matrix");
        coeffs[i] = c[i].get_num();
    }
    return IntPolynomial(std::move(coeffs));
}

Int IntMatrix::det() const {
    // det(A) = (-1)^n * charpoly(0)
    const IntPolynomial cp = char_poly();
    Int d = cp[0];
    if (rows_ % 2 == 1) d = -d;
    return d;
}

RealMatrix IntMatrix::to_real() const {
    RealMatrix out(rows_, cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) out(i, j) = at(i, j).get_d();
    return out;
}

IntMatrix companion_matrix(const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("companion_matrix: need a monic polynomial of degree >= 1");
    const unsigned d = static_cast<unsigned>(p.degree());
    IntMatrix c(d, d);
    for (unsigned i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
    for (unsigned i = 0; i < d; ++i) c.at(i, d - 1) = -p[i];
    return c;
}

RealMatrix rotation_matrix(const RotationSpectrum& sp, double t) {
    const unsigned dim = sp.ambient_dim();
    RealMatrix m = RealMatrix::Zero(dim, dim);
    for (unsigned i = 0; i < sp.center_dim(); ++i) m(i, i) = 1.0;
    unsigned off = sp.center_dim();
    for (const TurnFraction& f : sp.fractions()) {
        const double angle = 2.0 * std::numbers::pi * f.turns() * t;
        m(off, off) = std::cos(angle);
        m(off, off + 1) = std::sin(angle);
        m(off + 1, off) = -std::sin(angle);
        m(off + 1, off + 1) = std::cos(angle);
        off += 2;
    }
    return m;
}

IntMatrix build_integer_model(const OrbitCertificate& cert, unsigned center_dim) {
    unsigned dim = center_dim;
    for (const auto& [q, mult] : cert.orbits) dim += mult * euler_phi_ul(q);
    IntMatrix e(dim, dim);
    for (unsigned i = 0; i < center_dim; ++i) e.at(i, i) = 1;
    unsigned off = center_dim;
    for (const auto& [q, mult] : cert.orbits) {
        const IntMatrix block = companion_matrix(cyclotomic_poly(q));
        for (unsigned copy = 0; copy < mult; ++copy) {
            for (unsigned i = 0; i < block.rows(); ++i)
                for (unsigned j = 0; j < block.cols(); ++j)
                    e.at(off + i, off + j) = block.at(i, j);
            off += block.rows();
        }
    }
    return e;
}

namespace {

using Complex = std::complex<double>;

// Eigenvector of the companion matrix of monic p for eigenvalue lambda:
// v_i = sum_k c_{i+k} lambda^k with c_deg = 1 (backward Horner), v_last = 1.
std::vector<Complex> companion_eigenvector(const IntPolynomial& p, Complex lambda) {
    const unsigned d = static_cast<unsigned>(p.degree());
    std::vector<Complex> v(d);
    v[d - 1] = 1.0;
    for (int i = static_cast<int>(d) - 2; i >= 0; --i)
        v[i] = lambda * v[i + 1] + p[i + 1].get_d();
    return v;
}

}  // namespace

LatticeDescriptor build_lattice(const RotationSpectrum& sp, double tol) {
    if (tol <= 0) throw std::invalid_argument("build_lattice: tolerance must be positive");
    OrbitCertificate cert = certify_or_throw(sp);
    IntMatrix e = build_integer_model(cert, sp.center_dim());
    const unsigned dim = sp.ambient_dim();

    // Real bases pairing invariant planes: V columns live on the rotation
    // side, W columns on the integer-model side; P = V * W^-1.
    RealMatrix v = RealMatrix::Zero(dim, dim);
    RealMatrix w = RealMatrix::Zero(dim, dim);
    unsigned col = 0;

    for (unsigned i = 0; i < sp.center_dim(); ++i) {
        v(i, col) = 1.0;
        w(i, col) = 1.0;
        ++col;
    }

    // Rotation-plane offsets grouped by denominator, in input order.
    std::map<unsigned long, std::vector<std::pair<unsigned long, unsigned>>> planes_by_q;
    {
        unsigned off = sp.center_dim();
        for (const TurnFraction& f : sp.fractions()) {
            planes_by_q[f.denominator().get_ui()].emplace_back(f.numerator().get_ui(), off);
            off += 2;
        }
    }

    unsigned block_off = sp.center_dim();
    for (const auto& [q, mult] : cert.orbits) {
        const IntPolynomial phi_q = cyclotomic_poly(q);
        const unsigned deg = static_cast<unsigned>(phi_q.degree());
        const auto& planes = planes_by_q.at(q);
        if (q == 2) {
            // Each half-turn plane pairs with two 1x1 companion copies.
            for (unsigned j = 0; j < planes.size(); ++j) {
                const unsigned plane_off = planes[j].second;
                for (unsigned k = 0; k < 2; ++k) {
                    v(plane_off + k, col) = 1.0;
                    w(block_off + 2 * j + k, col) = 1.0;
                    ++col;
                }
            }
            block_off += mult;  // mult == 2 * planes.size()
            continue;
        }
        // Copy c consumes, for every folded residue r, the c-th plane
        // carrying r (greedy in input order).
        std::map<unsigned long, std::vector<unsigned>> planes_by_residue;
        for (const auto& [r, off] : planes) planes_by_residue[r].push_back(off);
        for (unsigned copy = 0; copy < mult; ++copy) {
            for (const auto& [r, offs] : planes_by_residue) {
                const unsigned plane_off = offs[copy];
                const Complex lambda =
                    std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                        static_cast<double>(q));
                const std::vector<Complex> vec = companion_eigenvector(phi_q, lambda);
                for (unsigned i = 0; i < deg; ++i) {
                    w(block_off + i, col) = vec[i].real();
                    w(block_off + i, col + 1) = vec[i].imag();
                }
                v(plane_off, col) = 1.0;
                v(plane_off + 1, col + 1) = 1.0;
                col += 2;
            }
            block_off += deg;
        }
    }

    const RealMatrix p = v * w.partialPivLu().inverse();
    const RealMatrix r1 = rotation_matrix(sp, 1.0);
    const RealMatrix conj = p.partialPivLu().solve(r1 * p);
    const double residual = (conj - e.to_real()).cwiseAbs().maxCoeff();
    if (residual > tol) {
        std::ostringstream msg;
        msg << "conjugator residual " << residual << " exceeds tolerance " << tol;
        throw NumericalError(msg.str());
    }

    const Int d = spectrum_order(sp);
    if (!(e.pow(d) == IntMatrix::identity(dim)))
        throw std::logic_error("build_lattice: integer model order mismatch");
    if (e.det() != 1) throw std::logic_error("build_lattice: integer model must have det 1");

    std::ostringstream gen;
    gen << "Gamma = Z ltimes_phi P*Z^" << dim << " (one turn-parameter step, t0 = 1)";
    return LatticeDescriptor{sp, d, std::move(cert), std::move(e), p, residual, gen.str()};
}

}  // namespace flatsolv
