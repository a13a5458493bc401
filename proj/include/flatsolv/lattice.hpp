// Certified lattice construction: the exact integer model of a certified
// rotation, a numeric conjugator between the two, and the verification data
// binding them.
#pragma once

#include <Eigen/Dense>

#include <string>

#include "flatsolv/spectrum.hpp"

namespace flatsolv {

using RealMatrix = Eigen::MatrixXd;

// Small dense matrix over arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    static IntMatrix identity(unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    Int& at(unsigned r, unsigned c) { return data_[r * cols_ + c]; }
    const Int& at(unsigned r, unsigned c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    IntMatrix pow(const Int& e) const;  // pre: square, e >= 0
    // Exact characteristic polynomial det(xI - A), monic, lowest degree first.
    IntPolynomial char_poly() const;
    Int det() const;
    RealMatrix to_real() const;

  private:
    unsigned rows_, cols_;
    std::vector<Int> data_;
};

// Companion matrix of a monic polynomial: subdiagonal ones, last column the
// negated coefficients. Characteristic polynomial is the input.
IntMatrix companion_matrix(const IntPolynomial& p);

// The block rotation at parameter t: identity on the center, rotation by
// angle 2*pi*f*t on each plane.
RealMatrix rotation_matrix(const RotationSpectrum& sp, double t);

// Integer model of a certificate: identity block of the center size followed
// by the companion blocks of each orbit's cyclotomic, repeated per
// multiplicity, denominators ascending. det = 1.
IntMatrix build_integer_model(const OrbitCertificate& cert, unsigned center_dim);

struct LatticeDescriptor {
    RotationSpectrum spectrum;
    Int order_d;
    OrbitCertificate certificate;
    IntMatrix integer_model;  // E
    RealMatrix conjugator;    // P with P^-1 * rotation * P = E up to residual
    double residual;
    std::string generators;
};

// Builds the certified lattice of a spectrum: throws ObstructionError when no
// lattice exists and NumericalError if the assembled conjugator misses the
// tolerance (which would be a bug, not a math failure).
LatticeDescriptor build_lattice(const RotationSpectrum& sp, double tol = 1e-9);

}  // namespace flatsolv
