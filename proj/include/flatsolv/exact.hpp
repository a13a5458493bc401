// Exact integer and rational arithmetic: totient functions and cyclotomic
// polynomial machinery. Everything here is pure and immutable; all integers
// are arbitrary precision (GMP).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flatsolv {

using Int = mpz_class;
// Canonical rational p/q: lowest terms, q >= 1, zero is 0/1. mpq_class
// maintains exactly this form, so it is the reduced-fraction currency of the
// whole library.
using Rational = mpq_class;

struct GcdLcm {
    Int gcd;
    Int lcm;
};

// pre: a, b >= 1. gcd * lcm == a * b.
GcdLcm gcd_lcm(const Int& a, const Int& b);

// Prime factorization by trial division, exponents > 0, primes ascending.
// pre: n >= 1 (n == 1 gives the empty factorization).
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// Euler totient. pre: n >= 1.
Int euler_phi(const Int& n);

// Additive totient analogue: 0 at 1, phi(p^k) on prime powers, additive over
// coprime parts except that a single factor of 2 is absorbed (value at 2q
// equals value at q for odd q >= 3).
Int hiller_phi(const Int& n);

// Dense integer-coefficient polynomial, lowest degree first. The coefficient
// vector is never empty and has no trailing zeros except for the constant
// zero polynomial, which is {0}.
class IntPolynomial {
  public:
    IntPolynomial() : coeffs_{Int(0)} {}
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial one() { return IntPolynomial({Int(1)}); }
    static IntPolynomial x_power_minus_one(unsigned n);  // x^n - 1

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_monic() const { return coeffs_.back() == 1 && !is_zero(); }
    const Int& leading() const { return coeffs_.back(); }
    const Int& operator[](size_t i) const { return coeffs_[i]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial& rhs) const = default;

    // Quotient of an exact division, or nullopt if the division leaves a
    // remainder or needs non-integer coefficients. pre: divisor nonzero.
    static std::optional<IntPolynomial> divide_exact(const IntPolynomial& num,
                                                     const IntPolynomial& den);

    Int evaluate(const Int& x) const;
    double evaluate(double x) const;

    // Human form, highest degree first, e.g. "x^4 + x^3 + x^2 + x + 1".
    std::string text() const;

  private:
    std::vector<Int> coeffs_;
};

// The n-th cyclotomic polynomial: monic, integer coefficients, degree
// euler_phi(n). Computed by exact division of x^n - 1 by the lower
// cyclotomics. pre: n >= 1.
IntPolynomial cyclotomic_poly(unsigned long n);

// If p is exactly a product of cyclotomic polynomials, returns the map
// n -> multiplicity; otherwise nullopt. Candidates are every n with
// phi(n) <= deg p, swept over n <= 2*deg^2 which provably covers them.
// pre: p monic, degree >= 1 (throws std::invalid_argument otherwise).
std::optional<std::map<unsigned long, unsigned>> cyclotomic_factorization(
    const IntPolynomial& p);

// Small-integer conveniences used throughout the CLI surface.
unsigned long euler_phi_ul(unsigned long n);
unsigned long hiller_phi_ul(unsigned long n);

}  // namespace flatsolv
