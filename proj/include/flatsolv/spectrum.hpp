// Exact model of a one-parameter family of block rotations via rational turn
// fractions, and the Galois-orbit test deciding conjugacy to an invertible
// integer matrix.
#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "flatsolv/exact.hpp"

namespace flatsolv {

// Rotation angle as a fraction of a full turn, reduced and folded into
// (0, 1/2]. theta(2*pi*f) and theta(2*pi*(1-f)) are conjugate rotations, so
// the fold is canonical; f = 0 (no rotation) is rejected, zero blocks belong
// to the center.
class TurnFraction {
  public:
    // Accepts any rational with a nonzero fractional part mod 1.
    explicit TurnFraction(const Rational& f);
    TurnFraction(long num, long den) : TurnFraction(Rational(num, den)) {}

    const Rational& value() const { return value_; }
    Int numerator() const { return value_.get_num(); }
    Int denominator() const { return value_.get_den(); }
    double turns() const { return value_.get_d(); }

    std::string text() const;  // "p/q"

    bool operator==(const TurnFraction& rhs) const { return value_ == rhs.value_; }
    bool operator<(const TurnFraction& rhs) const { return value_ < rhs.value_; }

  private:
    Rational value_;
};

// A center block of fixed directions plus a multiset of rotation planes.
// Ambient dimension s + 2n; the corresponding Lie group has dimension one
// more (the acting line).
class RotationSpectrum {
  public:
    RotationSpectrum(unsigned center_dim, std::vector<TurnFraction> fractions);

    unsigned center_dim() const { return center_dim_; }
    const std::vector<TurnFraction>& fractions() const { return fractions_; }
    unsigned ambient_dim() const {
        return center_dim_ + 2 * static_cast<unsigned>(fractions_.size());
    }
    unsigned group_dim() const { return ambient_dim() + 1; }

    // Order of the rotation as a matrix: lcm of the fraction denominators.
    Int order() const;

    std::string text() const;  // canonical "s=<s>;f=p/q,..." form

    bool operator==(const RotationSpectrum& rhs) const = default;

  private:
    unsigned center_dim_;
    std::vector<TurnFraction> fractions_;  // sorted descending (display form)
};

Int spectrum_order(const RotationSpectrum& sp);

// Exact eigenvalue bookkeeping: label (p, q) means e^{2*pi*i*p/q} with
// gcd(p, q) = 1 and q >= 2; the eigenvalue 1 is counted separately.
struct EigenvalueMultiset {
    unsigned one_multiplicity = 0;
    std::map<std::pair<unsigned long, unsigned long>, unsigned> labels;
};

EigenvalueMultiset eigenvalue_multiset(const RotationSpectrum& sp);

// Witness that the eigenvalues form complete Galois orbits: for each q the
// primitive q-th roots all appear with one shared multiplicity.
struct OrbitCertificate {
    std::map<unsigned long, unsigned> orbits;  // q >= 2 -> multiplicity
    IntPolynomial char_poly;                   // (x-1)^s * prod cyclotomic(q)^mult
};

struct Obstruction {
    enum class Kind { IrrationalAngle, IncompleteOrbit };
    Kind kind = Kind::IncompleteOrbit;
    unsigned long q = 0;                          // offending denominator
    std::vector<unsigned long> missing_residues;  // primitive residues below max count
    std::string message() const;
};

class ObstructionError : public std::runtime_error {
  public:
    explicit ObstructionError(Obstruction obs)
        : std::runtime_error(obs.message()), obstruction_(std::move(obs)) {}
    const Obstruction& obstruction() const { return obstruction_; }

  private:
    Obstruction obstruction_;
};

class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using OrbitOutcome = std::variant<OrbitCertificate, Obstruction>;

// Decides whether the rotation at one full parameter step is conjugate to an
// integer matrix invertible over Z. Exact; failure is a value, not an error.
OrbitOutcome orbit_check(const RotationSpectrum& sp);

bool is_certified(const RotationSpectrum& sp);
OrbitCertificate certify_or_throw(const RotationSpectrum& sp);

// Exact quadratic surd (a + b*sqrt(r))/4 with r in {1, 2, 3, 5}; covers every
// cosine that appears among admissible turn fractions.
struct CosineValue {
    long a = 0;
    long b = 0;
    unsigned r = 1;
    double value() const;
    std::string text() const;
};

// Exact cosine of 2*pi*f for the denominators {2,3,4,5,6,8,10,12}.
// Throws std::domain_error for other denominators.
CosineValue exact_cosine(const TurnFraction& f);

struct AdmissiblePair {
    TurnFraction high;  // larger fraction
    TurnFraction low;
    CosineValue cos_high;  // cos(2*pi*high)
    CosineValue cos_low;
    Int order;
};

// The complete list of fraction pairs {f1, f2} (center 0, two planes) that
// pass orbit_check, sorted by (high, low). The sweep bound 2*(2n)^2 = 32 on
// denominators covers every orbit that fits in four eigenvalues.
std::vector<AdmissiblePair> admissible_pairs_dim5();

}  // namespace flatsolv
