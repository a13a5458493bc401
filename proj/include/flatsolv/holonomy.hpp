// Holonomy groups of product specs and constructions realizing a prescribed
// finite cyclic or abelian holonomy, including minimal-dimension witnesses.
#pragma once

#include "flatsolv/lie_model.hpp"

namespace flatsolv {

// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k with
// every d_i >= 2; the empty chain is the trivial group. Canonical, so
// structural equality is group isomorphism.
class FiniteAbelianGroup {
  public:
    FiniteAbelianGroup() = default;
    // Canonicalizes an arbitrary direct sum of cyclic groups; factors equal
    // to 1 are dropped. pre: every order >= 1.
    static FiniteAbelianGroup from_orders(const std::vector<Int>& orders);
    static FiniteAbelianGroup cyclic(const Int& n);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }
    bool is_cyclic() const { return factors_.size() <= 1; }
    Int order() const;
    // Primary decomposition: the multiset of prime-power cyclic summands.
    std::vector<Int> primary_orders() const;

    std::string display() const;  // "{e}", "Z4", "Z2+Z12"

    FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& rhs) const;

    bool operator==(const FiniteAbelianGroup&) const = default;
    std::strong_ordering operator<=>(const FiniteAbelianGroup& rhs) const;

  private:
    std::vector<Int> factors_;
};

// Cyclic group of the rotation order. Throws ObstructionError when the
// spectrum admits no lattice.
FiniteAbelianGroup holonomy_of_block(const RotationSpectrum& sp);

// Direct sum over the blocks of a product spec, in canonical form.
FiniteAbelianGroup holonomy_of_spec(const SolvmanifoldSpec& spec);

// Single-orbit spectrum with holonomy Z_{p^k} (or Z_{2 p^k} when doubled) in
// ambient dimension phi(p^k) (resp. phi(2 p^k)). pre: p prime; p = 2 without
// doubling needs k >= 2.
RotationSpectrum prime_power_witness(const Int& p, unsigned k, bool doubled);

// Concatenates certified spectra into one certified spectrum; the holonomy
// order becomes the lcm of the inputs' orders.
RotationSpectrum merge_blocks(const std::vector<RotationSpectrum>& spectra);

// Minimal dimension of a flat solvmanifold with cyclic holonomy of order n:
// 3 for n = 2, hiller_phi(n) + 1 otherwise. pre: n >= 2.
Int min_dim_solv(const Int& n);

// Spectrum realizing Z_n in exactly min_dim_solv(n) total dimension. pre: n >= 2.
RotationSpectrum minimal_cyclic_witness(const Int& n);

// Product spec with holonomy exactly A, assembled from minimal cyclic
// witnesses of A's primary decomposition; the kahler flag pads odd total
// dimension with a circle factor.
SolvmanifoldSpec abelian_witness(const FiniteAbelianGroup& a, bool kahler);

}  // namespace flatsolv
