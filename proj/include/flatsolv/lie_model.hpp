// Structural model of flat Lie algebras (center + abelian subalgebra acting
// by block rotations on an even-dimensional abelian derived ideal) and of
// product manifolds assembled from certified blocks.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "flatsolv/spectrum.hpp"

namespace flatsolv {

// g = center ⊕ b ⊕ [g,g] with b acting on [g,g] by skew rotations.
// rotation_table has one row per b-basis vector and one column per rotation
// plane of [g,g]; entry (i, j) is the rational rotation speed of basis vector
// i on plane j.
class FlatLieAlgebra {
  public:
    FlatLieAlgebra(unsigned center_dim, std::vector<std::vector<Rational>> rotation_table);

    unsigned center_dim() const { return center_dim_; }
    unsigned b_dim() const { return static_cast<unsigned>(rotation_table_.size()); }
    unsigned plane_count() const { return plane_count_; }
    unsigned derived_dim() const { return 2 * plane_count_; }
    unsigned total_dim() const { return center_dim_ + b_dim() + derived_dim(); }
    const std::vector<std::vector<Rational>>& rotation_table() const { return rotation_table_; }

  private:
    unsigned center_dim_;
    unsigned plane_count_;
    std::vector<std::vector<Rational>> rotation_table_;
};

// True iff the algebra has a codimension-1 abelian ideal and is non-abelian.
bool is_almost_abelian(const FlatLieAlgebra& g);

struct E2Splitting {
    unsigned center_dim;
    unsigned e2_count;
    // Exact change of basis C on b with C * rotation_table = identity; row i
    // gives the coordinates of the new basis vector acting only on plane i.
    std::vector<std::vector<Rational>> basis_change;
};

// When dim b equals the number of rotation planes the algebra splits as a
// direct product of the center with that many copies of the plane-motion
// algebra; returns the splitting with its exact change of basis, or nullopt
// when the dimensions rule it out.
std::optional<E2Splitting> split_e2(const FlatLieAlgebra& g);

// --- product manifolds -----------------------------------------------------

struct AlmostAbelianBlock {
    RotationSpectrum spectrum;  // must pass orbit_check
    bool operator==(const AlmostAbelianBlock&) const = default;
};

struct E2Factor {
    TurnFraction fraction;  // denominator in {2, 3, 4, 6}
    bool operator==(const E2Factor&) const = default;
};

struct TorusFactor {
    unsigned dim;  // >= 1
    bool operator==(const TorusFactor&) const = default;
};

using Block = std::variant<AlmostAbelianBlock, E2Factor, TorusFactor>;

// Ordered list of building blocks; every block that needs a lattice is
// validated on construction, so a live spec always describes a manifold.
class SolvmanifoldSpec {
  public:
    explicit SolvmanifoldSpec(std::vector<Block> blocks);

    const std::vector<Block>& blocks() const { return blocks_; }
    unsigned dimension() const;

    bool operator==(const SolvmanifoldSpec&) const = default;

  private:
    std::vector<Block> blocks_;
};

unsigned block_dimension(const Block& b);
unsigned spec_dimension(const SolvmanifoldSpec& spec);

}  // namespace flatsolv
