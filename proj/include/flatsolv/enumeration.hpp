// Per-dimension enumeration of realizable holonomy groups with witnesses,
// and the classification table of the ten compact flat 3-manifolds.
#pragma once

#include <optional>

#include "flatsolv/holonomy.hpp"

namespace flatsolv {

struct GroupWitness {
    FiniteAbelianGroup group;
    SolvmanifoldSpec witness;
};

// All cyclic holonomy groups of one-block quotients of the given manifold
// dimension, with a witness spectrum each (lexicographically smallest
// fraction multiset). pre: dim >= 3.
std::vector<GroupWitness> enumerate_almost_abelian(unsigned dim);

// All direct sums of n plane-motion factors (orders in {2,3,4,6}) padded by
// a torus of the given center dimension. pre: n >= 1.
std::vector<GroupWitness> enumerate_e2_products(unsigned n, unsigned center);

struct DimensionReport {
    unsigned dim = 0;
    std::vector<GroupWitness> almost_abelian;
    std::vector<GroupWitness> products;  // populated only in dimension 6
};

// Complete list of possible holonomy groups in dimensions 3 through 6;
// completeness is unproven elsewhere, so other dimensions are rejected.
DimensionReport dimension_report(unsigned dim);

struct PlatycosmRow {
    std::string wolf_name;  // "G1".."G6", "B1".."B4"
    FiniteAbelianGroup holonomy;
    std::string h1;  // first homology, display only
    bool orientable;
    std::string symbol;
    std::string cosm_name;
    bool realizable;  // as a lattice quotient with invariant flat metric
    std::optional<SolvmanifoldSpec> witness;
};

// The ten compact flat 3-manifolds with their realizability verdicts.
const std::vector<PlatycosmRow>& platycosm_table();

}  // namespace flatsolv
