#include "flatsolv/lie_model.hpp"

#include <stdexcept>

namespace flatsolv {

namespace {

// Rank over Q by Gauss elimination; rows is modified.
unsigned rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    unsigned rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

FlatLieAlgebra::FlatLieAlgebra(unsigned center_dim,
                               std::vector<std::vector<Rational>> rotation_table)
    : center_dim_(center_dim), rotation_table_(std::move(rotation_table)) {
    plane_count_ = rotation_table_.empty() ? 0
                                           : static_cast<unsigned>(rotation_table_[0].size());
    for (const auto& row : rotation_table_)
        if (row.size() != plane_count_)
            throw std::invalid_argument("rotation_table: ragged rows");
    if (b_dim() > plane_count_)
        throw std::invalid_argument("rotation_table: more acting directions than planes");
    if (b_dim() > 0 && plane_count_ == 0)
        throw std::invalid_argument("rotation_table: acting directions with no planes");
    for (unsigned j = 0; j < plane_count_; ++j) {
        bool nonzero = false;
        for (const auto& row : rotation_table_) nonzero = nonzero || row[j] != 0;
        if (!nonzero)
            throw std::invalid_argument("rotation_table: plane with zero action is not derived");
    }
    if (rational_rank(rotation_table_) != b_dim())
        throw std::invalid_argument("rotation_table: rows must be linearly independent over Q");
}

bool is_almost_abelian(const FlatLieAlgebra& g) {
    return g.b_dim() == 1 && g.plane_count() >= 1;
}

std::optional<E2Splitting> split_e2(const FlatLieAlgebra& g) {
    const unsigned n = g.b_dim();
    if (n != g.plane_count()) return std::nullopt;
    if (n == 0) return E2Splitting{g.center_dim(), 0, {}};

    // Invert the square rotation table exactly over Q: the inverse rows are
    // the dual basis that untangles the planes.
    std::vector<std::vector<Rational>> a = g.rotation_table();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (unsigned i = 0; i < n; ++i) inv[i][i] = 1;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n)
            throw std::invalid_argument("split_e2: rotation table is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational lead = a[col][col];
        for (unsigned c = 0; c < n; ++c) {
            a[col][c] /= lead;
            inv[col][c] /= lead;
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (unsigned c = 0; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return E2Splitting{g.center_dim(), n, std::move(inv)};
}

unsigned block_dimension(const Block& b) {
    return std::visit(
        [](const auto& blk) -> unsigned {
            using T = std::decay_t<decltype(blk)>;
            if constexpr (std::is_same_v<T, AlmostAbelianBlock>)
                return blk.spectrum.group_dim();
            else if constexpr (std::is_same_v<T, E2Factor>)
                return 3;
            else
                return blk.dim;
        },
        b);
}

SolvmanifoldSpec::SolvmanifoldSpec(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (const Block& b : blocks_) {
        if (const auto* aa = std::get_if<AlmostAbelianBlock>(&b)) {
            certify_or_throw(aa->spectrum);
        } else if (const auto* e2 = std::get_if<E2Factor>(&b)) {
            const Int q = e2->fraction.denominator();
            if (q != 2 && q != 3 && q != 4 && q != 6)
                throw std::invalid_argument(
                    "E2Factor: fraction denominator must be one of 2, 3, 4, 6");
        } else if (const auto* t = std::get_if<TorusFactor>(&b)) {
            if (t->dim < 1) throw std::invalid_argument("TorusFactor: dimension must be >= 1");
        }
    }
}

unsigned SolvmanifoldSpec::dimension() const {
    unsigned total = 0;
    for (const Block& b : blocks_) total += block_dimension(b);
    return total;
}

unsigned spec_dimension(const SolvmanifoldSpec& spec) { return spec.dimension(); }

}  // namespace flatsolv
