#include "flatsolv/enumeration.hpp"

#include <algorithm>
#include <map>

namespace flatsolv {

namespace {

// Ascending fraction sequences compared lexicographically, shorter prefix
// first; this is the witness tie-break order.
std::vector<Rational> ascending_fractions(const RotationSpectrum& sp) {
    std::vector<Rational> out;
    for (const TurnFraction& f : sp.fractions()) out.push_back(f.value());
    std::sort(out.begin(), out.end());
    return out;
}

bool fraction_multiset_less(const RotationSpectrum& a, const RotationSpectrum& b) {
    return ascending_fractions(a) < ascending_fractions(b);
}

// Full folded orbit of q: all r/q with r < q/2 coprime to q.
std::vector<TurnFraction> folded_orbit(unsigned long q) {
    std::vector<TurnFraction> out;
    for (unsigned long r = 1; 2 * r <= q; ++r) {
        if (gcd_lcm(Int(static_cast<long>(r)), Int(static_cast<long>(q))).gcd != 1) continue;
        out.emplace_back(Rational(static_cast<long>(r), static_cast<long>(q)));
    }
    return out;
}

// Cost of one orbit copy in ambient dimensions: half-turns enter as whole
// planes (two eigenvalues of -1), everything else as phi(q) eigenvalues.
unsigned orbit_slot(unsigned long q) { return q == 2 ? 2 : euler_phi_ul(q); }

void pack_orbits(unsigned long q_min, unsigned capacity, unsigned long q_max,
                 std::vector<std::pair<unsigned long, unsigned>>& chosen,
                 const std::function<void(const std::vector<std::pair<unsigned long, unsigned>>&)>&
                     emit) {
    emit(chosen);
    for (unsigned long q = q_min; q <= q_max; ++q) {
        const unsigned slot = orbit_slot(q);
        if (slot > capacity) continue;
        chosen.emplace_back(q, 1);
        pack_orbits(q + 1, capacity - slot, q_max, chosen, emit);
        // raise the multiplicity of q in place
        while (chosen.back().second * slot + slot <= capacity) {
            ++chosen.back().second;
            pack_orbits(q + 1, capacity - chosen.back().second * slot, q_max, chosen, emit);
        }
        chosen.pop_back();
    }
}

}  // namespace

std::vector<GroupWitness> enumerate_almost_abelian(unsigned dim) {
    if (dim < 3)
        throw std::invalid_argument(
            "enumerate_almost_abelian: below dimension 3 only the torus exists");
    const unsigned ambient = dim - 1;

    // Denominators worth packing: any orbit that fits contributes at most
    // ambient eigenvalues, so phi(q) <= ambient bounds q by 2*ambient^2.
    std::vector<unsigned long> qs;
    for (unsigned long q = 2; q <= 2UL * ambient * ambient; ++q)
        if (orbit_slot(q) <= ambient) qs.push_back(q);
    const unsigned long q_max = qs.empty() ? 2 : qs.back();

    std::map<FiniteAbelianGroup, RotationSpectrum> best;
    std::vector<std::pair<unsigned long, unsigned>> chosen;
    pack_orbits(2, ambient, q_max, chosen,
                [&](const std::vector<std::pair<unsigned long, unsigned>>& orbits) {
                    std::vector<TurnFraction> fractions;
                    unsigned used = 0;
                    for (const auto& [q, mult] : orbits) {
                        const auto orbit = folded_orbit(q);
                        for (unsigned m = 0; m < mult; ++m)
                            fractions.insert(fractions.end(), orbit.begin(), orbit.end());
                        used += mult * orbit_slot(q);
                    }
                    RotationSpectrum sp(ambient - used, std::move(fractions));
                    FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(spectrum_order(sp));
                    auto it = best.find(g);
                    if (it == best.end())
                        best.emplace(std::move(g), std::move(sp));
                    else if (fraction_multiset_less(sp, it->second))
                        it->second = sp;
                });

    std::vector<GroupWitness> out;
    for (auto& [g, sp] : best)
        out.push_back({g, SolvmanifoldSpec({AlmostAbelianBlock{sp}})});
    return out;
}

std::vector<GroupWitness> enumerate_e2_products(unsigned n, unsigned center) {
    if (n < 1) throw std::invalid_argument("enumerate_e2_products: need at least one factor");
    static constexpr unsigned long kOrders[] = {2, 3, 4, 6};

    std::map<FiniteAbelianGroup, std::vector<unsigned long>> best;
    std::vector<unsigned long> pick(n, 0);
    // multisets of indices into kOrders, non-decreasing
    auto emit = [&](const std::vector<unsigned long>& idx) {
        std::vector<Int> orders;
        for (unsigned long i : idx) orders.push_back(Int(static_cast<long>(kOrders[i])));
        FiniteAbelianGroup g = FiniteAbelianGroup::from_orders(orders);
        if (!best.count(g)) {
            std::vector<unsigned long> ks;
            for (unsigned long i : idx) ks.push_back(kOrders[i]);
            best.emplace(std::move(g), std::move(ks));
        }
    };
    std::function<void(unsigned, unsigned long)> rec = [&](unsigned pos, unsigned long lo) {
        if (pos == n) {
            emit(pick);
            return;
        }
        for (unsigned long i = lo; i < 4; ++i) {
            pick[pos] = i;
            rec(pos + 1, i);
        }
    };
    rec(0, 0);

    std::vector<GroupWitness> out;
    for (const auto& [g, ks] : best) {
        std::vector<Block> blocks;
        for (unsigned long k : ks)
            blocks.push_back(E2Factor{TurnFraction(1, static_cast<long>(k))});
        if (center > 0) blocks.push_back(TorusFactor{center});
        out.push_back({g, SolvmanifoldSpec(std::move(blocks))});
    }
    return out;
}

DimensionReport dimension_report(unsigned dim) {
    if (dim < 3 || dim > 6)
        throw std::invalid_argument(
            "dimension_report: completeness is only established for dimensions 3 to 6");
    DimensionReport report;
    report.dim = dim;
    report.almost_abelian = enumerate_almost_abelian(dim);
    if (dim == 6) report.products = enumerate_e2_products(2, 0);
    return report;
}

namespace {

SolvmanifoldSpec single_block_spec(long num, long den) {
    return SolvmanifoldSpec({AlmostAbelianBlock{RotationSpectrum(0, {TurnFraction(num, den)})}});
}

std::vector<PlatycosmRow> make_platycosm_table() {
    std::vector<PlatycosmRow> rows;
    auto group = [](std::initializer_list<long> orders) {
        std::vector<Int> v;
        for (long o : orders) v.push_back(Int(o));
        return FiniteAbelianGroup::from_orders(v);
    };
    rows.push_back({"G1", group({}), "Z+Z+Z", true, "c1", "torocosm", true,
                    SolvmanifoldSpec({TorusFactor{3}})});
    rows.push_back({"G2", group({2}), "Z+Z2+Z2", true, "c2", "dicosm", true,
                    single_block_spec(1, 2)});
    rows.push_back({"G3", group({3}), "Z+Z3", true, "c3", "tricosm", true,
                    single_block_spec(1, 3)});
    rows.push_back({"G4", group({4}), "Z+Z2", true, "c4", "tetracosm", true,
                    single_block_spec(1, 4)});
    rows.push_back({"G5", group({6}), "Z", true, "c6", "hexacosm", true,
                    single_block_spec(1, 6)});
    rows.push_back({"G6", group({2, 2}), "Z4+Z4", true, "c22", "didicosm", false, std::nullopt});
    rows.push_back({"B1", group({2}), "Z+Z+Z2", false, "+a1", "first amphicosm", false,
                    std::nullopt});
    rows.push_back({"B2", group({2}), "Z+Z", false, "-a1", "second amphicosm", false,
                    std::nullopt});
    rows.push_back({"B3", group({2, 2}), "Z+Z2+Z2", false, "+a2", "first amphidicosm", false,
                    std::nullopt});
    rows.push_back({"B4", group({2, 2}), "Z+Z4", false, "-a2", "second amphidicosm", false,
                    std::nullopt});
    return rows;
}

}  // namespace

const std::vector<PlatycosmRow>& platycosm_table() {
    static const std::vector<PlatycosmRow> table = make_platycosm_table();
    return table;
}

}  // namespace flatsolv
