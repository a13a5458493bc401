#include "flatsolv/holonomy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flatsolv {

FiniteAbelianGroup FiniteAbelianGroup::from_orders(const std::vector<Int>& orders) {
    // Regroup by prime: for each prime collect the exponents across the given
    // cyclic orders, then rebuild the chain largest-exponents-first.
    std::map<Int, std::vector<unsigned>> exponents;
    for (const Int& n : orders) {
        if (n < 1) throw std::invalid_argument("FiniteAbelianGroup: orders must be >= 1");
        for (const auto& [p, e] : factorize(n)) exponents[p].push_back(e);
    }
    size_t chain_len = 0;
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<unsigned>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<Int> factors(chain_len, Int(1));
    for (const auto& [p, es] : exponents)
        for (size_t i = 0; i < es.size(); ++i) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), es[i]);
            factors[i] *= pk;  // slot 0 gets the largest powers
        }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
    FiniteAbelianGroup g;
    g.factors_ = std::move(factors);
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Int& n) { return from_orders({n}); }

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (const Int& d : factors_) o *= d;
    return o;
}

std::vector<Int> FiniteAbelianGroup::primary_orders() const {
    std::vector<Int> out;
    for (const Int& d : factors_)
        for (const auto& [p, e] : factorize(d)) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
            out.push_back(pk);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FiniteAbelianGroup::display() const {
    if (trivial()) return "{e}";
    std::ostringstream out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << "+";
        out << "Z" << factors_[i].get_str();
    }
    return out.str();
}

FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup& rhs) const {
    std::vector<Int> orders = factors_;
    orders.insert(orders.end(), rhs.factors_.begin(), rhs.factors_.end());
    return from_orders(orders);
}

std::strong_ordering FiniteAbelianGroup::operator<=>(const FiniteAbelianGroup& rhs) const {
    if (order() != rhs.order()) return order() < rhs.order() ? std::strong_ordering::less
                                                             : std::strong_ordering::greater;
    if (factors_.size() != rhs.factors_.size())
        return factors_.size() < rhs.factors_.size() ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] != rhs.factors_[i])
            return factors_[i] < rhs.factors_[i] ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

FiniteAbelianGroup holonomy_of_block(const RotationSpectrum& sp) {
    certify_or_throw(sp);
    return FiniteAbelianGroup::cyclic(spectrum_order(sp));
}

FiniteAbelianGroup holonomy_of_spec(const SolvmanifoldSpec& spec) {
    std::vector<Int> orders;
    for (const Block& b : spec.blocks()) {
        if (const auto* aa = std::get_if<AlmostAbelianBlock>(&b)) {
            orders.push_back(spectrum_order(aa->spectrum));
        } else if (const auto* e2 = std::get_if<E2Factor>(&b)) {
            orders.push_back(e2->fraction.denominator());
        }
        // torus factors contribute trivially
    }
    return FiniteAbelianGroup::from_orders(orders);
}

RotationSpectrum prime_power_witness(const Int& p, unsigned k, bool doubled) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("prime_power_witness: p must be prime");
    if (k < 1) throw std::invalid_argument("prime_power_witness: k must be >= 1");
    if (p == 2 && !doubled && k < 2)
        throw std::invalid_argument("prime_power_witness: order 2 needs the doubled variant "
                                    "or k >= 2");
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    std::vector<TurnFraction> fractions;
    if (!doubled) {
        // folded coprime residues l/p^k, 1 <= l <= (p^k - 1) / 2
        for (Int l = 1; 2 * l <= pk - 1; ++l) {
            if (gcd_lcm(l, pk).gcd != 1) continue;
            fractions.emplace_back(Rational(l, pk));
        }
    } else {
        // odd l coprime to p with l < p^k give the folded residues of 2 p^k
        for (Int l = 1; l < pk; l += 2) {
            if (gcd_lcm(l, pk).gcd != 1) continue;
            fractions.emplace_back(Rational(l, 2 * pk));
        }
    }
    return RotationSpectrum(0, std::move(fractions));
}

RotationSpectrum merge_blocks(const std::vector<RotationSpectrum>& spectra) {
    unsigned center = 0;
    std::vector<TurnFraction> fractions;
    for (const RotationSpectrum& sp : spectra) {
        certify_or_throw(sp);
        center += sp.center_dim();
        fractions.insert(fractions.end(), sp.fractions().begin(), sp.fractions().end());
    }
    return RotationSpectrum(center, std::move(fractions));
}

Int min_dim_solv(const Int& n) {
    if (n < 2) throw std::invalid_argument("min_dim_solv: n must be >= 2");
    if (n == 2) return 3;  // dimension 2 only carries the torus
    return hiller_phi(n) + 1;
}

RotationSpectrum minimal_cyclic_witness(const Int& n) {
    if (n < 2) throw std::invalid_argument("minimal_cyclic_witness: n must be >= 2");
    if (n == 2) return RotationSpectrum(0, {TurnFraction(1, 2)});

    const auto factors = factorize(n);
    std::vector<RotationSpectrum> blocks;
    const bool two_times_odd = factors.front().first == 2 && factors.front().second == 1;
    bool doubled_used = false;
    for (const auto& [p, e] : factors) {
        if (p == 2 && two_times_odd) continue;  // absorbed into the first odd block
        const bool doubled = two_times_odd && !doubled_used && p != 2;
        if (doubled) doubled_used = true;
        blocks.push_back(prime_power_witness(p, e, doubled));
    }
    return merge_blocks(blocks);
}

SolvmanifoldSpec abelian_witness(const FiniteAbelianGroup& a, bool kahler) {
    std::vector<Block> blocks;
    for (const Int& pk : a.primary_orders())
        blocks.push_back(AlmostAbelianBlock{minimal_cyclic_witness(pk)});
    if (blocks.empty()) blocks.push_back(TorusFactor{1});
    unsigned dim = 0;
    for (const Block& b : blocks) dim += block_dimension(b);
    if (kahler && dim % 2 == 1) blocks.push_back(TorusFactor{1});
    return SolvmanifoldSpec(std::move(blocks));
}

}  // namespace flatsolv
