#include "flatsolv/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace flatsolv {

TurnFraction::TurnFraction(const Rational& f) {
    Rational v = f;
    // reduce mod 1
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    v -= Rational(fl);
    if (v == 0) throw std::domain_error("turn fraction must have a nonzero rotation part");
    if (v > Rational(1, 2)) v = Rational(1) - v;
    v.canonicalize();
    value_ = v;
}

std::string TurnFraction::text() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

RotationSpectrum::RotationSpectrum(unsigned center_dim, std::vector<TurnFraction> fractions)
    : center_dim_(center_dim), fractions_(std::move(fractions)) {
    std::sort(fractions_.begin(), fractions_.end(),
              [](const TurnFraction& a, const TurnFraction& b) { return b < a; });
}

Int RotationSpectrum::order() const {
    Int l = 1;
    for (const TurnFraction& f : fractions_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.denominator().get_mpz_t());
    return l;
}

std::string RotationSpectrum::text() const {
    std::ostringstream out;
    out << "s=" << center_dim_;
    if (!fractions_.empty()) {
        out << ";f=";
        for (size_t i = 0; i < fractions_.size(); ++i) {
            if (i) out << ",";
            out << fractions_[i].text();
        }
    }
    return out.str();
}

Int spectrum_order(const RotationSpectrum& sp) { return sp.order(); }

EigenvalueMultiset eigenvalue_multiset(const RotationSpectrum& sp) {
    EigenvalueMultiset ev;
    ev.one_multiplicity = sp.center_dim();
    for (const TurnFraction& f : sp.fractions()) {
        const unsigned long p = f.numerator().get_ui();
        const unsigned long q = f.denominator().get_ui();
        if (q == 2) {
            ev.labels[{1, 2}] += 2;  // the pair e^{i*pi}, e^{-i*pi} coincides
        } else {
            ev.labels[{p, q}] += 1;
            ev.labels[{q - p, q}] += 1;
        }
    }
    return ev;
}

std::string Obstruction::message() const {
    std::ostringstream out;
    if (kind == Kind::IrrationalAngle) {
        out << "irrational angle: rotation is never of finite order";
        return out.str();
    }
    out << "incomplete Galois orbit for q=" << q << ": missing residues {";
    for (size_t i = 0; i < missing_residues.size(); ++i) {
        if (i) out << ",";
        out << missing_residues[i];
    }
    out << "} mod " << q;
    return out.str();
}

OrbitOutcome orbit_check(const RotationSpectrum& sp) {
    const EigenvalueMultiset ev = eigenvalue_multiset(sp);

    // Regroup counts per denominator.
    std::map<unsigned long, std::map<unsigned long, unsigned>> per_q;
    for (const auto& [label, count] : ev.labels) per_q[label.second][label.first] += count;

    OrbitCertificate cert;
    IntPolynomial cp = IntPolynomial::one();
    {
        std::vector<Int> linear{Int(-1), Int(1)};  // x - 1
        IntPolynomial xm1(linear);
        for (unsigned i = 0; i < sp.center_dim(); ++i) cp = cp * xm1;
    }

    for (const auto& [q, counts] : per_q) {
        unsigned mult = 0;
        std::vector<unsigned long> missing;
        unsigned max_count = 0;
        for (const auto& [r, c] : counts) max_count = std::max(max_count, c);
        bool uniform = true;
        for (unsigned long r = 1; r < q; ++r) {
            if (gcd_lcm(Int(static_cast<long>(r)), Int(static_cast<long>(q))).gcd != 1) continue;
            auto it = counts.find(r);
            const unsigned c = (it == counts.end()) ? 0 : it->second;
            if (c < max_count) {
                uniform = false;
                missing.push_back(r);
            }
        }
        if (!uniform) {
            Obstruction obs;
            obs.kind = Obstruction::Kind::IncompleteOrbit;
            obs.q = q;
            obs.missing_residues = std::move(missing);
            return obs;
        }
        mult = max_count;
        cert.orbits[q] = mult;
        const IntPolynomial phi_q = cyclotomic_poly(q);
        for (unsigned i = 0; i < mult; ++i) cp = cp * phi_q;
    }
    cert.char_poly = std::move(cp);
    return cert;
}

bool is_certified(const RotationSpectrum& sp) {
    return std::holds_alternative<OrbitCertificate>(orbit_check(sp));
}

OrbitCertificate certify_or_throw(const RotationSpectrum& sp) {
    OrbitOutcome out = orbit_check(sp);
    if (auto* obs = std::get_if<Obstruction>(&out)) throw ObstructionError(*obs);
    return std::get<OrbitCertificate>(std::move(out));
}

double CosineValue::value() const {
    return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(r))) /
           4.0;
}

std::string CosineValue::text() const {
    if (b == 0) {
        // rational a/4 in lowest terms
        Rational v(a, 4);
        v.canonicalize();
        if (v.get_den() == 1) return v.get_num().get_str();
        return v.get_num().get_str() + "/" + v.get_den().get_str();
    }
    std::ostringstream out;
    if (a == 0) {
        // b*sqrt(r)/4 reduced: our surds have b = +-2 here
        if (b == 2) out << "sqrt(" << r << ")/2";
        else if (b == -2) out << "-sqrt(" << r << ")/2";
        else out << b << "*sqrt(" << r << ")/4";
        return out.str();
    }
    out << "(" << a << (b > 0 ? "+" : "-");
    if (std::abs(b) != 1) out << std::abs(b) << "*";
    out << "sqrt(" << r << "))/4";
    return out.str();
}

CosineValue exact_cosine(const TurnFraction& f) {
    const unsigned long p = f.numerator().get_ui();
    const unsigned long q = f.denominator().get_ui();
    switch (q) {
        case 2: return {-4, 0, 1};                                    // cos(pi) = -1
        case 3: return {-2, 0, 1};                                    // cos(2pi/3) = -1/2
        case 4: return {0, 0, 1};                                     // cos(pi/2) = 0
        case 6: return {2, 0, 1};                                     // cos(pi/3) = 1/2
        case 5: return (p == 1) ? CosineValue{-1, 1, 5}               // cos(72deg)
                                : CosineValue{-1, -1, 5};             // cos(144deg)
        case 8: return (p == 1) ? CosineValue{0, 2, 2}                // cos(45deg)
                                : CosineValue{0, -2, 2};              // cos(135deg)
        case 10: return (p == 1) ? CosineValue{1, 1, 5}               // cos(36deg)
                                 : CosineValue{1, -1, 5};             // cos(108deg)
        case 12: return (p == 1) ? CosineValue{0, 2, 3}               // cos(30deg)
                                 : CosineValue{0, -2, 3};             // cos(150deg)
        default: throw std::domain_error("exact_cosine: unsupported denominator");
    }
}

std::vector<AdmissiblePair> admissible_pairs_dim5() {
    // Pool of folded fractions with denominator <= 2*(2n)^2 = 32 for n = 2.
    std::vector<TurnFraction> pool;
    for (unsigned long q = 2; q <= 32; ++q)
        for (unsigned long p = 1; 2 * p <= q; ++p) {
            if (gcd_lcm(Int(static_cast<long>(p)), Int(static_cast<long>(q))).gcd != 1) continue;
            pool.emplace_back(Rational(static_cast<long>(p), static_cast<long>(q)));
        }

    std::vector<AdmissiblePair> pairs;
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i; j < pool.size(); ++j) {
            RotationSpectrum sp(0, {pool[i], pool[j]});
            if (!is_certified(sp)) continue;
            const TurnFraction high = std::max(pool[i], pool[j]);
            const TurnFraction low = std::min(pool[i], pool[j]);
            pairs.push_back(
                {high, low, exact_cosine(high), exact_cosine(low), spectrum_order(sp)});
        }
    std::sort(pairs.begin(), pairs.end(), [](const AdmissiblePair& x, const AdmissiblePair& y) {
        if (!(x.high == y.high)) return x.high < y.high;
        return x.low < y.low;
    });
    return pairs;
}

}  // namespace flatsolv
