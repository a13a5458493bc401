#include "flatsolv/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace flatsolv {

GcdLcm gcd_lcm(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gcd_lcm: arguments must be >= 1");
    Int g, l;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, l};
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    std::vector<std::pair<Int, unsigned>> factors;
    Int m = n;
    Int p = 2;
    while (p * p <= m) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            unsigned e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                m /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        p = (p == 2) ? 3 : p + 2;
    }
    if (m > 1) factors.emplace_back(m, 1);
    return factors;
}

Int euler_phi(const Int& n) {
    if (n < 1) throw std::invalid_argument("euler_phi: argument must be >= 1");
    Int result = 1;
    for (const auto& [p, e] : factorize(n)) {
        Int pk_1;
        mpz_pow_ui(pk_1.get_mpz_t(), p.get_mpz_t(), e - 1);
        result *= pk_1 * (p - 1);
    }
    return result;
}

Int hiller_phi(const Int& n) {
    if (n < 1) throw std::invalid_argument("hiller_phi: argument must be >= 1");
    if (n == 1) return 0;
    if (n == 2) return 1;
    Int sum = 0;
    for (const auto& [p, e] : factorize(n)) {
        if (p == 2 && e == 1) continue;  // 2q with q odd contributes nothing
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
        sum += euler_phi(pk);
    }
    return sum;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Int(0));
}

IntPolynomial IntPolynomial::x_power_minus_one(unsigned n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = -1;
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) out[i] -= rhs.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& num,
                                                         const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (num.is_zero()) return IntPolynomial();
    if (num.degree() < den.degree()) return std::nullopt;

    std::vector<Int> rem = num.coeffs_;
    std::vector<Int> quot(num.degree() - den.degree() + 1, Int(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Int& lead = rem[k + den.degree()];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), den.leading().get_mpz_t())) return std::nullopt;
        Int q = lead / den.leading();
        quot[k] = q;
        for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= q * den.coeffs_[i];
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string IntPolynomial::text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeffs_[d];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || a != 1) out << a.get_str();
        if (d >= 1) out << "x";
        if (d >= 2) out << "^" << d;
    }
    return out.str();
}

namespace {

std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

IntPolynomial cyclotomic_poly(unsigned long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: argument must be >= 1");
    // Bottom-up over the divisors of n; each step is one exact division.
    std::map<unsigned long, IntPolynomial> table;
    for (unsigned long d : divisors_of(n)) {
        IntPolynomial num = IntPolynomial::x_power_minus_one(static_cast<unsigned>(d));
        for (unsigned long e : divisors_of(d)) {
            if (e == d) continue;
            auto q = IntPolynomial::divide_exact(num, table.at(e));
            if (!q) throw std::logic_error("cyclotomic_poly: inexact division");
            num = *q;
        }
        table.emplace(d, std::move(num));
    }
    return table.at(n);
}

std::optional<std::map<unsigned long, unsigned>> cyclotomic_factorization(
    const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("cyclotomic_factorization: input must be monic of degree >= 1");
    const unsigned long deg = static_cast<unsigned long>(p.degree());
    std::map<unsigned long, unsigned> found;
    IntPolynomial rem = p;
    for (unsigned long n = 1; n <= 2 * deg * deg; ++n) {
        if (rem.degree() == 0) break;
        if (euler_phi(Int(static_cast<long>(n))) > rem.degree()) continue;
        const IntPolynomial phi_n = cyclotomic_poly(n);
        while (true) {
            auto q = IntPolynomial::divide_exact(rem, phi_n);
            if (!q) break;
            rem = *q;
            ++found[n];
            if (rem.degree() == 0) break;
        }
    }
    if (rem == IntPolynomial::one()) return found;
    return std::nullopt;
}

unsigned long euler_phi_ul(unsigned long n) { return euler_phi(Int(static_cast<long>(n))).get_ui(); }
unsigned long hiller_phi_ul(unsigned long n) { return hiller_phi(Int(static_cast<long>(n))).get_ui(); }

}  // namespace flatsolv
