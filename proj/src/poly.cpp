#include "isoext/poly.hpp"

#include <algorithm>
#include <sstream>

namespace isoext {

Poly Poly::monomial(const Rat& c, int k) {
    if (c == 0) return Poly();
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derive() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::compose_scaled(const Rat& s) const {
    std::vector<Rat> v(c_);
    Rat pow(1);
    for (size_t k = 1; k < v.size(); ++k) {
        pow *= s;
        v[k] *= pow;
    }
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    Rat inv = 1 / leading();
    return inv * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
    std::vector<Rat> v(a.c_);
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0) return Poly();
    std::vector<Rat> v(p.c_);
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> poly_divmod(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (n.degree() < d.degree()) return {Poly(), n};
    std::vector<Rat> rem(n.coeffs());
    std::vector<Rat> quo(static_cast<size_t>(n.degree() - d.degree()) + 1, Rat(0));
    const Rat& lead = d.leading();
    for (int k = n.degree(); k >= d.degree(); --k) {
        Rat c = rem[static_cast<size_t>(k)] / lead;
        if (c == 0) continue;
        quo[static_cast<size_t>(k - d.degree())] = c;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(k - d.degree() + j)] -= c * d.coeff(j);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_div_exact(const Poly& n, const Poly& d) {
    auto [q, r] = poly_divmod(n, d);
    if (!r.is_zero()) throw std::domain_error("poly_div_exact: inexact division");
    return q;
}

namespace {

// Integer image of a rational polynomial: coefficients scaled by the lcm of
// denominators and divided by their content, leading coefficient positive.
std::vector<Int> primitive_int(const Poly& p) {
    Int lcm(1);
    for (const Rat& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    Int content(0);
    for (const Rat& c : p.coeffs()) {
        Int z = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        v.push_back(std::move(z));
    }
    if (content != 0)
        for (auto& z : v) z /= content;
    if (!v.empty() && v.back() < 0)
        for (auto& z : v) z = -z;
    return v;
}

void trim_int(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<Int>& v) {
    Int content(0);
    for (const auto& z : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content > 1)
        for (auto& z : v) z /= content;
    if (!v.empty() && v.back() < 0)
        for (auto& z : v) z = -z;
}

// Remainder of u by v over Z up to a positive power of lc(v); that scale
// is irrelevant here because every step re-extracts the primitive part.
std::vector<Int> prem_int(std::vector<Int> u, const std::vector<Int>& v) {
    const int dv = static_cast<int>(v.size()) - 1;
    const Int& lv = v.back();
    while (static_cast<int>(u.size()) - 1 >= dv) {
        const int du = static_cast<int>(u.size()) - 1;
        Int cu = u.back();
        for (auto& z : u) z *= lv;
        for (int j = 0; j <= dv; ++j)
            u[static_cast<size_t>(du - dv + j)] -= cu * v[static_cast<size_t>(j)];
        trim_int(u);
    }
    return u;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0) undefined");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    // primitive pseudo-remainder sequence over Z
    std::vector<Int> a = primitive_int(p);
    std::vector<Int> b = primitive_int(q);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Int> r = prem_int(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(a.size());
    for (const auto& z : a) coeffs.emplace_back(z);
    return Poly(std::move(coeffs)).monic();
}

Poly poly_squarefree(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("poly_squarefree: zero polynomial");
    if (p.degree() == 0) return Poly::one();
    Poly g = poly_gcd(p, p.derive());
    return poly_div_exact(p, g).monic();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat c = coeff(k);
        if (c == 0) continue;
        if (!first) out << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) out << "-";
        Rat ac = abs(c);
        if (k == 0 || ac != 1) out << rat_str(ac);
        if (k > 0) {
            if (ac != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

}  // namespace isoext
