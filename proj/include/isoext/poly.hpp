#pragma once

// Dense univariate polynomials over the rationals. The variable is written
// "xi" throughout since every polynomial in this project lives in the even
// variable xi = omega*x^2/2. Coefficients are stored lowest power first with
// no trailing zeros; the empty vector is the zero polynomial.

#include "isoext/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace isoext {

class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat c0) {
        if (c0 != 0) c_.push_back(std::move(c0));
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rat(1)); }
    static Poly constant(const Rat& c) { return Poly(c); }
    // c * xi^k
    static Poly monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    const Rat& leading() const;

    Rat eval(const Rat& x) const;

    Poly derive() const;
    // p(s * xi), used for the xi -> -xi substitution
    Poly compose_scaled(const Rat& s) const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "xi") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// quotient/remainder with rational coefficients; d must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& n, const Poly& d);
// exact quotient; throws if the division leaves a remainder
Poly poly_div_exact(const Poly& n, const Poly& d);
// monic gcd; rejects the (0, 0) input
Poly poly_gcd(const Poly& p, const Poly& q);
// p / gcd(p, p'), monic
Poly poly_squarefree(const Poly& p);

}  // namespace isoext
