#pragma once

// Reduced rational functions in xi. Canonical form is maintained eagerly:
// gcd(num, den) = 1 and den monic, so operator== proves identities.

#include "isoext/poly.hpp"

#include <string>

namespace isoext {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly::one()) {}
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rat(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // exact value; throws pole_error when the denominator vanishes at x
    Rat eval(const Rat& x) const;

    RatFunc derive() const;
    RatFunc reciprocal() const;
    RatFunc compose_scaled(const Rat& s) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const Rat& s, const RatFunc& f);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(const std::string& var = "xi") const;

  private:
    void reduce();
    Poly num_, den_;
};

}  // namespace isoext
