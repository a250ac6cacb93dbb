#include "isoext/ratfunc.hpp"

namespace isoext {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (den_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
    }
    const Rat& lead = den_.leading();
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw pole_error("RatFunc::eval: pole at " + rat_str(x));
    return num_.eval(x) / d;
}

RatFunc RatFunc::derive() const {
    return RatFunc(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw std::domain_error("RatFunc::reciprocal: zero function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::compose_scaled(const Rat& s) const {
    return RatFunc(num_.compose_scaled(s), den_.compose_scaled(s));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator*(const Rat& s, const RatFunc& f) {
    if (s == 0) return RatFunc();
    return RatFunc(s * f.num_, f.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace isoext
