#include "isoext/fields.hpp"

namespace isoext {

namespace {
void check_chart(const Rat& a, const Rat& b) {
    if (a != b) throw chart_mismatch();
}
const Poly kXi = Poly::monomial(Rat(1), 1);
}  // namespace

OddField operator+(const OddField& f, const OddField& g) {
    check_chart(f.omega(), g.omega());
    return OddField(f.R() + g.R(), f.omega());
}

OddField operator-(const OddField& f, const OddField& g) {
    check_chart(f.omega(), g.omega());
    return OddField(f.R() - g.R(), f.omega());
}

OddField operator-(const OddField& f) { return OddField(-f.R(), f.omega()); }

OddField operator*(const Rat& c, const OddField& f) { return OddField(c * f.R(), f.omega()); }

EvenField operator+(const EvenField& f, const EvenField& g) {
    check_chart(f.omega(), g.omega());
    return EvenField(f.S() + g.S(), f.omega());
}

EvenField operator-(const EvenField& f, const EvenField& g) {
    check_chart(f.omega(), g.omega());
    return EvenField(f.S() - g.S(), f.omega());
}

EvenField operator+(const EvenField& f, const Rat& c) {
    return EvenField(f.S() + RatFunc(c), f.omega());
}

EvenField operator-(const EvenField& f, const Rat& c) {
    return EvenField(f.S() - RatFunc(c), f.omega());
}

EvenField operator*(const Rat& c, const EvenField& f) { return EvenField(c * f.S(), f.omega()); }

bool operator==(const OddField& f, const OddField& g) {
    return f.omega() == g.omega() && f.R() == g.R();
}

bool operator==(const EvenField& f, const EvenField& g) {
    return f.omega() == g.omega() && f.S() == g.S();
}

EvenField derive(const OddField& f) {
    RatFunc rp = f.R().derive();
    return EvenField(f.R() + RatFunc(Rat(2) * kXi) * rp, f.omega());
}

OddField derive(const EvenField& f) {
    return OddField(f.omega() * f.S().derive(), f.omega());
}

EvenField odd_mul(const OddField& f, const OddField& g) {
    check_chart(f.omega(), g.omega());
    Rat two_over_omega = Rat(2) / f.omega();
    return EvenField(two_over_omega * (RatFunc(kXi) * f.R() * g.R()), f.omega());
}

OddField odd_invert(const OddField& f) {
    if (f.is_zero()) throw std::domain_error("odd_invert: zero field");
    RatFunc inv = (f.omega() / Rat(2)) * (f.R() * RatFunc(kXi)).reciprocal();
    return OddField(inv, f.omega());
}

}  // namespace isoext
