#pragma once

// Parity-typed fields on (0, inf) in the chart xi = omega*x^2/2.
// An odd field is x*R(xi), an even field is S(xi); the chart omega rides
// along so the calculus rules can use x^2 = 2*xi/omega exactly. RS functions
// are odd, potentials and Riccati residuals even. Closure rules:
//   (x R)'   = R + 2 xi R'            (odd -> even)
//   S(xi)'   = x * omega S'(xi)       (even -> odd)
//   (x R1)(x R2) = (2 xi / omega) R1 R2   (odd * odd -> even)
//   1/(x R) = x * omega/(2 xi R)      (odd -> odd)

#include "isoext/ratfunc.hpp"

#include <optional>

namespace isoext {

struct Params {
    Rat omega;  // > 0
    Rat a;      // a = l + 1

    Params(Rat w, Rat av) : omega(std::move(w)), a(std::move(av)) {
        if (!(omega > 0)) throw std::invalid_argument("Params: omega must be positive");
    }
    Params shifted_a(int steps) const { return Params(omega, a + steps); }
};

struct chart_mismatch : std::logic_error {
    chart_mismatch() : std::logic_error("field operation mixes different omega charts") {}
};

class EvenField;

class OddField {
  public:
    OddField(RatFunc r, Rat omega_chart, std::optional<Rat> energy = std::nullopt)
        : R_(std::move(r)), omega_(std::move(omega_chart)), energy_(std::move(energy)) {}

    const RatFunc& R() const { return R_; }
    const Rat& omega() const { return omega_; }
    const std::optional<Rat>& energy() const { return energy_; }
    bool is_zero() const { return R_.is_zero(); }

    OddField with_energy(Rat e) const { return OddField(R_, omega_, std::move(e)); }

    // value of x*R(xi) at rational x0 > 0
    Rat eval(const Rat& x0) const {
        return x0 * R_.eval(omega_ * x0 * x0 / 2);
    }

  private:
    RatFunc R_;
    Rat omega_;
    std::optional<Rat> energy_;
};

class EvenField {
  public:
    EvenField(RatFunc s, Rat omega_chart, std::optional<Rat> energy = std::nullopt)
        : S_(std::move(s)), omega_(std::move(omega_chart)), energy_(std::move(energy)) {}

    const RatFunc& S() const { return S_; }
    const Rat& omega() const { return omega_; }
    const std::optional<Rat>& energy() const { return energy_; }
    bool is_zero() const { return S_.is_zero(); }

    Rat eval(const Rat& x0) const { return S_.eval(omega_ * x0 * x0 / 2); }

  private:
    RatFunc S_;
    Rat omega_;
    std::optional<Rat> energy_;
};

// Energies are metadata of specific eigenobjects; arithmetic drops them.
OddField operator+(const OddField& f, const OddField& g);
OddField operator-(const OddField& f, const OddField& g);
OddField operator-(const OddField& f);
OddField operator*(const Rat& c, const OddField& f);
EvenField operator+(const EvenField& f, const EvenField& g);
EvenField operator-(const EvenField& f, const EvenField& g);
EvenField operator+(const EvenField& f, const Rat& c);
EvenField operator-(const EvenField& f, const Rat& c);
EvenField operator*(const Rat& c, const EvenField& f);

bool operator==(const OddField& f, const OddField& g);
bool operator==(const EvenField& f, const EvenField& g);

// d/dx of x*R(xi): the even field R + 2 xi R'
EvenField derive(const OddField& f);
// d/dx of S(xi): the odd field x * omega S'(xi)
OddField derive(const EvenField& f);
// product of two odd fields, reduced to even
EvenField odd_mul(const OddField& f, const OddField& g);
// pointwise reciprocal 1/(x R), again odd; rejects the zero field
OddField odd_invert(const OddField& f);

inline OddField zero_odd(const Rat& omega) { return OddField(RatFunc::zero(), omega); }
inline EvenField zero_even(const Rat& omega) { return EvenField(RatFunc::zero(), omega); }

}  // namespace isoext
