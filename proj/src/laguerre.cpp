#include "isoext/laguerre.hpp"

namespace isoext {

Rat binomial(const Rat& alpha, int k) {
    if (k < 0) return Rat(0);
    Rat num(1), den(1);
    for (int j = 0; j < k; ++j) {
        num *= alpha - j;
        den *= j + 1;
    }
    return num / den;
}

Glp glp_build(int n, const Rat& alpha) {
    if (n < 0) throw std::invalid_argument("glp_build: negative degree");
    std::vector<Rat> coeffs(static_cast<size_t>(n) + 1);
    Rat factorial(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) factorial *= k;
        Rat c = binomial(alpha + n, n - k) / factorial;
        coeffs[static_cast<size_t>(k)] = (k % 2 == 0) ? c : -c;
    }
    return Glp{n, alpha, Poly(std::move(coeffs))};
}

Poly glp_recurrence(int n, const Rat& alpha) {
    if (n < 0) throw std::invalid_argument("glp_recurrence: negative degree");
    Poly prev2 = Poly::one();
    if (n == 0) return prev2;
    const Poly z = Poly::monomial(Rat(1), 1);
    Poly prev = Poly(alpha + 1) - z;
    for (int k = 2; k <= n; ++k) {
        Poly cur = Rat(1, k) * ((Poly(alpha + (2 * k - 1)) - z) * prev - (alpha + (k - 1)) * prev2);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

Poly verify_identity(GlpIdentity id, int n, const Rat& alpha) {
    if (n < 1) throw std::invalid_argument("verify_identity: requires n >= 1");
    const Poly z = Poly::monomial(Rat(1), 1);
    switch (id) {
        case GlpIdentity::Sum:
            return glp_build(n, alpha).poly + glp_build(n - 1, alpha + 1).poly -
                   glp_build(n, alpha + 1).poly;
        case GlpIdentity::ThreeTerm:
            return (alpha + n) * glp_build(n - 1, alpha).poly -
                   z * glp_build(n, alpha + 1).poly -
                   (Poly(Rat(n)) - z) * glp_build(n, alpha).poly;
        case GlpIdentity::Contiguous:
        default:
            return z * glp_build(n - 1, alpha + 1).poly -
                   (alpha + n) * glp_build(n - 1, alpha).poly + Rat(n) * glp_build(n, alpha).poly;
    }
}

KlhPrediction klh_predict(int n, const Rat& alpha) {
    if (n < 0) throw std::invalid_argument("klh_predict: negative degree");
    if (is_integer(alpha) && sign(alpha) < 0)
        throw std::invalid_argument("klh_predict: alpha in -N violates the theorem hypothesis");
    if (alpha > -1) return {n, 0};
    if (alpha < Rat(-n)) return {0, n % 2};
    // -n < alpha < -1, alpha non-integer
    Int fl = rat_floor(alpha);
    int pos = n + static_cast<int>(fl.get_si()) + 1;
    // floor even <=> alpha in (-2k, -2k+1), which carries one negative zero
    int neg = mpz_even_p(fl.get_mpz_t()) ? 1 : 0;
    return {pos, neg};
}

bool klh_verify(int n, const Rat& alpha) {
    KlhPrediction pred = klh_predict(n, alpha);
    if (n == 0) return pred.pos_zeros == 0 && pred.neg_zeros == 0;
    const Poly& p = glp_build(n, alpha).poly;
    int pos = sturm_count(p, Bound::at(Rat(0)), Bound::pos_inf());
    int neg = sturm_count(p, Bound::neg_inf(), Bound::at(Rat(0)));
    return pos == pred.pos_zeros && neg == pred.neg_zeros;
}

}  // namespace isoext
