#include "isoext/sturm.hpp"

namespace isoext {

namespace {

// Sturm chain of the square-free part: p0, p1 = p0', p_{k+1} = -rem(p_{k-1}, p_k).
// Dividing members by positive constants preserves the sign structure, so each
// remainder is renormalized via monic() of its negation carefully: we keep exact
// rational polynomials and only rely on signs.
std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly p0 = poly_squarefree(p);
    chain.push_back(p0);
    if (p0.degree() == 0) return chain;
    chain.push_back(p0.derive());
    while (chain.back().degree() > 0) {
        Poly rem = poly_divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int sign_at(const Poly& p, const Bound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case Bound::Finite:
            return sign(p.eval(b.value));
        case Bound::PosInf:
            return sign(p.leading());
        case Bound::NegInf:
        default:
            return p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading());
    }
}

int sign_variations(const std::vector<Poly>& chain, const Bound& b) {
    int variations = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = sign_at(p, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

void isolate_rec(const Poly& q, const std::vector<Poly>& chain, const Rat& lo, const Rat& hi,
                 std::vector<std::pair<Rat, Rat>>& out) {
    int count = sign_variations(chain, Bound::at(lo)) - sign_variations(chain, Bound::at(hi));
    if (q.eval(hi) == 0) --count;  // (lo, hi] -> (lo, hi)
    if (count <= 0) return;
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (q.eval(mid) == 0) out.emplace_back(mid, mid);
    isolate_rec(q, chain, lo, mid, out);
    isolate_rec(q, chain, mid, hi, out);
}

}  // namespace

int sturm_count(const Poly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (p.degree() == 0) return 0;
    std::vector<Poly> chain = sturm_chain(p);
    const Poly& q = chain.front();
    int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (hi.kind == Bound::Finite && q.eval(hi.value) == 0) --count;
    return count;
}

Rat cauchy_bound(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(1);
    Rat m(0);
    const Rat lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        Rat r = abs(p.coeff(k)) / lead;
        if (r > m) m = r;
    }
    return m + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() == 0 || !(lo < hi)) return out;
    std::vector<Poly> chain = sturm_chain(p);
    isolate_rec(chain.front(), chain, lo, hi, out);
    return out;
}

std::vector<std::pair<Rat, Rat>> isolate_positive_roots(const Poly& p) {
    return isolate_roots(p, Rat(0), cauchy_bound(p));
}

}  // namespace isoext
