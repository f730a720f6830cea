#include "singulab/standard_basis.hpp"

#include "singulab/errors.hpp"

#include <algorithm>
#include <limits>

namespace singulab {

namespace {

// écart: spread between highest and lowest total degree.  Under an
// anti-graded order the leading term always has minimal total degree.
int ecart(const Polynomial& p) { return p.degree() - p.order(); }

struct Reducers {
    std::vector<Polynomial> polys;
    std::vector<Monomial> lms;
    std::vector<int> ecarts;

    void add(const Polynomial& p, const LocalOrder& order) {
        polys.push_back(p);
        lms.push_back(p.leading_term(order).mono);
        ecarts.push_back(ecart(p));
    }
};

// one reduction step of Mora's algorithm; returns false when the leading
// monomial of h is irreducible against the current reducer list
bool mora_step(Polynomial& h, Reducers& list, const LocalOrder& order, long& steps, long cap) {
    const Term& lead = h.leading_term(order);
    int best = -1;
    int best_ecart = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < list.polys.size(); ++i) {
        if (!list.lms[i].divides(lead.mono)) continue;
        if (list.ecarts[i] < best_ecart) {
            best = static_cast<int>(i);
            best_ecart = list.ecarts[i];
        }
    }
    if (best < 0) return false;
    if (++steps > cap) throw ResourceLimitError(steps, cap);
    if (best_ecart > ecart(h)) list.add(h, order);
    const Polynomial& g = list.polys[static_cast<std::size_t>(best)];
    const Term& glead = g.leading_term(order);
    h -= g.times_term(lead.coeff / glead.coeff, glead.mono.quotient_of(lead.mono));
    return true;
}

// Drops every term of total degree >= bound; bound < 0 keeps p intact.
Polynomial truncated_above(const Polynomial& p, int bound) {
    if (bound < 0 || p.is_zero() || p.degree() < bound) return p;
    Polynomial out(p.variable_count());
    for (const Term& t : p.terms())
        if (t.mono.total_degree() < bound) out += Polynomial::single_term(t.coeff, t.mono);
    return out;
}

// strip_content rescales the remainder to primitive form after every step and
// truncates it above `bound`.  Scale never affects reduction choices
// (divisibility and ecarts), and terms of degree >= bound are multiples of
// pure-power leading monomials already in the basis, so both are only legal
// where the caller needs the result up to the leading-term structure; they
// keep coefficient and degree growth bounded during basis completion.
Polynomial weak_normal_form(Polynomial h, const std::vector<Polynomial>& basis,
                            const LocalOrder& order, long& steps, long cap,
                            bool strip_content = false, int bound = -1) {
    Reducers list;
    for (const Polynomial& g : basis) {
        if (g.is_zero()) throw DomainMismatchError("zero polynomial in reduction basis");
        list.add(g, order);
    }
    auto tidy = [&] {
        if (!strip_content || h.is_zero()) return;
        h = truncated_above(h, bound);
        if (!h.is_zero()) h = h.primitive();
    };
    tidy();
    while (!h.is_zero() && mora_step(h, list, order, steps, cap)) tidy();
    return h;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const LocalOrder& order) {
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Monomial gamma = Monomial::lcm(lf.mono, lg.mono);
    return f.times_term(Rational(1) / lf.coeff, lf.mono.quotient_of(gamma)) -
           g.times_term(Rational(1) / lg.coeff, lg.mono.quotient_of(gamma));
}

} // namespace

Polynomial mora_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const LocalOrder& order, long max_steps) {
    long steps = 0;
    Polynomial result(p.variable_count());
    Polynomial h = weak_normal_form(p, basis, order, steps, max_steps);
    // tail reduction: peel the irreducible leading term, reduce the rest
    while (!h.is_zero()) {
        const Term lead = h.leading_term(order);
        result += Polynomial::single_term(lead.coeff, lead.mono);
        h -= Polynomial::single_term(lead.coeff, lead.mono);
        h = weak_normal_form(std::move(h), basis, order, steps, max_steps);
    }
    return result;
}

StandardBasis standard_basis(const Ideal& ideal, const LocalOrder& order, long max_steps) {
    if (ideal.generators.empty())
        throw DomainMismatchError("standard basis needs at least one generator");
    long steps = 0;
    const int nvars = ideal.generators.front().variable_count();

    // High-corner truncation: once every variable has a pure power x_i^{a_i}
    // among the leading monomials, any monomial of degree at least
    // sum(a_i - 1) + 1 is divisible by one of them, so the completion can run
    // modulo that power of the maximal ideal.  The minimal leading monomials
    // and the staircase are unchanged; element tails are exact below the
    // bound.
    std::vector<int> pure(static_cast<std::size_t>(nvars), -1);
    int bound = -1;
    auto note_leading = [&](const Monomial& lm) {
        if (lm.is_constant()) {
            std::fill(pure.begin(), pure.end(), 0);
        } else {
            int var = -1;
            for (int v = 0; v < nvars; ++v) {
                if (lm.exponent(v) == 0) continue;
                if (var >= 0) return; // mixed support, not a pure power
                var = v;
            }
            const int e = lm.exponent(var);
            auto& best = pure[static_cast<std::size_t>(var)];
            if (best >= 0 && best <= e) return;
            best = e;
        }
        long b = 1;
        for (int v = 0; v < nvars; ++v) {
            if (pure[static_cast<std::size_t>(v)] < 0) return;
            b += pure[static_cast<std::size_t>(v)] - 1;
        }
        bound = static_cast<int>(std::max(1L, b));
    };

    std::vector<Polynomial> basis;
    std::vector<Monomial> lms;
    auto append = [&](const Polynomial& p) {
        basis.push_back(p.primitive());
        lms.push_back(p.leading_term(order).mono);
        note_leading(lms.back());
    };
    for (const Polynomial& g : ideal.generators) {
        Polynomial cut = truncated_above(g, bound);
        if (!cut.is_zero()) append(cut);
    }
    if (basis.empty())
        throw DomainMismatchError("standard basis needs at least one generator");

    struct Pair {
        int i, j, lcm_degree;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i)
            pairs.push_back({i, j, Monomial::lcm(lms[static_cast<std::size_t>(i)],
                                                 lms[static_cast<std::size_t>(j)])
                                       .total_degree()});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!pairs.empty()) {
        // normal selection: minimal lcm degree, then lowest index pair
        std::size_t pick = 0;
        for (std::size_t p = 1; p < pairs.size(); ++p) {
            const Pair& a = pairs[p];
            const Pair& b = pairs[pick];
            if (a.lcm_degree < b.lcm_degree ||
                (a.lcm_degree == b.lcm_degree && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                pick = p;
        }
        Pair pair = pairs[pick];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));
        const Monomial& mi = lms[static_cast<std::size_t>(pair.i)];
        const Monomial& mj = lms[static_cast<std::size_t>(pair.j)];
        if (Monomial::coprime(mi, mj)) continue; // product criterion
        Polynomial h = weak_normal_form(
            spoly(basis[static_cast<std::size_t>(pair.i)], basis[static_cast<std::size_t>(pair.j)], order),
            basis, order, steps, max_steps, /*strip_content=*/true, bound);
        if (h.is_zero()) continue;
        append(h);
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimal basis: drop elements whose leading monomial is a multiple of
    // another's
    std::vector<int> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        auto c = order.compare(lms[static_cast<std::size_t>(a)], lms[static_cast<std::size_t>(b)]);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
        return a < b;
    });
    StandardBasis out{order, {}, {}};
    for (int i : idx) {
        const Monomial& m = lms[static_cast<std::size_t>(i)];
        bool redundant = false;
        for (const Monomial& kept : out.leading_monomials)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        out.elements.push_back(basis[static_cast<std::size_t>(i)]);
        out.leading_monomials.push_back(m);
    }
    return out;
}

} // namespace singulab
