#include "shapes/plucker.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shapes {

std::optional<std::pair<Column, int>> sort_with_sign(std::vector<int> v) {
    int sign = 1;
    // insertion sort, counting swaps
    for (size_t i = 1; i < v.size(); ++i) {
        for (size_t k = i; k > 0 && v[k] < v[k - 1]; --k) {
            std::swap(v[k], v[k - 1]);
            sign = -sign;
        }
    }
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return std::nullopt;
    return std::make_pair(std::move(v), sign);
}

std::vector<ExchangeTerm> exchange_terms(const ExchangeSpec& spec) {
    const auto& [n, I, J, r] = spec;
    int p = static_cast<int>(I.size()), q = static_cast<int>(J.size());
    if (!(p >= q && q >= r && r >= 1)) throw std::invalid_argument("exchange_terms: need |I| >= |J| >= r >= 1");
    std::vector<ExchangeTerm> out;
    std::vector<int> pos(r);  // positions in I of the subset A, increasing
    for (int k = 0; k < r; ++k) pos[k] = k;
    while (true) {
        std::vector<int> first = I;
        std::vector<int> second;
        for (int k = 0; k < r; ++k) {
            second.push_back(I[pos[k]]);
            first[pos[k]] = J[k];
        }
        for (int k = r; k < q; ++k) second.push_back(J[k]);
        auto f = sort_with_sign(std::move(first));
        auto s = sort_with_sign(std::move(second));
        if (f && s) out.push_back(ExchangeTerm{f->second * s->second, std::move(f->first), std::move(s->first)});
        // next r-combination of positions
        int k = r - 1;
        while (k >= 0 && pos[k] == p - r + k) --k;
        if (k < 0) break;
        ++pos[k];
        for (int i = k + 1; i < r; ++i) pos[i] = pos[i - 1] + 1;
    }
    return out;
}

Order natural_order(Ring ring) {
    switch (ring) {
        case Ring::full: return Order::shape_lex;
        case Ring::reduced_plus: return Order::reduced_graded;
        case Ring::reduced_minus: return Order::anti_reduced_graded;
    }
    throw std::invalid_argument("unknown ring");
}

Poly plucker_relation(const ExchangeSpec& spec, Ring ring) {
    Poly rel(spec.n, Ring::full);
    rel.add_term(monomial_mul(Monomial{{spec.I, 1}}, Monomial{{spec.J, 1}}), 1);
    for (const ExchangeTerm& t : exchange_terms(spec))
        rel.add_term(monomial_mul(Monomial{{t.first, 1}}, Monomial{{t.second, 1}}), -t.sign);
    if (ring == Ring::reduced_plus) return rel.substitute_trivial();
    if (ring == Ring::reduced_minus) return rel.substitute_anti_trivial();
    return rel;
}

// All exchange depths are included: the r = 1 family alone misses, e.g.
// for n = 4, the relation tying d3_134 to d2_13 d3_124 (every r = 1
// instance whose left side is that product degenerates because the
// exchanged entry already sits in the other factor), and the published
// 10-relation presentation for sl(4) contains it.
std::vector<Poly> generating_set(int n, Ring ring) {
    Order o = natural_order(ring);
    std::vector<Poly> out;
    std::set<std::map<Monomial, Rat>> seen;
    for (int p = n - 1; p >= 1; --p) {
        for (int q = p; q >= 1; --q) {
            for (int r = 1; r <= q; ++r) {
                for (const Column& I : all_columns(n, p)) {
                    for (const Column& J : all_columns(n, q)) {
                        Poly rel = plucker_relation(ExchangeSpec{n, I, J, r}, ring);
                        if (rel.is_zero()) continue;
                        rel = rel.make_monic(o);
                        if (seen.insert(rel.terms()).second) out.push_back(std::move(rel));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace shapes
