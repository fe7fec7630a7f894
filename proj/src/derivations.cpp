#include "shapes/derivations.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapes {

Generator Generator::H_simple(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("simple root index out of range");
    std::vector<Rat> theta(n, 0);
    theta[k - 1] = 1;
    theta[k] = -1;
    return H(std::move(theta));
}

std::optional<std::pair<Var, int>> apply_e_to_var(int i, int j, const Var& v) {
    bool has_i = std::find(v.begin(), v.end(), i) != v.end();
    bool has_j = std::find(v.begin(), v.end(), j) != v.end();
    if (!has_j || has_i) return std::nullopt;
    std::vector<int> rows = v;
    *std::find(rows.begin(), rows.end(), j) = i;
    int sign = 1;
    for (size_t k = 1; k < rows.size(); ++k)
        for (size_t l = k; l > 0 && rows[l] < rows[l - 1]; --l) {
            std::swap(rows[l], rows[l - 1]);
            sign = -sign;
        }
    return std::make_pair(std::move(rows), sign);
}

std::vector<int> theta_counts(const Monomial& m, int n) {
    std::vector<int> c(n, 0);
    for (const auto& [v, e] : m)
        for (int row : v) c[row - 1] += e;
    return c;
}

std::vector<int> cone_weight_theta(const Monomial& m, int n) {
    std::vector<int> c = theta_counts(m, n);
    for (const auto& [v, e] : m)
        for (size_t k = 0; k < v.size(); ++k) c[k] -= e;  // subtract the trivial column content
    return c;
}

Poly act_generator(const Generator& g, const Poly& p) {
    int n = p.n();
    if (g.is_h) {
        if (static_cast<int>(g.theta.size()) != n) throw std::invalid_argument("H: theta size mismatch");
        Rat trace = 0;
        for (const Rat& t : g.theta) trace += t;
        if (trace != 0) throw std::invalid_argument("H must be traceless");
        Poly out(n, p.ring());
        for (const auto& [m, c] : p.terms()) {
            Rat eig = 0;
            std::vector<int> counts = theta_counts(m, n);
            for (int k = 0; k < n; ++k) eig += g.theta[k] * counts[k];
            out.add_term(m, c * eig);
        }
        return out;
    }
    if (g.i == g.j || g.i < 1 || g.j < 1 || g.i > n || g.j > n)
        throw std::invalid_argument("E(i,j): bad indices");
    if (p.ring() == Ring::reduced_plus && !(g.i < g.j))
        throw std::invalid_argument("only raising generators act on the reduced(+) ring");
    if (p.ring() == Ring::reduced_minus && !(g.i > g.j))
        throw std::invalid_argument("only lowering generators act on the reduced(-) ring");
    Poly out(n, p.ring());
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m) {
            auto img = apply_e_to_var(g.i, g.j, v);
            if (!img) continue;
            Monomial rest = monomial_div(m, Monomial{{v, 1}});
            bool drop = (p.ring() == Ring::reduced_plus && var_is_trivial(img->first)) ||
                        (p.ring() == Ring::reduced_minus && var_is_anti_trivial(img->first, n));
            Monomial term = drop ? rest : monomial_mul(rest, Monomial{{img->first, 1}});
            out.add_term(term, c * e * img->second);
        }
    }
    return out;
}

std::pair<Var, Phase> tau_variable(const Var& v, int n) {
    int s = static_cast<int>(v.size());
    Var r(s);
    for (int k = 0; k < s; ++k) r[k] = n + 1 - v[s - 1 - k];
    Phase ph;
    ph.sign = ((s * (s - 1) / 2) % 2 == 0) ? 1 : -1;
    ph.eps_power = s % (2 * n);
    if ((n / 2) % 2 == 0) ph.eps_power = 0;
    return {std::move(r), ph};
}

std::pair<Monomial, Phase> tau_monomial(const Monomial& m, int n) {
    Monomial out;
    Phase ph;
    for (const auto& [v, e] : m) {
        auto [rv, vph] = tau_variable(v, n);
        out[rv] += e;
        if (e % 2 != 0 && vph.sign < 0) ph.sign = -ph.sign;
        ph.eps_power = (ph.eps_power + e * vph.eps_power) % (2 * n);
    }
    return {std::move(out), ph};
}

Generator tau_generator(const Generator& g, int n) {
    if (g.is_h) {
        std::vector<Rat> theta(g.theta.rbegin(), g.theta.rend());
        return Generator::H(std::move(theta));
    }
    return Generator::E(n + 1 - g.j, n + 1 - g.i);
}

}  // namespace shapes
