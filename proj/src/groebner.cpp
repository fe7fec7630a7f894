#include "shapes/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shapes/jsonio.hpp"

namespace shapes {

Poly reduce(const Poly& p, const std::vector<Poly>& basis, Order o) {
    struct Divisor {
        Monomial lt;
        Rat lc;
        const Poly* g;
    };
    std::vector<Divisor> divisors;
    for (const Poly& g : basis) {
        if (g.is_zero()) continue;
        auto [lt, lc] = g.leading_term(o);
        divisors.push_back(Divisor{std::move(lt), lc, &g});
    }
    const int n = p.n();
    Poly remainder(n, p.ring());
    Poly cur = p;
    while (!cur.is_zero()) {
        auto [m, c] = cur.leading_term(o);
        const Divisor* best = nullptr;
        for (const Divisor& d : divisors)
            if (monomial_divides(d.lt, m) &&
                (!best || compare_monomials(d.lt, best->lt, o, n) > 0))
                best = &d;
        if (!best) {
            remainder.add_term(m, c);
            cur.add_term(m, -c);
        } else {
            cur = cur - Poly::monomial(n, p.ring(), monomial_div(m, best->lt), c / best->lc) * *best->g;
        }
    }
    return remainder;
}

Poly s_polynomial(const Poly& f, const Poly& g, Order o) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    Poly fm = f.make_monic(o), gm = g.make_monic(o);
    Monomial lf = fm.leading_monomial(o), lg = gm.leading_monomial(o);
    Monomial l = monomial_lcm(lf, lg);
    return Poly::monomial(f.n(), f.ring(), monomial_div(l, lf)) * fm -
           Poly::monomial(f.n(), f.ring(), monomial_div(l, lg)) * gm;
}

std::vector<Poly> buchberger(std::vector<Poly> gens, Order o) {
    if (gens.empty()) return {};
    const int n = gens.front().n();
    const Ring ring = gens.front().ring();

    // Monic, deduplicated, sorted start set: output independent of the
    // order the generators came in.
    std::vector<Poly> G;
    {
        std::set<std::map<Monomial, Rat>> seen;
        for (const Poly& g : gens) {
            if (g.is_zero()) continue;
            Poly m = g.make_monic(o);
            if (seen.insert(m.terms()).second) G.push_back(std::move(m));
        }
        std::sort(G.begin(), G.end(),
                  [](const Poly& a, const Poly& b) { return a.terms() < b.terms(); });
    }

    std::vector<Monomial> lt;
    for (const Poly& g : G) lt.push_back(g.leading_monomial(o));

    using Pair = std::pair<int, int>;  // i < j
    std::set<Pair> pending;
    for (int j = 1; j < static_cast<int>(G.size()); ++j)
        for (int i = 0; i < j; ++i) pending.insert({i, j});

    while (!pending.empty()) {
        // Normal strategy: smallest lcm first, indices as tie-break.
        auto best = pending.end();
        Monomial best_lcm;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            Monomial l = monomial_lcm(lt[it->first], lt[it->second]);
            if (best == pending.end() || compare_monomials(l, best_lcm, o, n) < 0) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        // Buchberger's first criterion: coprime leading terms.
        if (best_lcm == monomial_mul(lt[i], lt[j])) continue;
        // Chain criterion: some other leading term divides the lcm and
        // both companion pairs are already settled.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!monomial_divides(lt[k], best_lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)}, jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) skip = true;
        }
        if (skip) continue;

        Poly h = reduce(s_polynomial(G[i], G[j], o), G, o);
        if (h.is_zero()) continue;
        h = h.make_monic(o);
        int idx = static_cast<int>(G.size());
        lt.push_back(h.leading_monomial(o));
        G.push_back(std::move(h));
        for (int k = 0; k < idx; ++k) pending.insert({k, idx});
    }

    // Minimize: drop elements whose leading term another one divides.
    std::vector<Poly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t k = 0; k < G.size() && !redundant; ++k) {
            if (k == i) continue;
            if (!monomial_divides(lt[k], lt[i])) continue;
            // Equal leading terms: keep the earlier one.
            redundant = (lt[k] != lt[i]) || k < i;
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Tail-reduce to the reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            Poly r = reduce(minimal[i], others, o);
            if (r.is_zero()) throw std::logic_error("buchberger: minimized element reduced to zero");
            r = r.make_monic(o);
            if (!(r == minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return compare_monomials(a.leading_monomial(o), b.leading_monomial(o), o, n) < 0;
    });
    return minimal;
}

namespace {

std::string g_cache_dir = ".shapes-cache";
bool g_cache_enabled = true;
std::map<std::pair<int, Ring>, GroebnerBasis> g_memo;
std::mutex g_mutex;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string content_hash(const std::vector<Poly>& gens, Order o) {
    std::ostringstream ss;
    ss << order_name(o);
    for (const Poly& g : gens) ss << '|' << g.to_string(o);
    std::ostringstream hex;
    hex << std::hex << fnv1a(ss.str());
    return hex.str();
}

}  // namespace

void set_cache_directory(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache_dir = dir;
}

void set_cache_enabled(bool enabled) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache_enabled = enabled;
}

const GroebnerBasis& groebner_basis(int n, Ring ring) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto key = std::make_pair(n, ring);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;

    Order o = natural_order(ring);
    std::vector<Poly> gens = generating_set(n, ring);
    std::string hash = content_hash(gens, o);
    std::filesystem::path file =
        std::filesystem::path(g_cache_dir) /
        ("gb_n" + std::to_string(n) + "_" + ring_name(ring) + "_" + hash + ".json");

    GroebnerBasis gb{n, ring, o, {}};
    bool loaded = false;
    if (g_cache_enabled && std::filesystem::exists(file)) {
        std::ifstream in(file);
        nlohmann::json j;
        in >> j;
        if (j.value("hash", "") == hash) {
            for (const auto& e : j.at("elements")) gb.elements.push_back(poly_from_json(e));
            loaded = true;
        }
    }
    if (!loaded) {
        gb.elements = buchberger(gens, o);
        if (g_cache_enabled) {
            std::error_code ec;
            std::filesystem::create_directories(g_cache_dir, ec);
            if (!ec) {
                nlohmann::json elems = nlohmann::json::array();
                for (const Poly& g : gb.elements) elems.push_back(poly_to_json(g, o));
                nlohmann::json j{{"n", n},
                                 {"ring", ring_name(ring)},
                                 {"order", order_name(o)},
                                 {"hash", hash},
                                 {"elements", elems}};
                std::ofstream out(file);
                out << j.dump(1) << '\n';
            }
        }
    }
    return g_memo.emplace(key, std::move(gb)).first->second;
}

Poly straighten(const Tableau& t, Ring ring) {
    Poly p = Poly::from_tableau(Ring::full, t);
    if (ring == Ring::reduced_plus) p = p.substitute_trivial();
    if (ring == Ring::reduced_minus) p = p.substitute_anti_trivial();
    return straighten(p);
}

Poly straighten(const Poly& p) {
    const GroebnerBasis& gb = groebner_basis(p.n(), p.ring());
    return reduce(p, gb.elements, gb.order);
}

namespace {

Monomial columns_to_monomial(Ring ring, const std::vector<Column>& cols) {
    Monomial m;
    for (const Column& c : cols) {
        if (ring == Ring::reduced_plus && is_trivial_column(c)) continue;
        m[c] += 1;
    }
    return m;
}

Poly expand_to_standard(int n, Ring ring, const Monomial& m,
                        std::map<Monomial, Poly>& memo);

// Non-semistandard arrangement: rewrite via the exchange relation of the
// leftmost violating adjacent pair of columns, at the largest violating
// row.  Under the ring's order the relation leads with that pair, so
// every replacement monomial is strictly smaller (both asserted).
Poly expand_violation(int n, Ring ring, const Monomial& m, const Tableau& t,
                      size_t k, int row, std::map<Monomial, Poly>& memo) {
    const Order o = natural_order(ring);
    const Column& I = t.columns()[k];
    const Column& J = t.columns()[k + 1];
    Poly rel = plucker_relation(ExchangeSpec{n, I, J, row}, ring);
    Monomial pair = columns_to_monomial(ring, {I, J});
    if (!(rel.leading_term(o) == std::make_pair(pair, Rat(1))))
        throw std::logic_error("expand_to_standard: exchange relation does not lead with the pair");
    Monomial rest = monomial_div(m, pair);
    Poly result(n, ring);
    for (const auto& [mono, coeff] : rel.terms()) {
        if (mono == pair) continue;  // the term being rewritten
        Monomial repl = monomial_mul(rest, mono);
        if (compare_monomials(repl, m, o, n) >= 0)
            throw std::logic_error("expand_to_standard: replacement term not smaller");
        result = result + expand_to_standard(n, ring, repl, memo) * (-coeff);
    }
    return result;
}

// Semistandard but reducible (reduced ring): run the whole trivial-top
// cascade at the witness (j, s) in one pass.  The trivial top 1..s of
// column j is handed rightward column by column via the depth-s exchange
// with the next column; the distinguished subset A = {1..s} carries sign
// +1 and yields the next cascade state, every other subset contributes a
// side term.  The cascade stops when the receiving column has height
// exactly s (it becomes trivial and disappears), leaving the extraction
// residue; residue and side terms are all strictly smaller than the
// input (asserted) and are expanded recursively.  Single steps will not
// do here: the intermediate cascade state can exceed the input in the
// graded order, and rewriting it as a standalone monomial walks straight
// back.
Poly expand_cascade(int n, Ring ring, const Monomial& m, const Tableau& t,
                    int j, int s, std::map<Monomial, Poly>& memo) {
    const Order o = natural_order(ring);
    const auto& cols = t.columns();
    std::vector<Column> finished(cols.begin(), cols.begin() + (j - 1));
    Column carrier = cols[j - 1];
    Poly result(n, ring);
    for (size_t k = j; ; ++k) {
        if (k >= cols.size())
            throw std::logic_error("expand_to_standard: cascade ran past the last column");
        const Column& next = cols[k];
        if (static_cast<int>(next.size()) < s)
            throw std::logic_error("expand_to_standard: cascade met a column shorter than the witness depth");
        Column merged(carrier.begin() + s, carrier.end());
        merged.insert(merged.begin(), next.begin(), next.begin() + s);
        Column handed(next);
        for (int i = 0; i < s; ++i) handed[i] = i + 1;
        bool last = static_cast<int>(next.size()) == s;  // handed is trivial
        bool seen_distinguished = false;
        for (const ExchangeTerm& term : exchange_terms(ExchangeSpec{n, carrier, next, s})) {
            if (term.first == merged && term.second == handed) {
                if (term.sign != 1)
                    throw std::logic_error("expand_to_standard: distinguished cascade term has sign -1");
                seen_distinguished = true;
                continue;
            }
            std::vector<Column> side = finished;
            side.push_back(term.first);
            side.push_back(term.second);
            side.insert(side.end(), cols.begin() + k + 1, cols.end());
            Monomial sm = columns_to_monomial(ring, side);
            if (compare_monomials(sm, m, o, n) >= 0)
                throw std::logic_error("expand_to_standard: cascade side term not smaller");
            result = result + expand_to_standard(n, ring, sm, memo) * Rat(term.sign);
        }
        if (!seen_distinguished)
            throw std::logic_error("expand_to_standard: cascade lost its distinguished term");
        finished.push_back(merged);
        if (last) {
            std::vector<Column> residue = finished;  // handed column is trivial, gone
            residue.insert(residue.end(), cols.begin() + k + 1, cols.end());
            Monomial rm = columns_to_monomial(ring, residue);
            if (compare_monomials(rm, m, o, n) >= 0)
                throw std::logic_error("expand_to_standard: cascade residue not smaller");
            return result + expand_to_standard(n, ring, rm, memo);
        }
        carrier = std::move(handed);
    }
}

// delta^m as a combination of semistandard (full ring) / quasi-standard
// (reduced ring) monomials, modulo the defining ideal.
Poly expand_to_standard(int n, Ring ring, const Monomial& m,
                        std::map<Monomial, Poly>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    Tableau t = tableau_from_monomial(n, m);
    Poly result(n, ring);
    bool handled = false;
    const auto& cols = t.columns();
    for (size_t k = 0; k + 1 < cols.size() && !handled; ++k) {
        int row = 0;
        for (size_t i = 0; i < cols[k + 1].size(); ++i)
            if (cols[k][i] > cols[k + 1][i]) row = static_cast<int>(i) + 1;
        if (row > 0) {
            result = expand_violation(n, ring, m, t, k, row, memo);
            handled = true;
        }
    }
    if (!handled) {
        std::optional<std::pair<int, int>> witness;
        if (ring == Ring::reduced_plus) witness = reducibility_witness(t);
        if (witness) {
            result = expand_cascade(n, ring, m, t, witness->first, witness->second, memo);
        } else {
            result.add_term(m, 1);  // semistandard / quasi-standard already
        }
    }
    memo.emplace(m, result);
    return result;
}

}  // namespace

Poly construct_paper_element(const Tableau& t, Ring ring) {
    const int n = t.n();
    if (ring == Ring::reduced_minus)
        throw std::domain_error(
            "construct_paper_element: reduced_minus has no direct construction; "
            "reflect the tableau and work in reduced_plus");
    Monomial m = monomial_from_tableau(t);
    if (ring == Ring::full) {
        if (t.column_count() != 2)
            throw std::invalid_argument("construct_paper_element: full ring needs two columns");
        if (is_semistandard(t))
            throw std::invalid_argument("construct_paper_element: tableau already semistandard");
    } else {
        for (const Column& c : t.columns())
            if (is_trivial_column(c))
                throw std::invalid_argument("construct_paper_element: trivial column in reduced monomial");
        if (is_quasi_standard(t))
            throw std::invalid_argument("construct_paper_element: tableau already quasi-standard");
    }
    std::map<Monomial, Poly> memo;
    Poly head = Poly::monomial(n, ring, m);
    return head - expand_to_standard(n, ring, m, memo);
}

std::vector<Poly> trivial_shift_set(int n) {
    std::vector<Poly> out;
    for (int s = 1; s < n; ++s) {
        Var triv(s);
        for (int i = 0; i < s; ++i) triv[i] = i + 1;
        Poly p(n, Ring::full);
        p.add_term(Monomial{{triv, 1}}, 1);
        p.add_term(Monomial{}, -1);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace shapes
