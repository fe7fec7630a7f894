// Command-line front end: every computation of the library behind one
// binary with machine-readable output.
//
//   shapes relations  --n 4 --ring reduced-plus
//   shapes gb         --n 4 --ring reduced-plus --order paper --emit-lt
//   shapes straighten --n 3 --ring reduced-plus --tableau "1 2/3"
//   shapes extract    --n 4 --tableau "1 2 3/3 4"
//   shapes tau        --n 3 --tableau "2 2/3" [--weight 1,1]
//   shapes basis      --n 4 --weight 1,0,1
//   shapes matrix     --n 3 --weight 1,1 --gen e12
//   shapes graph      --n 2 --weight 3 --format dot
//   shapes verify     --n 4 --seed 1 --samples 50
//
// JSON on stdout (DOT for graph); exit 0 on success, 1 on domain error
// (JSON error object on stdout), 2 on usage error.  Identical inputs
// give byte-identical output.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shapes/groebner.hpp"
#include "shapes/jsonio.hpp"
#include "shapes/oracle.hpp"
#include "shapes/representation.hpp"

using nlohmann::json;
using namespace shapes;

namespace {

std::vector<int> parse_weight_list(const std::string& s) {
    std::vector<int> a;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) a.push_back(std::stoi(item));
    return a;
}

// "paper" aliases the order each worked section uses: shape_lex on the
// full ring, reduced_graded on the reduced ones.
Order resolve_order(const std::string& name, Ring ring) {
    if (name.empty() || name == "paper") return natural_order(ring);
    return order_from_name(name);
}

json monomial_to_json(const Monomial& m) {
    json vars = json::object();
    for (const auto& [v, e] : m) vars[var_name(v)] = e;
    return vars;
}

json basis_to_json(const ModuleBasis& b) {
    json mons = json::array(), tabs = json::array();
    for (int k = 0; k < b.size(); ++k) {
        mons.push_back(monomial_to_json(b.monomials[k]));
        tabs.push_back(b.tableaux[k].to_text());
    }
    json doc = {{"weight", b.lambda.a},
                {"kind", b.kind == BasisKind::semistandard_full ? "semistandard" : "cone"},
                {"ring", ring_name(b.ring)},
                {"n", b.lambda.n},
                {"size", b.size()},
                {"monomials", mons},
                {"tableaux", tabs}};
    if (b.lambda.n <= 4) {
        json letters = json::array();
        for (const Monomial& m : b.monomials)
            letters.push_back(poly_to_letters(Poly::monomial(b.lambda.n, b.ring, m),
                                              natural_order(b.ring)));
        doc["letters"] = letters;
    }
    return doc;
}

json matrix_to_json(const RepresentationMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const Rat& x : row) r.push_back(rat_to_string(x));
        rows.push_back(r);
    }
    return {{"size", m.basis.size()}, {"integral", m.integral()}, {"entries", rows}};
}

struct GenSpec {
    char kind = 'e';  // e / f / h
    int i = 0, j = 0;
    std::vector<Rat> theta;  // h:θ form
};

GenSpec parse_gen(const std::string& s, int n) {
    GenSpec g;
    if (s.rfind("h:", 0) == 0) {
        g.kind = 'H';
        std::stringstream ss(s.substr(2));
        std::string item;
        while (std::getline(ss, item, ',')) g.theta.push_back(rat_from_string(item));
        if (static_cast<int>(g.theta.size()) != n)
            throw std::domain_error("h:θ needs " + std::to_string(n) + " entries");
        return g;
    }
    if (s.size() != 3 || (s[0] != 'e' && s[0] != 'f' && s[0] != 'h') || !isdigit(s[1]) ||
        !isdigit(s[2]))
        throw std::domain_error("generator must look like e12, f12, h12 or h:1,-1,0");
    g.kind = s[0];
    g.i = s[1] - '0';
    g.j = s[2] - '0';
    if (g.i < 1 || g.j > n || g.i >= g.j)
        throw std::domain_error("generator indices must satisfy 1 <= i < j <= n");
    return g;
}

json graph_to_json(const DiamondGraph& g) {
    json nodes = json::array();
    for (int k = 0; k < g.basis.size(); ++k)
        nodes.push_back({{"index", k},
                         {"tableau", g.basis.tableaux[k].to_text()},
                         {"monomial", monomial_to_json(g.basis.monomials[k])},
                         {"weight", g.weights[k]}});
    json edges = json::array();
    for (const DiamondEdge& e : g.edges)
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"label", e.label},
                         {"coeff", rat_to_string(e.coeff)}});
    return {{"n", g.basis.lambda.n}, {"weight", g.basis.lambda.a}, {"nodes", nodes},
            {"edges", edges}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- verify: the oracle suite ------------------------------------------

// Matrix for the longest Weyl element, antidiagonal ones; only used for
// the n with trivial phase (floor(n/2) even), where it lies in SL(n).
GroupPoint omega_times(const GroupPoint& g) {
    GroupPoint r = g;
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j) r.at(i, j) = g.at(g.n + 1 - i, j);
    return r;
}

Poly random_full_poly(int n, std::mt19937_64& rng) {
    std::vector<Var> vars;
    for (int s = 1; s < n; ++s)
        for (const Column& c : all_columns(n, s)) vars.push_back(c);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exp(1, 2);
    Poly p(n, Ring::full);
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        for (int v = 0; v < 2; ++v) m[vars[pick(rng)]] += exp(rng);
        int c = coeff(rng);
        if (c != 0) p.add_term(m, Rat(c));
    }
    return p;
}

int run_verify(int n, std::uint64_t seed, int samples) {
    std::vector<GroupPoint> points;
    for (int k = 0; k < samples; ++k) points.push_back(random_sl_point(n, seed + k));

    // 1. Every exchange relation vanishes on the group.
    std::vector<Poly> rels = generating_set(n, Ring::full);
    for (int k = 0; k < samples; ++k)
        for (std::size_t r = 0; r < rels.size(); ++r) {
            Rat v = evaluate_poly(rels[r], points[k]);
            if (v != 0) {
                emit({{"check", "relation_vanishing"},
                      {"relation", poly_to_json(rels[r], Order::shape_lex)},
                      {"seed", seed + k},
                      {"value", rat_to_string(v)}});
                return 1;
            }
        }

    // 2. Gauss decomposition: g = L·U and the minor-ratio formula.
    int gauss_checked = 0;
    for (int k = 0; k < samples; ++k) {
        const GroupPoint& g = points[k];
        bool regular = true;
        for (int p = 1; p < n; ++p) {
            Column c(p);
            for (int i = 0; i < p; ++i) c[i] = i + 1;
            if (evaluate_delta(g, c) == 0) regular = false;
        }
        if (!regular) continue;
        GaussFactors f = gauss_decompose(g);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Rat s = 0;
                for (int t = 1; t <= n; ++t) s += f.lower.at(i, t) * f.upper_unit.at(t, j);
                if (s != g.at(i, j)) {
                    emit({{"check", "gauss_product"}, {"seed", seed + k}, {"i", i}, {"j", j}});
                    return 1;
                }
            }
        ++gauss_checked;
    }

    // 3. Derivations against the group flow.
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 5; ++t) {
        Poly p = random_full_poly(n, rng);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                for (int k = 0; k < std::min(samples, 5); ++k)
                    if (!derivation_consistency(Generator::E(i, j), p, points[k])) {
                        emit({{"check", "derivation_consistency"},
                              {"gen", "e" + std::to_string(i) + std::to_string(j)},
                              {"poly", poly_to_json(p, Order::shape_lex)},
                              {"seed", seed + k}});
                        return 1;
                    }
            }
    }

    // 4. θ/τ coherence, phase-free cases only (ε_n = 1).
    int theta_checked = 0;
    if ((n / 2) % 2 == 0) {
        for (int k = 0; k < std::min(samples, 10); ++k) {
            GroupPoint og = omega_times(points[k]);
            for (int s = 1; s < n; ++s)
                for (const Column& c : all_columns(n, s)) {
                    auto [img, phase] = tau_variable(c, n);
                    if (evaluate_delta(og, c) != Rat(phase.sign) * evaluate_delta(points[k], img)) {
                        emit({{"check", "theta_tau_coherence"},
                              {"var", var_name(c)},
                              {"seed", seed + k}});
                        return 1;
                    }
                    ++theta_checked;
                }
        }
    }

    emit({{"n", n},
          {"seed", seed},
          {"samples", samples},
          {"status", "ok"},
          {"relations", rels.size()},
          {"gauss_points", gauss_checked},
          {"theta_tau_checks", theta_checked}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shape algebra toolkit"};
    app.require_subcommand(1);

    std::string cache_dir = ".shapes-cache";
    bool no_cache = false;
    app.add_option("--cache-dir", cache_dir, "Groebner cache directory");
    app.add_flag("--no-cache", no_cache, "recompute, never touch the cache");

    int n = 0;
    std::string ring_s = "reduced-plus", order_s, tableau_s, weight_s, gen_s, format_s = "dot",
                kind_s = "cone";
    bool emit_lt = false, parallel = false;
    std::uint64_t seed = 1;
    int samples = 50;

    auto* c_rel = app.add_subcommand("relations", "exchange-relation generating set");
    c_rel->add_option("--n", n)->required();
    c_rel->add_option("--ring", ring_s);
    c_rel->add_option("--order", order_s);

    auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis");
    c_gb->add_option("--n", n)->required();
    c_gb->add_option("--ring", ring_s);
    c_gb->add_option("--order", order_s);
    c_gb->add_flag("--emit-lt", emit_lt, "include the leading-term list");

    auto* c_str = app.add_subcommand("straighten", "normal form of a tableau monomial");
    c_str->add_option("--n", n)->required();
    c_str->add_option("--ring", ring_s);
    c_str->add_option("--tableau", tableau_s)->required();

    auto* c_ext = app.add_subcommand("extract", "peel trivial columns: f(T) = (L, R)");
    c_ext->add_option("--n", n)->required();
    c_ext->add_option("--tableau", tableau_s)->required();

    auto* c_tau = app.add_subcommand("tau", "entry reflection a -> n+1-a");
    c_tau->add_option("--n", n)->required();
    c_tau->add_option("--tableau", tableau_s)->required();
    c_tau->add_option("--weight", weight_s, "module-level tau on V^(weight)");

    auto* c_bas = app.add_subcommand("basis", "module basis");
    c_bas->add_option("--n", n)->required();
    c_bas->add_option("--weight", weight_s)->required();
    c_bas->add_option("--kind", kind_s, "cone | semistandard");

    auto* c_mat = app.add_subcommand("matrix", "generator matrix on a module basis");
    c_mat->add_option("--n", n)->required();
    c_mat->add_option("--weight", weight_s)->required();
    c_mat->add_option("--gen", gen_s, "e12 | f12 | h12 | h:1,-1,0")->required();
    c_mat->add_option("--kind", kind_s, "cone | semistandard");
    c_mat->add_flag("--parallel", parallel, "assemble columns with OpenMP");

    auto* c_gra = app.add_subcommand("graph", "diamond-cone slice graph");
    c_gra->add_option("--n", n)->required();
    c_gra->add_option("--weight", weight_s)->required();
    c_gra->add_option("--format", format_s, "dot | json");

    auto* c_ver = app.add_subcommand("verify", "oracle suite at seeded SL(n) points");
    c_ver->add_option("--n", n)->required();
    c_ver->add_option("--seed", seed);
    c_ver->add_option("--samples", samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    set_cache_directory(cache_dir);
    set_cache_enabled(!no_cache);

    try {
        if (*c_rel) {
            Ring ring = ring_from_name(ring_s);
            Order o = resolve_order(order_s, ring);
            json rels = json::array();
            for (const Poly& p : generating_set(n, ring)) rels.push_back(poly_to_json(p, o));
            emit({{"n", n},
                  {"ring", ring_name(ring)},
                  {"order", order_name(o)},
                  {"count", rels.size()},
                  {"relations", rels}});
        } else if (*c_gb) {
            Ring ring = ring_from_name(ring_s);
            Order o = resolve_order(order_s, ring);
            std::vector<Poly> basis = o == natural_order(ring)
                                          ? groebner_basis(n, ring).elements
                                          : buchberger(generating_set(n, ring), o);
            json elems = json::array(), lts = json::array();
            for (const Poly& p : basis) {
                elems.push_back(poly_to_json(p, o));
                lts.push_back(monomial_to_json(p.leading_monomial(o)));
            }
            json doc = {{"n", n},
                        {"ring", ring_name(ring)},
                        {"order", order_name(o)},
                        {"size", elems.size()},
                        {"elements", elems}};
            if (emit_lt) doc["leading_terms"] = lts;
            emit(doc);
        } else if (*c_str) {
            Ring ring = ring_from_name(ring_s);
            Tableau t = Tableau::parse(n, tableau_s);
            Poly nf = straighten(t, ring);
            emit({{"input", tableau_to_json(t)},
                  {"ring", ring_name(ring)},
                  {"order", order_name(natural_order(ring))},
                  {"normal_form", poly_to_json(nf, natural_order(ring))}});
        } else if (*c_ext) {
            Tableau t = Tableau::parse(n, tableau_s);
            SuperTableau s = extract(t);
            emit({{"input", tableau_to_json(t)},
                  {"trivial", tableau_to_json(s.trivial)},
                  {"residue", tableau_to_json(s.residue)}});
        } else if (*c_tau) {
            Tableau t = Tableau::parse(n, tableau_s);
            if (weight_s.empty()) {
                auto [img, phase] = tau_tableau(t);
                emit({{"input", tableau_to_json(t)},
                      {"image", tableau_to_json(img)},
                      {"sign", phase.sign},
                      {"eps_power", phase.eps_power}});
            } else {
                Weight lambda(n, parse_weight_list(weight_s));
                Poly img = tau_module(monomial_from_tableau(t), lambda);
                emit({{"input", tableau_to_json(t)},
                      {"weight", lambda.a},
                      {"image", poly_to_json(img, natural_order(Ring::reduced_plus))}});
            }
        } else if (*c_bas) {
            Weight lambda(n, parse_weight_list(weight_s));
            BasisKind kind = kind_s == "semistandard" ? BasisKind::semistandard_full
                                                      : BasisKind::quasi_standard_cone;
            emit(basis_to_json(module_basis(lambda, kind)));
        } else if (*c_mat) {
            Weight lambda(n, parse_weight_list(weight_s));
            BasisKind kind = kind_s == "semistandard" ? BasisKind::semistandard_full
                                                      : BasisKind::quasi_standard_cone;
            GenSpec g = parse_gen(gen_s, n);
            RepresentationMatrix m;
            if (g.kind == 'H')
                m = matrix_of_generator(Generator::H(g.theta), lambda, kind);
            else if (g.kind == 'e')
                m = parallel ? matrix_of_generator_parallel(Generator::E(g.i, g.j), lambda, kind)
                             : matrix_of_generator(Generator::E(g.i, g.j), lambda, kind);
            else if (g.kind == 'f')
                m = lowering_matrix(g.i, g.j, lambda);
            else
                m = cartan_matrix(g.i, g.j, lambda);
            json doc = matrix_to_json(m);
            doc["n"] = n;
            doc["weight"] = lambda.a;
            doc["gen"] = gen_s;
            emit(doc);
        } else if (*c_gra) {
            Weight lambda(n, parse_weight_list(weight_s));
            DiamondGraph g = diamond_graph(lambda);
            if (format_s == "json")
                emit(graph_to_json(g));
            else if (format_s == "dot")
                std::cout << graph_to_dot(g);
            else
                throw std::domain_error("unknown format: " + format_s);
        } else if (*c_ver) {
            return run_verify(n, seed, samples);
        }
    } catch (const std::exception& e) {
        emit({{"error", e.what()}});
        return 1;
    }
    return 0;
}
