#include "shapes/jsonio.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shapes {

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::full: return "full";
        case Ring::reduced_plus: return "reduced_plus";
        case Ring::reduced_minus: return "reduced_minus";
    }
    throw std::invalid_argument("unknown ring");
}

Ring ring_from_name(const std::string& s) {
    if (s == "full") return Ring::full;
    if (s == "reduced_plus" || s == "reduced-plus") return Ring::reduced_plus;
    if (s == "reduced_minus" || s == "reduced-minus") return Ring::reduced_minus;
    throw std::invalid_argument("unknown ring: " + s);
}

std::string order_name(Order o) {
    switch (o) {
        case Order::shape_lex: return "shape_lex";
        case Order::anti_shape_lex: return "anti_shape_lex";
        case Order::reduced_graded: return "reduced_graded";
        case Order::anti_reduced_graded: return "anti_reduced_graded";
    }
    throw std::invalid_argument("unknown order");
}

Order order_from_name(const std::string& s) {
    if (s == "shape_lex" || s == "shape-lex") return Order::shape_lex;
    if (s == "anti_shape_lex" || s == "anti-shape-lex") return Order::anti_shape_lex;
    if (s == "reduced_graded" || s == "reduced-graded") return Order::reduced_graded;
    if (s == "anti_reduced_graded" || s == "anti-reduced-graded") return Order::anti_reduced_graded;
    throw std::invalid_argument("unknown order: " + s);
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream ss;
    ss << r;
    return ss.str();
}

Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

nlohmann::json poly_to_json(const Poly& p, Order o) {
    std::vector<const Monomial*> ms;
    for (const auto& [m, c] : p.terms()) ms.push_back(&m);
    std::sort(ms.begin(), ms.end(), [&](const Monomial* a, const Monomial* b) {
        return compare_monomials(*a, *b, o, p.n()) > 0;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (const Monomial* m : ms) {
        nlohmann::json vars = nlohmann::json::object();
        for (const auto& [v, e] : *m) vars[var_name(v)] = e;
        terms.push_back({{"coeff", rat_to_string(p.terms().at(*m))}, {"monomial", vars}});
    }
    return {{"ring", ring_name(p.ring())}, {"n", p.n()}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
    Poly p(j.at("n").get<int>(), ring_from_name(j.at("ring").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& [name, e] : t.at("monomial").items()) m[parse_var(name)] = e.get<int>();
        p.add_term(m, rat_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

nlohmann::json tableau_to_json(const Tableau& t) {
    nlohmann::json cols = nlohmann::json::array();
    for (const Column& c : t.columns()) cols.push_back(c);
    return {{"n", t.n()}, {"columns", cols}};
}

Tableau tableau_from_json(const nlohmann::json& j) {
    std::vector<Column> cols;
    for (const auto& c : j.at("columns")) cols.push_back(c.get<Column>());
    return Tableau(j.at("n").get<int>(), std::move(cols));
}

}  // namespace shapes
