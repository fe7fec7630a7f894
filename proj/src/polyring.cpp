#include "shapes/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shapes {

bool var_is_trivial(const Var& v) {
    for (size_t k = 0; k < v.size(); ++k)
        if (v[k] != static_cast<int>(k) + 1) return false;
    return true;
}

bool var_is_anti_trivial(const Var& v, int n) {
    int s = static_cast<int>(v.size());
    for (int k = 0; k < s; ++k)
        if (v[k] != n - s + 1 + k) return false;
    return true;
}

std::string var_name(const Var& v) {
    bool wide = false;
    for (int i : v) wide = wide || i > 9;
    std::string out = "d" + std::to_string(v.size()) + "_";
    for (size_t k = 0; k < v.size(); ++k) {
        if (wide && k) out += "_";
        out += std::to_string(v[k]);
    }
    return out;
}

Var parse_var(const std::string& name) {
    if (name.empty() || name[0] != 'd') throw std::invalid_argument("bad variable: " + name);
    size_t us = name.find('_');
    if (us == std::string::npos) throw std::invalid_argument("bad variable: " + name);
    int height = std::stoi(name.substr(1, us - 1));
    std::string rest = name.substr(us + 1);
    Var v;
    if (rest.find('_') != std::string::npos) {
        std::stringstream ss(rest);
        std::string piece;
        while (std::getline(ss, piece, '_')) v.push_back(std::stoi(piece));
    } else {
        for (char c : rest) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad variable: " + name);
            v.push_back(c - '0');
        }
    }
    if (static_cast<int>(v.size()) != height) throw std::invalid_argument("height mismatch: " + name);
    return v;
}

static Var reflect_var(const Var& v, int n) {
    Var r(v.size());
    for (size_t k = 0; k < v.size(); ++k) r[k] = n + 1 - v[v.size() - 1 - k];
    return r;
}

bool var_greater(const Var& a, const Var& b, Order o, int n) {
    if (o == Order::anti_shape_lex || o == Order::anti_reduced_graded) {
        Order base = (o == Order::anti_shape_lex) ? Order::shape_lex : Order::reduced_graded;
        return var_greater(reflect_var(a, n), reflect_var(b, n), base, n);
    }
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

int monomial_nontrivial_degree(const Monomial& m, Order o, int n) {
    int d = 0;
    for (const auto& [v, e] : m) {
        bool triv = (o == Order::anti_reduced_graded) ? var_is_anti_trivial(v, n) : var_is_trivial(v);
        if (!triv) d += e;
    }
    return d;
}

static int exp_of(const Monomial& m, const Var& v) {
    auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
}

int compare_monomials(const Monomial& a, const Monomial& b, Order o, int n) {
    if (a == b) return 0;
    // shape_lex grades by total degree, reduced_graded by the degree in
    // the non-trivial variables only.
    bool reduced = (o == Order::reduced_graded || o == Order::anti_reduced_graded);
    int da = reduced ? monomial_nontrivial_degree(a, o, n) : monomial_degree(a);
    int db = reduced ? monomial_nontrivial_degree(b, o, n) : monomial_degree(b);
    if (da != db) return da < db ? -1 : 1;
    std::vector<Var> support;
    for (const auto& [v, e] : a) support.push_back(v);
    for (const auto& [v, e] : b) support.push_back(v);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::sort(support.begin(), support.end(),
              [&](const Var& x, const Var& y) { return var_greater(x, y, o, n); });
    // reverse lex tie-break: scan from the smallest variable up; the
    // monomial with the larger exponent at the first difference is smaller.
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        int ea = exp_of(a, *it), eb = exp_of(b, *it);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (const auto& [v, e] : a)
        if (exp_of(b, v) < e) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b) {
        out[v] += e;
        if (out[v] == 0) out.erase(v);
    }
    return out;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b) {
        auto it = out.find(v);
        if (it == out.end() || it->second < e) throw std::invalid_argument("monomial_div: not divisible");
        it->second -= e;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b) out[v] = std::max(out[v], e);
    return out;
}

Monomial monomial_from_tableau(const Tableau& t) {
    Monomial m;
    for (const Column& c : t.columns()) m[c] += 1;
    return m;
}

Tableau tableau_from_monomial(int n, const Monomial& m) {
    std::vector<Column> cols;
    for (const auto& [v, e] : m)
        for (int k = 0; k < e; ++k) cols.push_back(v);
    return Tableau(n, std::move(cols));
}

Poly Poly::constant(int n, Ring ring, const Rat& c) {
    Poly p(n, ring);
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

Poly Poly::variable(int n, Ring ring, const Var& v) {
    Poly p(n, ring);
    p.terms_[Monomial{{v, 1}}] = 1;
    return p;
}

Poly Poly::monomial(int n, Ring ring, const Monomial& m, const Rat& c) {
    Poly p(n, ring);
    if (c != 0) p.terms_[m] = c;
    return p;
}

Poly Poly::from_tableau(Ring ring, const Tableau& t) {
    return monomial(t.n(), ring, monomial_from_tableau(t));
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out(n_, ring_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out(n_, ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            out.add_term(monomial_mul(m1, m2), c1 * c2);
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(n_, ring_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

std::pair<Monomial, Rat> Poly::leading_term(Order o) const {
    if (terms_.empty()) throw std::invalid_argument("leading_term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (compare_monomials(it->first, best->first, o, n_) > 0) best = it;
    return {best->first, best->second};
}

Monomial Poly::leading_monomial(Order o) const { return leading_term(o).first; }

Poly Poly::make_monic(Order o) const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / leading_term(o).second);
}

static Poly substitute(const Poly& p, Ring target, bool anti) {
    Poly out(p.n(), target);
    for (const auto& [m, c] : p.terms()) {
        Monomial keep;
        for (const auto& [v, e] : m) {
            bool drop = anti ? var_is_anti_trivial(v, p.n()) : var_is_trivial(v);
            if (!drop) keep[v] = e;
        }
        out.add_term(keep, c);
    }
    return out;
}

Poly Poly::substitute_trivial() const { return substitute(*this, Ring::reduced_plus, false); }
Poly Poly::substitute_anti_trivial() const { return substitute(*this, Ring::reduced_minus, true); }

static std::string rat_str(const Rat& r) {
    std::ostringstream ss;
    ss << r;
    return ss.str();
}

std::string Poly::to_string(Order o) const {
    if (terms_.empty()) return "0";
    std::vector<const Monomial*> order;
    for (const auto& [m, c] : terms_) order.push_back(&m);
    std::sort(order.begin(), order.end(), [&](const Monomial* a, const Monomial* b) {
        return compare_monomials(*a, *b, o, n_) > 0;
    });
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        Rat c = terms_.at(*order[i]);
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (i == 0) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string mono;
        for (const auto& [v, e] : *order[i]) {
            if (!mono.empty()) mono += "*";
            mono += var_name(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += rat_str(a);
        else if (a == 1) out += mono;
        else out += rat_str(a) + "*" + mono;
    }
    return out;
}

void check_in_ring(const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m) {
            if (static_cast<int>(v.size()) >= p.n())
                throw std::invalid_argument("variable height must be < n");
            if (p.ring() == Ring::reduced_plus && var_is_trivial(v))
                throw std::invalid_argument("trivial variable in reduced ring: " + var_name(v));
            if (p.ring() == Ring::reduced_minus && var_is_anti_trivial(v, p.n()))
                throw std::invalid_argument("anti-trivial variable in reduced ring: " + var_name(v));
        }
    }
}

std::map<char, Var> letter_table(int n) {
    switch (n) {
        case 2:
            return {{'X', {2}}};
        case 3:
            return {{'X', {2}}, {'U', {3}}, {'Y', {1, 3}}, {'E', {2, 3}}};
        case 4:
            return {{'X', {2}},       {'U', {3}},       {'A', {4}},
                    {'Y', {1, 3}},    {'V', {1, 4}},    {'E', {2, 3}},
                    {'D', {2, 4}},    {'B', {3, 4}},    {'Z', {1, 2, 4}},
                    {'W', {1, 3, 4}}, {'C', {2, 3, 4}}};
        default:
            throw std::invalid_argument("letter dictionary only for n = 2, 3, 4");
    }
}

Poly poly_from_letters(int n, Ring ring, const std::string& text) {
    auto table = letter_table(n);
    Poly out(n, ring);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected +/- in: " + text);
        }
        first = false;
        skip_ws();
        Rat coeff = 1;
        std::string num;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) num += text[i++];
        if (!num.empty()) {
            coeff = Rat(num);
            coeff.canonicalize();
        }
        Monomial m;
        while (i < text.size()) {
            if (text[i] == '*' || text[i] == ' ') { ++i; continue; }
            if (text[i] == '+' || text[i] == '-') break;
            char l = text[i];
            auto it = table.find(l);
            if (it == table.end()) throw std::invalid_argument(std::string("unknown letter: ") + l);
            ++i;
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string ex;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ex += text[i++];
                e = std::stoi(ex);
            }
            m[it->second] += e;
        }
        out.add_term(m, coeff * sign);
        skip_ws();
    }
    return out;
}

std::string poly_to_letters(const Poly& p, Order o) {
    std::map<Var, char> rev;
    for (const auto& [l, v] : letter_table(p.n())) rev[v] = l;
    if (p.is_zero()) return "0";
    std::vector<const Monomial*> order;
    for (const auto& [m, c] : p.terms()) order.push_back(&m);
    std::sort(order.begin(), order.end(), [&](const Monomial* a, const Monomial* b) {
        return compare_monomials(*a, *b, o, p.n()) > 0;
    });
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        Rat c = p.terms().at(*order[i]);
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (i == 0) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string mono;
        for (const auto& [v, e] : *order[i]) {
            auto it = rev.find(v);
            if (it == rev.end()) throw std::invalid_argument("no letter for " + var_name(v));
            for (int k = 0; k < e; ++k) mono += it->second;
        }
        if (mono.empty()) out += rat_str(a);
        else if (a == 1) out += mono;
        else out += rat_str(a) + mono;
    }
    return out;
}

}  // namespace shapes
