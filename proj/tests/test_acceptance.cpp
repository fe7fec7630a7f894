// Acceptance gate: one printed line per criterion, nonzero exit if any
// fails.  Everything here is exact rational arithmetic; "equal" always
// means literal equality.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "shapes/groebner.hpp"
#include "shapes/oracle.hpp"
#include "shapes/representation.hpp"

using namespace shapes;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

void criterion(int num, const std::string& name, const std::function<void()>& body) {
    auto t0 = clk::now();
    std::string verdict = "PASS", detail;
    try {
        body();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = std::string("  [") + e.what() + "]";
        ++failures;
    }
    double secs = std::chrono::duration<double>(clk::now() - t0).count();
    std::printf("criterion %2d: %s  %s (%.2fs)%s\n", num, verdict.c_str(), name.c_str(), secs,
                detail.c_str());
    std::fflush(stdout);
}

Poly L(int n, const std::string& s) { return poly_from_letters(n, Ring::reduced_plus, s); }

Monomial mono(int n, const std::string& s) {
    Poly p = L(n, s);
    require(p.term_count() == 1, "not a monomial: " + s);
    return p.terms().begin()->first;
}

std::vector<Shape> shapes_with_sum(int n, int cap) {
    std::vector<Shape> out;
    Shape a(n - 1, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
        a[i] = 0;
    };
    rec(0, cap);
    return out;
}

std::vector<Shape> shapes_with_cap(int n, int cap) {
    std::vector<Shape> out;
    Shape a(n - 1, 0);
    while (true) {
        out.push_back(a);
        int i = 0;
        while (i < n - 1 && a[i] == cap) a[i++] = 0;
        if (i == n - 1) break;
        ++a[i];
    }
    return out;
}

// sl(3) cone monomial as exponents (u, e, x, y); at most one of x, y is
// nonzero on the cone.
struct UEXY {
    int u = 0, e = 0, x = 0, y = 0;
};

UEXY decompose3(const Monomial& m) {
    UEXY r;
    for (const auto& [v, exp] : m) {
        if (v == Var{3})
            r.u = exp;
        else if (v == Var{2, 3})
            r.e = exp;
        else if (v == Var{2})
            r.x = exp;
        else if (v == Var{1, 3})
            r.y = exp;
        else
            require(false, "unexpected variable in sl(3) cone monomial");
    }
    return r;
}

Poly uexy_poly(const std::vector<std::pair<int, UEXY>>& terms) {
    Poly p(3, Ring::reduced_plus);
    for (const auto& [c, t] : terms) {
        if (c == 0 || t.u < 0 || t.e < 0 || t.x < 0 || t.y < 0) continue;
        Monomial m;
        if (t.u) m[{3}] = t.u;
        if (t.e) m[{2, 3}] = t.e;
        if (t.x) m[{2}] = t.x;
        if (t.y) m[{1, 3}] = t.y;
        p.add_term(m, Rat(c));
    }
    return p;
}

Poly act_nf(const Generator& g, const Monomial& m, int n) {
    return straighten(act_generator(g, Poly::monomial(n, Ring::reduced_plus, m)));
}

Poly wild_poly(const std::vector<std::pair<long long, WildbergerIndex>>& terms) {
    Poly p(3, Ring::reduced_plus);
    for (const auto& [c, idx] : terms) {
        if (c == 0) continue;
        require(wildberger_member(idx), "nonzero coefficient on an off-cone index");
        p.add_term(wildberger_monomial(idx), Rat(static_cast<long>(c)));
    }
    return p;
}

int matrix_rank(std::vector<std::vector<Rat>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<int> normalized_weight(const Monomial& m, const Weight& l) {
    std::vector<int> w = slice_weight(m, l);
    long long sum = 0;
    for (int x : w) sum += x;
    require(sum % l.n == 0, "slice weight sum not divisible by n");
    for (int& x : w) x -= static_cast<int>(sum / l.n);
    return w;
}

}  // namespace

int main() {
    set_cache_directory(".shapes-cache");

    criterion(1, "relation counts 0/1/10 and the corrected sl(4) list", [] {
        require(generating_set(2, Ring::reduced_plus).empty(), "n=2 not empty");
        auto g3 = generating_set(3, Ring::reduced_plus);
        require(g3.size() == 1 && g3[0] == L(3, "XY - U - E"), "n=3 generator");
        auto g4 = generating_set(4, Ring::reduced_plus);
        require(g4.size() == 10, "n=4 count");
        std::vector<std::string> published = {"U - XY + E",     "D - XV + A",   "B - UV + YA",
                                              "XB - UD + AE",   "B - YD + EV",  "C - XW + UZ - A",
                                              "VC - DW + BZ",   "W - YZ + V",   "C - EZ + D",
                                              "YC - EW + B"};
        Order o = Order::reduced_graded;
        std::set<std::string> expected, actual;
        for (const std::string& s : published)
            expected.insert(poly_from_letters(4, Ring::reduced_plus, s).make_monic(o).to_string(o));
        for (const Poly& p : g4) actual.insert(p.to_string(o));
        require(actual == expected, "n=4 set differs from the corrected list");
    });

    criterion(2, "all relations vanish at 50 seeded SL(n) points, n=2..5", [] {
        for (int n = 2; n <= 5; ++n) {
            auto rels = generating_set(n, Ring::full);
            std::vector<GroupPoint> pts;
            for (int k = 0; k < 50; ++k) pts.push_back(random_sl_point(n, 777 + k));
            require(all_vanish_parallel(rels, pts), "nonzero value at n=" + std::to_string(n));
        }
    });

    criterion(3, "reduced Groebner basis, n=3: {XY - U - E}", [] {
        const auto& gb = groebner_basis(3, Ring::reduced_plus);
        require(gb.elements.size() == 1, "size");
        require(gb.elements[0] == L(3, "XY - U - E"), "element");
        require(gb.elements[0].leading_monomial(gb.order) == mono(3, "XY"), "leading term");
    });

    criterion(4, "reduced Groebner basis, n=4: the 12 leading terms", [] {
        const auto& gb = groebner_basis(4, Ring::reduced_plus);
        std::set<Monomial> lts;
        for (const Poly& p : gb.elements) lts.insert(p.leading_monomial(gb.order));
        std::set<Monomial> expected;
        for (const std::string& s : {"XY", "XV", "UV", "BX", "YZ", "EZ", "YC", "VC", "XW",
                                     "EV", "UDW", "UDY"})
            expected.insert(mono(4, s));
        require(lts == expected, "leading-term set differs");
    });

    criterion(5, "full-ring Groebner theorem at desk scale (n=3 exact, n=4 contract)", [] {
        // n=3: Buchberger output equals the constructed family.
        auto gb3 = buchberger(generating_set(3, Ring::full), Order::shape_lex);
        std::set<std::string> a, b;
        for (const Poly& p : gb3) a.insert(p.to_string(Order::shape_lex));
        std::vector<Shape> two_col3 = {{2, 0}, {0, 2}, {1, 1}};
        for (const Shape& sh : two_col3)
            for (const Tableau& t : enumerate_tableaux(3, sh, TableauFilter::all))
                if (!is_semistandard(t))
                    b.insert(construct_paper_element(t, Ring::full).to_string(Order::shape_lex));
        require(a == b, "n=3 basis != constructed family");

        // n=4: every constructed f_S leads with delta^S, has a
        // semistandard tail, and the family passes Buchberger's
        // criterion.
        std::vector<Poly> family;
        std::vector<Shape> two_col4 = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                       {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        for (const Shape& sh : two_col4)
            for (const Tableau& t : enumerate_tableaux(4, sh, TableauFilter::all)) {
                if (is_semistandard(t)) continue;
                Poly f = construct_paper_element(t, Ring::full);
                auto [lt, lc] = f.leading_term(Order::shape_lex);
                require(lt == monomial_from_tableau(t) && lc == 1, "leading term != delta^S");
                for (const auto& [m, c] : f.terms()) {
                    if (m == lt) continue;
                    require(is_semistandard(tableau_from_monomial(4, m)),
                            "non-semistandard tail term");
                    require(compare_monomials(m, lt, Order::shape_lex, 4) < 0,
                            "tail not smaller");
                }
                family.push_back(f);
            }
        require(family.size() == 10, "unexpected family size");
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                Poly s = s_polynomial(family[i], family[j], Order::shape_lex);
                require(reduce(s, family, Order::shape_lex).is_zero(),
                        "S-polynomial does not reduce to zero");
            }
    });

    criterion(6, "extraction bijection and counting, n=4, a_i <= 2", [] {
        for (const Shape& sh : shapes_with_cap(4, 2)) {
            auto ss = enumerate_tableaux(4, sh, TableauFilter::semistandard);
            std::set<Shape> residue_shapes;
            std::set<std::pair<std::string, std::string>> image;
            for (const Tableau& t : ss) {
                SuperTableau s = extract(t);
                require(insert_trivial(s.trivial, s.residue) == t, "g(f(T)) != T");
                SuperTableau again = extract(insert_trivial(s.trivial, s.residue));
                require(again.trivial == s.trivial && again.residue == s.residue,
                        "f(g(L,R)) != (L,R)");
                residue_shapes.insert(s.residue.shape());
                image.insert({s.trivial.to_text(), s.residue.to_text()});
            }
            require(image.size() == ss.size(), "f not injective");
            std::size_t total = 0;
            for (const Shape& mu : residue_shapes)
                total += enumerate_tableaux(4, mu, TableauFilter::quasi_standard).size();
            require(total == ss.size(), "#SS != sum of #QS over residue shapes");
            require(static_cast<long long>(ss.size()) == weyl_dimension(Weight(4, sh)),
                    "#SS != Weyl dimension");
        }
    });

    criterion(7, "sl(2) matrices match the displays, a <= 5", [] {
        for (int a = 0; a <= 5; ++a) {
            Weight l(2, {a});
            auto x = matrix_of_generator(Generator::E(1, 2), l, BasisKind::quasi_standard_cone);
            auto y = lowering_matrix(1, 2, l);
            auto h = cartan_matrix(1, 2, l);
            for (int r = 0; r <= a; ++r)
                for (int c = 0; c <= a; ++c) {
                    require(x.entries[r][c] == (c == r + 1 ? Rat(c) : Rat(0)), "X entry");
                    require(y.entries[r][c] == (r == c + 1 ? Rat(a - c) : Rat(0)), "Y entry");
                    require(h.entries[r][c] == (r == c ? Rat(a - 2 * c) : Rat(0)), "H entry");
                }
        }
    });

    criterion(8, "sl(3) closed-form action tables and their Wildberger form", [] {
        Generator xa = Generator::E(1, 2), xb = Generator::E(2, 3);
        for (int u = 0; u <= 3; ++u)
            for (int e = 0; e <= 3; ++e) {
                for (int x = 0; x <= 3; ++x) {
                    Monomial m = uexy_poly({{1, {u, e, x, 0}}}).terms().begin()->first;
                    Poly expect_a =
                        x > 0 ? uexy_poly({{e, {u + 1, e - 1, x - 1, 0}},
                                           {e + x, {u, e, x - 1, 0}}})
                              : uexy_poly({{e, {u, e - 1, 0, 1}}});
                    require(act_nf(xa, m, 3) == expect_a, "X_alpha on U^uE^eX^x");
                    require(act_nf(xb, m, 3) == uexy_poly({{u, {u - 1, e, x + 1, 0}}}),
                            "X_beta on U^uE^eX^x");
                }
                for (int y = 1; y <= 3; ++y) {
                    Monomial m = uexy_poly({{1, {u, e, 0, y}}}).terms().begin()->first;
                    require(act_nf(xa, m, 3) == uexy_poly({{e, {u, e - 1, 0, y + 1}}}),
                            "X_alpha on U^uE^eY^y");
                    require(act_nf(xb, m, 3) == uexy_poly({{u + y, {u, e, 0, y - 1}},
                                                           {u, {u - 1, e + 1, 0, y - 1}}}),
                            "X_beta on U^uE^eY^y");
                }
            }

        // The same tables through the e_{m,n,l} coordinates.
        std::set<Monomial> cone;
        for (int u = 0; u <= 3; ++u)
            for (int e = 0; e <= 3; ++e)
                for (int x = 0; x <= 3; ++x) {
                    cone.insert(uexy_poly({{1, {u, e, x, 0}}}).terms().begin()->first);
                    cone.insert(uexy_poly({{1, {u, e, 0, x}}}).terms().begin()->first);
                }
        for (const Monomial& mm : cone) {
            WildbergerIndex i = wildberger_index(mm);
            require(wildberger_member(i) && wildberger_monomial(i) == mm, "dictionary");
            long long m = i.m, n = i.n, l = i.l;
            Poly expect_a =
                m > n ? wild_poly({{(m - l) / 2, {m - 1, n, l + 1}},
                                   {m - n + (m - l) / 2, {m - 1, n, l - 1}}})
                      : wild_poly({{m - (n + l) / 2, {m - 1, n, l}}});
            require(act_nf(xa, mm, 3) == expect_a, "Wildberger X_alpha");
            // The diagonal m = n joins the branch of the operator that
            // does not leave it: X_alpha lowers m (so m = n uses the
            // n >= m form above), X_beta lowers n (so m = n uses the
            // m > n form here).
            Poly expect_b =
                m >= n ? wild_poly({{n - (m - l) / 2, {m, n - 1, l}}})
                       : wild_poly({{n - m + (n + l) / 2, {m, n - 1, l + 1}},
                                    {(n + l) / 2, {m, n - 1, l - 1}}});
            require(act_nf(xb, mm, 3) == expect_b, "Wildberger X_beta");
        }
    });

    criterion(9, "sl(4) adjoint: 15 monomials, integral matrices, root weights", [] {
        Weight l(4, {1, 0, 1});
        ModuleBasis b = module_basis(l, BasisKind::quasi_standard_cone);
        require(b.size() == 15, "basis size");
        std::set<Monomial> expected;
        for (const std::string& s : {"1", "X", "U", "A", "Z", "W", "C", "WU", "WA", "CU",
                                     "CA", "CX", "ZU", "ZA", "ZX"})
            expected.insert(mono(4, s));
        require(std::set<Monomial>(b.monomials.begin(), b.monomials.end()) == expected,
                "basis set");
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                require(matrix_of_generator(Generator::E(i, j), l,
                                            BasisKind::quasi_standard_cone)
                            .integral(),
                        "non-integral raising matrix");
        std::multiset<std::vector<int>> weights, roots;
        for (const Monomial& m : b.monomials) weights.insert(normalized_weight(m, l));
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                if (i == j) continue;
                std::vector<int> r(4, 0);
                r[i - 1] = 1;
                r[j - 1] = -1;
                roots.insert(r);
            }
        for (int k = 0; k < 3; ++k) roots.insert(std::vector<int>(4, 0));
        require(weights == roots, "weight multiset != roots + 3 zeros");
    });

    criterion(10, "derivations match the group flow (30 polynomials x 20 points)", [] {
        std::mt19937_64 rng(2026);
        for (int n : {2, 3, 4}) {
            std::vector<Var> vars;
            for (int s = 1; s < n; ++s)
                for (const Column& c : all_columns(n, s)) vars.push_back(c);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
            std::uniform_int_distribution<int> coeff(-3, 3);
            for (int trial = 0; trial < 10; ++trial) {
                Poly p(n, Ring::full);
                for (int t = 0; t < 3; ++t) {
                    Monomial m;
                    m[vars[pick(rng)]] += 1;
                    m[vars[pick(rng)]] += 1;
                    p.add_term(m, Rat(coeff(rng)));
                }
                std::vector<Generator> gens;
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        if (i != j) gens.push_back(Generator::E(i, j));
                std::vector<Rat> theta(n, 0);
                for (int i = 0; i + 1 < n; ++i) {
                    theta[i] = coeff(rng);
                    theta[n - 1] -= theta[i];
                }
                gens.push_back(Generator::H(theta));
                for (int k = 0; k < 20; ++k) {
                    GroupPoint g = random_sl_point(n, 9000 + 100 * n + k);
                    for (const Generator& gen : gens)
                        require(derivation_consistency(gen, p, g), "flow mismatch");
                }
            }
        }
    });

    criterion(11, "tau: involution, sl(3) closed forms, ZU image, [X,Y]=H", [] {
        // Involution with square phase +1 at desk scale.
        for (int n : {3, 4})
            for (const Shape& sh : shapes_with_sum(n, 3))
                for (const Tableau& t : enumerate_tableaux(n, sh, TableauFilter::all)) {
                    auto [once, p1] = tau_tableau(t);
                    auto [twice, p2] = tau_tableau(once);
                    require(twice == t && p1.sign * p2.sign == 1, "tau^2 != id");
                }

        // Closed forms on every cone monomial of V^(a,b), a,b <= 3.
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                Weight l(3, {a, b});
                ModuleBasis basis = module_basis(l, BasisKind::quasi_standard_cone);
                for (const Monomial& m : basis.monomials) {
                    UEXY d = decompose3(m);
                    UEXY img = d.y == 0 ? UEXY{a - d.x - d.u, b - d.e, d.x, 0}
                                        : UEXY{a - d.u, b - d.y - d.e, 0, d.y};
                    Poly t = tau_module(m, l);
                    require(t.term_count() == 1, "module tau not monomial on sl(3)");
                    auto [tm, tc] = *t.terms().begin();
                    require(tm == uexy_poly({{1, img}}).terms().begin()->first,
                            "closed form mismatch");
                    require(tc == 1 || tc == -1, "coefficient not a sign");
                    // And in Wildberger coordinates.
                    WildbergerIndex i = wildberger_index(m), j = wildberger_index(tm);
                    require(j == WildbergerIndex{a + b - i.n, a + b - i.m,
                                                 a - b + i.m - i.n - i.l},
                            "Wildberger form of tau");
                }
            }

        // The sl(4) fixture.
        require(tau_module(mono(4, "ZU"), Weight(4, {1, 0, 1})) ==
                    poly_from_letters(4, Ring::reduced_plus, "-C - ZU + A"),
                "tau(ZU)");

        // [X_eta, Y_eta] = H_eta as matrices on V^(a,b), a,b <= 2.
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                Weight l(3, {a, b});
                ModuleBasis basis = module_basis(l, BasisKind::quasi_standard_cone);
                for (int i = 1; i <= 3; ++i)
                    for (int j = i + 1; j <= 3; ++j) {
                        Matrix h = cartan_matrix(i, j, l).entries;
                        for (int r = 0; r < basis.size(); ++r)
                            for (int c = 0; c < basis.size(); ++c) {
                                std::vector<int> w = slice_weight(basis.monomials[c], l);
                                Rat expect = r == c ? Rat(w[i - 1] - w[j - 1]) : Rat(0);
                                require(h[r][c] == expect, "[X,Y] != H_eta");
                            }
                    }
            }
    });

    criterion(12, "cone slices: socle = span(1), every node raises to 1", [] {
        for (int n : {2, 3})
            for (const Shape& sh : shapes_with_sum(n, 3)) {
                Weight l(n, sh);
                ModuleBasis b = module_basis(l, BasisKind::quasi_standard_cone);
                int d = b.size();
                int unit = b.index_of(Monomial{});
                require(unit >= 0, "unit not in basis");
                std::vector<Matrix> raising;
                for (int k = 1; k < n; ++k)
                    raising.push_back(matrix_of_generator(Generator::E(k, k + 1), l,
                                                          BasisKind::quasi_standard_cone)
                                          .entries);
                // Stack the raising matrices; the joint kernel must be
                // exactly the line through the unit monomial.
                std::vector<std::vector<Rat>> stacked;
                for (const Matrix& m : raising)
                    for (const auto& row : m) stacked.push_back(row);
                require(d - matrix_rank(stacked) == 1, "socle dimension != 1");
                for (const Matrix& m : raising)
                    for (int r = 0; r < d; ++r)
                        require(m[r][unit] == 0, "raising does not annihilate 1");
                // Reachability of the unit along raising edges.
                std::vector<char> seen(d, 0);
                std::vector<int> stack = {unit};
                seen[unit] = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (const Matrix& m : raising)
                        for (int c = 0; c < d; ++c)
                            if (!seen[c] && m[v][c] != 0) {
                                seen[c] = 1;
                                stack.push_back(c);
                            }
                }
                for (int v = 0; v < d; ++v)
                    require(seen[v], "node cannot reach 1 by raising words");
            }
    });

    if (failures == 0)
        std::puts("all acceptance criteria passed");
    else
        std::printf("%d acceptance criterion(s) FAILED\n", failures);
    return failures;
}
