#ifndef SHAPES_JSONIO_HPP
#define SHAPES_JSONIO_HPP

// JSON forms used by the CLI and the Groebner disk cache.
// Polynomial schema:
//   {"ring":"reduced_plus","n":4,
//    "terms":[{"coeff":"-1","monomial":{"d1_2":1,"d2_13":1}}, ...]}
// with coefficients as exact decimal strings "p/q" and terms listed in
// decreasing order of the supplied monomial order.
// Tableau schema: {"n":4,"columns":[[1,3],[2,4],[3]]}.

#include <json.hpp>

#include "shapes/polyring.hpp"

namespace shapes {

std::string ring_name(Ring r);        // full / reduced_plus / reduced_minus
Ring ring_from_name(const std::string& s);  // also accepts reduced-plus / reduced-minus

std::string order_name(Order o);
Order order_from_name(const std::string& s);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

nlohmann::json poly_to_json(const Poly& p, Order o);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace shapes

#endif
