#pragma once

#include "leaky/chamber.hpp"
#include "leaky/covers.hpp"
#include "leaky/fock.hpp"
#include "leaky/polynomial.hpp"
#include "leaky/profile.hpp"
#include "leaky/walls.hpp"
#include "leaky/xgraph.hpp"

#include <json.hpp>

namespace leaky {

using Json = nlohmann::json;

// Rationals render as "p/q" strings (or "p"), never as decimals; labels and
// vertices are 1-based on the wire.

Json profile_to_json(const RamificationProfile& p);
RamificationProfile profile_from_json(const Json& j);

Json cover_to_json(const LeakyCover& c);
LeakyCover cover_from_json(const Json& j);

Json fock_to_json(const FockVector& v);
FockVector fock_from_json(const Json& j);

Json polynomial_to_json(const MultivariatePolynomial& p);
MultivariatePolynomial polynomial_from_json(const Json& j);

Json xgraph_to_json(const XGraph& xg);
Json wall_to_json(const Wall& w);
Wall wall_from_json(const Json& j);

Json chamber_report_to_json(const ChamberReport& r);
Json piecewise_report_to_json(const PiecewiseReport& r);

}  // namespace leaky
