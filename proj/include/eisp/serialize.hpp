#pragma once

#include <json.hpp>

#include "eisp/cocycle.hpp"
#include "eisp/fourier.hpp"
#include "eisp/invariant.hpp"
#include "eisp/lseries.hpp"

namespace eisp {

using Json = nlohmann::json;  // std::map-backed, so keys come out sorted

Json to_json(const Rat& q);
Json to_json(const Real& x);  // hex-significand string at full precision
Json to_json(const BigComplex& z);
Json to_json(const ResiduePair& lam);
Json to_json(const Mat2& g);
Json to_json(const ExtScalar& x);
Json to_json(const PeriodPoly& p);
Json to_json(const Cyclo& c);
Json to_json(const HoloFourier& f);
Json to_json(const NumericHolo& f);
Json to_json(const MaassFourier& f);
Json to_json(const LValueClosed& v);
Json to_json(const RationalityReport& r);
Json to_json(const QuadLatticeData& d);

Rat rat_from_json(const Json& j);
ResiduePair residue_from_json(const Json& j, int N);
// {minpoly: [a, b, c], omega2: "p/q", N, lambda: [l1, l2], preset?}
QuadLatticeData quad_data_from_json(const Json& j);

std::string dump(const Json& j);

}  // namespace eisp
