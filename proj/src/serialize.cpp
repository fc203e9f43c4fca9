#include "eisp/serialize.hpp"

#include "eisp/errors.hpp"

namespace eisp {

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const Real& x) { return x.hex(); }

Json to_json(const BigComplex& z) { return Json{{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

Json to_json(const ResiduePair& lam) { return Json::array({lam.l1, lam.l2}); }

Json to_json(const Mat2& g) { return Json::array({g.a, g.b, g.c, g.d}); }

Json to_json(const ExtScalar& x) {
  Json sym = Json::array();
  for (const auto& [s, c] : x.symbol_terms())
    sym.push_back(Json{{"weight", s.weight}, {"arg", to_json(s.arg)}, {"coeff", to_json(c)}});
  return Json{{"rational", to_json(x.rational_part())}, {"symbols", sym}};
}

Json to_json(const PeriodPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return c;
}

Json to_json(const Cyclo& c) {
  Json a = Json::array();
  for (const auto& q : c.coeffs()) a.push_back(to_json(q));
  return a;
}

Json to_json(const HoloFourier& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
  return Json{{"kind", "holomorphic"}, {"k", f.k}, {"l", 0}, {"N", f.N}, {"lambda", to_json(f.lambda)},
              {"M", f.M}, {"constant", to_json(f.constant)}, {"coeffs", coeffs},
              {"nonholo", f.nonholo ? to_json(f.nonholo_coeff) : Json(nullptr)}};
}

Json to_json(const NumericHolo& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.A) coeffs.push_back(to_json(c));
  return Json{{"kind", "congruence"}, {"k", f.k}, {"l", 0}, {"N", f.N}, {"lambda", to_json(f.lambda)},
              {"M", f.M}, {"constant", to_json(f.A0)}, {"coeffs", coeffs}, {"inv_v", to_json(f.inv_v)}};
}

namespace {

Json vpoly_json(const VPoly& p) {
  Json o = Json::object();
  for (const auto& [e, c] : p) o[std::to_string(e)] = to_json(c);
  return o;
}

}  // namespace

Json to_json(const MaassFourier& f) {
  Json A = Json::array(), C = Json::array();
  for (const auto& p : f.A) A.push_back(vpoly_json(p));
  for (const auto& p : f.C) C.push_back(vpoly_json(p));
  return Json{{"kind", f.elliptic ? "elliptic_maass" : "maass"}, {"k", f.k}, {"l", f.l}, {"N", f.N},
              {"lambda", to_json(f.lambda)}, {"M", f.M}, {"constant", to_json(f.A0)}, {"C0", to_json(f.C0)},
              {"A", A}, {"C", C}};
}

Json to_json(const LValueClosed& v) {
  return Json{{"k", v.k}, {"N", v.lambda.N}, {"lambda", to_json(v.lambda)}, {"r", v.r}, {"xi", to_json(v.xi())}};
}

Json to_json(const RationalityReport& r) {
  Json f = Json::array();
  for (const auto& x : r.failures) f.push_back(Json{{"generator", std::string(1, x.generator)}, {"coset", x.coset}, {"coeff", x.coeff}});
  return Json{{"rational", r.rational}, {"failures", f}};
}

Json to_json(const QuadLatticeData& d) {
  Json j{{"minpoly", Json::array({d.a, d.b, d.c})}, {"omega2", to_json(d.omega2)}, {"N", d.level()},
         {"lambda", to_json(d.lambda)}};
  if (!d.preset.empty()) j["preset"] = d.preset;
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw PreconditionError("expected a rational as integer or \"p/q\" string");
}

ResiduePair residue_from_json(const Json& j, int N) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw PreconditionError("lambda must be a pair of integers");
  return ResiduePair(N, j[0].get<long>(), j[1].get<long>());
}

QuadLatticeData quad_data_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("lattice data must be a JSON object");
  QuadLatticeData d;
  if (j.contains("preset")) {
    auto p = preset_by_name(j.at("preset").get<std::string>());
    if (!p) throw PreconditionError("unknown preset");
    d = *p;
  }
  if (j.contains("minpoly")) {
    const Json& mp = j.at("minpoly");
    if (!mp.is_array() || mp.size() != 3) throw PreconditionError("minpoly must be [a, b, c]");
    d.a = mp[0].get<long>();
    d.b = mp[1].get<long>();
    d.c = mp[2].get<long>();
  }
  if (j.contains("omega2")) d.omega2 = rat_from_json(j.at("omega2"));
  int N = j.contains("N") ? j.at("N").get<int>() : d.level();
  if (N < 1) throw PreconditionError("level must be positive");
  d.lambda = j.contains("lambda") ? residue_from_json(j.at("lambda"), N) : ResiduePair(N, 0, 0);
  d.validate();
  return d;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace eisp
