#include "tribraid/serialize.hpp"

namespace tribraid {

Json to_json(const NormalForm& nf) {
  Json tail = Json::array();
  for (const auto& s : nf.tail) tail.push_back({s.subscript, s.exponent});
  return Json{{"power", nf.power}, {"tail", std::move(tail)}};
}

Json to_json(const XuSymbol& s) { return Json{{"power", s.power}, {"exponents", s.exponents}}; }

Json to_json(const FlypeTriple& t) { return Json{{"u", t.u}, {"v", t.v}, {"w", t.w}, {"epsilon", t.epsilon}}; }

Json to_json(const LinkClassification& c) {
  struct Visitor {
    Json operator()(const BraidIndexLow& b) const {
      return Json{{"kind", "BraidIndexLow"}, {"index", b.index}, {"reduced_k", b.k}, {"reduced_sign", b.sign}};
    }
    Json operator()(const UniqueClass& u) const { return Json{{"kind", "UniqueClass"}, {"symbol", to_json(u.symbol)}}; }
    Json operator()(const FlypePair& f) const {
      return Json{{"kind", "FlypePair"},
                  {"triple", to_json(f.triple)},
                  {"partner_symbol", to_json(f.partner_symbol)},
                  {"own_symbol", to_json(f.own_symbol)}};
    }
  };
  return std::visit(Visitor{}, c);
}

Json to_json(const Invertibility& inv) {
  Json j{{"applicable", inv.applicable}};
  j["invertible"] = inv.invertible ? Json(*inv.invertible) : Json(nullptr);
  j["reason"] = to_string(inv.reason);
  return j;
}

Json to_json(const TransversalPair& tp) {
  return Json{{"triple", to_json(tp.triple)},
              {"partner", to_json(tp.partner)},
              {"bennequin", tp.bennequin},
              {"c_b", tp.c_b}};
}

Json to_json(const BraidIndex& bi) {
  Json j{{"index", bi.index}};
  j["reduced_k"] = bi.reduced_k ? Json(*bi.reduced_k) : Json(nullptr);
  j["reduced_sign"] = bi.reduced_sign ? Json(*bi.reduced_sign) : Json(nullptr);
  return j;
}

Json polynomial_to_json(const LaurentPoly& p) {
  // keys are already in units of 1/denominator; normalize to half-units
  const int den = p.variable().denominator;
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int two_e = den == 2 ? it->first : 2 * it->first / den;
    out.push_back({two_e, it->second});
  }
  return out;
}

}  // namespace tribraid
