#include "zdgb/report.hpp"

#include "zdgb/convert.hpp"
#include "zdgb/parser.hpp"

namespace zdgb {

std::vector<RPoly> tilde_generators(const Problem& p) {
  std::vector<RPoly> out;
  for (const auto& f : p.flat_generators) out.push_back(from_field(f, p.tilde));
  return out;
}

RPoly to_tilde(const Problem& p, const FieldPoly& f) { return from_field(reorder(f, p.flat), p.tilde); }

std::string render_u(const Problem& p, const UPoly& u) { return u.to_string(p.system.vars.back()); }

std::string render_display(const Problem& p, const FieldPoly& f) {
  return render(integer_normalize(f), p.system.vars);
}

std::string render_display(const Problem& p, const RPoly& f) { return render_display(p, to_field(f, p.flat)); }

Json upoly_json(const Problem& p, const UPoly& u) {
  Json coeffs = Json::array();
  for (const auto& c : u.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"text", render_u(p, u)}, {"coeffs", coeffs}};
}

Json poly_json(const Problem& p, const FieldPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json exps = Json::array();
    for (auto e : t.mono.exponents()) exps.push_back(e);
    terms.push_back(Json{{"coeff", t.coeff.get_str()}, {"exps", exps}});
  }
  return Json{{"text", render(f, p.system.vars)}, {"terms", terms}};
}

namespace {

Json display_list(const Problem& p, const std::vector<QPoly>& polys) {
  Json arr = Json::array();
  for (const auto& f : polys) arr.push_back(render_display(p, lift(f)));
  return arr;
}

Json branch_json(const Problem& p, const Branch& b) {
  return Json{{"kind", branch_kind_name(b.kind)},
              {"modulus", render_u(p, b.modulus)},
              {"proper_divisor", render_u(p, b.proper_divisor)},
              {"basis", display_list(p, b.basis)}};
}

}  // namespace

std::vector<FieldPoly> new_basis_elements(const Problem& p, const NewBasis& nb) {
  std::vector<FieldPoly> out;
  auto add_branch = [&](const Branch& b) {
    for (const auto& f : b.basis) out.push_back(integer_normalize(to_field(f, p.flat)));
    out.push_back(integer_normalize(to_field(RPoly::constant(p.tilde, b.proper_divisor), p.flat)));
  };
  if (nb.compatible) add_branch(*nb.compatible);
  for (const auto& b : nb.proper) add_branch(b);
  return out;
}

Json input_json(const Problem& p) {
  Json gens = Json::array();
  for (std::size_t k = 0; k < p.flat_generators.size(); ++k) {
    const auto& g = p.system.generators[k];
    gens.push_back(Json{{"name", g.name}, {"poly", render(p.flat_generators[k], p.system.vars)}});
  }
  return Json{{"vars", p.system.vars},
              {"eliminate", p.system.eliminate},
              {"order", order_name(p.system.order)},
              {"generators", gens}};
}

Json elimination_json(const Problem& p, const Elimination& el) {
  Json doc;
  doc["input"] = input_json(p);

  const PseudoResult& ps = el.pseudo;
  Json lambda = Json::array();
  for (const auto& l : ps.multipliers) lambda.push_back(render_u(p, l));
  Json pb = Json::array();
  for (const auto& f : ps.basis) pb.push_back(render_display(p, f));
  doc["pseudo"] = Json{{"trivial", ps.trivial},
                       {"chi_eps", upoly_json(p, ps.chi_eps)},
                       {"multipliers", lambda},
                       {"basis", pb},
                       {"stats",
                        {{"pairs", ps.stats.pairs},
                         {"coprime_skips", ps.stats.coprime_skips},
                         {"triangle_skips", ps.stats.triangle_skips},
                         {"spolys", ps.stats.spolys},
                         {"reduction_steps", ps.stats.reduction_steps},
                         {"zero_remainders", ps.stats.zero_remainders}}}};

  Json omega = Json::array();
  for (const auto& o : el.compat.omega) {
    Json elems = Json::array();
    for (const auto& w : o.elements) elems.push_back(render_u(p, w));
    omega.push_back(Json{{"multiplicity", o.multiplicity}, {"elements", elems}});
  }
  Json composites = Json::array();
  for (const auto& c : el.compat.composites)
    composites.push_back(Json{{"omega", render_u(p, c.omega)},
                              {"multiplicity", c.multiplicity},
                              {"modulus", render_u(p, c.modulus)}});
  doc["compat"] = Json{{"cp", render_u(p, el.compat.cp)}, {"omega", omega}, {"composite_divisors", composites}};

  Json branches = Json::array();
  for (const auto& o : el.outcomes) {
    branches.push_back(Json{{"modulus", render_u(p, o.divisor.modulus)},
                            {"e", o.e.to_string(p.system.vars.back())},
                            {"proper_divisor", render_u(p, o.proper_divisor)},
                            {"basis", display_list(p, o.basis)},
                            {"stats",
                             {{"iterations", o.stats.iterations},
                              {"spolys", o.stats.spolys},
                              {"special_spolys", o.stats.special_spolys},
                              {"reduction_steps", o.stats.reduction_steps},
                              {"e_refinements", o.stats.e_refinements}}}});
  }
  doc["branches"] = branches;

  const NewBasis& nb = el.basis;
  Json proper = Json::array();
  for (const auto& b : nb.proper) proper.push_back(branch_json(p, b));
  Json elements = Json::array();
  for (const auto& f : new_basis_elements(p, nb)) elements.push_back(render(f, p.system.vars));
  doc["new_basis"] = Json{{"trivial", nb.trivial},
                          {"compatible", nb.compatible ? branch_json(p, *nb.compatible) : Json(nullptr)},
                          {"proper", proper},
                          {"elements", elements}};

  Json factors = Json::array();
  factors.push_back(render_u(p, el.compat.cp));
  std::vector<UPoly> divs;
  for (const auto& b : nb.proper) {
    factors.push_back(render_u(p, b.proper_divisor));
    divs.push_back(b.proper_divisor);
  }
  UPoly product = nb.trivial ? UPoly(1) : reconstruct_eliminant(el.compat.cp, divs);
  doc["chi"] = upoly_json(p, nb.chi);
  doc["reconstruction"] =
      Json{{"factors", factors}, {"product", render_u(p, product)}, {"verified", product == nb.chi}};
  return doc;
}

Json membership_json(const Problem& p, const FieldPoly& f, const Membership& m) {
  Json ev = Json::array();
  for (const auto& e : m.evidence)
    ev.push_back(Json{{"kind", branch_kind_name(e.kind)},
                      {"modulus", render_u(p, e.modulus)},
                      {"remainder_zero", e.remainder.is_zero()},
                      {"remainder", render(to_field(e.remainder, p.flat), p.system.vars)},
                      {"multiplier", e.multiplier.to_string(p.system.vars.back())}});
  return Json{{"poly", render(f, p.system.vars)}, {"member", m.member}, {"branches", ev}};
}

Json oracle_json(const Problem& p, const std::vector<FieldPoly>& gb, const UPoly& chi) {
  Json basis = Json::array();
  for (const auto& g : gb) basis.push_back(render(integer_normalize(g), p.system.vars));
  return Json{{"input", input_json(p)}, {"basis", basis}, {"chi", upoly_json(p, chi)}};
}

}  // namespace zdgb
