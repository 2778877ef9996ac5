#include "dblpt/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "dblpt/classifier.hpp"
#include "dblpt/dpoint.hpp"
#include "dblpt/errors.hpp"
#include "dblpt/expr.hpp"
#include "dblpt/manifolds.hpp"
#include "dblpt/mo.hpp"
#include "dblpt/poly.hpp"
#include "dblpt/qmo.hpp"
#include "dblpt/steenrod.hpp"

namespace dblpt {

namespace {

using Json = nlohmann::ordered_json;

/// What a subcommand produced: a text rendering, the JSON result payload and
/// the citations behind it.
struct Outcome {
  std::string text;
  Json result;
  Json citations = Json::array();
};

Json class_list(const std::vector<QClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(render(c));
  return out;
}

std::string lines(const std::vector<QClass>& classes) {
  if (classes.empty()) return "0";
  std::string out;
  for (const auto& c : classes) {
    if (!out.empty()) out += "\n";
    out += render(c);
  }
  return out;
}

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("--k must be at least 1");
}

Outcome do_classify(int k, const std::string& manifold) {
  require_k(k);
  const ClassificationReport rep = classify(k);
  Outcome o;
  Json r;
  r["k"] = rep.k;
  r["residue"] = rep.residue;
  r["alpha_k2"] = rep.alpha_k2;
  r["candidate_basis"] = class_list(rep.candidate_basis);
  r["lemma55_excluded"] = rep.lemma55_excluded ? Json(render(*rep.lemma55_excluded)) : Json(nullptr);
  Json xi = Json::array();
  for (const auto& m : rep.xi_images) xi.push_back(render(m));
  r["xi_images"] = xi;
  r["constraints_allow_odd"] = rep.constraints_allow_odd;
  r["determined_by_bordism"] = rep.determined_by_bordism;
  r["odd_achievable"] = rep.odd_achievable;
  r["forced_parity"] = to_string(rep.forced_parity);
  r["criterion"] = rep.criterion ? Json(*rep.criterion) : Json(nullptr);
  r["existence_facts_used"] = rep.existence_facts_used;
  r["higher_squares_shrink"] = rep.higher_squares_shrink;
  r["matches_closed_form"] = rep.matches_closed_form;
  r["derivation"] = rep.derivation;

  std::ostringstream text;
  text << "k = " << k << "  (k mod 4 = " << rep.residue << ", alpha(k+2) = " << rep.alpha_k2 << ")\n";
  text << "candidates:\n";
  for (std::size_t j = 0; j < rep.candidate_basis.size(); ++j)
    text << "  " << render(rep.candidate_basis[j]) << "  ->  " << render(rep.xi_images[j]) << "\n";
  if (rep.lemma55_excluded) text << "excluded: " << render(*rep.lemma55_excluded) << "\n";
  text << "odd achievable: " << (rep.odd_achievable ? "true" : "false") << "\n";
  text << "parity: " << to_string(rep.forced_parity);
  if (rep.criterion) text << "  (odd iff " << *rep.criterion << " = 1)";
  text << "\n";
  if (rep.higher_squares_shrink) text << "note: Sq^3_* and Sq^4_* shrink the candidates further\n";

  for (const auto& id : rep.existence_facts_used) {
    const auto& f = existence_fact(id);
    o.citations.push_back({{"id", f.id}, {"statement", f.statement}, {"citation", f.citation}});
    text << "uses " << f.id << ": " << f.citation << "\n";
  }

  if (!manifold.empty()) {
    const HurewiczProfile p = hurewicz_profile(k, parse_manifold(manifold));
    r["hurewicz"] = {{"manifold", p.manifold},
                     {"sw_number", {{"label", p.sw_label}, {"value", p.sw_value}}},
                     {"correction", render(p.correction)},
                     {"parity", p.parity ? Json(to_string(*p.parity)) : Json("set by the immersion")},
                     {"formula", p.formula},
                     {"annotations", p.annotations}};
    text << p.manifold << ": " << p.sw_label << " = " << (p.sw_value ? 1 : 0) << "\n" << p.formula << "\n";
    for (const auto& a : p.annotations) text << "  " << a << "\n";
  }
  o.result = std::move(r);
  o.text = text.str();
  if (!o.text.empty() && o.text.back() == '\n') o.text.pop_back();
  return o;
}

Outcome do_primitives(int k, int dim) {
  require_k(k);
  if (dim < 1) throw std::invalid_argument("--dim must be at least 1");
  const auto basis = primitive_submodule(k, dim);
  return {lines(basis), {{"dimension", basis.size()}, {"basis", class_list(basis)}}};
}

Outcome do_basis(int k, int dim, int height) {
  require_k(k);
  if (dim < 1) throw std::invalid_argument("--dim must be at least 1");
  std::vector<QClass> out;
  for (const auto& m : qmo_basis(k, dim))
    if (height == 0 || m.height() == height) out.emplace_back(m);
  return {lines(out), {{"dimension", out.size()}, {"basis", class_list(out)}}};
}

Outcome do_coproduct(int k, const std::string& expr, bool reduced) {
  require_k(k);
  const std::string s = render(q_coproduct(parse_class(expr, k), reduced));
  return {s, s};
}

Outcome do_sqdual(int i, int k, const std::string& expr) {
  require_k(k);
  if (i < 0) throw std::invalid_argument("--i must be non-negative");
  const std::string s = render(nishida(i, parse_class(expr, k)));
  return {s, s};
}

Outcome do_xi(int k, const std::string& expr) {
  require_k(k);
  const MOClass image = xi_push(parse_class(expr, k), k);
  const std::string s = render(image);
  return {s, {{"image", s}, {"parity", image.contains(odd_marker(k)) ? "odd" : "even"}}};
}

Outcome do_adem(const std::string& expr) {
  const std::string s = render(adem_normalize(parse_steenrod(expr)));
  return {s, s};
}

Outcome do_sqact(const std::string& a, const std::string& on, int vars) {
  if (vars < 1) throw std::invalid_argument("--vars must be at least 1");
  const WPoly w = parse_wpoly(on);
  for (const auto& m : w)
    if (static_cast<int>(m.size()) > vars)
      throw std::invalid_argument("w" + std::to_string(m.size()) + " vanishes in " + std::to_string(vars) +
                                  " variables; raise --vars");
  const std::string s = render_w(to_w_basis(act(parse_steenrod(a), from_w(w, vars))));
  return {s, s};
}

Outcome do_swnumber(const std::string& manifold, const std::string& number) {
  const ManifoldSpec m = parse_manifold(manifold);
  const bool value = sw_number(m, parse_sw_indices(number));
  return {value ? "1" : "0",
          {{"manifold", m.render()},
           {"normal_class", m.ring().render(total_normal_sw(m))},
           {"value", value ? 1 : 0}}};
}

Outcome do_lemma55(int r) {
  if (r < 1) throw std::invalid_argument("--r must be at least 1");
  const Lemma55Report rep = lemma55_check(r);
  std::ostringstream text;
  Json steps = Json::array();
  text << "k = " << rep.k << "\n";
  text << "Sq^" << 4 * r + 2 << " = Sq^2 Sq^" << 4 * r << " + Sq^1 Sq^" << 4 * r
       << " Sq^1: " << (rep.adem_identity ? "holds" : "FAILS") << "\n";
  for (const auto& s : rep.steps) {
    text << s.label << " = " << render(s.value) << "  [" << (s.holds ? "ok" : "MISMATCH, expected " + s.expected)
         << "]\n";
    steps.push_back({{"label", s.label}, {"value", render(s.value)}, {"expected", s.expected}, {"holds", s.holds}});
  }
  text << "Sq^" << rep.k + 3 << " susp^2(w" << rep.k << ") = " << render(rep.final_value);
  return {text.str(),
          {{"k", rep.k},
           {"adem_identity", rep.adem_identity},
           {"steps", steps},
           {"final_value", render(rep.final_value)},
           {"final_is_zero", rep.final_is_zero}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mod 2 homology engine for double point surfaces of immersions", "dblpt"};
  app.require_subcommand(1);

  bool json = false;
  int k = 0, dim = 0, height = 0, i = 0, vars = 0, r = 0;
  bool reduced = false;
  std::string expr, a, on, manifold, number;
  Json inputs = Json::object();
  std::function<Outcome()> action;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit {command, inputs, result, citations}"); };

  auto* classify_cmd = app.add_subcommand("classify", "Parity of the double point surface for immersions M^{k+2} -> R^{2k+2}");
  classify_cmd->add_option("--k", k, "Codimension k")->required();
  classify_cmd->add_option("--manifold", manifold, "Also resolve h(alpha) for RP(n)xRP(m)..., Dold(r=R) or Sphere(n)");
  json_flag(classify_cmd);
  classify_cmd->callback([&] {
    inputs = {{"k", k}};
    if (!manifold.empty()) inputs["manifold"] = manifold;
    action = [&] { return do_classify(k, manifold); };
  });

  auto* prim_cmd = app.add_subcommand("primitives", "Basis of the primitives of H_N QMO(k)");
  prim_cmd->add_option("--k", k)->required();
  prim_cmd->add_option("--dim", dim, "Dimension N (default 2k+2)");
  json_flag(prim_cmd);
  prim_cmd->callback([&] {
    if (dim == 0) dim = 2 * k + 2;
    inputs = {{"k", k}, {"dim", dim}};
    action = [&] { return do_primitives(k, dim); };
  });

  auto* coprod_cmd = app.add_subcommand("coproduct", "Coproduct of a class of H_*QMO(k)");
  coprod_cmd->add_option("--k", k)->required();
  coprod_cmd->add_option("--expr", expr)->required();
  coprod_cmd->add_flag("--reduced", reduced, "Drop the terms with a unit side");
  json_flag(coprod_cmd);
  coprod_cmd->callback([&] {
    inputs = {{"k", k}, {"expr", expr}, {"reduced", reduced}};
    action = [&] { return do_coproduct(k, expr, reduced); };
  });

  auto* sqdual_cmd = app.add_subcommand("sqdual", "Dual Steenrod square Sq^i_* on a class of H_*QMO(k)");
  sqdual_cmd->add_option("--i", i)->required();
  sqdual_cmd->add_option("--k", k)->required();
  sqdual_cmd->add_option("--expr", expr)->required();
  json_flag(sqdual_cmd);
  sqdual_cmd->callback([&] {
    inputs = {{"i", i}, {"k", k}, {"expr", expr}};
    action = [&] { return do_sqdual(i, k, expr); };
  });

  auto* xi_cmd = app.add_subcommand("xi", "Pushforward of a height-2 class of dimension 2k+2 into H_*MO(2k)");
  xi_cmd->add_option("--k", k)->required();
  xi_cmd->add_option("--expr", expr)->required();
  json_flag(xi_cmd);
  xi_cmd->callback([&] {
    inputs = {{"k", k}, {"expr", expr}};
    action = [&] { return do_xi(k, expr); };
  });

  auto* adem_cmd = app.add_subcommand("adem", "Admissible form of a Steenrod algebra element");
  adem_cmd->add_option("--expr", expr)->required();
  json_flag(adem_cmd);
  adem_cmd->callback([&] {
    inputs = {{"expr", expr}};
    action = [&] { return do_adem(expr); };
  });

  auto* sqact_cmd = app.add_subcommand("sqact", "Steenrod action on a polynomial in w_1, w_2, ...");
  sqact_cmd->add_option("--a", a, "Steenrod element, e.g. 'Sq^2 Sq^1'")->required();
  sqact_cmd->add_option("--on", on, "w-polynomial, e.g. 'w1^2*w3'")->required();
  sqact_cmd->add_option("--vars", vars, "Number of splitting variables")->required();
  json_flag(sqact_cmd);
  sqact_cmd->callback([&] {
    inputs = {{"a", a}, {"on", on}, {"vars", vars}};
    action = [&] { return do_sqact(a, on, vars); };
  });

  auto* sw_cmd = app.add_subcommand("swnumber", "Normal Stiefel-Whitney number of a manifold");
  sw_cmd->add_option("--manifold", manifold, "RP(n)xRP(m)..., Dold(r=R) or Sphere(n)")->required();
  sw_cmd->add_option("--number", number, "Monomial in the normal classes, e.g. 'w2*w7'")->required();
  json_flag(sw_cmd);
  sw_cmd->callback([&] {
    inputs = {{"manifold", manifold}, {"number", number}};
    action = [&] { return do_swnumber(manifold, number); };
  });

  auto* l55_cmd = app.add_subcommand("lemma55", "Vanishing chain for Sq^{k+3} on susp^2(w_k), k = 4r - 1");
  l55_cmd->add_option("--r", r)->required();
  json_flag(l55_cmd);
  l55_cmd->callback([&] {
    inputs = {{"r", r}};
    action = [&] { return do_lemma55(r); };
  });

  auto* basis_cmd = app.add_subcommand("basis", "Monomial basis of H_N QMO(k)");
  basis_cmd->add_option("--k", k)->required();
  basis_cmd->add_option("--dim", dim)->required();
  basis_cmd->add_option("--height", height, "Keep only monomials of this height");
  json_flag(basis_cmd);
  basis_cmd->callback([&] {
    inputs = {{"k", k}, {"dim", dim}};
    if (height != 0) inputs["height"] = height;
    action = [&] { return do_basis(k, dim, height); };
  });

  std::vector<const char*> argv{"dblpt"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Outcome o = action();
    if (json) {
      Json doc;
      doc["command"] = app.get_subcommands().front()->get_name();
      doc["inputs"] = inputs;
      doc["result"] = o.result;
      doc["citations"] = o.citations;
      out << doc.dump(2) << "\n";
    } else {
      out << o.text << "\n";
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dblpt
