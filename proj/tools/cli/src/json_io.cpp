#include "mixcay_cli/json_io.hpp"

#include <cmath>

namespace mixcay::cli {
namespace {

// Keeps -0 and 1e-17 noise out of the emitted documents.
double clean(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return r == 0 ? 0.0 : r;
  return x;
}

const char* witness_kind(WitnessKind k) {
  switch (k) {
    case WitnessKind::AtomNotContained: return "atom_not_contained";
    case WitnessKind::NotSkewSymmetric: return "not_skew_symmetric";
    case WitnessKind::OutsideGamma4: return "outside_gamma4";
  }
  return "unknown";
}

}  // namespace

json complex_json(Complex z) { return {{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

json spectrum_json(const SpectrumMultiset& s) {
  json out = json::array();
  for (const auto& e : s.entries()) {
    json j = complex_json(e.value);
    j["mult"] = e.multiplicity;
    out.push_back(std::move(j));
  }
  return out;
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json element_list_json(const FiniteGroup& group, const ElementSet& set) {
  json out = json::array();
  for (Element e : set) out.push_back(group.element_name(e));
  return out;
}

json witness_json(const FiniteGroup& group, const std::optional<SetWitness>& w) {
  if (!w) return nullptr;
  json out = {{"kind", witness_kind(w->kind)},
              {"x", group.element_name(w->x)},
              {"text", w->describe(group)}};
  out["y"] = w->y ? json(group.element_name(*w->y)) : json(nullptr);
  return out;
}

json verdict_json(const FiniteGroup& group, const ConnectionSet& s, const IntegralityVerdict& v) {
  json out;
  out["group"] = group.name();
  out["set"] = element_list_json(group, s.members);
  out["sym_part"] = element_list_json(group, s.sym_part);
  out["skew_part"] = element_list_json(group, s.skew_part);
  out["h_integral"] = v.decision;
  out["gaussian_integral"] = v.decision;
  out["sym_in_B"] = v.sym_in_B.value_or(true);
  out["skew_in_D"] = v.skew_in_D.value_or(true);
  if (v.sym_witness || v.skew_witness) {
    out["witness"] = {{"sym", witness_json(group, v.sym_witness)},
                      {"skew", witness_json(group, v.skew_witness)}};
  } else {
    out["witness"] = nullptr;
  }
  out["trace"] = v.trace;
  if (v.cross_check) {
    const auto& c = *v.cross_check;
    out["oracle"] = {{"max_int_distance", c.max_int_distance},
                     {"max_gaussian_distance", c.max_gaussian_distance},
                     {"h_integral", c.h_integral},
                     {"gaussian_integral", c.gaussian_integral},
                     {"agrees", c.agrees}};
    if (c.max_fg_distance) out["oracle"]["max_fg_distance"] = *c.max_fg_distance;
  } else {
    out["oracle"] = nullptr;
  }
  return out;
}

json chartable_json(const FiniteGroup& group, const CharacterTable& table) {
  const auto& cd = table.classes();
  json classes = json::array();
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    const Element rep = cd.representatives[c];
    classes.push_back({{"rep", rep},
                       {"name", group.element_name(rep)},
                       {"size", cd.class_size(c)},
                       {"order", group.element_order(rep)},
                       {"centralizer_order", cd.centralizer_orders[c]}});
  }
  json values = json::array();
  for (std::size_t j = 0; j < table.num_characters(); ++j) {
    json row = json::array();
    for (std::size_t c = 0; c < cd.num_classes(); ++c) row.push_back(complex_json(table.value(j, c)));
    values.push_back(std::move(row));
  }
  return {{"group", group.name()},
          {"order", group.order()},
          {"degrees", table.degrees()},
          {"classes", std::move(classes)},
          {"values", std::move(values)}};
}

json group_info_json(const FiniteGroup& group) {
  const auto& cd = group.conjugacy();
  json classes = json::array();
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    classes.push_back({{"representative", group.element_name(cd.representatives[c])},
                       {"members", element_list_json(group, ElementSet(cd.classes[c]))},
                       {"centralizer_order", cd.centralizer_orders[c]}});
  }
  json elements = json::array();
  for (Element g = 0; g < group.order(); ++g) {
    elements.push_back({{"index", g},
                        {"name", group.element_name(g)},
                        {"order", group.element_order(g)}});
  }
  return {{"group", group.name()},
          {"order", group.order()},
          {"abelian", group.is_abelian()},
          {"classes", std::move(classes)},
          {"elements", std::move(elements)},
          {"gamma4", element_list_json(group, gamma4(group))}};
}

json atoms_json(const FiniteGroup& group) {
  json sim = json::array();
  for (const auto& a : all_sim_atoms(group)) sim.push_back(element_list_json(group, a.members));
  json approx = json::array();
  for (const auto& a : all_approx_atoms(group)) approx.push_back(element_list_json(group, a.members));
  json admissible = json::array();
  for (Element y : gamma4(group)) {
    if (is_admissible(group, y)) admissible.push_back(group.element_name(y));
  }
  return {{"group", group.name()},
          {"sim_atoms", std::move(sim)},
          {"approx_atoms", std::move(approx)},
          {"admissible", std::move(admissible)}};
}

json census_json(const CensusReport& report, bool include_timing) {
  json dis = json::array();
  for (const auto& d : report.disagreements) dis.push_back({{"bitmask", d.bitmask}, {"what", d.what}});
  json out = {{"group", report.group},
              {"order", report.order},
              {"classes", report.classes},
              {"examined", report.examined},
              {"counts",
               {{"h_integral", report.h_integral},
                {"gaussian_integral", report.gaussian_integral},
                {"neither", report.neither}}},
              {"disagreements", std::move(dis)}};
  if (include_timing) out["timing"] = {{"seconds", report.seconds}};
  return out;
}

}  // namespace mixcay::cli
