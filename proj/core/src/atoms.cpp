#include "mixcay/atoms.hpp"

#include <algorithm>

#include "mixcay/residue.hpp"

namespace mixcay {

namespace {

ElementSet powers(const FiniteGroup& group, Element x, const std::vector<std::int64_t>& exponents) {
  std::vector<Element> out;
  out.reserve(exponents.size());
  for (auto k : exponents) out.push_back(group.pow(x, k));
  return ElementSet(std::move(out));
}

void require_no_identity(const ElementSet& set) {
  if (set.contains(kIdentity)) {
    throw Error(ErrorCode::ContainsIdentity, "set contains the identity", {kIdentity});
  }
}

void require_gamma4(const FiniteGroup& group, Element x) {
  if (!in_gamma4(group, x)) {
    throw Error(ErrorCode::NotInGamma4,
                "element " + group.element_name(x) + " has order " +
                    std::to_string(group.element_order(x)) + ", not divisible by 4",
                {x});
  }
}

template <typename AtomFn>
std::vector<Atom> partition_into_atoms(const FiniteGroup& group, const std::vector<Element>& seeds,
                                       AtomFn make_atom) {
  std::vector<Atom> atoms;
  std::vector<char> covered(group.order(), 0);
  for (Element s : seeds) {
    if (covered[s]) continue;
    Atom atom = make_atom(s);
    for (Element e : atom.members) covered[e] = 1;
    atoms.push_back(std::move(atom));
  }
  return atoms;
}

ElementSet union_of(const std::vector<Atom>& atoms) {
  ElementSet out;
  for (const auto& a : atoms) out = out.united(a.members);
  return out;
}

}  // namespace

Atom sim_atom(const FiniteGroup& group, Element x) {
  if (x == kIdentity) throw Error(ErrorCode::IdentityElement, "[x] is undefined for the identity");
  const auto m = static_cast<std::int64_t>(group.element_order(x));
  return {AtomKind::Sim, x, powers(group, x, units(m))};
}

Atom approx_atom(const FiniteGroup& group, Element x) {
  require_gamma4(group, x);
  const auto m = static_cast<std::int64_t>(group.element_order(x));
  return {AtomKind::Approx, x, powers(group, x, units(m, ResidueFilter::OneMod4))};
}

bool sim_related(const FiniteGroup& group, Element x, Element y) {
  if (x == kIdentity || y == kIdentity) return x == y;
  return sim_atom(group, x).members.contains(y);
}

bool approx_related(const FiniteGroup& group, Element x, Element y) {
  if (!in_gamma4(group, x) || !in_gamma4(group, y)) return false;
  return approx_atom(group, x).members.contains(y);
}

std::vector<Atom> all_sim_atoms(const FiniteGroup& group) {
  std::vector<Element> seeds;
  for (Element g = 1; g < group.order(); ++g) seeds.push_back(g);
  return partition_into_atoms(group, seeds, [&](Element s) { return sim_atom(group, s); });
}

std::vector<Atom> all_approx_atoms(const FiniteGroup& group) {
  const auto g4 = gamma4(group);
  return partition_into_atoms(group, g4.elements(),
                              [&](Element s) { return approx_atom(group, s); });
}

std::string SetWitness::describe(const FiniteGroup& group) const {
  const std::string xs = group.element_name(x);
  switch (kind) {
    case WitnessKind::AtomNotContained:
      return "atom of " + xs + " is not contained: missing " + group.element_name(*y);
    case WitnessKind::NotSkewSymmetric:
      return xs + " and its inverse " + group.element_name(*y) + " are both present";
    case WitnessKind::OutsideGamma4:
      return xs + " has order " + std::to_string(group.element_order(x)) +
             ", not divisible by 4";
  }
  return {};
}

MembershipResult in_boolean_algebra(const FiniteGroup& group, const ElementSet& set) {
  require_no_identity(set);
  for (Element x : set) {
    for (Element y : sim_atom(group, x).members) {
      if (!set.contains(y)) return {false, SetWitness{WitnessKind::AtomNotContained, x, y}};
    }
  }
  return {};
}

MembershipResult in_skew_algebra(const FiniteGroup& group, const ElementSet& set) {
  require_no_identity(set);
  for (Element x : set) {
    if (set.contains(group.inv(x))) {
      return {false, SetWitness{WitnessKind::NotSkewSymmetric, x, group.inv(x)}};
    }
  }
  for (Element x : set) {
    if (!in_gamma4(group, x)) return {false, SetWitness{WitnessKind::OutsideGamma4, x, {}}};
  }
  for (Element x : set) {
    for (Element y : approx_atom(group, x).members) {
      if (!set.contains(y)) return {false, SetWitness{WitnessKind::AtomNotContained, x, y}};
    }
  }
  return {};
}

bool is_admissible(const FiniteGroup& group, Element y) {
  require_gamma4(group, y);
  const auto m = static_cast<std::int64_t>(group.element_order(y));
  const auto& cls = group.conjugacy().classes[group.class_of(y)];
  const auto threes = units(m, ResidueFilter::ThreeMod4);
  for (Element x : cls) {
    for (auto r : threes) {
      if (group.class_of(group.pow(x, r)) == group.class_of(y)) return false;
    }
  }
  return true;
}

ClosureSet closure_sym(const FiniteGroup& group, Element x) {
  if (x == kIdentity) throw Error(ErrorCode::IdentityElement, "S_x^1 needs x != 1");
  const auto& cls = group.conjugacy().classes[group.class_of(x)];
  ClosureSet out{ClosureKind::Sym1, x, {}, {}};
  out.atoms = partition_into_atoms(group, cls, [&](Element s) { return sim_atom(group, s); });
  out.members = union_of(out.atoms);
  return out;
}

ClosureSet closure_skew(const FiniteGroup& group, Element y) {
  if (!is_admissible(group, y)) {
    throw Error(ErrorCode::NotAdmissible, group.element_name(y) + " is not admissible", {y});
  }
  const auto& cls = group.conjugacy().classes[group.class_of(y)];
  ClosureSet out{ClosureKind::Skew4, y, {}, {}};
  out.atoms = partition_into_atoms(group, cls, [&](Element s) { return approx_atom(group, s); });
  out.members = union_of(out.atoms);
  return out;
}

ElementSet translate(const FiniteGroup& group, Element g, const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (Element s : set) out.push_back(group.mul(g, s));
  return ElementSet(std::move(out));
}

ElementSet inverse_set(const FiniteGroup& group, const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (Element s : set) out.push_back(group.inv(s));
  return ElementSet(std::move(out));
}

ElementSet sim_class_or_identity(const FiniteGroup& group, Element x) {
  if (x == kIdentity) return ElementSet{kIdentity};
  return sim_atom(group, x).members;
}

bool PowerShiftReport::all_hold() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const ShiftIdentity& s) { return s.holds; });
}

PowerShiftReport power_shift_identities(const FiniteGroup& group, Element x) {
  const std::size_t n = group.element_order(x);
  if (n % 4 != 0) {
    throw Error(ErrorCode::BadOrder,
                "order " + std::to_string(n) + " of " + group.element_name(x) +
                    " is not divisible by 4",
                {x});
  }
  PowerShiftReport report;
  report.x = x;
  std::size_t m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++report.two_exponent;
  }
  report.odd_part = m;
  const std::size_t t = report.two_exponent;
  const auto mi = static_cast<std::int64_t>(m);

  auto add = [&](std::string label, std::string statement, ElementSet lhs, ElementSet rhs) {
    const bool holds = lhs == rhs;
    report.identities.push_back(
        {std::move(label), std::move(statement), holds, std::move(lhs), std::move(rhs)});
  };

  const Element x2 = group.pow(x, 2);
  const ElementSet sim_x2 = sim_atom(group, x2).members;
  const Element xm = group.pow(x, mi);
  const Element x3m = group.pow(x, 3 * mi);

  add("i", "[x] = x^m[x^2] u x^3m[x^2]", sim_atom(group, x).members,
      translate(group, xm, sim_x2).united(translate(group, x3m, sim_x2)));

  if (t >= 3) {
    const ElementSet split = approx_atom(group, x2).members.united(
        approx_atom(group, group.inv(x2)).members);
    if (m % 4 == 1) {
      add("ii.a", "x^3m[[x^2]] u x^3m[[x^-2]] = x^3m[x^2]", translate(group, x3m, split),
          translate(group, x3m, sim_x2));
      add("ii.b", "[[x^-1]] = x^3m[x^2]", approx_atom(group, group.inv(x)).members,
          translate(group, x3m, sim_x2));
    } else {
      add("iii.a", "x^m[[x^2]] u x^m[[x^-2]] = x^m[x^2]", translate(group, xm, split),
          translate(group, xm, sim_x2));
      add("iii.b", "[[x]] = x^m[x^2]", approx_atom(group, x).members,
          translate(group, xm, sim_x2));
    }
  }
  if (t == 2) {
    const Element x4 = group.pow(x, 4);
    report.degenerate = x4 == kIdentity;
    const ElementSet lhs = translate(group, xm, sim_class_or_identity(group, x4));
    if (m % 4 == 1) {
      add("iv", "x^m[x^4] = [[x]]", lhs, approx_atom(group, x).members);
    } else {
      add("iv", "x^m[x^4] = [[x^-1]]", lhs, approx_atom(group, group.inv(x)).members);
    }
  }
  return report;
}

}  // namespace mixcay
