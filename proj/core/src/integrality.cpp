#include "mixcay/integrality.hpp"

#include <algorithm>
#include <string>

#include "mixcay/eigen_oracle.hpp"
#include "mixcay/error.hpp"

namespace mixcay {
namespace {

void require_normal(const ConnectionSet& s) {
  if (!s.is_normal) {
    throw Error(ErrorCode::NonNormalSet, "connection set is not a union of conjugacy classes");
  }
}

std::string line(const char* label, bool ok, const std::optional<SetWitness>& w,
                 const FiniteGroup& group) {
  std::string out = std::string(label) + (ok ? ": yes" : ": no");
  if (w) out += " (" + w->describe(group) + ")";
  return out;
}

void apply_sym(IntegralityVerdict& v, const FiniteGroup& group, const ElementSet& part) {
  auto r = in_boolean_algebra(group, part);
  v.sym_in_B = r.member;
  v.sym_witness = r.witness;
  v.trace.push_back(line("S \\ S-bar in B", r.member, r.witness, group));
}

void apply_skew(IntegralityVerdict& v, const FiniteGroup& group, const ElementSet& part) {
  auto r = in_skew_algebra(group, part);
  v.skew_in_D = r.member;
  v.skew_witness = r.witness;
  v.trace.push_back(line("S-bar in D", r.member, r.witness, group));
}

}  // namespace

IntegralityVerdict decide_integral_simple(const FiniteGroup& group, const ConnectionSet& s) {
  require_normal(s);
  if (!s.is_symmetric()) {
    const Element u = *s.skew_part.begin();
    throw Error(ErrorCode::NotSymmetric,
                group.element_name(u) + " is in S but its inverse is not", {u});
  }
  IntegralityVerdict v;
  apply_sym(v, group, s.sym_part);
  v.decision = *v.sym_in_B;
  return v;
}

IntegralityVerdict decide_h_integral_oriented(const FiniteGroup& group, const ConnectionSet& s) {
  require_normal(s);
  if (!s.is_skew_symmetric()) {
    const Element u = *s.sym_part.begin();
    throw Error(ErrorCode::NotSkewSymmetric,
                group.element_name(u) + " and its inverse are both in S", {u, group.inv(u)});
  }
  IntegralityVerdict v;
  apply_skew(v, group, s.skew_part);
  v.decision = *v.skew_in_D;
  return v;
}

IntegralityVerdict decide_h_integral(const FiniteGroup& group, const ConnectionSet& s) {
  require_normal(s);
  IntegralityVerdict v;
  apply_sym(v, group, s.sym_part);
  apply_skew(v, group, s.skew_part);
  v.decision = *v.sym_in_B && *v.skew_in_D;
  return v;
}

IntegralityVerdict decide_gaussian_integral(const FiniteGroup& group, const ConnectionSet& s) {
  return decide_h_integral(group, s);
}

void attach_cross_check(IntegralityVerdict& verdict, const FiniteGroup& group,
                        const CharacterTable& table, const ConnectionSet& s, double tolerance) {
  OracleCheck check;
  const auto h = eig_hermitian_oracle(hermitian_adjacency(group, s));
  const auto a = eig_general_oracle(zero_one_adjacency(group, s).cast<Complex>());
  check.max_int_distance = h.max_distance_to_integer();
  check.max_gaussian_distance = a.max_distance_to_gaussian_integer();
  check.h_integral = check.max_int_distance <= tolerance;
  check.gaussian_integral = check.max_gaussian_distance <= tolerance;
  check.agrees = check.h_integral == verdict.decision && check.gaussian_integral == verdict.decision;
  if (s.is_normal) {
    double worst = 0;
    for (const auto& t : gaussian_decomposition(group, table, s).per_character) {
      worst = std::max({worst, distance_to_integer(t.f), distance_to_integer(t.g)});
    }
    check.max_fg_distance = worst;
    check.agrees = check.agrees && ((worst <= tolerance) == verdict.decision);
  }
  verdict.cross_check = check;
}

CharacterConditionReport check_character_integrality_conditions(const FiniteGroup& group,
                                                                const CharacterTable& table,
                                                                const CoefficientVector& c,
                                                                double tolerance) {
  if (c.size() != group.order()) {
    throw Error(ErrorCode::ValidationFailure,
                "coefficient vector has " + std::to_string(c.size()) + " entries, expected " +
                    std::to_string(group.order()));
  }
  const auto& cd = group.conjugacy();
  std::vector<std::int64_t> class_sum(cd.num_classes(), 0);
  for (Element g = 0; g < group.order(); ++g) class_sum[cd.class_of[g]] += c[g];
  auto sum_of = [&](Element g) { return class_sum[cd.class_of[g]]; };

  CharacterConditionReport r;
  for (Element g = 0; g < group.order(); ++g) {
    if (r.cond_ii && sum_of(g) != -sum_of(group.inv(g))) {
      r.cond_ii = false;
      r.witness_ii = g;
    }
    if (!in_gamma4(group, g)) {
      if (r.cond_iii && sum_of(g) != 0) {
        r.cond_iii = false;
        r.witness_iii = g;
      }
      continue;
    }
    if (!r.cond_i) continue;
    for (Element h : approx_atom(group, g).members) {
      if (sum_of(g) != sum_of(h)) {
        r.cond_i = false;
        r.witness_i = std::make_pair(g, h);
        break;
      }
    }
  }

  for (std::size_t j = 0; j < table.num_characters(); ++j) {
    Complex value = 0;
    for (std::size_t k = 0; k < cd.num_classes(); ++k) {
      value += Complex(0, static_cast<double>(class_sum[k])) * table.value(j, k);
    }
    const double d = distance_to_integer(value);
    r.values.push_back(value);
    r.distances.push_back(d);
    r.all_integral = r.all_integral && d <= tolerance;
  }
  return r;
}

}  // namespace mixcay
