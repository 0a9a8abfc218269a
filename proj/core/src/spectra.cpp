#include "mixcay/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixcay/atoms.hpp"
#include "mixcay/error.hpp"

namespace mixcay {
namespace {

constexpr Complex kI{0, 1};

void require_normal(const ConnectionSet& s) {
  if (!s.is_normal) {
    throw Error(ErrorCode::NonNormalSet, "connection set is not a union of conjugacy classes");
  }
}

}  // namespace

bool is_normal_set(const FiniteGroup& group, const ElementSet& set) {
  const auto& cd = group.conjugacy();
  for (Element s : set) {
    for (Element t : cd.classes[cd.class_of[s]]) {
      if (!set.contains(t)) return false;
    }
  }
  return true;
}

ConnectionSet connection_set(const FiniteGroup& group, const ElementSet& members) {
  if (members.contains(kIdentity)) {
    throw Error(ErrorCode::ContainsIdentity, "connection set contains the identity", {kIdentity});
  }
  for (Element s : members) {
    if (s >= group.order()) {
      throw Error(ErrorCode::UnknownElement, "element index " + std::to_string(s) + " out of range",
                  {s});
    }
  }
  ConnectionSet out;
  out.members = members;
  std::vector<Element> sym, skew;
  for (Element s : members) {
    (members.contains(group.inv(s)) ? sym : skew).push_back(s);
  }
  out.sym_part = ElementSet(std::move(sym));
  out.skew_part = ElementSet(std::move(skew));
  out.is_normal = is_normal_set(group, members);
  return out;
}

Eigen::MatrixXcd hermitian_adjacency(const FiniteGroup& group, const ConnectionSet& s) {
  const auto n = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (Element x = 0; x < group.order(); ++x) {
    for (Element u : s.sym_part) h(x, group.mul(u, x)) = 1.0;
    for (Element u : s.skew_part) {
      h(x, group.mul(u, x)) = kI;
      h(x, group.mul(group.inv(u), x)) = -kI;
    }
  }
  return h;
}

Eigen::MatrixXd zero_one_adjacency(const FiniteGroup& group, const ConnectionSet& s) {
  const auto n = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Element x = 0; x < group.order(); ++x) {
    for (Element u : s.members) a(x, group.mul(u, x)) = 1.0;
  }
  return a;
}

SpectrumMultiset color_spectrum(const CharacterTable& table, const std::vector<Complex>& alpha) {
  const auto& cd = table.classes();
  if (alpha.size() != cd.num_classes()) {
    throw Error(ErrorCode::NotClassFunction,
                "expected " + std::to_string(cd.num_classes()) + " class values, got " +
                    std::to_string(alpha.size()));
  }
  std::vector<SpectrumEntry> weighted;
  for (std::size_t j = 0; j < table.num_characters(); ++j) {
    Complex sum = 0;
    for (std::size_t c = 0; c < cd.num_classes(); ++c) {
      sum += alpha[c] * static_cast<double>(cd.class_size(c)) * table.value(j, c);
    }
    const int d = table.degree(j);
    weighted.push_back({sum / static_cast<double>(d), static_cast<std::size_t>(d * d)});
  }
  return SpectrumMultiset::from_weighted(weighted);
}

SpectrumMultiset color_spectrum_elementwise(const FiniteGroup& group, const CharacterTable& table,
                                            const std::vector<Complex>& alpha) {
  if (alpha.size() != group.order()) {
    throw Error(ErrorCode::NotClassFunction,
                "expected " + std::to_string(group.order()) + " element values, got " +
                    std::to_string(alpha.size()));
  }
  const auto& cd = table.classes();
  std::vector<Complex> per_class(cd.num_classes());
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    const Element rep = cd.representatives[c];
    per_class[c] = alpha[rep];
    for (Element g : cd.classes[c]) {
      if (std::abs(alpha[g] - alpha[rep]) > 1e-12) {
        throw Error(ErrorCode::NotClassFunction,
                    "values differ on conjugate elements " + group.element_name(rep) + " and " +
                        group.element_name(g),
                    {rep, g});
      }
    }
  }
  return color_spectrum(table, per_class);
}

Complex character_sum(const CharacterTable& table, const ElementSet& set, std::size_t j) {
  Complex sum = 0;
  for (Element s : set) sum += table.at(j, s);
  return sum / static_cast<double>(table.degree(j));
}

HSpectrum h_spectrum_normal(const FiniteGroup& group, const CharacterTable& table,
                            const ConnectionSet& s) {
  require_normal(s);
  HSpectrum out;
  std::vector<SpectrumEntry> weighted;
  for (std::size_t j = 0; j < table.num_characters(); ++j) {
    CharacterEigenvalue e;
    e.character = j;
    e.degree = table.degree(j);
    e.lambda = character_sum(table, s.sym_part, j).real();
    Complex skew = 0;
    for (Element u : s.skew_part) skew += kI * (table.at(j, u) - table.at(j, group.inv(u)));
    e.mu = skew.real() / e.degree;
    out.per_character.push_back(e);
    weighted.push_back({e.gamma(), static_cast<std::size_t>(e.degree * e.degree)});
  }
  out.spectrum = SpectrumMultiset::from_weighted(weighted);
  return out;
}

AdjacencySpectrum adjacency_spectrum_normal(const FiniteGroup& group, const CharacterTable& table,
                                            const ConnectionSet& s) {
  (void)group;
  require_normal(s);
  AdjacencySpectrum out;
  std::vector<SpectrumEntry> weighted;
  for (std::size_t j = 0; j < table.num_characters(); ++j) {
    const Complex v = character_sum(table, s.members, j);
    const int d = table.degree(j);
    out.per_character.push_back(v);
    weighted.push_back({v, static_cast<std::size_t>(d * d)});
  }
  out.spectrum = SpectrumMultiset::from_weighted(weighted);
  return out;
}

GaussianDecomposition gaussian_decomposition(const FiniteGroup& group, const CharacterTable& table,
                                             const ConnectionSet& s) {
  require_normal(s);
  GaussianDecomposition out;
  for (std::size_t j = 0; j < table.num_characters(); ++j) {
    const double d = table.degree(j);
    Complex f = character_sum(table, s.sym_part, j);
    Complex g = 0;
    for (Element u : s.skew_part) {
      f += (table.at(j, u) + table.at(j, group.inv(u))) / (2 * d);
      g += kI * (table.at(j, u) - table.at(j, group.inv(u))) / (2 * d);
    }
    GaussianTerm t{f.real(), g.real(), Complex(f.real(), -g.real())};
    const Complex direct = character_sum(table, s.members, j);
    out.max_identity_residual = std::max(out.max_identity_residual, std::abs(t.eigenvalue - direct));
    out.per_character.push_back(t);
  }
  if (out.max_identity_residual > 1e-8) {
    throw Error(ErrorCode::ValidationFailure,
                "f - i g differs from the adjacency eigenvalue by " +
                    std::to_string(out.max_identity_residual));
  }
  return out;
}

double c_value(const FiniteGroup& group, const CharacterTable& table, Element x, std::size_t j) {
  if (x == kIdentity) {
    throw Error(ErrorCode::IdentityElement, "C_x(j) is undefined for the identity", {x});
  }
  return character_sum(table, closure_sym(group, x).members, j).real();
}

double s_value(const FiniteGroup& group, const CharacterTable& table, Element y, std::size_t j) {
  const ClosureSet closure = closure_skew(group, y);
  Complex sum = 0;
  for (Element u : closure.members) sum += kI * (table.at(j, u) - table.at(j, group.inv(u)));
  return sum.real() / table.degree(j);
}

}  // namespace mixcay
