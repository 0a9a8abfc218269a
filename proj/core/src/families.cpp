#include "mixcay/families.hpp"

#include <fstream>
#include <vector>

#include "mixcay/permutation.hpp"

namespace mixcay {

namespace {

void check_cap(std::size_t order, const GroupLimits& limits) {
  if (order > limits.max_order) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(limits.max_order));
  }
}

std::string power_name(const char* base, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return std::string(base) + std::to_string(e);
}

// Names for a^i t^j with t a second generator; identity is "1".
std::vector<std::string> coset_names(std::size_t a_order, const char* t_name) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < a_order; ++i) {
      std::string s = power_name("a", i) + (j ? t_name : "");
      names.push_back(s.empty() ? "1" : s);
    }
  }
  return names;
}

std::size_t parse_size(std::string_view text, std::string_view descriptor) {
  if (text.empty()) {
    throw Error(ErrorCode::UnknownFamily, "missing size in '" + std::string(descriptor) + "'");
  }
  std::size_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::UnknownFamily, "bad size '" + std::string(text) + "' in '" +
                                                std::string(descriptor) + "'");
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > (1u << 20)) break;
  }
  return v;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::UnknownFamily, "cyclic group needs n >= 1");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
  return detail::make_group("cyclic:" + std::to_string(n), n, std::move(table), std::move(names));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::UnknownFamily, "dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  // (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l), since b a = a^-1 b.
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, j = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, l = y / n;
      const std::size_t e = j ? (i + n - k) % n : (i + k) % n;
      table[x * order + y] = static_cast<Element>(e + n * ((j + l) % 2));
    }
  }
  return detail::make_group("dihedral:" + std::to_string(n), order, std::move(table),
                            coset_names(n, "b"));
}

FiniteGroup dicyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::UnknownFamily, "dicyclic group needs n >= 1");
  const std::size_t m = 2 * n;
  const std::size_t order = 4 * n;
  // b a = a^-1 b and b^2 = a^n.
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % m, j = x / m;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % m, l = y / m;
      std::size_t e = j ? (i + m - k) % m : (i + k) % m;
      std::size_t t = j + l;
      if (t == 2) {
        e = (e + n) % m;
        t = 0;
      }
      table[x * order + y] = static_cast<Element>(e + m * t);
    }
  }
  return detail::make_group("dicyclic:" + std::to_string(n), order, std::move(table),
                            coset_names(m, "b"));
}

FiniteGroup modular16_group() {
  const std::size_t order = 16;
  // x a^k = a^(5k) x, so (a^i x^j)(a^k x^l) = a^(i + 5^j k) x^(j+l).
  std::vector<Element> table(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    const std::size_t i = u % 8, j = u / 8;
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t k = v % 8, l = v / 8;
      const std::size_t e = (i + (j ? 5 * k : k)) % 8;
      table[u * order + v] = static_cast<Element>(e + 8 * ((j + l) % 2));
    }
  }
  return detail::make_group("modular:16", order, std::move(table), coset_names(8, "x"));
}

FiniteGroup symmetric_group(std::size_t k, const GroupLimits& limits) {
  if (k == 0) throw Error(ErrorCode::UnknownFamily, "symmetric group needs k >= 1");
  std::vector<Permutation> gens;
  if (k >= 2) gens.push_back(parse_cycles("(1 2)", k));
  if (k >= 3) {
    std::vector<std::uint32_t> images(k);
    for (std::size_t p = 0; p < k; ++p) images[p] = static_cast<std::uint32_t>((p + 1) % k);
    gens.emplace_back(std::move(images));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(1));
  return build_from_permutations(gens, limits, "sym:" + std::to_string(k));
}

FiniteGroup alternating_group(std::size_t k, const GroupLimits& limits) {
  if (k == 0) throw Error(ErrorCode::UnknownFamily, "alternating group needs k >= 1");
  // A_k is generated by the 3-cycles (1 2 i), i = 3..k.
  std::vector<Permutation> gens;
  for (std::size_t i = 3; i <= k; ++i) {
    gens.push_back(parse_cycles("(1 2 " + std::to_string(i) + ")", k));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(k));
  return build_from_permutations(gens, limits, "alt:" + std::to_string(k));
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           const GroupLimits& limits) {
  const std::size_t nl = left.order(), nr = right.order();
  const std::size_t order = nl * nr;
  check_cap(order, limits);
  std::vector<Element> table(order * order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      const Element l = left.mul(static_cast<Element>(a / nr), static_cast<Element>(b / nr));
      const Element r = right.mul(static_cast<Element>(a % nr), static_cast<Element>(b % nr));
      table[a * order + b] = static_cast<Element>(l * nr + r);
    }
  }
  std::vector<std::string> names;
  for (Element a = 0; a < order; ++a) {
    names.push_back(left.element_name(static_cast<Element>(a / nr)) + "." +
                    right.element_name(static_cast<Element>(a % nr)));
  }
  return detail::make_group("product:" + left.name() + "," + right.name(), order,
                            std::move(table), std::move(names));
}

FiniteGroup build_family(std::string_view descriptor, const GroupLimits& limits) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::UnknownFamily, "descriptor '" + std::string(descriptor) +
                                              "' has no ':'");
  }
  const std::string_view family = descriptor.substr(0, colon);
  const std::string_view arg = descriptor.substr(colon + 1);

  if (family == "product") {
    // Split at the first comma whose halves both parse.
    for (std::size_t pos = arg.find(','); pos != std::string_view::npos;
         pos = arg.find(',', pos + 1)) {
      std::optional<FiniteGroup> left;
      try {
        left = build_family(arg.substr(0, pos), limits);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::OrderLimitExceeded) throw;
        continue;
      }
      std::optional<FiniteGroup> right;
      try {
        right = build_family(arg.substr(pos + 1), limits);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::OrderLimitExceeded) throw;
        continue;
      }
      return direct_product(*left, *right, limits);
    }
    throw Error(ErrorCode::UnknownFamily, "cannot split product '" + std::string(arg) + "'");
  }
  if (family == "perm") {
    const auto gens = parse_generators(arg);
    return build_from_permutations(gens, limits, std::string(descriptor));
  }
  if (family == "table") {
    std::ifstream in{std::string(arg)};
    if (!in) throw Error(ErrorCode::ParseError, "cannot open table file '" + std::string(arg) + "'");
    return read_cayley_table(in, limits, std::string(descriptor));
  }

  const std::size_t n = parse_size(arg, descriptor);
  if (family == "cyclic") {
    check_cap(n, limits);
    return cyclic_group(n);
  }
  if (family == "dihedral") {
    check_cap(2 * n, limits);
    return dihedral_group(n);
  }
  if (family == "dicyclic") {
    check_cap(4 * n, limits);
    return dicyclic_group(n);
  }
  if (family == "modular") {
    if (n != 16) throw Error(ErrorCode::UnknownFamily, "only modular:16 is available");
    return modular16_group();
  }
  if (family == "sym") {
    if (n > 6) throw Error(ErrorCode::OrderLimitExceeded, "sym:k supports k <= 6");
    return symmetric_group(n, limits);
  }
  if (family == "alt") {
    if (n > 6) throw Error(ErrorCode::OrderLimitExceeded, "alt:k supports k <= 6");
    return alternating_group(n, limits);
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(family) + "'");
}

}  // namespace mixcay
