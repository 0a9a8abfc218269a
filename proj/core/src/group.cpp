#include "mixcay/group.hpp"

#include <algorithm>
#include <random>

#include "mixcay/permutation.hpp"

namespace mixcay {

namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string strip_carets(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '^') out.push_back(c);
  }
  return out;
}

ConjugacyData compute_conjugacy(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyData data;
  data.class_of.assign(n, n);
  for (Element e = 0; e < n; ++e) {
    if (data.class_of[e] != n) continue;
    const std::size_t c = data.classes.size();
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x) {
      const Element y = g.conjugate(e, x);
      if (data.class_of[y] == n) {
        data.class_of[y] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    data.representatives.push_back(members.front());
    data.centralizer_orders.push_back(n / members.size());
    data.classes.push_back(std::move(members));
  }
  return data;
}

}  // namespace

namespace detail {

FiniteGroup make_group(std::string name, std::size_t order, std::vector<Element> table,
                       std::vector<std::string> element_names) {
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(table);
  g.names_ = std::move(element_names);
  if (g.names_.size() != order) {
    g.names_.clear();
    for (std::size_t i = 0; i < order; ++i) g.names_.push_back(std::to_string(i));
  }
  g.inverse_.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      if (g.table_[a * order + b] == kIdentity) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  g.orders_.assign(order, 1);
  for (Element a = 0; a < order; ++a) {
    Element p = a;
    std::size_t k = 1;
    while (p != kIdentity) {
      p = g.mul(p, a);
      ++k;
    }
    g.orders_[a] = k;
  }
  g.conjugacy_ = compute_conjugacy(g);
  return g;
}

}  // namespace detail

Element FiniteGroup::pow(Element g, std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(orders_[g]);
  std::int64_t e = ((k % m) + m) % m;
  Element result = kIdentity;
  Element base = g;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<Element> FiniteGroup::find_element(std::string_view token) const {
  const std::string t = trim(token);
  if (t.empty()) return std::nullopt;
  if (t.front() == '#') {
    try {
      std::size_t pos = 0;
      const unsigned long idx = std::stoul(t.substr(1), &pos);
      if (pos + 1 == t.size() && idx < order_) return static_cast<Element>(idx);
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  const std::string key = strip_carets(t);
  for (Element e = 0; e < order_; ++e) {
    if (names_[e] == key || names_[e] == t) return e;
  }
  // Cycle strings may be written with different spacing or rotation.
  if (t.front() == '(' && names_.size() > 0 && names_[0].front() == '(') {
    try {
      const std::string canonical = to_cycle_string(parse_cycles(t));
      for (Element e = 0; e < order_; ++e) {
        if (names_[e] == canonical) return e;
      }
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

ElementSet FiniteGroup::parse_elements(std::string_view list) const {
  std::vector<Element> out;
  std::size_t start = 0;
  const std::string s(list);
  if (trim(s).empty()) return {};
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    const std::string token = trim(std::string_view(s).substr(start, comma - start));
    auto e = find_element(token);
    if (!e) {
      throw Error(ErrorCode::UnknownElement,
                  "unknown element token '" + token + "' for group " + name_);
    }
    out.push_back(*e);
    start = comma + 1;
  }
  return ElementSet(std::move(out));
}

FiniteGroup build_from_table(const std::vector<std::vector<Element>>& rows,
                             const GroupLimits& limits, std::string name) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty Cayley table");
  if (n > limits.max_order) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "table of order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits.max_order));
  }
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " has " +
                                            std::to_string(rows[a].size()) +
                                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) {
        throw Error(ErrorCode::NotAGroup,
                    "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range",
                    {static_cast<Element>(a), static_cast<Element>(b)});
      }
      table[a * n + b] = rows[a][b];
    }
  }
  for (Element g = 0; g < n; ++g) {
    if (table[g] != g || table[g * n] != g) {
      throw Error(ErrorCode::NoIdentity, "element 0 does not act as identity on element " +
                                             std::to_string(g),
                  {g});
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      const Element v = table[a * n + b];
      if (seen[v]) {
        throw Error(ErrorCode::NotAGroup,
                    "row " + std::to_string(a) + " repeats value " + std::to_string(v),
                    {a, b, v});
      }
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      const Element v = table[b * n + a];
      if (seen[v]) {
        throw Error(ErrorCode::NotAGroup,
                    "column " + std::to_string(a) + " repeats value " + std::to_string(v),
                    {b, a, v});
      }
      seen[v] = 1;
    }
  }
  auto check = [&](Element a, Element b, Element c) {
    if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) {
      throw Error(ErrorCode::NotAGroup,
                  "associativity fails on (" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(c) + ")",
                  {a, b, c});
    }
  };
  if (n <= limits.exhaustive_associativity_max) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(limits.spot_check_seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t k = 0; k < 10 * n; ++k) check(pick(rng), pick(rng), pick(rng));
  }
  return detail::make_group(std::move(name), n, std::move(table), {});
}

FiniteGroup read_cayley_table(std::istream& in, const GroupLimits& limits, std::string name) {
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw Error(ErrorCode::ParseError, "missing group order on line 1");
  if (n > limits.max_order) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_order));
  }
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      long long v = 0;
      if (!(in >> v)) {
        throw Error(ErrorCode::ParseError, "table truncated at row " + std::to_string(a) +
                                               ", column " + std::to_string(b));
      }
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::NotAGroup, "entry " + std::to_string(v) + " out of range");
      }
      rows[a][b] = static_cast<Element>(v);
    }
  }
  return build_from_table(rows, limits, std::move(name));
}

std::size_t element_order(const FiniteGroup& group, Element g) { return group.element_order(g); }

const ConjugacyData& conjugacy_classes(const FiniteGroup& group) { return group.conjugacy(); }

ElementSet gamma4(const FiniteGroup& group) {
  std::vector<Element> out;
  for (Element g = 0; g < group.order(); ++g) {
    if (in_gamma4(group, g)) out.push_back(g);
  }
  return ElementSet(std::move(out));
}

}  // namespace mixcay
