#include "mixcay/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace mixcay {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorCode::ParseError, "image list is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::padded(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  auto images = images_;
  for (std::size_t p = images_.size(); p < degree; ++p) images.push_back(static_cast<std::uint32_t>(p));
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  const std::size_t k = std::max(degree(), next.degree());
  std::vector<std::uint32_t> images(k);
  for (std::uint32_t p = 0; p < k; ++p) images[p] = next((*this)(p));
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::uint32_t max_point = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorCode::ParseError, "expected '(' in cycle string '" + std::string(text) + "'");
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) {
        throw Error(ErrorCode::ParseError, "unterminated cycle in '" + std::string(text) + "'");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorCode::ParseError, "bad character '" + std::string(1, text[i]) +
                                               "' in cycle string");
      }
      std::uint32_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint32_t>(text[i] - '0');
        ++i;
      }
      if (v == 0) throw Error(ErrorCode::ParseError, "points are numbered from 1");
      cycle.push_back(v - 1);
      max_point = std::max(max_point, v);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  const std::size_t k = std::max<std::size_t>(degree, max_point);
  std::vector<std::uint32_t> images(k);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<char> moved(k, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const auto from = cycle[j];
      if (moved[from]) {
        throw Error(ErrorCode::ParseError, "point " + std::to_string(from + 1) +
                                               " appears in more than one cycle");
      }
      moved[from] = 1;
      images[from] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> parse_generators(std::string_view text) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start < text.size()) {
    // Split at commas that sit between cycles, i.e. outside parentheses.
    std::size_t depth = 0;
    std::size_t end = start;
    for (; end < text.size(); ++end) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')' && depth > 0) --depth;
      if (text[end] == ',' && depth == 0) break;
    }
    gens.push_back(parse_cycles(text.substr(start, end - start)));
    start = end + 1;
  }
  return gens;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    out += '(';
    std::uint32_t q = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(q + 1);
      done[q] = 1;
      q = p(q);
      first = false;
    } while (q != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FiniteGroup build_from_permutations(std::span<const Permutation> generators,
                                    const GroupLimits& limits, std::string name) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(g.padded(degree));

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::map<std::vector<std::uint32_t>, Element> index{{elements[0].images(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      Permutation p = elements[head].then(s);
      if (index.count(p.images())) continue;
      if (elements.size() >= limits.max_order) {
        throw Error(ErrorCode::OrderLimitExceeded,
                    "permutation closure exceeds cap " + std::to_string(limits.max_order));
      }
      index.emplace(p.images(), static_cast<Element>(elements.size()));
      elements.push_back(std::move(p));
    }
  }

  const std::size_t n = elements.size();
  // Right multiplication by a generator is a lookup; every element is a word
  // in the generators, so g*h is built from a BFS word for h.
  std::vector<std::vector<Element>> right(gens.size(), std::vector<Element>(n));
  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (Element e = 0; e < n; ++e) right[s][e] = index.at(elements[e].then(gens[s]).images());
  }
  // word_parent[h] = (parent, generator) with elements[h] = elements[parent] * gen.
  std::vector<std::pair<Element, std::size_t>> word_parent(n, {0, 0});
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::vector<Element> order{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Element e = order[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element f = right[s][e];
      if (!reached[f]) {
        reached[f] = 1;
        word_parent[f] = {e, s};
        order.push_back(f);
      }
    }
  }
  std::vector<Element> table(n * n);
  for (Element g = 0; g < n; ++g) table[g * n] = g;
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    const Element h = order[pos];
    const auto [parent, s] = word_parent[h];
    for (Element g = 0; g < n; ++g) table[g * n + h] = right[s][table[g * n + parent]];
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) names.push_back(to_cycle_string(p));
  return detail::make_group(std::move(name), n, std::move(table), std::move(names));
}

}  // namespace mixcay
