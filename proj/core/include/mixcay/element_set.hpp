#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "mixcay/error.hpp"

namespace mixcay {

/// A finite set of group elements kept as a sorted, duplicate-free index list.
class ElementSet {
 public:
  using const_iterator = std::vector<Element>::const_iterator;

  ElementSet() = default;
  explicit ElementSet(std::vector<Element> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }
  ElementSet(std::initializer_list<Element> elements)
      : ElementSet(std::vector<Element>(elements)) {}

  bool contains(Element e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
  }
  bool includes(const ElementSet& other) const {
    return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(),
                         other.elements_.end());
  }
  bool intersects(const ElementSet& other) const;

  void insert(Element e) {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e) elements_.insert(it, e);
  }

  ElementSet united(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> elements_;
};

inline bool ElementSet::intersects(const ElementSet& other) const {
  auto a = elements_.begin();
  auto b = other.elements_.begin();
  while (a != elements_.end() && b != other.elements_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

inline ElementSet ElementSet::united(const ElementSet& other) const {
  std::vector<Element> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  ElementSet result;
  result.elements_ = std::move(out);
  return result;
}

inline ElementSet ElementSet::minus(const ElementSet& other) const {
  std::vector<Element> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  ElementSet result;
  result.elements_ = std::move(out);
  return result;
}

}  // namespace mixcay
