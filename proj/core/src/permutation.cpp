#include "cycle_span/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cycle_span {

namespace {

void require_prefix(std::size_t m, std::size_t n, const char* what) {
  if (m < 1 || m > n) {
    throw std::out_of_range(std::string(what) + " = " + std::to_string(m) +
                            " is outside [1, " + std::to_string(n) + "]");
  }
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Element parse_element(std::string_view token) {
  Element value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not a positive integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0) throw std::invalid_argument("permutation of an empty ground set");
  if (n > std::numeric_limits<Element>::max()) {
    throw std::invalid_argument("permutation too large");
  }
  std::vector<bool> seen(n, false);
  for (Element v : images_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("image " + std::to_string(v) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    if (seen[v - 1]) {
      throw std::invalid_argument("image " + std::to_string(v) + " repeated");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{1});
  return Permutation(std::move(images));
}

std::vector<Element> CycleDecomposition::concatenated() const {
  std::vector<Element> out;
  for (const Cycle& c : cycles) out.insert(out.end(), c.begin(), c.end());
  return out;
}

CycleDecomposition CycleDecomposition::parse_concatenated(std::span<const Element> sequence) {
  CycleDecomposition out;
  Element running_min = std::numeric_limits<Element>::max();
  for (Element e : sequence) {
    if (e < running_min) {
      running_min = e;
      out.cycles.emplace_back();
    }
    out.cycles.back().push_back(e);
  }
  return out;
}

ElementSet::ElementSet(std::size_t n, std::span<const Element> members) : mask_(n, false) {
  for (Element j : members) {
    if (j < 1 || j > n) {
      throw std::invalid_argument("element " + std::to_string(j) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    if (!mask_[j - 1]) {
      mask_[j - 1] = true;
      ++count_;
    }
  }
}

ElementSet ElementSet::prefix(std::size_t n, std::size_t m) {
  if (m > n) {
    throw std::out_of_range("prefix size " + std::to_string(m) + " exceeds " + std::to_string(n));
  }
  ElementSet s(n);
  for (std::size_t j = 0; j < m; ++j) s.mask_[j] = true;
  s.count_ = m;
  return s;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t j = 0; j < mask_.size(); ++j) {
    if (mask_[j]) out.push_back(static_cast<Element>(j + 1));
  }
  return out;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<bool> visited(n, false);
  CycleDecomposition out;
  // Scanning upward, the first unvisited element is the minimum of its cycle.
  for (Element start = 1; start <= n; ++start) {
    if (visited[start - 1]) continue;
    Cycle c;
    for (Element j = start; !visited[j - 1]; j = p(j)) {
      visited[j - 1] = true;
      c.push_back(j);
    }
    out.cycles.push_back(std::move(c));
  }
  std::reverse(out.cycles.begin(), out.cycles.end());
  return out;
}

Permutation from_cycles(const CycleDecomposition& c) {
  std::size_t n = 0;
  for (const Cycle& cycle : c.cycles) n += cycle.size();
  if (n == 0) throw std::invalid_argument("empty cycle decomposition");

  std::vector<Element> images(n, 0);
  Element previous_first = std::numeric_limits<Element>::max();
  for (const Cycle& cycle : c.cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    const Element first = cycle.front();
    if (*std::min_element(cycle.begin(), cycle.end()) != first) {
      throw std::invalid_argument("cycle does not start with its smallest element");
    }
    if (first >= previous_first) {
      throw std::invalid_argument("cycles are not in decreasing order of first elements");
    }
    previous_first = first;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Element j = cycle[i];
      if (j < 1 || j > n) {
        throw std::invalid_argument("element " + std::to_string(j) + " outside [1, " +
                                    std::to_string(n) + "]");
      }
      if (images[j - 1] != 0) {
        throw std::invalid_argument("element " + std::to_string(j) + " appears twice");
      }
      images[j - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation restrict_to(const Permutation& p, std::size_t k) {
  require_prefix(k, p.size(), "k");
  std::vector<Element> images(k);
  for (Element j = 1; j <= k; ++j) {
    Element next = p(j);
    while (next > k) next = p(next);
    images[j - 1] = next;
  }
  return Permutation(std::move(images));
}

ElementSet spanned_cycles(const Permutation& p, const ElementSet& marked) {
  const std::size_t n = p.size();
  if (marked.ground_size() != n) {
    throw std::invalid_argument("marked set and permutation have different ground sets");
  }
  std::vector<bool> in_span(n, false);
  std::vector<Element> members;
  for (Element start : marked.members()) {
    for (Element j = start; !in_span[j - 1]; j = p(j)) {
      in_span[j - 1] = true;
      members.push_back(j);
    }
  }
  return ElementSet(n, members);
}

std::size_t span_length(const Permutation& p, std::size_t m) {
  require_prefix(m, p.size(), "m");
  std::vector<bool> in_span(p.size(), false);
  std::size_t length = 0;
  for (Element start = 1; start <= m; ++start) {
    for (Element j = start; !in_span[j - 1]; j = p(j)) {
      in_span[j - 1] = true;
      ++length;
    }
  }
  return length;
}

DistanceVector following_distances(const Permutation& p, std::size_t m) {
  require_prefix(m, p.size(), "m");
  DistanceVector out(m);
  for (Element j = 1; j <= m; ++j) {
    std::size_t steps = 1;
    for (Element next = p(j); next > m; next = p(next)) ++steps;
    out[j - 1] = steps;
  }
  return out;
}

std::vector<Element> tail_sequence(const Permutation& p, std::size_t m) {
  require_prefix(m, p.size(), "m");
  std::vector<Element> out;
  out.reserve(p.size() - m);
  for (Element e : cycle_decomposition(p).concatenated()) {
    if (e > m) out.push_back(e);
  }
  return out;
}

std::size_t count_fixed_points(const Permutation& p) {
  std::size_t count = 0;
  for (Element j = 1; j <= p.size(); ++j) {
    if (p(j) == j) ++count;
  }
  return count;
}

std::string to_one_line(const Permutation& p) {
  std::string out;
  for (Element v : p.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string to_cycle_text(const CycleDecomposition& c) {
  std::string out;
  for (const Cycle& cycle : c.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::string to_cycle_text(const Permutation& p) { return to_cycle_text(cycle_decomposition(p)); }

Permutation parse_one_line(std::string_view text) {
  std::vector<Element> images;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_space(text[end])) ++end;
    images.push_back(parse_element(text.substr(i, end - i)));
    i = end;
  }
  return Permutation(std::move(images));
}

Permutation parse_cycle_text(std::string_view text) {
  CycleDecomposition c;
  std::size_t i = 0;
  bool open = false;
  while (i < text.size()) {
    const char ch = text[i];
    if (is_space(ch)) {
      ++i;
    } else if (ch == '(') {
      if (open) throw std::invalid_argument("nested '(' in cycle text");
      open = true;
      c.cycles.emplace_back();
      ++i;
    } else if (ch == ')') {
      if (!open) throw std::invalid_argument("unbalanced ')' in cycle text");
      if (c.cycles.back().empty()) throw std::invalid_argument("empty cycle in cycle text");
      open = false;
      ++i;
    } else {
      if (!open) throw std::invalid_argument("element outside parentheses in cycle text");
      std::size_t end = i;
      while (end < text.size() && !is_space(text[end]) && text[end] != '(' && text[end] != ')') {
        ++end;
      }
      c.cycles.back().push_back(parse_element(text.substr(i, end - i)));
      i = end;
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle in cycle text");
  return from_cycles(c);
}

}  // namespace cycle_span
