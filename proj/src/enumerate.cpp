#include "tlcat/enumerate.hpp"

#include <algorithm>

namespace tlcat {

std::vector<Diagram> enumerate_cell(const Word& upper, const Word& lower) {
  const int nu = static_cast<int>(2 * upper.size());
  const int nl = static_cast<int>(2 * lower.size());
  const int n = nu + nl;

  std::vector<Diagram> out;
  if (n == 0) {
    out.push_back(Diagram());
    return out;
  }

  // boundary order: upper left to right, then lower right to left; a chord
  // from the first point of a segment splits it into two independent halves
  std::vector<int> boundary(n);
  for (int i = 0; i < nu; ++i) boundary[i] = i;
  for (int r = 0; r < nl; ++r) boundary[nu + r] = nu + (nl - 1 - r);

  std::vector<std::pair<int, int>> chosen;
  auto go = [&](auto&& self, std::vector<std::vector<int>> segments) -> void {
    while (!segments.empty() && segments.back().empty()) segments.pop_back();
    if (segments.empty()) {
      std::vector<std::pair<int, int>> pr = chosen;
      for (auto& [a, b] : pr)
        if (a > b) std::swap(a, b);
      std::sort(pr.begin(), pr.end());
      out.push_back(Diagram::from_pairs(upper, lower, pr));
      return;
    }
    std::vector<int> seg = std::move(segments.back());
    segments.pop_back();
    const int first = seg[0];
    for (std::size_t j = 1; j < seg.size(); j += 2) {
      chosen.emplace_back(first, seg[j]);
      auto rest = segments;
      if (j + 1 < seg.size()) rest.emplace_back(seg.begin() + j + 1, seg.end());
      if (j > 1) rest.emplace_back(seg.begin() + 1, seg.begin() + j);
      self(self, std::move(rest));
      chosen.pop_back();
    }
  };
  go(go, {boundary});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  const std::size_t count = std::size_t{1} << length;
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::string s(length, 'a');
    for (std::size_t i = 0; i < length; ++i)
      if (bits >> (length - 1 - i) & 1) s[i] = 'b';
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace tlcat
