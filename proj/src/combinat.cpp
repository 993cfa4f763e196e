#include "symrank/combinat.hpp"

#include <stdexcept>

namespace symrank {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  if (k < 0 || n < 0) throw std::domain_error("subsets_lex: negative argument");
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(s);
    // next subset in lex order: bump the rightmost index that can grow
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<std::vector<int>> subsets_up_to_size(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= max_size; ++k) {
    auto level = subsets_lex(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool next_subset_colex(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  // find the smallest position whose element can step up
  for (int i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? s[static_cast<std::size_t>(i + 1)] : n;
    if (s[static_cast<std::size_t>(i)] + 1 < limit) {
      ++s[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) s[static_cast<std::size_t>(j)] = j;
      return true;
    }
  }
  return false;
}

}  // namespace symrank
