#ifndef SYMRANK_COMBINAT_HPP
#define SYMRANK_COMBINAT_HPP

#include <vector>

namespace symrank {

/// All k-element subsets of {0,...,n-1} as sorted index vectors, in
/// lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

/// All subsets of {0,...,n-1} of size 0..max_size, ordered by size, then
/// lexicographically within each size.
std::vector<std::vector<int>> subsets_up_to_size(int n, int max_size);

/// Advance a sorted k-subset of {0,...,n-1} in colexicographic order.
/// Returns false when s was the last subset (then s is left unchanged).
bool next_subset_colex(std::vector<int>& s, int n);

}  // namespace symrank

#endif
