#include "periodgeom/linalg.hpp"

namespace periodgeom {

std::vector<std::vector<Index>> index_subsets(Index d, Index k) {
  if (k < 0 || k > d) throw DimensionError("subset size out of range");
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur(k);
  for (Index i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (k == 0) break;
    Index i = k - 1;
    while (i >= 0 && cur[i] == d - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (Index j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace periodgeom
