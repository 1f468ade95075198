#include "vecgames/learn/weights.hpp"

#include "vecgames/core/errors.hpp"

namespace vecgames {

namespace {

// Number of compositions of resolution into d non-negative parts.
double lattice_size(int resolution, int d) {
  double count = 1.0;
  for (int i = 1; i < d; ++i)
    count = count * (resolution + i) / i;
  return count;
}

void enumerate(int remaining, int slots, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int take = remaining; take >= 0; --take) {  // descending lexicographic
    prefix.push_back(take);
    enumerate(remaining - take, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<WeightVector> generate_weights(int k, int d) {
  if (k < 1) raise(Errc::InvalidCounts, "need at least one weight");
  if (d < 2) raise(Errc::InvalidCounts, "need at least two objectives");

  if (k == 1) {
    std::vector<double> vertex(static_cast<std::size_t>(d), 0.0);
    vertex[0] = 1.0;
    return {WeightVector(vertex)};
  }

  int resolution = 1;
  while (lattice_size(resolution, d) < static_cast<double>(k)) ++resolution;

  std::vector<std::vector<int>> lattice;
  std::vector<int> prefix;
  enumerate(resolution, d, prefix, lattice);

  std::vector<WeightVector> weights;
  weights.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<double> w(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      w[static_cast<std::size_t>(j)] =
          static_cast<double>(lattice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
          static_cast<double>(resolution);
    weights.emplace_back(std::move(w));
  }
  return weights;
}

}  // namespace vecgames
