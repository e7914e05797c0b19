#include "xlc/sim/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace xlc::sim {

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dim() != v.dim())
    throw DimensionMismatch("cosine: dimension mismatch " +
                            std::to_string(u.dim()) + " vs " +
                            std::to_string(v.dim()));
  long double dot = 0.0L, nu = 0.0L, nv = 0.0L;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    dot += static_cast<long double>(u.values[i]) * v.values[i];
    nu += static_cast<long double>(u.values[i]) * u.values[i];
    nv += static_cast<long double>(v.values[i]) * v.values[i];
  }
  if (nu == 0.0L || nv == 0.0L)
    throw std::invalid_argument("cosine: zero-norm vector");
  double c = static_cast<double>(dot / (std::sqrt(nu) * std::sqrt(nv)));
  return std::clamp(c, -1.0, 1.0);
}

ConsistencyScore consistency_score(std::span<const EmbeddingVector> embeddings) {
  const std::size_t n = embeddings.size();
  if (n < 2)
    throw std::invalid_argument("consistency_score requires at least 2 embeddings");
  long double sum = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sum += cosine(embeddings[i], embeddings[j]);
  double value = static_cast<double>(2.0L * sum / (static_cast<long double>(n) * (n - 1)));
  return {std::clamp(value, -1.0, 1.0), n};
}

std::size_t medoid_index(std::span<const EmbeddingVector> embeddings) {
  const std::size_t n = embeddings.size();
  if (n < 2)
    throw std::invalid_argument("medoid_index requires at least 2 embeddings");
  std::size_t best = 0;
  long double best_avg = -2.0L;
  for (std::size_t i = 0; i < n; ++i) {
    long double sum = 0.0L;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sum += cosine(embeddings[i], embeddings[j]);
    long double avg = sum / static_cast<long double>(n - 1);
    if (avg > best_avg) {  // strict: ties keep the lowest index
      best_avg = avg;
      best = i;
    }
  }
  return best;
}

StrongerDesignation designate_stronger(const ConsistencyScore& c_en,
                                       const ConsistencyScore& c_local,
                                       const std::string& en_tag,
                                       const std::string& local_tag) {
  if (c_en.value > c_local.value) return {en_tag, local_tag};
  return {local_tag, en_tag};
}

}  // namespace xlc::sim
