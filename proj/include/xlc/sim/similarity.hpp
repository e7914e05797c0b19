#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xlc::sim {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Output of an embedding backend. Not assumed unit-norm; cosine handles
// norms explicitly.
struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dim() const { return values.size(); }
};

// Average pairwise cosine similarity among N sampled responses.
struct ConsistencyScore {
  double value = 0.0;  // in [-1, 1]
  std::size_t n = 0;   // responses scored, >= 2
};

struct StrongerDesignation {
  std::string stronger;  // language tag
  std::string weaker;
};

// cos(u,v) = <u,v>/(|u||v|), clamped to [-1,1] against rounding.
// Accumulates in long double.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

// Mean cosine over all N(N-1)/2 unique pairs. Order-invariant.
ConsistencyScore consistency_score(std::span<const EmbeddingVector> embeddings);

// Index of the vector with highest average cosine to its peers; ties break
// to the lowest index.
std::size_t medoid_index(std::span<const EmbeddingVector> embeddings);

// Higher consistency wins; exact ties go to the local language (the method
// exists to surface local knowledge).
StrongerDesignation designate_stronger(const ConsistencyScore& c_en,
                                       const ConsistencyScore& c_local,
                                       const std::string& en_tag,
                                       const std::string& local_tag);

}  // namespace xlc::sim
