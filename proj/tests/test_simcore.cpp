#include <doctest.h>

#include <cmath>
#include <vector>

#include "xlc/core/rng.hpp"
#include "xlc/sim/similarity.hpp"

using xlc::core::Rng;
using xlc::sim::ConsistencyScore;
using xlc::sim::consistency_score;
using xlc::sim::cosine;
using xlc::sim::designate_stronger;
using xlc::sim::EmbeddingVector;
using xlc::sim::medoid_index;

namespace {

// Independent oracles: straightforward double-precision loops, written
// before the library implementation and kept separate from it.

double oracle_cosine(const std::vector<double>& u, const std::vector<double>& v) {
  double dot = 0, nu = 0, nv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

double oracle_consistency(const std::vector<EmbeddingVector>& e) {
  double sum = 0;
  int pairs = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i < j) {
        sum += oracle_cosine(e[i].values, e[j].values);
        ++pairs;
      }
  return sum / pairs;
}

std::size_t oracle_medoid(const std::vector<EmbeddingVector>& e) {
  std::size_t best = 0;
  double best_avg = -2;
  for (std::size_t i = 0; i < e.size(); ++i) {
    double sum = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i) sum += oracle_cosine(e[i].values, e[j].values);
    double avg = sum / (e.size() - 1);
    if (avg > best_avg) {
      best_avg = avg;
      best = i;
    }
  }
  return best;
}

std::vector<EmbeddingVector> random_unit_vectors(Rng& rng, std::size_t n,
                                                 std::size_t dim) {
  std::vector<EmbeddingVector> out(n);
  for (auto& v : out) {
    v.values.resize(dim);
    double norm = 0;
    for (auto& x : v.values) {
      x = rng.gaussian();
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (auto& x : v.values) x /= norm;
  }
  return out;
}

const std::vector<EmbeddingVector> kThreeVectorSet = {
    {{1.0, 0.0}}, {{0.0, 1.0}}, {{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}}};

}  // namespace

TEST_CASE("cosine analytic values") {
  CHECK(cosine({{1, 0}}, {{1, 0}}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine({{1, 0}}, {{0, 1}}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cosine({{1, 0}}, {{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}}) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("cosine error paths") {
  CHECK_THROWS_AS(cosine({{1, 0}}, {{1, 0, 0}}), xlc::sim::DimensionMismatch);
  CHECK_THROWS_AS(cosine({{0, 0}}, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("cosine stays within [-1,1] for near-parallel vectors") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    auto v = random_unit_vectors(rng, 1, 32)[0];
    EmbeddingVector w = v;
    for (auto& x : w.values) x *= 3.0;  // same direction, larger norm
    double c = cosine(v, w);
    CHECK(c <= 1.0);
    CHECK(c >= -1.0);
    CHECK(c == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("consistency of identical vectors is 1") {
  std::vector<EmbeddingVector> e(3, EmbeddingVector{{1, 0}});
  CHECK(consistency_score(e).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("consistency analytic three-vector fixture") {
  auto c = consistency_score(kThreeVectorSet);
  CHECK(c.value == doctest::Approx((0.0 + 2.0 * std::sqrt(2.0) / 2.0) / 3.0)
                       .epsilon(1e-9));
  CHECK(c.value == doctest::Approx(0.47140).epsilon(2e-5));
  CHECK(c.n == 3);
}

TEST_CASE("consistency requires N >= 2") {
  std::vector<EmbeddingVector> one = {{{1.0, 0.0}}};
  CHECK_THROWS_AS(consistency_score(one), std::invalid_argument);
}

TEST_CASE("consistency matches brute-force oracle, N in [2,16]") {
  Rng rng(42);
  for (std::size_t n = 2; n <= 16; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      auto e = random_unit_vectors(rng, n, 24);
      CHECK(consistency_score(e).value ==
            doctest::Approx(oracle_consistency(e)).epsilon(1e-12));
    }
  }
}

TEST_CASE("consistency is permutation invariant") {
  Rng rng(11);
  auto e = random_unit_vectors(rng, 7, 16);
  double base = consistency_score(e).value;
  for (int t = 0; t < 10; ++t) {
    rng.shuffle(e);
    CHECK(consistency_score(e).value == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("positive scaling leaves cosine, consistency, medoid unchanged") {
  Rng rng(13);
  auto e = random_unit_vectors(rng, 6, 12);
  double base_c = consistency_score(e).value;
  std::size_t base_m = medoid_index(e);
  auto scaled = e;
  for (std::size_t i = 0; i < scaled.size(); ++i)
    for (auto& x : scaled[i].values) x *= 0.5 + 3.0 * (i % 3);
  // component scale varies per vector but stays positive
  for (auto& v : scaled)
    for (auto& x : v.values) x *= 2.0;
  CHECK(consistency_score(scaled).value == doctest::Approx(base_c).epsilon(1e-9));
  CHECK(medoid_index(scaled) == base_m);
  CHECK(cosine(scaled[0], scaled[1]) ==
        doctest::Approx(cosine(e[0], e[1])).epsilon(1e-9));
}

TEST_CASE("medoid analytic fixture picks index 2") {
  CHECK(medoid_index(kThreeVectorSet) == 2);
}

TEST_CASE("medoid tie breaks to lowest index") {
  std::vector<EmbeddingVector> e(5, EmbeddingVector{{0.3, 0.4}});
  CHECK(medoid_index(e) == 0);
}

TEST_CASE("medoid matches exhaustive oracle") {
  Rng rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    auto e = random_unit_vectors(rng, 9, 20);
    CHECK(medoid_index(e) == oracle_medoid(e));
  }
}

TEST_CASE("medoid returns a member of the dominant cluster") {
  // k >= ceil(N/2)+1 copies of one vector among otherwise orthogonal ones.
  Rng rng(17);
  const std::size_t n = 9, k = 6, dim = 16;
  for (int rep = 0; rep < 50; ++rep) {
    auto basis = random_unit_vectors(rng, 1, dim)[0];
    std::vector<EmbeddingVector> e;
    for (std::size_t i = 0; i < k; ++i) e.push_back(basis);
    for (std::size_t i = k; i < n; ++i) {
      EmbeddingVector v;
      v.values.assign(dim, 0.0);
      v.values[i - k] = 1.0;  // orthogonal unit axes
      e.push_back(v);
    }
    rng.shuffle(e);
    auto m = medoid_index(e);
    CHECK(e[m].values == basis.values);
  }
}

TEST_CASE("designate_stronger compares values, ties favor local") {
  CHECK(designate_stronger({0.82, 5}, {0.61, 5}, "en", "local").stronger == "en");
  CHECK(designate_stronger({0.50, 5}, {0.50, 5}, "en", "local").stronger == "local");
  CHECK(designate_stronger({0.4714, 5}, {1.0, 5}, "en", "local").stronger == "local");
  auto d = designate_stronger({0.9, 5}, {0.1, 5}, "en", "local");
  CHECK(d.weaker == "local");
}
