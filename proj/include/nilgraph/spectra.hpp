#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nilgraph/graph.hpp"

namespace nilgraph {

// Dense square matrix of arbitrary-precision integers. Everything spectral
// here is certified with exact arithmetic; no floating point is involved.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::int64_t dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim)) {}

  std::int64_t dim() const { return dim_; }
  mpz_class& at(std::int64_t i, std::int64_t j) {
    return entries_[static_cast<std::size_t>(i * dim_ + j)];
  }
  const mpz_class& at(std::int64_t i, std::int64_t j) const {
    return entries_[static_cast<std::size_t>(i * dim_ + j)];
  }
  void swap_rows(std::int64_t i, std::int64_t j);
  bool is_symmetric() const;

 private:
  std::int64_t dim_;
  std::vector<mpz_class> entries_;
};

enum class MatrixTarget { Adjacency, Degree, Laplacian, SignlessLaplacian };

std::string target_name(MatrixTarget target);

// Vertices ordered by ascending element id; A is 0/1 symmetric with zero
// diagonal, D diagonal of degrees, L = D - A, Q = D + A.
ExactMatrix matrix_build(const NilpotentGraph& graph, MatrixTarget target);

// M - lambda*I
ExactMatrix shift_matrix(const ExactMatrix& m, std::int64_t lambda);

// dim - rank by fraction-free (Bareiss) elimination. Pivot rule: columns
// left to right, first nonzero row. Consumes its argument.
std::int64_t nullity(ExactMatrix m);

// Multiset of integer eigenvalues with multiplicities, lambda descending.
struct SpectrumPrediction {
  MatrixTarget target = MatrixTarget::Adjacency;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (eigenvalue, multiplicity)

  std::string str() const;
};

// Accumulates (eigenvalue, multiplicity) contributions, merging equal
// eigenvalues and dropping zero multiplicities.
class SpectrumBuilder {
 public:
  void add(std::int64_t lambda, std::int64_t multiplicity);
  SpectrumPrediction build(MatrixTarget target) const;

 private:
  std::vector<std::pair<std::int64_t, std::int64_t>> raw_;
};

struct EigenvalueCheck {
  std::int64_t lambda = 0;
  std::int64_t expected = 0;  // predicted multiplicity
  std::int64_t actual = 0;    // nullity of M - lambda*I
  bool ok = false;
};

struct SpectrumCheck {
  bool ok = false;
  bool multiplicity_sum_ok = false;
  std::vector<EigenvalueCheck> rows;

  std::string str() const;  // "ok" or the first failing eigenvalue
};

// For a real symmetric M, geometric multiplicities equal algebraic ones, so
// nullity(M - lambda*I) == m for every pair plus sum(m) == dim certifies the
// prediction as the exact spectrum.
SpectrumCheck verify_spectrum(const ExactMatrix& m, const SpectrumPrediction& prediction);

// Multiset union of the closed-form building-block spectra over classified
// components: K_{t,t} and K_t. Throws DomainError on an Other component or
// a biclique with unequal parts.
SpectrumPrediction component_spectrum_prediction(const ComponentDecomposition& decomposition,
                                                 MatrixTarget target);

}  // namespace nilgraph
