#include "nilgraph/spectra.hpp"

#include <algorithm>
#include <map>

namespace nilgraph {

void ExactMatrix::swap_rows(std::int64_t i, std::int64_t j) {
  if (i == j) return;
  for (std::int64_t c = 0; c < dim_; ++c) std::swap(at(i, c), at(j, c));
}

bool ExactMatrix::is_symmetric() const {
  for (std::int64_t i = 0; i < dim_; ++i) {
    for (std::int64_t j = i + 1; j < dim_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

std::string target_name(MatrixTarget target) {
  switch (target) {
    case MatrixTarget::Adjacency: return "A";
    case MatrixTarget::Degree: return "D";
    case MatrixTarget::Laplacian: return "L";
    case MatrixTarget::SignlessLaplacian: return "Q";
  }
  return "?";
}

ExactMatrix matrix_build(const NilpotentGraph& graph, MatrixTarget target) {
  const std::int64_t n = graph.vertex_count();
  ExactMatrix m(n);
  for (std::int32_t u = 0; u < n; ++u) {
    if (target != MatrixTarget::Adjacency) m.at(u, u) = graph.degree(u);
    if (target == MatrixTarget::Degree) continue;
    for (std::int32_t v : graph.neighbors(u)) {
      m.at(u, v) = target == MatrixTarget::Laplacian ? -1 : 1;
    }
  }
  return m;
}

ExactMatrix shift_matrix(const ExactMatrix& m, std::int64_t lambda) {
  ExactMatrix out = m;
  for (std::int64_t i = 0; i < m.dim(); ++i) out.at(i, i) -= lambda;
  return out;
}

std::int64_t nullity(ExactMatrix m) {
  const std::int64_t n = m.dim();
  std::int64_t rank = 0;
  mpz_class prev(1);
  mpz_class num;
  for (std::int64_t col = 0; col < n && rank < n; ++col) {
    std::int64_t pivot_row = -1;
    for (std::int64_t r = rank; r < n; ++r) {
      if (m.at(r, col) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;  // rank-deficient column, entries stay exact minors
    m.swap_rows(rank, pivot_row);
    const mpz_class pivot = m.at(rank, col);
    for (std::int64_t i = rank + 1; i < n; ++i) {
      const bool zero_head = m.at(i, col) == 0;
      if (zero_head && pivot == prev) continue;  // row update is the identity
      for (std::int64_t j = col + 1; j < n; ++j) {
        // one-step fraction-free update; every entry remains a minor of the
        // input, so the division by the previous pivot is exact
        num = m.at(i, j) * pivot;
        if (!zero_head) num -= m.at(i, col) * m.at(rank, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return n - rank;
}

void SpectrumBuilder::add(std::int64_t lambda, std::int64_t multiplicity) {
  if (multiplicity > 0) raw_.emplace_back(lambda, multiplicity);
}

SpectrumPrediction SpectrumBuilder::build(MatrixTarget target) const {
  std::map<std::int64_t, std::int64_t, std::greater<>> merged;
  for (const auto& [lambda, mult] : raw_) merged[lambda] += mult;
  SpectrumPrediction prediction;
  prediction.target = target;
  prediction.pairs.assign(merged.begin(), merged.end());
  return prediction;
}

std::string SpectrumPrediction::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(pairs[i].first) + "^" + std::to_string(pairs[i].second);
  }
  out += '}';
  return out;
}

std::string SpectrumCheck::str() const {
  if (ok) return "ok";
  for (const auto& row : rows) {
    if (!row.ok) {
      return "fail at lambda=" + std::to_string(row.lambda) + " (multiplicity " +
             std::to_string(row.actual) + ", predicted " + std::to_string(row.expected) + ")";
    }
  }
  return multiplicity_sum_ok ? "fail" : "fail (multiplicities do not sum to dim)";
}

SpectrumCheck verify_spectrum(const ExactMatrix& m, const SpectrumPrediction& prediction) {
  if (!m.is_symmetric()) throw DomainError("verify_spectrum requires a symmetric matrix");
  SpectrumCheck check;
  std::int64_t total = 0;
  bool all_rows_ok = true;
  for (const auto& [lambda, mult] : prediction.pairs) {
    EigenvalueCheck row;
    row.lambda = lambda;
    row.expected = mult;
    row.actual = nullity(shift_matrix(m, lambda));
    row.ok = row.actual == row.expected;
    if (!row.ok) all_rows_ok = false;
    total += mult;
    check.rows.push_back(row);
  }
  check.multiplicity_sum_ok = total == m.dim();
  check.ok = all_rows_ok && check.multiplicity_sum_ok;
  return check;
}

SpectrumPrediction component_spectrum_prediction(const ComponentDecomposition& decomposition,
                                                 MatrixTarget target) {
  SpectrumBuilder builder;
  for (const auto& shape : decomposition.shapes) {
    if (shape.kind == ShapeKind::CompleteK) {
      const std::int64_t t = shape.complete_order;
      switch (target) {
        case MatrixTarget::Adjacency:
          builder.add(t - 1, 1);
          builder.add(-1, t - 1);
          break;
        case MatrixTarget::Degree:
          builder.add(t - 1, t);
          break;
        case MatrixTarget::Laplacian:
          builder.add(0, 1);
          builder.add(t, t - 1);
          break;
        case MatrixTarget::SignlessLaplacian:
          builder.add(2 * t - 2, 1);
          builder.add(t - 2, t - 1);
          break;
      }
    } else if (shape.kind == ShapeKind::Biclique &&
               shape.part_a.size() == shape.part_b.size()) {
      const std::int64_t t = static_cast<std::int64_t>(shape.part_a.size());
      switch (target) {
        case MatrixTarget::Adjacency:
          builder.add(t, 1);
          builder.add(-t, 1);
          builder.add(0, 2 * t - 2);
          break;
        case MatrixTarget::Degree:
          builder.add(t, 2 * t);
          break;
        case MatrixTarget::Laplacian:
        case MatrixTarget::SignlessLaplacian:
          builder.add(2 * t, 1);
          builder.add(0, 1);
          builder.add(t, 2 * t - 2);
          break;
      }
    } else {
      throw DomainError("component without closed-form spectrum (not K_t or K_{t,t})");
    }
  }
  return builder.build(target);
}

}  // namespace nilgraph
