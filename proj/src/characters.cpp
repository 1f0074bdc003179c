#include "plancherel/characters.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "plancherel/errors.hpp"

namespace plancherel {

namespace {

constexpr int kMaxSplitRetries = 16;

using Matrix = Eigen::MatrixXcd;

// Class-sum structure constants a_ijk = #{x ∈ C_i : x⁻¹z ∈ C_j} for a fixed
// z ∈ C_k, viewed as matrices M_i(j, k) = a_ijk. The vector of central
// characters ω(K_k) = |C_k| χ(g_k) / χ(1) is a common right eigenvector:
// M_i ω = ω_i ω, and ω_0 = 1 for the identity class. Only complex linear
// combinations Σ c_i M_i are ever formed, so memory stays O(r²).
Matrix class_sum_combination(const FiniteGroup& g, std::span<const cplx> coeffs) {
  const auto r = static_cast<Eigen::Index>(g.num_classes());
  Matrix m = Matrix::Zero(r, r);
  for (std::size_t k = 0; k < g.num_classes(); ++k) {
    const Element z = g.class_representative(k);
    for (Element x = 0; x < g.order(); ++x) {
      const auto j = static_cast<Eigen::Index>(g.class_of(g.mul(g.inv(x), z)));
      m(j, static_cast<Eigen::Index>(k)) += coeffs[g.class_of(x)];
    }
  }
  return m;
}

std::vector<cplx> combination_coefficients(std::size_t r, std::uint64_t seed, std::uint64_t stream) {
  std::vector<cplx> c(r);
  for (std::size_t i = 0; i < r; ++i) {
    c[i] = {rng::symmetric(rng::hash(seed, stream, i, 0)), rng::symmetric(rng::hash(seed, stream, i, 1))};
  }
  return c;
}

struct RawRow {
  std::uint32_t degree;
  std::vector<cplx> values;
};

// One attempt at splitting the class algebra with a given combination seed.
// The eigenvectors of one random combination are cross-checked against a
// second independent combination; a vector that is not a common eigenvector
// fails the attempt.
std::optional<std::vector<RawRow>> try_split(const FiniteGroup& g, std::uint64_t seed) {
  const std::size_t rr = g.num_classes();
  const auto r = static_cast<Eigen::Index>(rr);
  const auto c1 = combination_coefficients(rr, seed, 0);
  const auto c2 = combination_coefficients(rr, seed, 1);
  const Matrix combo = class_sum_combination(g, c1);
  const Matrix check = class_sum_combination(g, c2);

  Eigen::ComplexEigenSolver<Matrix> solver(combo, true);
  if (solver.info() != Eigen::Success) return std::nullopt;

  const auto& eig = solver.eigenvalues();
  double scale = 1.0;
  for (Eigen::Index a = 0; a < r; ++a) scale = std::max(scale, std::abs(eig(a)));
  for (Eigen::Index a = 0; a < r; ++a) {
    for (Eigen::Index b = a + 1; b < r; ++b) {
      if (std::abs(eig(a) - eig(b)) < 1e-6 * scale) return std::nullopt;
    }
  }

  const double n = static_cast<double>(g.order());
  std::vector<RawRow> rows;
  for (Eigen::Index a = 0; a < r; ++a) {
    Eigen::VectorXcd v = solver.eigenvectors().col(a);
    if (std::abs(v(0)) < 1e-8 * v.norm()) return std::nullopt;
    v /= v(0);
    cplx lambda2 = 0.0;
    for (Eigen::Index i = 0; i < r; ++i) lambda2 += c2[static_cast<std::size_t>(i)] * v(i);
    const Eigen::VectorXcd resid = check * v - lambda2 * v;
    if (resid.norm() > 1e-7 * scale * (1.0 + v.norm())) return std::nullopt;

    double weighted = 0.0;
    for (Eigen::Index k = 0; k < r; ++k) {
      weighted += std::norm(v(k)) / static_cast<double>(g.class_size(static_cast<std::size_t>(k)));
    }
    const double degree = std::sqrt(n / weighted);
    const double rounded = std::round(degree);
    if (rounded < 1.0 || std::abs(degree - rounded) > 1e-6) return std::nullopt;
    RawRow row{static_cast<std::uint32_t>(rounded), {}};
    row.values.resize(rr);
    for (Eigen::Index k = 0; k < r; ++k) {
      row.values[static_cast<std::size_t>(k)] =
          rounded * v(k) / static_cast<double>(g.class_size(static_cast<std::size_t>(k)));
    }
    row.values[0] = rounded;
    rows.push_back(std::move(row));
  }
  return rows;
}

// Snap components that sit on an integer (rational character values are
// integers).
double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < 1e-11 ? r + 0.0 : x;
}

std::int64_t quantize(double x) { return std::llround(x * 1e9); }

bool row_before(const RawRow& a, const RawRow& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    const auto ar = quantize(a.values[k].real()), br = quantize(b.values[k].real());
    if (ar != br) return ar > br;
    const auto ai = quantize(a.values[k].imag()), bi = quantize(b.values[k].imag());
    if (ai != bi) return ai > bi;
  }
  return false;
}

}  // namespace

CharacterTable CharacterTable::from_rows(GroupPtr group, std::vector<std::uint32_t> degrees,
                                         std::vector<cplx> values) {
  const std::size_t r = group->num_classes();
  if (values.size() != degrees.size() * r) {
    throw Error(ErrorKind::InvalidConfig, "character table values have wrong shape");
  }
  CharacterTable t;
  t.group_ = std::move(group);
  t.degrees_ = std::move(degrees);
  t.values_ = std::move(values);
  const std::size_t n = t.group_->order();
  const std::size_t k = t.degrees_.size();
  t.weights_.resize(k);
  t.expanded_.resize(k * n);
  for (std::size_t pi = 0; pi < k; ++pi) {
    t.weights_[pi] = static_cast<double>(t.degrees_[pi]) / static_cast<double>(n);
    for (Element x = 0; x < n; ++x) t.expanded_[pi * n + x] = t.value(pi, t.group_->class_of(x));
  }
  t.dual_.resize(k);
  for (std::size_t pi = 0; pi < k; ++pi) {
    t.dual_[pi] = pi;
    for (std::size_t other = 0; other < k; ++other) {
      bool match = true;
      for (std::size_t c = 0; c < r && match; ++c) {
        match = std::abs(t.value(other, c) - std::conj(t.value(pi, c))) < 1e-6;
      }
      if (match) {
        t.dual_[pi] = other;
        break;
      }
    }
  }
  return t;
}

CharacterTable character_table(const GroupPtr& group, std::uint64_t seed, double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-6)) {
    throw Error(ErrorKind::InvalidConfig, "tol must lie in [1e-12, 1e-6]");
  }
  std::optional<std::vector<RawRow>> rows;
  for (int attempt = 0; attempt <= kMaxSplitRetries && !rows; ++attempt) {
    rows = try_split(*group, seed + static_cast<std::uint64_t>(attempt));
  }
  if (!rows) {
    throw Error(ErrorKind::EigensplitFailure,
                "class-sum eigenspaces did not separate for " + group->label());
  }
  for (auto& row : *rows) {
    for (auto& v : row.values) v = {snap(v.real()), snap(v.imag())};
  }
  std::stable_sort(rows->begin(), rows->end(), row_before);

  std::vector<std::uint32_t> degrees;
  std::vector<cplx> values;
  for (const auto& row : *rows) {
    degrees.push_back(row.degree);
    values.insert(values.end(), row.values.begin(), row.values.end());
  }
  CharacterTable table = CharacterTable::from_rows(group, std::move(degrees), std::move(values));
  const auto report = verify_orthogonality(table, tol);
  if (!report.pass) {
    throw Error(ErrorKind::ToleranceViolation,
                "character table for " + group->label() + " deviates by " +
                    std::to_string(report.max_deviation()));
  }
  return table;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table, double tol) {
  const FiniteGroup& g = *table.group();
  const std::size_t k = table.num_irreps();
  const std::size_t r = table.num_classes();
  const double n = static_cast<double>(g.order());
  OrthogonalityReport rep;

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      cplx s = 0.0;
      for (std::size_t c = 0; c < r; ++c) {
        s += static_cast<double>(g.class_size(c)) * table.value(i, c) * std::conj(table.value(j, c));
      }
      s /= n;
      rep.max_row_deviation = std::max(rep.max_row_deviation, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      cplx s = 0.0;
      for (std::size_t pi = 0; pi < k; ++pi) s += table.value(pi, c) * std::conj(table.value(pi, d));
      const double expect = c == d ? n / static_cast<double>(g.class_size(c)) : 0.0;
      rep.max_column_deviation = std::max(rep.max_column_deviation, std::abs(s - expect));
    }
  }
  std::uint64_t square_sum = 0;
  bool degree_matches = k == r;
  for (std::size_t pi = 0; pi < k; ++pi) {
    square_sum += std::uint64_t{table.degrees()[pi]} * table.degrees()[pi];
    degree_matches = degree_matches && std::abs(table.value(pi, 0) - cplx(table.degrees()[pi])) <= tol;
  }
  rep.degrees_square_sum_ok = square_sum == g.order();
  rep.pass = rep.degrees_square_sum_ok && degree_matches && rep.max_deviation() <= tol;
  return rep;
}

}  // namespace plancherel
