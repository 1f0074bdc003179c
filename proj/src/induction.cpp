#include "plancherel/induction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plancherel/errors.hpp"

namespace plancherel {

namespace {

constexpr double kIntegralTol = 1e-6;

std::uint32_t round_multiplicity(cplx value, const std::string& what) {
  const double r = std::round(value.real());
  if (std::abs(value.imag()) > kIntegralTol || std::abs(value.real() - r) > kIntegralTol || r < 0.0) {
    throw Error(ErrorKind::NonIntegralMultiplicity,
                what + " = " + std::to_string(value.real()) + "+" + std::to_string(value.imag()) + "i");
  }
  return static_cast<std::uint32_t>(r);
}

void require_psi_on(const Subgroup& subgroup, const LinearCharacter& psi) {
  const Subgroup& own = *psi.subgroup();
  if (&own == &subgroup) return;
  if (own.parent().get() != subgroup.parent().get() || own.members() != subgroup.members()) {
    throw Error(ErrorKind::SubgroupMismatch, "character belongs to a different subgroup");
  }
}

}  // namespace

std::uint32_t multiplicity_frobenius(const CharacterTable& table, std::size_t pi,
                                     const Subgroup& subgroup, const LinearCharacter& psi) {
  require_psi_on(subgroup, psi);
  if (pi >= table.num_irreps()) throw Error(ErrorKind::IndexOutOfRange, "irrep index");
  cplx s = 0.0;
  for (std::size_t k = 0; k < subgroup.order(); ++k) {
    s += table.at(pi, subgroup.members()[k]) * std::conj(psi.values()[k]);
  }
  return round_multiplicity(s / static_cast<double>(subgroup.order()),
                            "<chi_" + std::to_string(pi) + "|U, psi>");
}

std::vector<std::uint32_t> decompose_class_function(const CharacterTable& table,
                                                    std::span<const cplx> class_values) {
  const FiniteGroup& g = *table.group();
  std::vector<std::uint32_t> out;
  out.reserve(table.num_irreps());
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
      s += static_cast<double>(g.class_size(c)) * class_values[c] * std::conj(table.value(pi, c));
    }
    out.push_back(round_multiplicity(s / static_cast<double>(g.order()),
                                     "coefficient of irrep " + std::to_string(pi)));
  }
  return out;
}

InducedCharacter induced_character(const Subgroup& subgroup, const LinearCharacter& psi,
                                   const CharacterTable& table) {
  require_psi_on(subgroup, psi);
  const FiniteGroup& g = *subgroup.parent();
  InducedCharacter out;
  out.dimension = subgroup.index();
  out.class_values.resize(g.num_classes());
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const Element rep = g.class_representative(c);
    cplx s = 0.0;
    for (Element x = 0; x < g.order(); ++x) {
      const Element y = g.mul(g.mul(g.inv(x), rep), x);
      if (subgroup.contains(y)) s += psi.at(y);
    }
    out.class_values[c] = s / static_cast<double>(subgroup.order());
  }
  out.multiplicities = decompose_class_function(table, out.class_values);
  return out;
}

std::vector<cplx> InducedRep::dense(Element g) const {
  std::vector<cplx> m(dimension_ * dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) m[i * dimension_ + column(g, i)] = entry(g, i);
  return m;
}

cplx InducedRep::trace(Element g) const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (column(g, i) == i) t += entry(g, i);
  }
  return t;
}

std::vector<cplx> InducedRep::character() const {
  std::vector<cplx> out;
  out.reserve(group_->num_classes());
  for (std::size_t c = 0; c < group_->num_classes(); ++c) out.push_back(trace(group_->class_representative(c)));
  return out;
}

double InducedRep::homomorphism_defect() const {
  // Monomial product: row i of M(g)M(h) has its entry at column(h, column(g, i)).
  double worst = 0.0;
  for (Element g = 0; g < group_->order(); ++g) {
    for (Element h = 0; h < group_->order(); ++h) {
      const Element gh = group_->mul(g, h);
      for (std::size_t i = 0; i < dimension_; ++i) {
        const std::uint32_t j = column(g, i);
        const std::uint32_t k = column(h, j);
        if (k != column(gh, i)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, std::abs(entry(g, i) * entry(h, j) - entry(gh, i)));
      }
    }
  }
  return worst;
}

InducedRep induced_rep_matrices(const Subgroup& subgroup, const LinearCharacter& psi) {
  require_psi_on(subgroup, psi);
  if (subgroup.index() > kMaxInducedIndex) {
    throw Error(ErrorKind::IndexTooLarge, "[G:U] = " + std::to_string(subgroup.index()) + " exceeds " +
                                              std::to_string(kMaxInducedIndex));
  }
  const FiniteGroup& g = *subgroup.parent();
  const auto& reps = subgroup.left_coset_reps();
  InducedRep rep;
  rep.group_ = subgroup.parent();
  rep.dimension_ = reps.size();
  rep.columns_.resize(g.order() * rep.dimension_);
  rep.entries_.resize(g.order() * rep.dimension_);
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      // r_i·x = u·r_j
      const Element y = g.mul(reps[i], x);
      const std::size_t j = subgroup.coset_of(y);
      const Element u = g.mul(y, g.inv(reps[j]));
      rep.columns_[x * rep.dimension_ + i] = static_cast<std::uint32_t>(j);
      rep.entries_[x * rep.dimension_ + i] = psi.at(u);
    }
  }
  return rep;
}

IdentityCheck kernel_multiplicity_identity_check(const CharacterTable& table, const Subgroup& subgroup,
                                                 const LinearCharacter& psi, double tol) {
  IdentityCheck out;
  const double order_u = static_cast<double>(subgroup.order());
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    const auto kernel = whittaker_kernel(table, pi, subgroup, psi);
    const cplx at_identity = kernel.values[0];
    const auto m = multiplicity_frobenius(table, pi, subgroup, psi);
    const auto m_dual = multiplicity_frobenius(table, table.dual(pi), subgroup, psi);
    out.kernel_at_identity.push_back(at_identity);
    out.multiplicities.push_back(m);
    out.residuals.push_back(std::abs(at_identity - order_u * m));
    out.dual_residuals.push_back(std::abs(at_identity - order_u * m_dual));
  }
  out.max_residual = out.residuals.empty() ? 0.0 : *std::max_element(out.residuals.begin(), out.residuals.end());
  out.max_dual_residual =
      out.dual_residuals.empty() ? 0.0 : *std::max_element(out.dual_residuals.begin(), out.dual_residuals.end());
  out.pass = out.max_residual <= tol;
  return out;
}

}  // namespace plancherel
