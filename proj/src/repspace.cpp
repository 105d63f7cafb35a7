#include "cliffcert/repspace.hpp"

namespace cliffcert {

std::vector<CycVector> code_basis(const CycCtx& ctx, CodeSign sign) {
  const long p = ctx.prime();
  const Cyc unit = sign == CodeSign::Minus
                       ? Cyc::omega_pow(ctx, 3 * p)   // -i
                       : Cyc::omega_pow(ctx, p);      // +i
  std::vector<CycVector> basis;
  basis.reserve(static_cast<std::size_t>(p));
  for (long x = 0; x < p; ++x) {
    CycVector v(2 * p);
    v.setZero();
    v(x) = Cyc::one(ctx);
    v(p + ((p - x) % p)) = unit;
    basis.push_back(std::move(v));
  }
  return basis;
}

CycMatrix projector(const std::vector<CycVector>& basis) {
  if (basis.empty()) throw std::invalid_argument("projector needs a nonempty basis");
  const Eigen::Index n = basis.front().size();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].size() != n) {
      throw std::invalid_argument("projector basis vectors differ in length");
    }
    for (std::size_t l = k; l < basis.size(); ++l) {
      Cyc dot = basis[k].dot(basis[l]);
      if (k == l && dot.is_zero()) {
        throw std::invalid_argument("projector basis contains the zero vector");
      }
      if (k != l && !dot.is_zero()) {
        throw std::invalid_argument("projector basis is not pairwise orthogonal");
      }
    }
  }
  CycMatrix p(n, n);
  p.setZero();
  for (const auto& v : basis) {
    p += (v * v.adjoint()) * (v.dot(v).inverse());
  }
  return p;
}

std::optional<CycVector> span_membership(const CycVector& v,
                                         const std::vector<CycVector>& basis) {
  const Eigen::Index n = v.size();
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  CycMatrix m(n, k + 1);
  for (Eigen::Index c = 0; c < k; ++c) {
    if (basis[static_cast<std::size_t>(c)].size() != n) {
      throw std::invalid_argument("span basis vectors differ in length");
    }
    m.col(c) = basis[static_cast<std::size_t>(c)];
  }
  m.col(k) = v;

  // Forward elimination to row echelon form over the basis columns.
  std::vector<Eigen::Index> pivot_row_of_col(static_cast<std::size_t>(k), -1);
  std::vector<bool> row_used(static_cast<std::size_t>(n), false);
  for (Eigen::Index c = 0; c < k; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (!row_used[static_cast<std::size_t>(r)] && !m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    row_used[static_cast<std::size_t>(pivot)] = true;
    pivot_row_of_col[static_cast<std::size_t>(c)] = pivot;
    const Cyc inv = m(pivot, c).inverse();
    for (Eigen::Index cc = c; cc <= k; ++cc) m(pivot, cc) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == pivot || m(r, c).is_zero()) continue;
      const Cyc factor = m(r, c);
      for (Eigen::Index cc = c; cc <= k; ++cc) {
        m(r, cc) -= factor * m(pivot, cc);
      }
    }
  }

  // Rows without a pivot now vanish on every basis column, so a nonzero
  // entry in the augmented column certifies that v is outside the span.
  for (Eigen::Index r = 0; r < n; ++r) {
    if (!row_used[static_cast<std::size_t>(r)] && !m(r, k).is_zero()) {
      return std::nullopt;
    }
  }

  CycVector coeffs(k);
  coeffs.setZero();
  for (Eigen::Index c = 0; c < k; ++c) {
    const Eigen::Index r = pivot_row_of_col[static_cast<std::size_t>(c)];
    if (r >= 0) coeffs(c) = m(r, k);
  }
  return coeffs;
}

InvarianceResult is_invariant(const std::vector<CycVector>& basis,
                              const std::vector<Monomial>& elements) {
  for (const auto& g : elements) {
    for (std::size_t x = 0; x < basis.size(); ++x) {
      CycVector image = g.apply(basis[x]);
      if (!span_membership(image, basis)) {
        return InvarianceResult{false, InvarianceWitness{g, x, std::move(image)}};
      }
    }
  }
  return InvarianceResult{true, std::nullopt};
}

Cyc trace_product(const Monomial& m, const CycMatrix& p) {
  const CycCtx& ctx = m.context();
  if (p.rows() != m.dim() || p.cols() != m.dim()) {
    throw std::invalid_argument("trace_product dimension mismatch");
  }
  Cyc acc = Cyc::zero(ctx);
  for (long j = 0; j < m.dim(); ++j) {
    const Cyc& entry = p(j, m.perm()[static_cast<std::size_t>(j)]);
    if (entry.is_zero()) continue;
    acc += Cyc::omega_pow(ctx, m.phases()[static_cast<std::size_t>(j)]) * entry;
  }
  return acc;
}

Character::Character(const Group* domain, std::vector<Cyc> values)
    : domain_(domain), values_(std::move(values)) {
  if (!domain_ || values_.size() != domain_->order()) {
    throw std::invalid_argument("character values must cover the domain");
  }
}

const Cyc& Character::value(const Monomial& m) const {
  auto idx = domain_->index_of(m);
  if (!idx) {
    throw std::invalid_argument("character has no value for an element outside its domain");
  }
  return values_[*idx];
}

Character natural_character(const Group& g) {
  std::vector<Cyc> values;
  values.reserve(g.order());
  for (const auto& m : g.elements()) values.push_back(m.trace());
  return Character(&g, std::move(values));
}

Character restricted_character(const Group& s, const CycMatrix& projector) {
  std::vector<Cyc> values;
  values.reserve(s.order());
  for (const auto& m : s.elements()) values.push_back(trace_product(m, projector));
  return Character(&s, std::move(values));
}

Cyc inner_product(const Character& chi, const Character& psi, const Group& over) {
  Cyc acc = Cyc::zero(over.context());
  for (const auto& g : over.elements()) {
    const Cyc& a = chi.value(g);
    if (a.is_zero()) continue;
    const Cyc& b = psi.value(g);
    if (b.is_zero()) continue;
    acc += a * conj(b);
  }
  acc *= Cyc(Rational(1, static_cast<unsigned long>(over.order())));
  if (!acc.is_integer() || acc.rational_value() < 0) {
    throw std::logic_error("character inner product is not a nonnegative integer: " +
                           acc.to_string());
  }
  return acc;
}

long inner_product_int(const Character& chi, const Character& psi, const Group& over) {
  return inner_product(chi, psi, over).as_integer();
}

}  // namespace cliffcert
