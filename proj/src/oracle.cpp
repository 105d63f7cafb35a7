#include "cliffcert/oracle.hpp"

#include <cmath>
#include <numbers>

namespace cliffcert {

namespace {

std::complex<double> root_of_unity(const CycCtx& ctx, long exponent) {
  const double angle = 2.0 * std::numbers::pi *
                       static_cast<double>(((exponent % ctx.root_order()) +
                                            ctx.root_order()) %
                                           ctx.root_order()) /
                       static_cast<double>(ctx.root_order());
  return std::polar(1.0, angle);
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::complex<double> trace_product_numeric(const Monomial& m,
                                           const Eigen::MatrixXcd& p) {
  std::complex<double> acc = 0.0;
  for (long j = 0; j < m.dim(); ++j) {
    acc += root_of_unity(m.context(), m.phases()[j]) * p(j, m.perm()[j]);
  }
  return acc;
}

std::vector<std::size_t> sample_indices(std::size_t order, std::size_t want) {
  std::vector<std::size_t> idx;
  const std::size_t stride = std::max<std::size_t>(1, order / want);
  for (std::size_t i = 0; i < order; i += stride) idx.push_back(i);
  return idx;
}

}  // namespace

std::complex<double> lower(const Cyc& z) { return z.approx(); }

Eigen::VectorXcd lower(const CycVector& v) {
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).approx();
  return out;
}

Eigen::MatrixXcd lower(const CycMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).approx();
  }
  return out;
}

Eigen::MatrixXcd lower(const Monomial& m) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.dim(), m.dim());
  for (long j = 0; j < m.dim(); ++j) {
    out(m.perm()[j], j) = root_of_unity(m.context(), m.phases()[j]);
  }
  return out;
}

double unitarity_residual(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  return max_abs(gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
}

std::vector<NumericCheck> cross_check(Workspace& ws, double tol_single,
                                      double tol_sum) {
  std::vector<NumericCheck> out;
  const auto push = [&out](std::string name, double residual, double tol) {
    out.push_back({std::move(name), residual, tol, residual <= tol});
  };

  const CycCtx& ctx = ws.ctx();
  const long p = ctx.prime();
  const long dim = 2 * p;

  const Eigen::MatrixXcd a = lower(ws.gens().shift);
  const Eigen::MatrixXcd b = lower(ws.gens().clock);
  const Eigen::MatrixXcd c = lower(ws.gens().flip);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);

  push("generator_unitarity",
       std::max({unitarity_residual(a), unitarity_residual(b), unitarity_residual(c)}),
       tol_single);

  const std::complex<double> lambda = root_of_unity(ctx, 4);
  push("commutation_relation",
       std::max(max_abs(a.adjoint() * b * a - lambda * b),
                max_abs(a * b * a.adjoint() - std::conj(lambda) * b)),
       tol_single);

  const Group& g = ws.full_group();
  {
    double worst = 0.0;
    for (std::size_t i : sample_indices(g.order(), 100)) {
      worst = std::max(worst, unitarity_residual(lower(g.elements()[i])));
    }
    push("sampled_element_unitarity", worst, tol_single);
  }
  {
    double worst = 0.0;
    const auto idx = sample_indices(g.order(), 40);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Monomial& x = g.elements()[idx[k]];
      const Monomial& y = g.elements()[idx[(k * 7 + 3) % idx.size()]];
      worst = std::max(worst, max_abs(lower(x * y) - lower(x) * lower(y)));
    }
    push("product_homomorphism", worst, tol_single);
  }

  const Eigen::MatrixXcd p1 = lower(ws.code_projector(CodeSign::Minus));
  const Eigen::MatrixXcd p2 = lower(ws.code_projector(CodeSign::Plus));
  push("projector_idempotent",
       std::max(max_abs(p1 * p1 - p1), max_abs(p2 * p2 - p2)), tol_single);
  push("projector_hermitian",
       std::max(max_abs(p1.adjoint() - p1), max_abs(p2.adjoint() - p2)), tol_single);
  push("projector_completeness", max_abs(p1 + p2 - eye), tol_single);

  std::vector<Eigen::VectorXcd> basis1, basis2;
  for (const auto& v : ws.basis(CodeSign::Minus)) basis1.push_back(lower(v));
  for (const auto& v : ws.basis(CodeSign::Plus)) basis2.push_back(lower(v));
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis1.size(); ++i) {
      for (std::size_t j = 0; j < basis1.size(); ++j) {
        const std::complex<double> want = i == j ? 2.0 : 0.0;
        worst = std::max(worst, std::abs(basis1[i].dot(basis1[j]) - want));
        worst = std::max(worst, std::abs(basis2[i].dot(basis2[j]) - want));
      }
    }
    push("basis_gram", worst, tol_single);
  }

  {
    double worst = 0.0;
    for (const auto& gen : ws.code_generators()) {
      const Eigen::MatrixXcd m = lower(gen);
      for (const auto& v : basis1) worst = std::max(worst, ((eye - p1) * (m * v)).norm());
      for (const auto& v : basis2) worst = std::max(worst, ((eye - p2) * (m * v)).norm());
    }
    push("invariance_residual", worst, tol_single);
  }

  {
    // Positive control: the full clock swaps the two code spaces, so its
    // action must leave the minus space by a wide margin.  Here the check
    // passes when the residual EXCEEDS the stated bound.
    const double residual = ((eye - p1) * (b * basis1[0])).norm();
    out.push_back({"noninvariance_control", residual, 0.5, residual > 0.5});
  }

  {
    double acc = 0.0;
    for (const auto& m : g.elements()) {
      std::complex<double> tr = 0.0;
      for (long j = 0; j < dim; ++j) {
        if (m.perm()[j] == j) tr += root_of_unity(ctx, m.phases()[j]);
      }
      acc += std::norm(tr);
    }
    push("phi_norm_G", std::abs(acc / static_cast<double>(g.order()) - 1.0), tol_sum);
  }

  const Group& n = ws.code_group();
  {
    double acc = 0.0;
    for (const auto& m : n.elements()) {
      std::complex<double> tr = 0.0;
      for (long j = 0; j < dim; ++j) {
        if (m.perm()[j] == j) tr += root_of_unity(ctx, m.phases()[j]);
      }
      acc += std::norm(tr);
    }
    push("phi_norm_N", std::abs(acc / static_cast<double>(n.order()) - 2.0), tol_sum);
  }
  {
    double norm1 = 0.0;
    std::complex<double> cross = 0.0;
    for (const auto& m : n.elements()) {
      const std::complex<double> chi1 = trace_product_numeric(m, p1);
      const std::complex<double> chi2 = trace_product_numeric(m, p2);
      norm1 += std::norm(chi1);
      cross += chi1 * std::conj(chi2);
    }
    push("chi_norm_N", std::abs(norm1 / static_cast<double>(n.order()) - 1.0), tol_sum);
    push("chi_cross_N", std::abs(cross) / static_cast<double>(n.order()), tol_sum);
  }

  {
    const std::complex<double> at_one =
        trace_product_numeric(Monomial::identity(ctx), p1);
    const std::complex<double> at_clock4 =
        trace_product_numeric(ws.gens().clock.powered(4), p1);
    const std::complex<double> at_flip = trace_product_numeric(ws.gens().flip, p1);
    const double worst =
        std::max({std::abs(at_one - static_cast<double>(p)), std::abs(at_clock4),
                  std::abs(at_flip - std::complex<double>(0.0, -1.0))});
    push("character_values", worst, tol_single);
  }

  {
    double worst = 0.0;
    for (const auto& q : ws.quasikernel_group().elements()) {
      const auto mu = scalar_action(q, ws.basis(CodeSign::Minus));
      if (!mu) {
        worst = 1.0;
        break;
      }
      const Eigen::MatrixXcd m = lower(q);
      const std::complex<double> scale = mu->approx();
      for (const auto& v : basis1) {
        worst = std::max(worst, (m * v - scale * v).norm());
      }
    }
    push("quasikernel_scalars", worst, tol_single);
  }

  return out;
}

}  // namespace cliffcert
