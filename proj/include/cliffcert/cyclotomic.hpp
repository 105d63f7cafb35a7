#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Core>

namespace cliffcert {

using Rational = mpq_class;

bool is_odd_prime(long p);

/**
 * Arithmetic context for the cyclotomic field Q(w), where w is a primitive
 * root of unity of order 4p and p is an odd prime.
 *
 * The minimal polynomial of w over Q has degree 2(p-1) and the shape
 *
 *     Phi(x) = 1 - x^2 + x^4 - ... + x^{2(p-1)},
 *
 * so field elements are stored as rational coefficient vectors of length
 * 2(p-1) in the power basis 1, w, ..., w^{2p-3}.  Reduction uses the
 * negacyclic relation w^{2p} = -1, which Phi divides.
 *
 * A context is immutable after construction and must outlive every value
 * attached to it.  All operations on values attached to contexts with
 * different primes throw std::invalid_argument.
 */
class CycCtx {
 public:
  explicit CycCtx(long p);

  long prime() const { return p_; }
  long root_order() const { return 4 * p_; }
  long degree() const { return 2 * (p_ - 1); }

  // Coefficients of Phi, lowest degree first, length degree()+1, monic.
  const std::vector<Rational>& modulus() const { return modulus_; }

 private:
  long p_;
  std::vector<Rational> modulus_;
};

/**
 * An element of Q(w).
 *
 * A default-constructed Cyc, or one built from an integer or a Rational, is
 * a context-free rational literal.  Literals combine with attached values by
 * promotion, which lets Eigen scalar plumbing (Scalar(0), Scalar(1),
 * setZero, Identity) work without threading a context through it.
 */
class Cyc {
 public:
  Cyc() : ctx_(nullptr), coeffs_(1, Rational(0)) {}
  Cyc(int v) : ctx_(nullptr), coeffs_(1, Rational(v)) {}
  Cyc(long v) : ctx_(nullptr), coeffs_(1, Rational(v)) {}
  explicit Cyc(const Rational& v) : ctx_(nullptr), coeffs_(1, v) {}

  static Cyc zero(const CycCtx& ctx);
  static Cyc one(const CycCtx& ctx);
  static Cyc rational(const CycCtx& ctx, const Rational& v);

  // w^k for any integer k, reduced to the canonical basis.
  static Cyc omega_pow(const CycCtx& ctx, long k);

  // Wraps an already canonical coefficient vector of length ctx.degree().
  static Cyc from_coeffs(const CycCtx& ctx, std::vector<Rational> coeffs);

  const CycCtx* context() const { return ctx_; }
  bool is_literal() const { return ctx_ == nullptr; }

  // Canonical coordinates relative to ctx; literals are promoted on demand.
  std::vector<Rational> coeffs(const CycCtx& ctx) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool is_integer() const;
  long as_integer() const;          // requires is_integer(), fits in long

  Cyc conjugated() const;           // the automorphism w -> w^{-1}
  Cyc inverse() const;              // throws std::domain_error on zero
  std::complex<double> approx() const;

  std::string to_string() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& rhs);
  Cyc& operator-=(const Cyc& rhs);
  Cyc& operator*=(const Cyc& rhs);

  friend Cyc operator+(Cyc lhs, const Cyc& rhs) { return lhs += rhs; }
  friend Cyc operator-(Cyc lhs, const Cyc& rhs) { return lhs -= rhs; }
  friend Cyc operator*(Cyc lhs, const Cyc& rhs) { return lhs *= rhs; }
  friend Cyc operator/(const Cyc& lhs, const Cyc& rhs) { return lhs * rhs.inverse(); }

  friend bool operator==(const Cyc& lhs, const Cyc& rhs);
  friend bool operator!=(const Cyc& lhs, const Cyc& rhs) { return !(lhs == rhs); }

 private:
  const CycCtx* ctx_;
  std::vector<Rational> coeffs_;
};

inline Cyc conj(const Cyc& z) { return z.conjugated(); }
Cyc real(const Cyc& z);
Cyc imag(const Cyc& z);

std::ostream& operator<<(std::ostream& os, const Cyc& z);

// "num/den" with an explicit denominator, the on-disk form of a coefficient.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace cliffcert

namespace Eigen {

template <>
struct NumTraits<cliffcert::Cyc> : GenericNumTraits<cliffcert::Cyc> {
  using Real = cliffcert::Cyc;
  using NonInteger = cliffcert::Cyc;
  using Literal = cliffcert::Cyc;
  using Nested = cliffcert::Cyc;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256,
  };
  static inline Real epsilon() { return cliffcert::Cyc(0); }
  static inline Real dummy_precision() { return cliffcert::Cyc(0); }
  static inline int digits10() { return 0; }
};

// With Real identical to the scalar itself, Eigen's generic mixed real and
// complex specializations tie; this one outranks them both.
template <typename BinaryOp>
struct ScalarBinaryOpTraits<cliffcert::Cyc, cliffcert::Cyc, BinaryOp> {
  using ReturnType = cliffcert::Cyc;
};

}  // namespace Eigen

namespace cliffcert {

using CycVector = Eigen::Matrix<Cyc, Eigen::Dynamic, 1>;
using CycMatrix = Eigen::Matrix<Cyc, Eigen::Dynamic, Eigen::Dynamic>;

bool exactly_equal(const CycMatrix& a, const CycMatrix& b);
bool exactly_equal(const CycVector& a, const CycVector& b);

}  // namespace cliffcert
