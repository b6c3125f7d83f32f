#pragma once

#include <complex>
#include <string>

#include "thermnet/polynomial.hpp"

namespace thermnet {

enum class ProperKind { StrictlyProper, Biproper, Improper };

/// Relative degree is deg(den) - deg(num); the zero function counts its
/// numerator as degree -1.
struct Properness {
  ProperKind kind;
  int relative_degree;

  friend bool operator==(const Properness&, const Properness&) = default;
};

const char* to_string(ProperKind kind) noexcept;
std::string to_string(const Properness& p);

/// num/den, kept canonical: den(0) = 1 when den(0) != 0, otherwise monic.
/// A numerator proportional to the denominator collapses to a constant; no
/// other common factors are cancelled.
class RationalFunction {
 public:
  /// Throws InvalidArgument on a zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(double c) {
    return RationalFunction(Polynomial::constant(c), Polynomial::constant(1.0));
  }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }

  /// num(s)/den(s); throws PoleEvaluation if |den(s)| < 1e-300.
  std::complex<double> evaluate(std::complex<double> s) const;

  /// den/num; throws InvalidArgument if num is zero.
  RationalFunction inverse() const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  std::string to_string(int significant_digits = 4) const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

Properness classify(const RationalFunction& rf);

/// num(0)/den(0); throws PoleAtZero when den(0) == 0.
double dc_gain(const RationalFunction& rf);

/// rf / (τ s + 1)^order. Throws InvalidArgument for τ <= 0 and
/// InsufficientOrder when the result is still improper.
RationalFunction regularize(const RationalFunction& rf, double time_constant, int order);

}  // namespace thermnet
