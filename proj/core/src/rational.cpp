#include "thermnet/rational.hpp"

#include <cmath>

#include "thermnet/errors.hpp"

namespace thermnet {

const char* to_string(ProperKind kind) noexcept {
  switch (kind) {
    case ProperKind::StrictlyProper:
      return "StrictlyProper";
    case ProperKind::Biproper:
      return "Biproper";
    case ProperKind::Improper:
      return "Improper";
  }
  return "?";
}

std::string to_string(const Properness& p) {
  return std::string(to_string(p.kind)) + "(" + std::to_string(p.relative_degree) + ")";
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1.0);
    return;
  }
  // num = k * den collapses to the constant k.
  if (num_.degree() == den_.degree() && den_.degree() > 0) {
    const std::size_t lead = static_cast<std::size_t>(den_.degree());
    const double k = num_[lead] / den_[lead];
    const double scale = num_.max_abs_coefficient();
    bool proportional = true;
    for (std::size_t i = 0; i <= lead && proportional; ++i) {
      proportional = std::abs(num_[i] - k * den_[i]) <= 1e-12 * scale;
    }
    if (proportional) {
      num_ = Polynomial::constant(k);
      den_ = Polynomial::constant(1.0);
      return;
    }
  }
  const double d0 = den_[0];
  const double scale = d0 != 0.0 ? d0 : den_.leading();
  num_ *= 1.0 / scale;
  den_ *= 1.0 / scale;
}

std::complex<double> RationalFunction::evaluate(std::complex<double> s) const {
  const auto d = den_.evaluate(s);
  if (std::abs(d) < 1e-300) throw PoleEvaluation("evaluation at a pole of the rational function");
  return num_.evaluate(s) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw InvalidArgument("cannot invert the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string(int significant_digits) const {
  return "(" + num_.to_string(significant_digits) + ") / (" + den_.to_string(significant_digits) +
         ")";
}

Properness classify(const RationalFunction& rf) {
  const int rel = rf.den().degree() - rf.num().degree();
  if (rel >= 1) return {ProperKind::StrictlyProper, rel};
  if (rel == 0) return {ProperKind::Biproper, rel};
  return {ProperKind::Improper, rel};
}

double dc_gain(const RationalFunction& rf) {
  const double d0 = rf.den()[0];
  if (d0 == 0.0) throw PoleAtZero("dc gain requested for a function with a pole at s = 0");
  return rf.num()[0] / d0;
}

RationalFunction regularize(const RationalFunction& rf, double time_constant, int order) {
  if (!(time_constant > 0.0) || !std::isfinite(time_constant)) {
    throw InvalidArgument("regularize: time constant must be positive");
  }
  if (order < 0) throw InvalidArgument("regularize: order must be >= 0");
  const Polynomial lag = Polynomial({1.0, time_constant}).pow(static_cast<unsigned>(order));
  RationalFunction out(rf.num(), rf.den() * lag);
  const Properness p = classify(out);
  if (p.kind == ProperKind::Improper) {
    throw InsufficientOrder("regularize: order " + std::to_string(order) +
                            " leaves the function improper (relative degree " +
                            std::to_string(p.relative_degree) + ")");
  }
  return out;
}

}  // namespace thermnet
