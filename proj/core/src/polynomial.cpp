#include "thermnet/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace thermnet {

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> ascending) : coeffs_(ascending) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty()) {
    const double bound = kTrimTolerance * max_abs_coefficient();
    const double lead = std::abs(coeffs_.back());
    if (lead > bound && lead != 0.0) break;
    coeffs_.pop_back();
  }
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

std::complex<double> Polynomial::evaluate(std::complex<double> s) const noexcept {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double Polynomial::evaluate(double s) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1.0);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial& Polynomial::operator*=(double k) {
  for (double& c : coeffs_) c *= k;
  trim();
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(int significant_digits, const char* var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  char buf[64];
  for (int k = degree(); k >= 0; --k) {
    const double c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0.0) continue;
    if (!out.empty()) out += c < 0.0 ? " - " : " + ";
    else if (c < 0.0) out += "-";
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, std::abs(c));
    out += buf;
    if (k >= 1) {
      out += "*";
      out += var;
    }
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace thermnet
