#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace thermnet {

/// Real polynomial in s, coefficients in ascending degree order.
///
/// Always kept canonical: a leading coefficient with
/// |c| <= kTrimTolerance * max|c_i| is dropped (repeatedly), so the degree of
/// a polynomial assembled from round-off residues stays structurally right.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  static constexpr double kTrimTolerance = 1e-9;

  Polynomial() = default;
  explicit Polynomial(std::vector<double> ascending);
  Polynomial(std::initializer_list<double> ascending);

  static Polynomial constant(double c) { return Polynomial({c}); }

  /// (s - root)
  static Polynomial linear_root(double root) { return Polynomial({-root, 1.0}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of s^k (0 beyond the degree).
  double operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
  }
  double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

  double max_abs_coefficient() const noexcept;

  std::complex<double> evaluate(std::complex<double> s) const noexcept;
  double evaluate(double s) const noexcept;

  Polynomial pow(unsigned exponent) const;

  Polynomial& operator*=(double k);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double k, Polynomial p) { return p *= k; }
  friend Polynomial operator*(Polynomial p, double k) { return p *= k; }
  Polynomial operator-() const { return (-1.0) * *this; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "a*s^2 + b*s + c" with the given significant digits, highest degree
  /// first.
  std::string to_string(int significant_digits = 4, const char* var = "s") const;

 private:
  void trim();

  std::vector<double> coeffs_;
};

}  // namespace thermnet
