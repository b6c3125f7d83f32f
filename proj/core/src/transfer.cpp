#include "thermnet/transfer.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "thermnet/errors.hpp"

namespace thermnet {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

// Dense row-major square matrix over the wide type.
class WideMatrix {
 public:
  explicit WideMatrix(std::size_t n) : n_(n), data_(n * n, Wide(0)) {}

  static WideMatrix from(const Eigen::MatrixXd& m) {
    WideMatrix out(static_cast<std::size_t>(m.rows()));
    for (std::size_t i = 0; i < out.n_; ++i) {
      for (std::size_t j = 0; j < out.n_; ++j) {
        out(i, j) = Wide(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
    }
    return out;
  }

  Wide& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Wide& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::size_t size() const noexcept { return n_; }

  friend WideMatrix operator*(const WideMatrix& a, const WideMatrix& b) {
    WideMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        const Wide& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) {
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  Eigen::MatrixXd rounded() const {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            static_cast<double>((*this)(i, j));
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Wide> data_;
};

struct WideResolvent {
  std::vector<WideMatrix> adjugate;  // coefficient of s^(n-1-k)
  std::vector<Wide> characteristic;  // ascending, monic
};

WideResolvent faddeev_leverrier(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) throw InvalidArgument("resolvent: matrix must be square");
  if (A.rows() > kMaxResolventDimension) {
    throw DimensionTooLarge("resolvent: dimension " + std::to_string(A.rows()) +
                            " exceeds the supported maximum of " +
                            std::to_string(kMaxResolventDimension));
  }
  const std::size_t n = static_cast<std::size_t>(A.rows());
  const WideMatrix a = WideMatrix::from(A);

  WideResolvent r;
  r.characteristic.assign(n + 1, Wide(0));
  r.characteristic[n] = 1;

  // M_1 = I; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  WideMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    } else {
      m = a * m;
      const Wide& c = r.characteristic[n - k + 1];
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
    }
    Wide trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) trace += a(i, j) * m(j, i);
    }
    r.characteristic[n - k] = -trace / Wide(static_cast<unsigned>(k));
    r.adjugate.push_back(m);
  }
  return r;
}

}  // namespace

Resolvent resolvent(const Eigen::MatrixXd& A) {
  const WideResolvent wide = faddeev_leverrier(A);
  Resolvent r;
  for (const auto& m : wide.adjugate) r.adjugate.push_back(m.rounded());
  std::vector<double> d;
  for (const auto& c : wide.characteristic) d.push_back(static_cast<double>(c));
  r.characteristic = Polynomial(std::move(d));
  return r;
}

std::optional<std::size_t> TransferMatrix::slot_of(std::string_view source) const {
  for (std::size_t k = 0; k < input_sources.size(); ++k) {
    for (const auto& s : input_sources[k]) {
      if (s == source) return k;
    }
  }
  return std::nullopt;
}

TransferMatrix transfer_matrix(const StateSpace& ss) {
  const WideResolvent wide = faddeev_leverrier(ss.A);
  const std::size_t n = static_cast<std::size_t>(ss.A.rows());
  const std::size_t nu = static_cast<std::size_t>(ss.B.cols());

  // Scale everything by d(0) when it is nonzero so the shared denominator
  // reads "... + 1".
  Wide scale = wide.characteristic[0];
  if (scale == 0) scale = 1;

  std::vector<double> den;
  for (const auto& c : wide.characteristic) den.push_back(static_cast<double>(c / scale));

  // Row vectors C M_k in wide precision.
  std::vector<std::vector<Wide>> c_adj;
  for (const auto& m : wide.adjugate) {
    std::vector<Wide> row(n, Wide(0));
    for (std::size_t i = 0; i < n; ++i) {
      const Wide ci(ss.C(static_cast<Eigen::Index>(i)));
      if (ci == 0) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] += ci * m(i, j);
    }
    c_adj.push_back(std::move(row));
  }

  TransferMatrix tfm;
  tfm.denominator = Polynomial(den);
  tfm.output_label = ss.output_label;
  for (std::size_t in = 0; in < nu; ++in) {
    std::vector<Wide> num(n + 1, Wide(0));
    for (std::size_t k = 0; k < n; ++k) {
      Wide acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        acc += c_adj[k][j] *
               Wide(ss.B(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(in)));
      }
      num[n - 1 - k] += acc;
    }
    const Wide d(ss.D(static_cast<Eigen::Index>(in)));
    if (d != 0) {
      for (std::size_t i = 0; i <= n; ++i) num[i] += d * wide.characteristic[i];
    }
    std::vector<double> rounded;
    for (const auto& c : num) rounded.push_back(static_cast<double>(c / scale));
    Polynomial p(std::move(rounded));
    tfm.entries.emplace_back(p, tfm.denominator);
    tfm.numerators.push_back(std::move(p));
    const auto& slot = ss.inputs[in];
    tfm.input_labels.push_back(slot.label);
    tfm.input_sources.push_back(slot.sources);
  }
  return tfm;
}

LoadTransferSet load_transfer_set(const TransferMatrix& tfm, std::string_view hvac_source) {
  const auto slot = tfm.slot_of(hvac_source);
  if (!slot) {
    throw InvalidArgument("'" + std::string(hvac_source) + "' is not an input of the transfer matrix");
  }
  const Polynomial& hvac_num = tfm.numerators[*slot];
  if (hvac_num.is_zero()) {
    throw ZeroHvacPath("the HVAC input '" + std::string(hvac_source) +
                       "' has no path to the output node");
  }

  auto term = [](std::string input, RationalFunction tf) {
    const Properness p = classify(tf);
    return LoadTerm{std::move(input), std::move(tf), p};
  };

  LoadTransferSet set{std::string(hvac_source), *slot,
                      term(tfm.output_label, RationalFunction(tfm.denominator, hvac_num)),
                      {},
                      {}};
  for (std::size_t k = 0; k < tfm.size(); ++k) {
    if (k == *slot) continue;
    // Shared denominators cancel: H_h⁻¹ H_k = num_k / num_h.
    set.from_inputs.push_back(
        term(tfm.input_labels[k], RationalFunction(-tfm.numerators[k], hvac_num)));
  }
  for (const auto& s : tfm.input_sources[*slot]) {
    if (s == hvac_source) continue;
    set.pass_through.push_back(term(s, RationalFunction::constant(-1.0)));
  }
  return set;
}

}  // namespace thermnet
