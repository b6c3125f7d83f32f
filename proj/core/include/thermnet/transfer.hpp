#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "thermnet/polynomial.hpp"
#include "thermnet/rational.hpp"
#include "thermnet/statespace.hpp"

namespace thermnet {

inline constexpr Eigen::Index kMaxResolventDimension = 50;

/// adj(sI - A) = Σ_k adjugate[k] s^(n-1-k) and d(s) = det(sI - A) (monic).
struct Resolvent {
  std::vector<Eigen::MatrixXd> adjugate;
  Polynomial characteristic;
};

/// Faddeev-LeVerrier recursion carried out in 50-digit arithmetic and
/// rounded to double. Throws DimensionTooLarge for n > 50.
Resolvent resolvent(const Eigen::MatrixXd& A);

/// One rational function per input slot, all over the shared denominator.
///
/// `denominator` and `numerators` hold the unreduced shared-denominator form
/// (den(0) = 1 when possible); `entries` are the canonical rational
/// functions built from them.
struct TransferMatrix {
  Polynomial denominator;
  std::vector<Polynomial> numerators;
  std::vector<RationalFunction> entries;

  std::vector<std::string> input_labels;
  std::vector<std::vector<std::string>> input_sources;
  std::string output_label;

  std::size_t size() const noexcept { return entries.size(); }

  /// Slot fed by the named source, if any.
  std::optional<std::size_t> slot_of(std::string_view source) const;
};

/// H = C (sI - A)⁻¹ B + D, entry k = (C N(s) B_k + D_k d(s)) / d(s).
TransferMatrix transfer_matrix(const StateSpace& ss);

struct LoadTerm {
  std::string input;
  RationalFunction tf;
  Properness properness;
};

/// Load as a function of the prescribed output temperature and the other
/// inputs: Q = H_h⁻¹ θ - Σ_k H_h⁻¹ H_k u_k - Σ (co-located sources).
struct LoadTransferSet {
  std::string hvac_source;
  std::size_t hvac_slot = 0;
  LoadTerm from_output;               // H_h⁻¹
  std::vector<LoadTerm> from_inputs;  // -H_h⁻¹ H_k, every slot except hvac_slot
  std::vector<LoadTerm> pass_through; // -1 for other sources sharing hvac_slot
};

/// Throws ZeroHvacPath when the HVAC entry is identically zero and
/// InvalidArgument when the source is not an input of `tfm`.
LoadTransferSet load_transfer_set(const TransferMatrix& tfm, std::string_view hvac_source);

}  // namespace thermnet
