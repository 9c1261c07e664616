// Copyright (c) 2026 the nhdms authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace nhdms {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using Mat3c = Eigen::Matrix3cd;
using VecX = Eigen::VectorXd;
using VecXc = Eigen::VectorXcd;
using SpMatC = Eigen::SparseMatrix<cplx>;
using TripletC = Eigen::Triplet<cplx>;

inline constexpr cplx iu{0.0, 1.0};

/// Axis-aligned box.
struct Box {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();

  Vec3 extent() const { return hi - lo; }
  double volume() const { return extent().prod(); }
  bool contains(const Vec3& p) const {
    return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
  }
};

/// Error type for contract violations (bad inputs, inconsistent state).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Error type for numerical failures (singular matrices, residuals out of tolerance).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NHDMS_REQUIRE(cond, msg)                       \
  do {                                                 \
    if (!(cond)) throw ::nhdms::InvalidArgument(msg);  \
  } while (0)

}  // namespace nhdms
