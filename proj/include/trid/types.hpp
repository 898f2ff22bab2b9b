#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace trid {

using Index = std::int64_t;

// Exact scalars. Expression templates are off so that these behave like
// plain value types inside Eigen containers and generic code.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatXd = Mat<double>;
using VecXd = Vec<double>;
using IntMatrix = Mat<std::int64_t>;

/// Input violates a documented precondition (bad spec, unmet spectral
/// precondition, rank deficiency).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class CapExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Binomial coefficient C(m+1, 2): the number of intervals [k, l) with
/// 1 <= k < l <= m+1.
constexpr Index interval_count(Index m) { return (m + 1) * m / 2; }

/// n^m with overflow detection; returns -1 when the result does not fit.
Index checked_pow(Index n, Index m);

}  // namespace trid
