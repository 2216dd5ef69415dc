#ifndef TFKERNEL_ERRORS_HPP
#define TFKERNEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfk {

/// A mathematically invalid request (as opposed to malformed input).
class MathPreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Gabor system is not a frame at the acceptance threshold.
class NotAFrame : public MathPreconditionError {
public:
    NotAFrame(double lower, double upper);
    double lower;
    double upper;
};

/// (N/a)(N/b) < N lattice points, so no frame can exist.
class DensityTooLow : public MathPreconditionError {
public:
    DensityTooLow(std::size_t n, std::size_t a, std::size_t b);
    std::size_t n;
    std::size_t a;
    std::size_t b;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tfk

#endif
