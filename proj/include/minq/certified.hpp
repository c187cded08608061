#pragma once

#include <complex>

namespace minq {

/// A numeric result paired with a rigorous absolute error bound.
template <class T>
struct Certified {
    T value{};
    double bound = 0.0;

    bool within(double tol) const { return bound <= tol; }
};

using CertifiedReal = Certified<double>;
using CertifiedComplex = Certified<std::complex<double>>;

}  // namespace minq
