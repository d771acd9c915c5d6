#pragma once
// Semiclassical symplectic Fourier transform on aligned 2-axis fields.
#include "phasekit/core.hpp"

namespace pk {

// g(q,p) = (2*pi*hbar)^-1 Int f(x,xi) e^{i(q*xi - p*x)/hbar} dx dxi,
// evaluated by direct kernel sums on the input axes (output lives on the same axes).
// When dx*dxi*n = 2*pi*hbar the transform is an involution on decaying fields.
Field2D symplectic_fourier(const Field2D& f, double hbar, bool parallel = true);
Field2D symplectic_fourier_serial(const Field2D& f, double hbar);

}  // namespace pk
