#ifndef SPLITSTEP_FOURIER_HPP
#define SPLITSTEP_FOURIER_HPP

#include <functional>
#include <span>

#include "splitstep/state.hpp"

namespace splitstep {

// Forward transform is unnormalized; the inverse carries 1/N per dimension.
// Both work on one component-sized buffer in the grid's flat index order.
// Plans are cached per grid shape behind a mutex; execution is safe from
// multiple threads on distinct buffers.
void fft_forward(const Grid& grid, std::span<const Complex> in, std::span<Complex> out);
void fft_inverse(const Grid& grid, std::span<const Complex> in, std::span<Complex> out);

// symbol(component, k) where k carries kx (and ky for 2-D grids, else 0).
using MultiplierSymbol = std::function<Complex(int component, double kx, double ky)>;

// inverse-transform(symbol .* forward-transform(state)), per component.
// Throws ErrorKind::SymbolOverflow if the symbol evaluates non-finite on the
// grid's wavenumber set.
State apply_multiplier(const State& state, const MultiplierSymbol& symbol);

}  // namespace splitstep

#endif
