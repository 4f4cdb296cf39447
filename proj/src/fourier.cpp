#include "splitstep/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "splitstep/errors.hpp"

namespace splitstep {

namespace {

// One FFTW plan per (shape, direction), created lazily under a lock and then
// executed with the new-array interface. FFTW_ESTIMATE keeps planning cheap
// and the chosen algorithm deterministic; FFTW_UNALIGNED lets the plans run
// on arbitrary caller buffers.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int dim, int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const Key key{dim, n, sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        // planned out-of-place: execute() must never alias src and dst
        const std::size_t total =
            (dim == 2) ? static_cast<std::size_t>(n) * n : static_cast<std::size_t>(n);
        fftw_complex* src = fftw_alloc_complex(total);
        fftw_complex* dst = fftw_alloc_complex(total);
        fftw_plan plan =
            (dim == 2)
                ? fftw_plan_dft_2d(n, n, src, dst, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
                : fftw_plan_dft_1d(n, src, dst, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(dst);
        fftw_free(src);
        if (!plan) throw SplitError(ErrorKind::Config, "fftw planning failed");
        plans_.emplace(key, plan);
        return plan;
    }

  private:
    using Key = std::tuple<int, int, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

void execute(const Grid& grid, std::span<const Complex> in, std::span<Complex> out, int sign) {
    if (in.size() != grid.total_points() || out.size() != grid.total_points())
        throw SplitError(ErrorKind::Config, "fft buffer size does not match grid");
    fftw_plan plan = PlanCache::instance().get(grid.dim(), grid.points_per_dim(), sign);
    if (in.data() == out.data()) {
        std::vector<Complex> copy(in.begin(), in.end());
        execute(grid, copy, out, sign);
        return;
    }
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(plan, src, dst);
}

}  // namespace

void fft_forward(const Grid& grid, std::span<const Complex> in, std::span<Complex> out) {
    execute(grid, in, out, FFTW_FORWARD);
}

void fft_inverse(const Grid& grid, std::span<const Complex> in, std::span<Complex> out) {
    execute(grid, in, out, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(grid.total_points());
    for (Complex& z : out) z *= scale;
}

State apply_multiplier(const State& state, const MultiplierSymbol& symbol) {
    const Grid& g = state.grid();
    const int n = g.points_per_dim();
    const int ny = (g.dim() == 2) ? n : 1;
    const std::size_t total = g.total_points();

    State out(state.grid_ptr(), state.n_components());
    std::vector<Complex> hat(total);

    for (int c = 0; c < state.n_components(); ++c) {
        fft_forward(g, state.component(c), hat);
        const auto& kx = g.wavenumbers(0);
        for (int iy = 0; iy < ny; ++iy) {
            const double ky = (g.dim() == 2) ? g.wavenumbers(1)[iy] : 0.0;
            for (int ix = 0; ix < n; ++ix) {
                const Complex s = symbol(c, kx[ix], ky);
                if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
                    throw SplitError(ErrorKind::SymbolOverflow,
                                     "multiplier symbol overflowed on the wavenumber set");
                hat[g.flat_index(ix, iy)] *= s;
            }
        }
        fft_inverse(g, hat, out.component(c));
    }
    return out;
}

}  // namespace splitstep
