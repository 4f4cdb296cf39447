#include "splitstep/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splitstep/errors.hpp"

namespace splitstep {

State::State(GridPtr grid, int n_components)
    : grid_(std::move(grid)), n_components_(n_components) {
    if (!grid_) throw SplitError(ErrorKind::Config, "state needs a grid");
    if (n_components_ <= 0)
        throw SplitError(ErrorKind::Config, "state needs at least one component");
    points_ = grid_->total_points();
    data_.assign(points_ * static_cast<std::size_t>(n_components_), Complex(0.0, 0.0));
}

std::span<Complex> State::component(int c) {
    return {data_.data() + static_cast<std::size_t>(c) * points_, points_};
}

std::span<const Complex> State::component(int c) const {
    return {data_.data() + static_cast<std::size_t>(c) * points_, points_};
}

bool State::is_finite() const {
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

void State::project_real() {
    for (Complex& z : data_) z = Complex(z.real(), 0.0);
}

State eval_on_grid(const GridPtr& grid, int n_components,
                   const std::function<Complex(int, double, double)>& f) {
    State out(grid, n_components);
    const Grid& g = *grid;
    const int n = g.points_per_dim();
    const int ny = (g.dim() == 2) ? n : 1;
    for (int c = 0; c < n_components; ++c) {
        auto comp = out.component(c);
        for (int iy = 0; iy < ny; ++iy) {
            const double y = (g.dim() == 2) ? g.coordinate(1, iy) : 0.0;
            for (int ix = 0; ix < n; ++ix) {
                const Complex v = f(c, g.coordinate(0, ix), y);
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw SplitError(ErrorKind::NonFinite,
                                     "eval_on_grid: function returned a non-finite value");
                comp[g.flat_index(ix, iy)] = v;
            }
        }
    }
    return out;
}

double norm(const State& state, NormKind kind) {
    require_finite(state, "norm");
    if (kind == NormKind::DiscreteInfinity) {
        double m = 0.0;
        for (const Complex& z : state.data()) m = std::max(m, std::abs(z));
        return m;
    }
    double sum = 0.0;
    for (const Complex& z : state.data()) sum += std::norm(z);
    return std::sqrt(state.grid().cell_volume() * sum);
}

double norm_difference(const State& a, const State& b, NormKind kind) {
    return norm(a - b, kind);
}

State operator+(const State& a, const State& b) {
    require_same_shape(a, b, "operator+");
    State out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

State operator-(const State& a, const State& b) {
    require_same_shape(a, b, "operator-");
    State out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

State operator*(Complex scalar, const State& a) {
    State out = a;
    for (Complex& z : out.data()) z *= scalar;
    return out;
}

void axpy(Complex alpha, const State& b, State& a) {
    require_same_shape(a, b, "axpy");
    for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] += alpha * b.data()[i];
}

void require_finite(const State& state, const char* context) {
    if (!state.is_finite())
        throw SplitError(ErrorKind::NonFinite,
                         std::string(context) + ": state contains NaN/Inf");
}

void require_same_shape(const State& a, const State& b, const char* context) {
    if (a.n_components() != b.n_components() || !a.grid().same_layout(b.grid()))
        throw SplitError(ErrorKind::Config,
                         std::string(context) + ": states live on different grids");
}

}  // namespace splitstep
