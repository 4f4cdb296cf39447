#ifndef SPLITSTEP_STATE_HPP
#define SPLITSTEP_STATE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "splitstep/grid.hpp"

namespace splitstep {

using Complex = std::complex<double>;

enum class NormKind { DiscreteInfinity, DiscreteL2 };

// Multi-component complex field on a Grid. Data is stored component-major
// (all of component 0, then component 1, ...), each component in the grid's
// flat index order.
class State {
  public:
    State() = default;
    State(GridPtr grid, int n_components);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    int n_components() const { return n_components_; }
    std::size_t size() const { return data_.size(); }

    Complex& at(int c, std::size_t j) { return data_[static_cast<std::size_t>(c) * points_ + j]; }
    const Complex& at(int c, std::size_t j) const {
        return data_[static_cast<std::size_t>(c) * points_ + j];
    }
    std::span<Complex> component(int c);
    std::span<const Complex> component(int c) const;
    std::vector<Complex>& data() { return data_; }
    const std::vector<Complex>& data() const { return data_; }

    bool is_finite() const;
    // Zeroes the imaginary part everywhere (the explicit real projection).
    void project_real();

  private:
    GridPtr grid_;
    int n_components_ = 0;
    std::size_t points_ = 0;
    std::vector<Complex> data_;
};

// Evaluates f(component, x, y) at every node (y passed as 0 for 1-D grids).
// Throws ErrorKind::NonFinite if f produces a non-finite value.
State eval_on_grid(const GridPtr& grid, int n_components,
                   const std::function<Complex(int component, double x, double y)>& f);

// Discrete norms over all components. DiscreteL2 carries the cell-volume
// weight sqrt(vol * sum |u_j|^2); DiscreteInfinity is max_j |u_j|.
// Throws ErrorKind::NonFinite on NaN input.
double norm(const State& state, NormKind kind);
double norm_difference(const State& a, const State& b, NormKind kind);

State operator+(const State& a, const State& b);
State operator-(const State& a, const State& b);
State operator*(Complex scalar, const State& a);

// a += alpha * b
void axpy(Complex alpha, const State& b, State& a);

void require_finite(const State& state, const char* context);
void require_same_shape(const State& a, const State& b, const char* context);

}  // namespace splitstep

#endif
