#ifndef SPLITSTEP_GRID_HPP
#define SPLITSTEP_GRID_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace splitstep {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double length() const { return hi - lo; }
};

// Uniform periodic tensor grid in one or two dimensions with the same number
// of points per dimension (a power of two, so the radix-2 transforms apply).
// Wavenumbers follow the standard FFT ordering k_j = 2*pi*m/L with
// m in {0,...,N/2-1, -N/2,...,-1}; the Nyquist mode is kept as m = -N/2.
class Grid {
  public:
    Grid(int dim, int points_per_dim, const std::vector<Interval>& extents);

    int dim() const { return dim_; }
    int points_per_dim() const { return n_; }
    std::size_t total_points() const;

    const Interval& extent(int d) const { return extent_[check_dim(d)]; }
    double spacing(int d) const { return extent_[check_dim(d)].length() / n_; }
    // integration weight of one cell: dx in 1-D, dx*dy in 2-D
    double cell_volume() const;

    const std::vector<double>& wavenumbers(int d) const { return wavenumbers_[check_dim(d)]; }
    double coordinate(int d, int index) const;

    // Flat index layout: 1-D -> ix; 2-D -> iy*N + ix.
    std::size_t flat_index(int ix, int iy = 0) const;

    bool same_layout(const Grid& other) const;

  private:
    int check_dim(int d) const;

    int dim_;
    int n_;
    std::array<Interval, 2> extent_;
    std::array<std::vector<double>, 2> wavenumbers_;
};

using GridPtr = std::shared_ptr<const Grid>;

// Throws ErrorKind::Config unless n is a power of two >= 8 and every extent
// has positive finite length. `extents` holds one interval per dimension
// (a single interval is reused for both dimensions of a square grid).
GridPtr build_grid(int dim, int points_per_dim, const std::vector<Interval>& extents);

}  // namespace splitstep

#endif
