#include "splitstep/grid.hpp"

#include <cmath>
#include <string>

#include "splitstep/errors.hpp"

namespace splitstep {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(int dim, int points_per_dim, const std::vector<Interval>& extents)
    : dim_(dim), n_(points_per_dim) {
    if (dim != 1 && dim != 2)
        throw SplitError(ErrorKind::Config, "grid dim must be 1 or 2, got " + std::to_string(dim));
    if (!is_power_of_two(n_) || n_ < 8)
        throw SplitError(ErrorKind::Config, "points per dim must be a power of two >= 8, got " +
                                                std::to_string(n_));
    if (extents.empty() || static_cast<int>(extents.size()) > dim)
        throw SplitError(ErrorKind::Config, "need one extent interval per dimension");

    for (int d = 0; d < dim_; ++d) {
        const Interval& e = extents[std::min<std::size_t>(d, extents.size() - 1)];
        const double len = e.length();
        if (!std::isfinite(e.lo) || !std::isfinite(e.hi) || !(len > 0.0))
            throw SplitError(ErrorKind::Config, "degenerate grid extent");
        extent_[d] = e;
        auto& k = wavenumbers_[d];
        k.resize(n_);
        const double base = 2.0 * M_PI / len;
        for (int j = 0; j < n_; ++j) {
            const int m = (j < n_ / 2) ? j : j - n_;
            k[j] = base * m;
        }
    }
}

std::size_t Grid::total_points() const {
    std::size_t total = static_cast<std::size_t>(n_);
    if (dim_ == 2) total *= static_cast<std::size_t>(n_);
    return total;
}

double Grid::cell_volume() const {
    double v = spacing(0);
    if (dim_ == 2) v *= spacing(1);
    return v;
}

double Grid::coordinate(int d, int index) const {
    return extent_[check_dim(d)].lo + spacing(d) * index;
}

std::size_t Grid::flat_index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * n_ + ix;
}

bool Grid::same_layout(const Grid& other) const {
    if (dim_ != other.dim_ || n_ != other.n_) return false;
    for (int d = 0; d < dim_; ++d)
        if (extent_[d].lo != other.extent_[d].lo || extent_[d].hi != other.extent_[d].hi)
            return false;
    return true;
}

int Grid::check_dim(int d) const {
    if (d < 0 || d >= dim_)
        throw SplitError(ErrorKind::Config, "dimension index out of range");
    return d;
}

GridPtr build_grid(int dim, int points_per_dim, const std::vector<Interval>& extents) {
    return std::make_shared<Grid>(dim, points_per_dim, extents);
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return "CONFIG";
        case ErrorKind::NonFinite: return "NON_FINITE";
        case ErrorKind::SymbolOverflow: return "SYMBOL_OVERFLOW";
        case ErrorKind::Divergence: return "DIVERGENCE";
        case ErrorKind::Unstable: return "UNSTABLE";
        case ErrorKind::FlowFailure: return "FLOW_FAILURE";
        case ErrorKind::Io: return "IO";
    }
    return "UNKNOWN";
}

}  // namespace splitstep
