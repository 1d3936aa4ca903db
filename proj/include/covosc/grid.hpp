#ifndef COVOSC_GRID_HPP
#define COVOSC_GRID_HPP

#include <stdexcept>
#include <vector>

namespace covosc {

/// Rectangular evaluation grid in the (z, t) plane.
struct GridSpec {
    double z_min = -6.0;
    double z_max = 6.0;
    double t_min = -6.0;
    double t_max = 6.0;
    int n_z = 201;
    int n_t = 201;

    void validate() const
    {
        if (!(z_max > z_min) || !(t_max > t_min))
            throw std::domain_error("GridSpec: max must exceed min on each axis");
        if (n_z < 2 || n_z > 4096 || n_t < 2 || n_t > 4096)
            throw std::domain_error("GridSpec: point counts must be in [2, 4096]");
    }

    double dz() const { return (z_max - z_min) / (n_z - 1); }
    double dt() const { return (t_max - t_min) / (n_t - 1); }
    double z_at(int i) const { return z_min + i * dz(); }
    double t_at(int j) const { return t_min + j * dt(); }

    static GridSpec centered(double extent, int n)
    {
        GridSpec g{-extent, extent, -extent, extent, n, n};
        g.validate();
        return g;
    }
};

/// 1D sampling grid for marginal profiles.
struct Grid1D {
    double x_min = -6.0;
    double x_max = 6.0;
    int n = 201;

    void validate() const
    {
        if (!(x_max > x_min))
            throw std::domain_error("Grid1D: max must exceed min");
        if (n < 2 || n > 4096)
            throw std::domain_error("Grid1D: point count must be in [2, 4096]");
    }

    double dx() const { return (x_max - x_min) / (n - 1); }
    double at(int i) const { return x_min + i * dx(); }
};

} // namespace covosc

#endif
