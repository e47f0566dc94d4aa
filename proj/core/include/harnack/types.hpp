#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace harnack {

/// Open spatial interval (alpha, beta).
struct Interval {
    double alpha = 0.0;
    double beta = 1.0;

    double length() const noexcept { return beta - alpha; }
    bool contains(double x) const noexcept { return alpha < x && x < beta; }
};

/// Full problem description for one experiment cell.
///
/// `tau_pre` is the width of the pre-history (-tau_pre, 0] on which the
/// solution is already defined, so nothing has to be said about t = 0 itself.
struct Params {
    double p = 1.5;
    Interval domain{-10.0, 10.0};
    double T = 1.0;
    double tau_pre = 0.05;
    double M = 1.0;
    double y = 0.0;
    std::size_t n_cells = 512;
    double dt = 1e-3;
    double eps_reg = 1e-8;
    double newton_tol = 1e-10;
    int newton_max_iter = 200;

    /// Throws InvalidInput naming the first offending field.
    void validate() const;
};

/// Uniform grid of n_cells + 1 nodes on [alpha, beta].
class Grid {
public:
    Grid(Interval domain, std::size_t n_cells);

    std::size_t n_cells() const noexcept { return n_cells_; }
    std::size_t n_nodes() const noexcept { return nodes_.size(); }
    double h() const noexcept { return h_; }
    const Interval& domain() const noexcept { return domain_; }
    std::span<const double> nodes() const noexcept { return nodes_; }
    double node(std::size_t i) const { return nodes_[i]; }
    double midpoint(std::size_t cell) const { return nodes_[cell] + 0.5 * h_; }

    /// Nearest node to x (clamped to the grid).
    std::size_t nearest(double x) const;

    /// Smallest node range [first, last] covering the closed interval
    /// [x_lo, x_hi]; the range snaps outward. Throws InvalidInput when the
    /// interval pokes out of the grid.
    std::pair<std::size_t, std::size_t> covering(double x_lo, double x_hi) const;

    /// Trapezoid node weights: h inside, h/2 at both ends.
    std::vector<double> mass_weights() const;

private:
    Interval domain_;
    std::size_t n_cells_;
    double h_;
    std::vector<double> nodes_;
};

/// Nodal values on a grid at one time level.
struct Field {
    std::vector<double> values;
    double time = 0.0;

    std::size_t size() const noexcept { return values.size(); }
    /// Throws InvalidInput if the length mismatches or a value is not finite.
    void validate(const Grid& grid) const;
};

/// Time-dependent scalar, e.g. a Dirichlet value g(t).
using TimeFunction = std::function<double(double)>;

/// Condition at one end of the interval.
struct EndCondition {
    enum class Kind { dirichlet, zero_flux };
    Kind kind = Kind::zero_flux;
    TimeFunction value;  // only for dirichlet

    static EndCondition dirichlet(TimeFunction g) { return {Kind::dirichlet, std::move(g)}; }
    static EndCondition dirichlet(double c) {
        return {Kind::dirichlet, [c](double) { return c; }};
    }
    static EndCondition zero_flux() { return {Kind::zero_flux, {}}; }
};

/// Interior node held at a prescribed value u(x_node, t) = value(t).
struct InteriorPin {
    std::size_t node = 0;
    TimeFunction value;
};

struct BoundarySpec {
    EndCondition left = EndCondition::zero_flux();
    EndCondition right = EndCondition::zero_flux();
    std::vector<InteriorPin> interior_pins;
    std::string description = "zero_flux/zero_flux";

    static BoundarySpec zero_flux();
    static BoundarySpec homogeneous_dirichlet();
};

/// Solution history: one Field per recorded time, all on the same grid.
class Trajectory {
public:
    Trajectory(Grid grid, BoundarySpec bc);

    const Grid& grid() const noexcept { return grid_; }
    const BoundarySpec& bc_record() const noexcept { return bc_; }
    std::span<const Field> fields() const noexcept { return fields_; }
    const Field& field(std::size_t n) const { return fields_[n]; }
    const Field& front() const { return fields_.front(); }
    const Field& back() const { return fields_.back(); }
    std::size_t size() const noexcept { return fields_.size(); }
    std::vector<double> times() const;

    /// Appends a level; its time must exceed the last one.
    void push_back(Field f);

private:
    Grid grid_;
    BoundarySpec bc_;
    std::vector<Field> fields_;
};

}  // namespace harnack
