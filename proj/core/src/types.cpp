#include "harnack/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "harnack/errors.hpp"

namespace harnack {

namespace {

void require(bool ok, const std::string& field, const std::string& rule) {
    if (!ok) throw InvalidInput("params." + field + ": " + rule);
}

}  // namespace

void Params::validate() const {
    require(std::isfinite(p) && p > 1.0 && p < 2.0, "p", "need 1 < p < 2");
    require(std::isfinite(domain.alpha) && std::isfinite(domain.beta) &&
                domain.alpha < domain.beta,
            "domain", "need alpha < beta");
    require(domain.contains(y), "y", "anchor must lie inside (alpha, beta)");
    require(std::isfinite(T) && T > 0.0, "T", "need T > 0");
    require(std::isfinite(tau_pre) && tau_pre > 0.0, "tau_pre", "need tau_pre > 0");
    require(std::isfinite(M) && M > 0.0, "M", "need M > 0");
    require(n_cells >= 16, "n_cells", "need n_cells >= 16");
    require(std::isfinite(dt) && dt > 0.0, "dt", "need dt > 0");
    require(std::isfinite(eps_reg) && eps_reg >= 0.0, "eps_reg", "need eps_reg >= 0");
    require(std::isfinite(newton_tol) && newton_tol > 0.0, "newton_tol", "need newton_tol > 0");
    require(newton_max_iter > 0, "newton_max_iter", "need newton_max_iter > 0");
}

Grid::Grid(Interval domain, std::size_t n_cells)
    : domain_(domain), n_cells_(n_cells), h_(domain.length() / static_cast<double>(n_cells)) {
    if (n_cells == 0 || !(domain.alpha < domain.beta)) {
        throw InvalidInput("grid needs n_cells > 0 and alpha < beta");
    }
    nodes_.resize(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i) {
        nodes_[i] = domain.alpha + static_cast<double>(i) * h_;
    }
    nodes_.back() = domain.beta;
}

std::size_t Grid::nearest(double x) const {
    const double s = std::round((x - domain_.alpha) / h_);
    if (s <= 0.0) return 0;
    return std::min(static_cast<std::size_t>(s), n_cells_);
}

std::pair<std::size_t, std::size_t> Grid::covering(double x_lo, double x_hi) const {
    // Small slack so that an endpoint sitting on a node does not snap one past it.
    const double slack = 1e-9 * h_;
    const double lo = std::floor((x_lo - domain_.alpha + slack) / h_);
    const double hi = std::ceil((x_hi - domain_.alpha - slack) / h_);
    if (lo < 0.0 || hi > static_cast<double>(n_cells_) || x_lo > x_hi) {
        throw InvalidInput("interval [" + std::to_string(x_lo) + ", " + std::to_string(x_hi) +
                           "] does not fit the grid");
    }
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

std::vector<double> Grid::mass_weights() const {
    std::vector<double> w(n_nodes(), h_);
    w.front() = 0.5 * h_;
    w.back() = 0.5 * h_;
    return w;
}

void Field::validate(const Grid& grid) const {
    if (values.size() != grid.n_nodes()) {
        throw InvalidInput("field has " + std::to_string(values.size()) + " values, grid has " +
                           std::to_string(grid.n_nodes()) + " nodes");
    }
    if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
        throw InvalidInput("field contains non-finite values");
    }
    if (!std::isfinite(time)) throw InvalidInput("field time is not finite");
}

BoundarySpec BoundarySpec::zero_flux() { return {}; }

BoundarySpec BoundarySpec::homogeneous_dirichlet() {
    BoundarySpec bc;
    bc.left = EndCondition::dirichlet(0.0);
    bc.right = EndCondition::dirichlet(0.0);
    bc.description = "dirichlet(0)/dirichlet(0)";
    return bc;
}

Trajectory::Trajectory(Grid grid, BoundarySpec bc) : grid_(std::move(grid)), bc_(std::move(bc)) {}

std::vector<double> Trajectory::times() const {
    std::vector<double> t;
    t.reserve(fields_.size());
    for (const auto& f : fields_) t.push_back(f.time);
    return t;
}

void Trajectory::push_back(Field f) {
    f.validate(grid_);
    if (!fields_.empty() && !(f.time > fields_.back().time)) {
        throw InvalidInput("trajectory times must be strictly increasing");
    }
    fields_.push_back(std::move(f));
}

}  // namespace harnack
