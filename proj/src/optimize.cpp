#include "fracwhittle/optimize.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fracwhittle/errors.hpp"

namespace fracwhittle {

ScalarMinResult minimize_grid_golden(const std::function<double(double)>& f,
                                     double lo, double hi, double step, double tol) {
    if (!(lo < hi) || !(step > 0.0) || !(tol > 0.0))
        throw InvalidParameter("minimize_grid_golden: need lo < hi and step, tol > 0");

    ScalarMinResult res;
    res.x = lo;
    res.fx = std::numeric_limits<double>::infinity();

    auto eval = [&](double x) {
        const double v = f(x);
        ++res.n_evals;
        if (v < res.fx) {
            res.fx = v;
            res.x = x;
            res.evaluable = true;
        }
        return v;
    };

    std::vector<double> grid;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step));
    grid.reserve(count + 2);
    for (std::size_t i = 0; i <= count; ++i) {
        const double p = lo + static_cast<double>(i) * step;
        if (p < hi) grid.push_back(p);
    }
    grid.push_back(hi);

    std::size_t best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = eval(grid[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    if (!res.evaluable) return res;

    double a = grid[best > 0 ? best - 1 : 0];
    double b = grid[best + 1 < grid.size() ? best + 1 : grid.size() - 1];
    if (!(b - a > tol)) return res;

    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    for (int iter = 0; iter < 200 && b - a > tol; ++iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = eval(d);
        }
    }
    return res;
}

} // namespace fracwhittle
