#include "ctsurf/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "ctsurf/gauss_nodes.hpp"

namespace ctsurf {

namespace {

struct Interval {
    double a, b;
    double value;   // GL15 estimate
    double error;   // |GL15 - GL7|
};

Interval evaluate(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double v15 = 0.0, v7 = 0.0;
    for (int i = 0; i < 15; ++i)
        v15 += detail::kGL15Weights[i] * f(mid + hw * detail::kGL15Nodes[i]);
    for (int i = 0; i < 7; ++i)
        v7 += detail::kGL7Weights[i] * f(mid + hw * detail::kGL7Nodes[i]);
    v15 *= hw;
    v7 *= hw;
    return {a, b, v15, std::abs(v15 - v7)};
}

struct WorstFirst {
    bool operator()(const Interval& x, const Interval& y) const {
        return x.error < y.error;
    }
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, int max_intervals, double abs_floor) {
    if (!(b > a)) return {0.0, 0.0, 0};
    std::priority_queue<Interval, std::vector<Interval>, WorstFirst> heap;
    heap.push(evaluate(f, a, b));
    double total = heap.top().value;
    double err = heap.top().error;
    int count = 1;
    while (err > std::max(rel_tol * std::abs(total), abs_floor)) {
        if (count >= max_intervals)
            throw QuadratureFailure("adaptive quadrature: interval cap reached, error " +
                                    std::to_string(err));
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Interval left = evaluate(f, worst.a, mid);
        Interval right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    return {total, err, count};
}

}  // namespace ctsurf
