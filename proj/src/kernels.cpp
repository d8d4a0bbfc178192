#include "citerank/kernels.hpp"

#include "citerank/error.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace citerank::kernels {

namespace {

int thread_count(const Execution& exec) {
    return exec.threads > 0 ? exec.threads : omp_get_max_threads();
}

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ArgumentError("kernel operands differ in length");
    }
}

// Sums term(i) for i in [0, n). The parallel path sums fixed-size blocks
// independently and then adds the block partials left to right.
template <class Term>
double reduce_sum(std::size_t n, const Execution& exec, Term term) {
    if (!exec.parallel) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += term(i);
        }
        return acc;
    }
    const auto blocks = static_cast<std::ptrdiff_t>((n + kReductionBlock - 1) / kReductionBlock);
    std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static) num_threads(thread_count(exec))
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
        const auto lo = static_cast<std::size_t>(b) * kReductionBlock;
        const auto hi = std::min(n, lo + kReductionBlock);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            acc += term(i);
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double acc = 0.0;
    for (double p : partial) {
        acc += p;
    }
    return acc;
}

template <class Term>
double reduce_max(std::size_t n, const Execution& exec, Term term) {
    // max is order-independent, so a plain OpenMP reduction is deterministic.
    double best = 0.0;
    if (!exec.parallel) {
        for (std::size_t i = 0; i < n; ++i) {
            best = std::max(best, term(i));
        }
        return best;
    }
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) reduction(max : best) num_threads(thread_count(exec))
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        best = std::max(best, term(static_cast<std::size_t>(i)));
    }
    return best;
}

inline double row_product(const CsrMatrix& m, std::span<const double> x, std::size_t row) {
    double acc = 0.0;
    for (std::size_t k = m.offsets[row]; k < m.offsets[row + 1]; ++k) {
        acc += m.values[k] * x[m.cols[k]];
    }
    return acc;
}

} // namespace

void multiply(const CsrMatrix& m, std::span<const double> x, std::span<double> y, Execution exec) {
    require_same_size(x.size(), m.columns);
    require_same_size(y.size(), m.rows);
    if (!exec.parallel) {
        for (std::size_t r = 0; r < m.rows; ++r) {
            y[r] = row_product(m, x, r);
        }
        return;
    }
    const auto rows = static_cast<std::ptrdiff_t>(m.rows);
#pragma omp parallel for schedule(static) num_threads(thread_count(exec))
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
        y[static_cast<std::size_t>(r)] = row_product(m, x, static_cast<std::size_t>(r));
    }
}

double sum(std::span<const double> x, Execution exec) {
    return reduce_sum(x.size(), exec, [&](std::size_t i) { return x[i]; });
}

double dot(std::span<const double> a, std::span<const double> b, Execution exec) {
    require_same_size(a.size(), b.size());
    return reduce_sum(a.size(), exec, [&](std::size_t i) { return a[i] * b[i]; });
}

double l1_distance(std::span<const double> a, std::span<const double> b, Execution exec) {
    require_same_size(a.size(), b.size());
    return reduce_sum(a.size(), exec, [&](std::size_t i) { return std::abs(a[i] - b[i]); });
}

double l2_norm(std::span<const double> x, Execution exec) {
    return std::sqrt(reduce_sum(x.size(), exec, [&](std::size_t i) { return x[i] * x[i]; }));
}

double l2_distance(std::span<const double> a, std::span<const double> b, Execution exec) {
    require_same_size(a.size(), b.size());
    return std::sqrt(reduce_sum(a.size(), exec, [&](std::size_t i) {
        const double d = a[i] - b[i];
        return d * d;
    }));
}

double linf_distance(std::span<const double> a, std::span<const double> b, Execution exec) {
    require_same_size(a.size(), b.size());
    return reduce_max(a.size(), exec, [&](std::size_t i) { return std::abs(a[i] - b[i]); });
}

void scale(std::span<double> x, double factor, Execution exec) {
    if (!exec.parallel) {
        for (auto& v : x) {
            v *= factor;
        }
        return;
    }
    const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static) num_threads(thread_count(exec))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] *= factor;
    }
}

} // namespace citerank::kernels
