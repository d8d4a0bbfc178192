#pragma once

// Data-parallel building blocks shared by the power-iteration solvers.
//
// Every kernel has a serial reference path and an OpenMP path. Row products are
// evaluated in CSR order on both paths, so they agree bit for bit. Reductions use a
// fixed block decomposition on the parallel path; the result depends only on the
// input, never on the number of threads.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace citerank::kernels {

struct Execution {
    bool parallel = true;
    /// 0 selects the OpenMP default.
    int threads = 0;

    static Execution serial() { return {false, 0}; }
    static Execution with_threads(int n) { return {true, n}; }
};

/// Number of elements each partial sum covers in parallel reductions.
inline constexpr std::size_t kReductionBlock = 1024;

/// y[r] = sum over entries k of row r of values[k] * x[cols[k]].
struct CsrMatrix {
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> cols;
    std::vector<double> values;

    std::size_t nonzeros() const noexcept { return cols.size(); }
};

void multiply(const CsrMatrix& m, std::span<const double> x, std::span<double> y,
              Execution exec = {});

double sum(std::span<const double> x, Execution exec = {});
double l1_distance(std::span<const double> a, std::span<const double> b, Execution exec = {});
double l2_norm(std::span<const double> x, Execution exec = {});
double l2_distance(std::span<const double> a, std::span<const double> b, Execution exec = {});
double linf_distance(std::span<const double> a, std::span<const double> b, Execution exec = {});
double dot(std::span<const double> a, std::span<const double> b, Execution exec = {});

void scale(std::span<double> x, double factor, Execution exec = {});

} // namespace citerank::kernels
