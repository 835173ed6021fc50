// proxeq: proximal mappings and fixed-point methods for equilibrium problems
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>

// Data-parallel inner loops behind the vector and matrix layers. Every kernel
// has a scalar reference implementation and, on x86-64 hardware with AVX2, a
// vectorized variant selected once per process. Reductions use a fixed lane
// order so repeated runs on the same machine produce bit-identical results.
namespace proxeq::kernels {

enum class Backend { Scalar, Avx2 };

/// Backend in use for this process.
Backend active_backend();
const char* backend_name(Backend b);

/// Pin the backend, or restore runtime detection with nullopt. Requesting
/// Avx2 on hardware without it keeps the scalar path. Not thread-safe; meant
/// for tests and CLI startup.
void force_backend(std::optional<Backend> b);

double dot(std::span<const double> a, std::span<const double> b);
double sqnorm(std::span<const double> a);
double sqdist(std::span<const double> a, std::span<const double> b);

/// out = x + a*y
void add_scaled(std::span<const double> x, double a, std::span<const double> y,
                std::span<double> out);
/// out = a*x + b*y
void axpby(double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out);
/// out[i] = min(hi[i], max(lo[i], x[i]))
void clamp(std::span<const double> x, std::span<const double> lo,
           std::span<const double> hi, std::span<double> out);
/// out[i] = sign(x[i]) * max(|x[i]| - t[i], 0), thresholds t >= 0
void soft_threshold(std::span<const double> x, std::span<const double> t,
                    std::span<double> out);
/// Dense row-major product out = M x, where m holds rows*cols entries.
void matvec(std::span<const double> m, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> out);

/// Scalar reference path, callable directly by equivalence tests.
namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
double sqnorm(std::span<const double> a);
double sqdist(std::span<const double> a, std::span<const double> b);
void add_scaled(std::span<const double> x, double a, std::span<const double> y,
                std::span<double> out);
void axpby(double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out);
void clamp(std::span<const double> x, std::span<const double> lo,
           std::span<const double> hi, std::span<double> out);
void soft_threshold(std::span<const double> x, std::span<const double> t,
                    std::span<double> out);
void matvec(std::span<const double> m, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> out);
}  // namespace scalar

namespace avx2 {
/// True when the AVX2 path is compiled in and this CPU supports it.
bool available();
}  // namespace avx2

}  // namespace proxeq::kernels
