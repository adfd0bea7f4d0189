#pragma once

#include <filesystem>

#include "qdwh/matrix.hpp"

namespace qdwh {

// Binary matrix file, bit-exact round trip:
//   magic "QDWH" | version u8 = 1 | rows u64 LE | cols u64 LE |
//   rows*cols f64 LE, column-major
void write_matrix(const std::filesystem::path& path, const DenseMatrix& a);
DenseMatrix read_matrix(const std::filesystem::path& path);

// Spectrum sidecar: CSV "index,value" with 1-based indices.
void write_spectrum_csv(const std::filesystem::path& path, const std::vector<double>& values);
std::vector<double> read_spectrum_csv(const std::filesystem::path& path);

}  // namespace qdwh
