#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdwh {

// Thrown when a Cholesky pivot is not positive; callers that have a QR-based
// alternative are expected to catch this and fall back.
class NotPositiveDefinite : public std::runtime_error {
public:
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iteration hits its cap; the message carries the trace.
class NotConverged : public std::runtime_error {
public:
    explicit NotConverged(const std::string& what) : std::runtime_error(what) {}
};

// Seed for the counter-based random generator. Identical seed and parameters
// give a bitwise identical matrix.
struct Seed {
    std::uint64_t value = 0;
};

// Dense real double-precision matrix, column-major. The universal carrier for
// every matrix in the library. Zero-column matrices are allowed as result
// payloads (empty spectra); operations require rows >= 1, cols >= 1.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* col(std::size_t j) { return data_.data() + j * rows_; }
    const double* col(std::size_t j) const { return data_.data() + j * rows_; }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix transpose(const DenseMatrix& a);

// c = a * b, a' * b, a * b'
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix scaled(const DenseMatrix& a, double s);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);

// (a + a') / 2
DenseMatrix symmetrize(const DenseMatrix& a);

// Copy of cols [first, first + count)
DenseMatrix column_block(const DenseMatrix& a, std::size_t first, std::size_t count);

double frobenius_norm(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);
double trace(const DenseMatrix& a);

bool all_finite(const DenseMatrix& a);

// Throws std::invalid_argument when a has a non-finite entry or is empty.
void require_finite(const DenseMatrix& a, const char* who);

}  // namespace qdwh
