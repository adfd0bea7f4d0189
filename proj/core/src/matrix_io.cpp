#include "qdwh/matrix_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace qdwh {

namespace {

constexpr char kMagic[4] = {'Q', 'D', 'W', 'H'};
constexpr std::uint8_t kVersion = 1;

void put_u64_le(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64_le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

}  // namespace

void write_matrix(const std::filesystem::path& path, const DenseMatrix& a) {
    std::string buf;
    buf.reserve(21 + 8 * a.rows() * a.cols());
    buf.append(kMagic, 4);
    buf.push_back(static_cast<char>(kVersion));
    put_u64_le(buf, a.rows());
    put_u64_le(buf, a.cols());
    const double* d = a.data();
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        put_u64_le(buf, std::bit_cast<std::uint64_t>(d[i]));
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("write_matrix: cannot open " + path.string());
    f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!f) throw std::runtime_error("write_matrix: write failed for " + path.string());
}

DenseMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_matrix: cannot open " + path.string());
    std::string buf((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (buf.size() < 21 || std::memcmp(buf.data(), kMagic, 4) != 0)
        throw std::runtime_error("read_matrix: not a QDWH matrix file: " + path.string());
    if (static_cast<std::uint8_t>(buf[4]) != kVersion)
        throw std::runtime_error("read_matrix: unsupported version in " + path.string());
    const unsigned char* p = reinterpret_cast<const unsigned char*>(buf.data());
    const std::uint64_t rows = get_u64_le(p + 5);
    const std::uint64_t cols = get_u64_le(p + 13);
    if (buf.size() != 21 + 8 * rows * cols)
        throw std::runtime_error("read_matrix: truncated payload in " + path.string());
    DenseMatrix a(rows, cols);
    double* d = a.data();
    for (std::size_t i = 0; i < rows * cols; ++i)
        d[i] = std::bit_cast<double>(get_u64_le(p + 21 + 8 * i));
    return a;
}

void write_spectrum_csv(const std::filesystem::path& path, const std::vector<double>& values) {
    std::ostringstream out;
    out << "index,value\n";
    out.precision(17);
    for (std::size_t i = 0; i < values.size(); ++i) out << (i + 1) << "," << values[i] << "\n";
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("write_spectrum_csv: cannot open " + path.string());
    const std::string s = out.str();
    f.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!f) throw std::runtime_error("write_spectrum_csv: write failed for " + path.string());
}

std::vector<double> read_spectrum_csv(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_spectrum_csv: cannot open " + path.string());
    std::vector<double> values;
    std::string line;
    if (!std::getline(f, line)) return values;  // header
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("read_spectrum_csv: malformed line in " + path.string());
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    return values;
}

}  // namespace qdwh
