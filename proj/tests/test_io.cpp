#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "qdwh/kernels.hpp"
#include "qdwh/matrix_io.hpp"

using namespace qdwh;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qdwh_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("matrix file round trip is bitwise") {
    TempDir tmp;
    for (std::uint64_t s = 0; s < 5; ++s) {
        const DenseMatrix a = gaussian_matrix(7 + s, 3 + 2 * s, Seed{s});
        const fs::path p = tmp.path / ("m" + std::to_string(s) + ".qdwh");
        write_matrix(p, a);
        CHECK(read_matrix(p) == a);
    }
    // negative zero and extreme magnitudes survive
    DenseMatrix special(2, 2);
    special(0, 0) = -0.0;
    special(0, 1) = 1e-308;
    special(1, 0) = -1.7e308;
    special(1, 1) = 5e-324;
    const fs::path p = tmp.path / "special.qdwh";
    write_matrix(p, special);
    CHECK(read_matrix(p) == special);
}

TEST_CASE("matrix reader rejects malformed files") {
    TempDir tmp;
    {
        const fs::path p = tmp.path / "bad_magic.qdwh";
        std::ofstream f(p, std::ios::binary);
        f << "NOPE" << std::string(17, '\0');
    }
    CHECK_THROWS_AS(read_matrix(tmp.path / "bad_magic.qdwh"), std::runtime_error);

    {
        const DenseMatrix a = gaussian_matrix(4, 4, Seed{1});
        write_matrix(tmp.path / "trunc.qdwh", a);
        fs::resize_file(tmp.path / "trunc.qdwh", 40);
    }
    CHECK_THROWS_AS(read_matrix(tmp.path / "trunc.qdwh"), std::runtime_error);
    CHECK_THROWS_AS(read_matrix(tmp.path / "missing.qdwh"), std::runtime_error);
}

TEST_CASE("spectrum sidecar round trip") {
    TempDir tmp;
    const std::vector<double> values = {-5.25, -1e-17, 0.3333333333333333, 7.0, 1e300};
    const fs::path p = tmp.path / "spec.csv";
    write_spectrum_csv(p, values);
    const std::vector<double> back = read_spectrum_csv(p);
    REQUIRE(back.size() == values.size());
    for (std::size_t i = 0; i < values.size(); ++i) CHECK(back[i] == values[i]);

    // header line present
    std::ifstream f(p);
    std::string header;
    std::getline(f, header);
    CHECK(header == "index,value");
}
