#pragma once

// Self-describing binary field container:
//   bytes 0-7   magic "HATSNAP1"
//   u32         dtype (0 = float64, 1 = complex128)
//   u32         ndim
//   u64 * ndim  dims (row-major payload)
//   f64 * ndim  axis origins
//   f64 * ndim  axis spacings
//   payload     values, row-major, little-endian
// All integers little-endian.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hatom::io {

struct Snapshot {
    int dtype = 0; // 0 f64, 1 c128
    std::vector<std::uint64_t> dims;
    std::vector<double> origin;
    std::vector<double> spacing;
    std::vector<double> f64;                 // filled when dtype == 0
    std::vector<std::complex<double>> c128;  // filled when dtype == 1
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

} // namespace hatom::io
