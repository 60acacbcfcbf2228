#include "hatom/snapshot.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace hatom::io {

namespace {

constexpr char kMagic[8] = {'H', 'A', 'T', 'S', 'N', 'A', 'P', '1'};

template <class T>
void put(std::ofstream& f, const T& v) {
    f.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& f) {
    T v{};
    f.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!f) throw std::runtime_error("snapshot: truncated file");
    return v;
}

std::size_t element_count(const Snapshot& s) {
    std::size_t n = 1;
    for (auto d : s.dims) n *= static_cast<std::size_t>(d);
    return n;
}

} // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
    if (snap.dims.size() != snap.origin.size() || snap.dims.size() != snap.spacing.size()) {
        throw std::invalid_argument("snapshot: dims/origin/spacing rank mismatch");
    }
    const std::size_t n = element_count(snap);
    if (snap.dtype == 0 && snap.f64.size() != n)
        throw std::invalid_argument("snapshot: payload size mismatch (f64)");
    if (snap.dtype == 1 && snap.c128.size() != n)
        throw std::invalid_argument("snapshot: payload size mismatch (c128)");

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(kMagic, 8);
    put<std::uint32_t>(f, static_cast<std::uint32_t>(snap.dtype));
    put<std::uint32_t>(f, static_cast<std::uint32_t>(snap.dims.size()));
    for (auto d : snap.dims) put<std::uint64_t>(f, d);
    for (auto o : snap.origin) put<double>(f, o);
    for (auto s : snap.spacing) put<double>(f, s);
    if (snap.dtype == 0) {
        f.write(reinterpret_cast<const char*>(snap.f64.data()), n * sizeof(double));
    } else {
        f.write(reinterpret_cast<const char*>(snap.c128.data()), n * sizeof(std::complex<double>));
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    char magic[8];
    f.read(magic, 8);
    if (!f || std::memcmp(magic, kMagic, 8) != 0) {
        throw std::runtime_error("snapshot: bad magic in " + path);
    }
    Snapshot s;
    s.dtype = static_cast<int>(get<std::uint32_t>(f));
    if (s.dtype != 0 && s.dtype != 1) throw std::runtime_error("snapshot: unknown dtype");
    const auto ndim = get<std::uint32_t>(f);
    s.dims.resize(ndim);
    s.origin.resize(ndim);
    s.spacing.resize(ndim);
    for (auto& d : s.dims) d = get<std::uint64_t>(f);
    for (auto& o : s.origin) o = get<double>(f);
    for (auto& sp : s.spacing) sp = get<double>(f);
    const std::size_t n = element_count(s);
    if (s.dtype == 0) {
        s.f64.resize(n);
        f.read(reinterpret_cast<char*>(s.f64.data()), n * sizeof(double));
    } else {
        s.c128.resize(n);
        f.read(reinterpret_cast<char*>(s.c128.data()), n * sizeof(std::complex<double>));
    }
    if (!f) throw std::runtime_error("snapshot: truncated payload in " + path);
    return s;
}

} // namespace hatom::io
