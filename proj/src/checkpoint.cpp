#include "tgvlab/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "tgvlab/errors.hpp"

namespace tgvlab {

namespace {

constexpr char kMagic[8] = {'T', 'G', 'V', 'R', 'L', 'A', 'B', '1'};
constexpr std::uint32_t kEndianTag = 0x01020304u;
constexpr std::uint32_t kFormatVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "coefficient blocks are written as raw little-endian doubles");

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
                 static_cast<char>(v >> 24)};
    out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(v >> (8 * i));
    out.write(b, 8);
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

}  // namespace

void write_checkpoint(const std::string& path, const SolverState& state, double nu) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CheckpointError("cannot open checkpoint for writing: " + tmp);
        out.write(kMagic, 8);
        put_u32(out, kEndianTag);
        put_u32(out, kFormatVersion);
        put_u64(out, static_cast<std::uint64_t>(state.field.grid().n()));
        put_f64(out, nu);
        put_f64(out, state.dt);
        put_f64(out, state.t());
        put_u64(out, static_cast<std::uint64_t>(state.step_index));
        const auto& data = state.field.raw();
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size() * sizeof(complex_t)));
        if (!out) throw CheckpointError("short write to checkpoint: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("cannot move checkpoint into place: " + path + ": " + ec.message());
}

CheckpointData read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointError("cannot open checkpoint: " + path);

    char magic[8] = {};
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0) {
        throw CheckpointError("bad checkpoint magic in " + path);
    }
    const std::uint32_t tag = get_u32(in);
    if (tag != kEndianTag) throw CheckpointError("checkpoint endianness mismatch in " + path);
    const std::uint32_t version = get_u32(in);
    if (version != kFormatVersion) {
        throw CheckpointError("unsupported checkpoint version " + std::to_string(version) + " in " +
                              path);
    }
    const std::uint64_t n = get_u64(in);
    if (n < 4 || n % 2 != 0 || n > (1u << 20)) {
        throw CheckpointError("implausible grid size in checkpoint " + path);
    }
    CheckpointData data;
    data.nu = get_f64(in);
    const double dt = get_f64(in);
    const double t_header = get_f64(in);
    const std::uint64_t step_index = get_u64(in);
    if (!in) throw CheckpointError("truncated checkpoint header in " + path);

    WaveGrid grid(static_cast<int>(n));
    data.state.field = SpectralVectorField(grid);
    data.state.dt = dt;
    data.state.step_index = static_cast<long long>(step_index);
    auto& coeffs = data.state.field.raw();
    in.read(reinterpret_cast<char*>(coeffs.data()),
            static_cast<std::streamsize>(coeffs.size() * sizeof(complex_t)));
    if (in.gcount() != static_cast<std::streamsize>(coeffs.size() * sizeof(complex_t))) {
        throw CheckpointError("truncated coefficient block in " + path);
    }
    (void)t_header;  // informational; step_index * dt is authoritative
    return data;
}

}  // namespace tgvlab
