#include "singcomb/lle/export.hpp"

#include <bit>
#include <cstring>
#include <ostream>

#include "singcomb/lle/fft.hpp"
#include "singcomb/util/fmt.hpp"

namespace singcomb::lle {

namespace {

static_assert(std::endian::native == std::endian::little,
              "binary trajectory dump assumes a little-endian host");

// k-space snapshot, 1/M convention, natural order.
void to_modes(const std::vector<std::complex<double>>& field, const Fft& fft,
              std::vector<std::complex<double>>& out) {
    out = field;
    fft.forward(out.data());
    const double inv = 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= inv;
}

void put_u64(std::ostream& os, std::uint64_t v) {
    char buf[8];
    std::memcpy(buf, &v, 8);
    os.write(buf, 8);
}

void put_f64(std::ostream& os, double v) {
    char buf[8];
    std::memcpy(buf, &v, 8);
    os.write(buf, 8);
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
    const std::size_t m = trajectory.modes;
    const RingGrid grid(m);
    const Fft fft(m);
    std::vector<std::complex<double>> modes;
    os << "snapshot_index,field,mode_k,re,im\n";
    for (std::size_t s = 0; s < trajectory.snapshots.size(); ++s) {
        const char* names[2] = {"A", "B"};
        for (int f = 0; f < 2; ++f) {
            to_modes(f == 0 ? trajectory.snapshots[s].a
                            : trajectory.snapshots[s].b,
                     fft, modes);
            // centered order: k = -M/2 .. M/2-1 maps to natural index k mod M
            for (long k = -static_cast<long>(m) / 2;
                 k < static_cast<long>(m) / 2; ++k) {
                const std::size_t j =
                    static_cast<std::size_t>(k >= 0 ? k : k + static_cast<long>(m));
                os << s << ',' << names[f] << ',' << k << ','
                   << util::double17(modes[j].real()) << ','
                   << util::double17(modes[j].imag()) << '\n';
            }
        }
    }
}

void write_trajectory_binary(std::ostream& os, const Trajectory& trajectory) {
    const std::size_t m = trajectory.modes;
    const Fft fft(m);
    std::vector<std::complex<double>> modes;
    put_u64(os, m);
    put_u64(os, trajectory.snapshots.size());
    for (const auto& snap : trajectory.snapshots) {
        for (int f = 0; f < 2; ++f) {
            to_modes(f == 0 ? snap.a : snap.b, fft, modes);
            for (long k = -static_cast<long>(m) / 2;
                 k < static_cast<long>(m) / 2; ++k) {
                const std::size_t j =
                    static_cast<std::size_t>(k >= 0 ? k : k + static_cast<long>(m));
                put_f64(os, modes[j].real());
                put_f64(os, modes[j].imag());
            }
        }
    }
}

}  // namespace singcomb::lle
