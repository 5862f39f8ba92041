#include "singcomb/lle/integrator.hpp"

#include <cmath>

#include "singcomb/lle/fft.hpp"

namespace singcomb::lle {

namespace {

using Complex = std::complex<double>;

// sinh(z)/z with a series fallback near zero.
Complex sinhc(const Complex& z) {
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

// Exact step of the linear+pump part for one mode pair:
//   d/dt (a, b) = M (a, b) + f,   M = [[la, ik],[ik, lb]]
struct ModeStep {
    Complex e00, e01, e10, e11;  // exp(M h)
    Complex u0, u1;              // M^{-1} (exp(M h) - I) f, pump mode only
};

ModeStep make_mode_step(Complex la, Complex lb, double kappa, double h,
                        Complex fa, Complex fb) {
    const Complex c = 0.5 * (la + lb);
    const Complex delta = 0.5 * (la - lb);
    const Complex ik(0.0, kappa);
    // T = [[delta, ik],[ik, -delta]], T^2 = (delta^2 - kappa^2) I
    const Complex gamma = std::sqrt(delta * delta - kappa * kappa);
    const Complex gh = gamma * h;
    const Complex ch = std::cosh(gh);
    const Complex sh_over = sinhc(gh) * h;  // sinh(gamma h)/gamma

    const Complex ec = std::exp(c * h);
    ModeStep s;
    s.e00 = ec * (ch + sh_over * delta);
    s.e11 = ec * (ch - sh_over * delta);
    s.e01 = ec * (sh_over * ik);
    s.e10 = s.e01;

    s.u0 = 0.0;
    s.u1 = 0.0;
    if (fa != 0.0 || fb != 0.0) {
        // Solve M u = (E - I) f.
        const Complex w0 = (s.e00 - 1.0) * fa + s.e01 * fb;
        const Complex w1 = s.e10 * fa + (s.e11 - 1.0) * fb;
        const Complex det = la * lb - ik * ik;
        s.u0 = (lb * w0 - ik * w1) / det;
        s.u1 = (la * w1 - ik * w0) / det;
    }
    return s;
}

}  // namespace

Trajectory evolve(const DimerField& initial, const LLEParams& params,
                  const EvolutionConfig& config) {
    params.validate();
    config.validate();
    if (initial.a.size() != initial.b.size())
        throw std::invalid_argument("field arrays differ in length");
    const RingGrid grid(initial.modes());
    const std::size_t m = grid.modes;
    const double h = config.dt;

    const Fft fft(m);
    const std::vector<double> coupling = params.coupling.sample(m);

    // Per-mode exact linear steps; the pump enters at mode k = 0 only
    // (a flat drive in theta-space).
    std::vector<ModeStep> lin(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double k = static_cast<double>(grid.mode_number(j));
        const Complex la(-params.loss,
                         -(params.detuning_a + 0.5 * params.dispersion_d2 * k * k));
        const Complex lb(-params.loss,
                         -(params.detuning_b + 0.5 * params.dispersion_d2 * k * k));
        const Complex fa = (j == 0) ? Complex(params.pump_amplitude) : Complex(0.0);
        const Complex fb = (j == 0 && params.pump_both_fields)
                               ? Complex(params.pump_amplitude)
                               : Complex(0.0);
        lin[j] = make_mode_step(la, lb, coupling[j], h, fa, fb);
    }

    std::vector<Complex> a = initial.a;
    std::vector<Complex> b = initial.b;
    std::vector<Complex> ka(m), kb(m);

    const double bound2 = config.blowup_bound * config.blowup_bound;
    const double kerr = params.kerr_enabled ? static_cast<double>(params.kerr_sign) : 0.0;

    Trajectory traj;
    traj.modes = m;
    traj.dt = config.dt;
    traj.record_every = config.record_every;
    traj.snapshot_steps.push_back(0);
    traj.snapshots.push_back(initial);

    // Kerr phase rotation over an interval tau; returns false on blow-up.
    auto kerr_step = [&](double tau) {
        bool ok = true;
        for (std::size_t j = 0; j < m; ++j) {
            const double pa = std::norm(a[j]);
            const double pb = std::norm(b[j]);
            if (pa > bound2 || pb > bound2) ok = false;
            if (kerr != 0.0) {
                a[j] *= std::polar(1.0, kerr * pa * tau);
                b[j] *= std::polar(1.0, kerr * pb * tau);
            }
        }
        return ok;
    };

    auto linear_step = [&] {
        ka = a;
        kb = b;
        fft.forward(ka.data());
        fft.forward(kb.data());
        const double inv = 1.0 / static_cast<double>(m);
        for (std::size_t j = 0; j < m; ++j) {
            const Complex va = ka[j] * inv;
            const Complex vb = kb[j] * inv;
            const ModeStep& s = lin[j];
            ka[j] = s.e00 * va + s.e01 * vb + s.u0;
            kb[j] = s.e10 * va + s.e11 * vb + s.u1;
        }
        fft.inverse(ka.data());
        fft.inverse(kb.data());
        a.swap(ka);
        b.swap(kb);
    };

    bool pending_half = false;  // a trailing N(h/2) not yet applied
    for (long step = 1; step <= config.steps; ++step) {
        if (!kerr_step(pending_half ? h : h * 0.5)) {
            traj.blowup_step = step - 1;
            break;
        }
        pending_half = false;
        linear_step();
        const bool boundary =
            step % config.record_every == 0 || step == config.steps;
        if (boundary) {
            if (!kerr_step(h * 0.5)) {
                traj.blowup_step = step;
                break;
            }
            if (step % config.record_every == 0) {
                traj.snapshot_steps.push_back(step);
                traj.snapshots.push_back(DimerField{a, b});
            }
        } else {
            pending_half = true;  // merged into the next step's leading half
        }
    }
    return traj;
}

}  // namespace singcomb::lle
