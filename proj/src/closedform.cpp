#include "genergy/closedform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace genergy {

namespace {

constexpr double kPi = std::numbers::pi;

double half_angle_denom(double alpha) {
    const double s = std::sin(alpha / 2.0);
    if (std::abs(s) <= 1e-12)
        throw std::domain_error(
            "trig sum degenerate: alpha is a multiple of 2*pi");
    return s;
}

double cot(double x) { return std::cos(x) / std::sin(x); }
double csc(double x) { return 1.0 / std::sin(x); }

}  // namespace

double trig_sum_cos(double theta, double alpha, int n) {
    const double s = half_angle_denom(alpha);
    return std::sin((n + 1) * alpha / 2.0) * std::cos(theta + n * alpha / 2.0) / s;
}

double trig_sum_sin(double theta, double alpha, int n) {
    const double s = half_angle_denom(alpha);
    return std::sin((n + 1) * alpha / 2.0) * std::sin(theta + n * alpha / 2.0) / s;
}

PathClosed path_closed(int n) {
    if (n < 2) throw std::invalid_argument("path_closed requires n >= 2");
    PathClosed r{};
    const double half = kPi / (2.0 * (n + 1));
    r.energy = (n % 2 == 0) ? -2.0 + 2.0 * csc(half) : -2.0 + 2.0 * cot(half);
    r.incidence_energy = -1.0 + cot(kPi / (4.0 * n));
    r.pi = 2.0 + (n - 2) * std::numbers::sqrt2;
    return r;
}

CycleClosed cycle_closed(int n) {
    if (n < 3) throw std::invalid_argument("cycle_closed requires n >= 3");
    CycleClosed r{};
    const double half = kPi / (2.0 * n);
    switch (n % 4) {
        case 0: r.energy = 4.0 * cot(kPi / n); break;
        case 2: r.energy = 4.0 * csc(kPi / n); break;
        default: r.energy = 2.0 * csc(half); break;  // odd n
    }
    r.lel = 2.0 * cot(half);
    // 2cot(pi/2n) also covers n = 4k (oracle-validated extension; the
    // n = 4k case has no stated form).
    r.incidence_energy = (n % 2 == 1) ? 2.0 * csc(half) : 2.0 * cot(half);
    r.pi = n * std::numbers::sqrt2;
    r.pi_star = 2.0 * std::sqrt(static_cast<double>(n));
    return r;
}

CompleteClosed complete_closed(int n) {
    if (n < 1) throw std::invalid_argument("complete_closed requires n >= 1");
    CompleteClosed r{};
    r.energy = n >= 2 ? 2.0 * n - 2.0 : 0.0;
    r.pi_star = (n - 1) * std::sqrt(static_cast<double>(n));
    return r;
}

FamilyPrediction predicted_subclass(Family family, int n) {
    FamilyPrediction p{family, n, Subclass::G4, false};
    switch (family) {
        case Family::Path:
            if (n < 2) throw std::invalid_argument("path prediction needs n >= 2");
            p.predicted = Subclass::G4;
            break;
        case Family::Cycle:
            if (n < 3) throw std::invalid_argument("cycle prediction needs n >= 3");
            if (n == 4) {
                // E(C4) = 4cot(pi/4) = 4 = 2*sqrt(4) = pi*(C4): the weak
                // right inequality puts C4 in G1, not G2.
                p.predicted = Subclass::G1;
                p.equality_expected = true;
            } else if (n % 4 == 0) {
                p.predicted = Subclass::G2;
            } else if (n % 2 == 1) {
                p.predicted = Subclass::G3;
                p.equality_expected = true;  // E = IE
            } else {
                p.predicted = Subclass::G4;
            }
            break;
        case Family::Complete:
            if (n < 4)
                throw std::invalid_argument("complete prediction needs n >= 4");
            p.predicted = Subclass::G1;
            p.equality_expected = (n == 4);  // E = pi* exactly at n = 4
            break;
    }
    return p;
}

}  // namespace genergy
