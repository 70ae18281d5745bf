#include "genergy/classify.hpp"

#include <algorithm>
#include <cmath>

namespace genergy {

const char* subclass_name(Subclass s) {
    switch (s) {
        case Subclass::G1: return "G1";
        case Subclass::G2: return "G2";
        case Subclass::G3: return "G3";
        case Subclass::G4: return "G4";
    }
    return "?";
}

namespace {

double eps_for(const EnergyProfile& p, const ToleranceConfig& tol) {
    return std::max(tol.eps_abs,
                    tol.eps_rel * std::max(1.0, std::abs(p.energy)));
}

}  // namespace

std::vector<ChainViolation> verify_chain(const EnergyProfile& p,
                                         const ToleranceConfig& tol) {
    const double eps = eps_for(p, tol);
    std::vector<ChainViolation> out;
    auto check = [&](double lhs, double rhs, const char* name) {
        if (lhs > rhs + eps) out.push_back({name, lhs - rhs});
    };
    check(p.pi_star, p.lel, "pi*<=LEL");
    check(p.lel, p.incidence_energy, "LEL<=IE");
    check(p.incidence_energy, p.pi, "IE<=pi");
    check(p.energy, p.pi, "E<=pi");
    return out;
}

Classification classify(const EnergyProfile& p, const ToleranceConfig& tol) {
    auto violations = verify_chain(p, tol);
    if (!violations.empty())
        throw IntegrityError("invariant chain violated beyond tolerance",
                             std::move(violations));

    const double eps = eps_for(p, tol);
    Classification c{};
    if (p.energy <= p.pi_star + eps)
        c.subclass = Subclass::G1;
    else if (p.energy <= p.lel + eps)
        c.subclass = Subclass::G2;
    else if (p.energy <= p.incidence_energy + eps)
        c.subclass = Subclass::G3;
    else
        c.subclass = Subclass::G4;

    auto flag = [&](double threshold, const char* name) {
        if (std::abs(p.energy - threshold) <= eps)
            c.boundary_flags.push_back({name, p.energy - threshold});
    };
    flag(p.pi_star, "E=pi*");
    flag(p.lel, "E=LEL");
    flag(p.incidence_energy, "E=IE");
    flag(p.pi, "E=pi");
    return c;
}

}  // namespace genergy
