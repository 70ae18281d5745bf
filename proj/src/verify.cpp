#include "genergy/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "genergy/energy.hpp"

namespace genergy {

namespace {

struct Job {
    Family family;
    int n;
};

Graph make_family(Family f, int n) {
    switch (f) {
        case Family::Path: return Graph::path(n);
        case Family::Cycle: return Graph::cycle(n);
        case Family::Complete: return Graph::complete(n);
    }
    throw std::invalid_argument("unknown family");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
    }
    return "?";
}

TheoremCheck run_check(Family f, int n, double closed_tol, double eq_tol) {
    TheoremCheck out{f, n, true, ""};
    std::ostringstream bad;

    const EnergyProfile p = profile(make_family(f, n));
    auto expect = [&](double got, double want, const char* what) {
        if (std::abs(got - want) > closed_tol)
            bad << what << " closed form " << want << " vs numeric " << got
                << "; ";
    };

    switch (f) {
        case Family::Path: {
            const PathClosed c = path_closed(n);
            expect(p.energy, c.energy, "E");
            expect(p.incidence_energy, c.incidence_energy, "IE");
            expect(p.pi, c.pi, "pi");
            break;
        }
        case Family::Cycle: {
            const CycleClosed c = cycle_closed(n);
            expect(p.energy, c.energy, "E");
            expect(p.lel, c.lel, "LEL");
            expect(p.incidence_energy, c.incidence_energy, "IE");
            expect(p.pi, c.pi, "pi");
            expect(p.pi_star, c.pi_star, "pi*");
            break;
        }
        case Family::Complete: {
            const CompleteClosed c = complete_closed(n);
            expect(p.energy, c.energy, "E");
            expect(p.pi_star, c.pi_star, "pi*");
            break;
        }
    }

    const FamilyPrediction pred = predicted_subclass(f, n);
    const Classification cls = classify(p, ToleranceConfig{});
    if (cls.subclass != pred.predicted)
        bad << "classified " << subclass_name(cls.subclass) << ", predicted "
            << subclass_name(pred.predicted) << "; ";
    if (f == Family::Cycle && n % 2 == 1 &&
        std::abs(p.energy - p.incidence_energy) > eq_tol)
        bad << "|E-IE| = " << std::abs(p.energy - p.incidence_energy) << "; ";

    out.detail = bad.str();
    out.ok = out.detail.empty();
    if (!out.ok)
        out.detail = std::string(family_name(f)) + " n=" + std::to_string(n) +
                     ": " + out.detail;
    return out;
}

}  // namespace

std::vector<TheoremCheck> verify_theorems(int max_n, double closed_tol,
                                          double eq_tol, int jobs) {
    std::vector<Job> todo;
    for (int n = 2; n <= max_n; ++n) todo.push_back({Family::Path, n});
    for (int n = 3; n <= max_n; ++n) todo.push_back({Family::Cycle, n});
    for (int n = 4; n <= max_n; ++n) todo.push_back({Family::Complete, n});

    int nworkers = jobs > 0 ? jobs
                            : std::max(1u, std::thread::hardware_concurrency());
    nworkers = std::min<int>(nworkers, static_cast<int>(todo.size()));

    std::vector<TheoremCheck> results(todo.size());
    auto work = [&](int w) {
        for (size_t i = w; i < todo.size(); i += nworkers)
            results[i] = run_check(todo[i].family, todo[i].n, closed_tol, eq_tol);
    };
    if (nworkers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    return results;
}

LemmaResult verify_lemma(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> theta_dist(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> alpha_dist(0.01,
                                                      2.0 * std::numbers::pi - 0.01);
    std::uniform_int_distribution<int> n_dist(0, 500);

    LemmaResult res{samples, 0.0, 0.0, 0.0, 0};
    for (int s = 0; s < samples; ++s) {
        const double theta = theta_dist(rng);
        const double alpha = alpha_dist(rng);
        const int n = n_dist(rng);

        double direct_cos = 0.0, direct_sin = 0.0;
        for (int j = 0; j <= n; ++j) {
            direct_cos += std::cos(theta + alpha * j);
            direct_sin += std::sin(theta + alpha * j);
        }
        const double err =
            std::max(std::abs(trig_sum_cos(theta, alpha, n) - direct_cos),
                     std::abs(trig_sum_sin(theta, alpha, n) - direct_sin));
        if (err > res.max_error) {
            res.max_error = err;
            res.theta = theta;
            res.alpha = alpha;
            res.n = n;
        }
    }
    return res;
}

}  // namespace genergy
