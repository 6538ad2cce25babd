#include "zs/pathfinder.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace zs {

namespace {

void fill_metrics(PathSample& s, const Config& cfg) {
    s.M_D = 0;
    s.M_p = 1;
    for (const auto& rec : s.report.records) {
        if (!rec.in_ball || rec.parity == Parity::dirichlet) continue;
        s.M_p = std::max(s.M_p, rec.m_alg);
        if (rec.m_geom == 2) {
            int m_d = 0;
            for (const auto& dir : s.report.records) {
                if (dir.parity != Parity::dirichlet) continue;
                if (std::abs(dir.value - rec.value) < cfg.dirichlet_match_tol * (1.0 + std::abs(rec.value)))
                    m_d = std::max(m_d, dir.m_alg);
            }
            s.M_D = std::max(s.M_D, m_d);
        }
    }
    s.standard = s.report.verdicts.standard;
}

} // namespace

PathSample evaluate_sample(double t, const Potential& p, const Config& cfg) {
    PathSample s;
    s.t = t;
    s.potential = p;
    try {
        s.R = select_R(p, cfg.path_n_scan, cfg);
        int n_scan = std::max(s.R, std::min(s.R + 2, cfg.path_n_scan));
        s.report = full_spectrum(p, s.R, n_scan, cfg);
        fill_metrics(s, cfg);
    } catch (const Error& e) {
        // pessimistic metrics keep failed samples from ever looking simple
        s.valid = false;
        s.error = e.what();
        s.M_D = 2 * cfg.path_n_scan + 2;
        s.M_p = 4 * cfg.path_n_scan + 3;
    }
    return s;
}

namespace {

std::vector<PathSample> evaluate_many(const std::vector<std::pair<double, Potential>>& pts,
                                      const Config& cfg) {
    std::vector<PathSample> out(pts.size());
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= pts.size()) break;
            out[i] = evaluate_sample(pts[i].first, pts[i].second, cfg);
        }
    };
    if (hw > 1 && pts.size() > 1) {
        std::vector<std::thread> threads;
        for (unsigned k = 0; k + 1 < hw; ++k) threads.emplace_back(work);
        work();
        for (auto& th : threads) th.join();
    } else {
        work();
    }
    return out;
}

} // namespace

std::vector<PathSample> straight_path(const Potential& zeta, const Potential& xi, int samples,
                                      const Config& cfg) {
    if (samples < 2) throw Error(Errc::bad_input, "straight_path: need at least 2 samples");
    if (zeta.symmetry() != Symmetry::focusing || xi.symmetry() != Symmetry::focusing)
        throw Error(Errc::bad_input, "straight_path: endpoints must be focusing");

    std::vector<std::pair<double, Potential>> pts;
    pts.reserve(size_t(samples));
    for (int j = 0; j < samples; ++j) {
        double t = double(j) / double(samples - 1);
        if (j == 0) {
            pts.emplace_back(t, zeta);
        } else if (j == samples - 1) {
            pts.emplace_back(t, xi);
        } else {
            pts.emplace_back(t, Potential::lin_comb(1.0 - t, zeta, t, xi));
        }
    }
    return evaluate_many(pts, cfg);
}

std::pair<int, int> path_metrics(const std::vector<PathSample>& path) {
    int md = 0, mp = 1;
    for (const auto& s : path) {
        md = std::max(md, s.M_D);
        mp = std::max(mp, s.M_p);
    }
    return {md, mp};
}

std::pair<int, int> interior_metrics(const std::vector<PathSample>& path) {
    int md = 0, mp = 1;
    for (size_t j = 1; j + 1 < path.size(); ++j) {
        md = std::max(md, path[j].M_D);
        mp = std::max(mp, path[j].M_p);
    }
    return {md, mp};
}

PerturbResult perturb_path(const std::vector<PathSample>& path, double magnitude,
                           std::uint64_t seed, int max_tries, const Config& cfg) {
    if (path.size() < 3)
        throw Error(Errc::bad_input, "perturb_path: need at least one interior sample");
    for (const PathSample* endpoint : {&path.front(), &path.back()})
        if (!endpoint->standard)
            throw Error(Errc::bad_input, "perturb_path: endpoint reports are not standard");

    PerturbResult res;
    res.path = path;

    int band = 0;
    for (const auto& s : path) band = std::max(band, s.potential.max_freq());

    auto at_target = [](std::pair<int, int> m) { return m.first == 0 && m.second == 1; };
    std::pair<int, int> current = interior_metrics(res.path);
    if (at_target(current)) {
        res.reached_simple = true;
        return res; // already simple; returned unchanged
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        res.tries = attempt + 1;
        Potential g = Potential::random_focusing(band, magnitude, rng());

        std::vector<std::pair<double, Potential>> pts;
        pts.reserve(res.path.size() - 2);
        for (size_t j = 1; j + 1 < res.path.size(); ++j) {
            double t = res.path[j].t;
            double bump = std::sin(kPi * t);
            bump *= bump;
            pts.emplace_back(t, Potential::lin_comb(1.0, res.path[j].potential, bump, g));
        }

        std::vector<PathSample> interior = evaluate_many(pts, cfg);

        std::vector<PathSample> candidate = res.path;
        for (size_t j = 1; j + 1 < candidate.size(); ++j) candidate[j] = interior[j - 1];
        std::pair<int, int> cand = interior_metrics(candidate);
        if (cand < current) {
            res.path = std::move(candidate);
            current = cand;
            res.improved = true;
            if (at_target(current)) {
                res.reached_simple = true;
                return res;
            }
        }
    }
    res.exhausted = !res.reached_simple;
    return res;
}

} // namespace zs
