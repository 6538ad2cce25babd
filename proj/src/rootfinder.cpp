#include "zs/rootfinder.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace zs {

namespace {

struct KindSamples {
    std::vector<CharValue> v;
    double min_abs = 0.0, max_abs = 0.0;
};

KindSamples kind_samples(ContourCache& cache, CharKind kind) {
    KindSamples s;
    s.v = cache.kind_values(kind);
    s.min_abs = std::numeric_limits<double>::infinity();
    for (const auto& cv : s.v) {
        double m = std::abs(cv.value);
        s.min_abs = std::min(s.min_abs, m);
        s.max_abs = std::max(s.max_abs, m);
    }
    return s;
}

void require_clearance(const KindSamples& s, const Disk& disk, CharKind kind, const Config& cfg) {
    if (!(s.min_abs > cfg.clearance_rel * s.max_abs)) {
        std::ostringstream os;
        os << "root too close to contour of disk (center " << disk.center.real() << "+"
           << disk.center.imag() << "i, radius " << disk.radius << ") for " << to_string(kind)
           << ": min|chi| = " << s.min_abs << ", scale = " << s.max_abs;
        throw Error(Errc::boundary_root, os.str());
    }
}

// (1/2 pi i) \oint f(lambda) chi'/chi dlambda with f = lambda^n (scaled=false)
// or f = ((lambda - c)/r)^n (scaled=true).
cplx contour_power(const ContourCache& cache, const KindSamples& s, int n, bool scaled) {
    const auto& lam = cache.lambdas();
    const cplx c = cache.disk().center;
    const double r = cache.disk().radius;
    const size_t N = lam.size();
    cplx acc(0.0);
    for (size_t j = 0; j < N; ++j) {
        cplx w = lam[j] - c; // r e^{i theta_j}
        cplx base = scaled ? w / r : lam[j];
        cplx f(1.0);
        for (int q = 0; q < n; ++q) f *= base;
        acc += f * (s.v[j].dvalue / s.v[j].value) * w;
    }
    return acc / double(N);
}

// Adaptive winding: doubles the node count until two consecutive counts agree
// and the pre-rounding value sits within the winding window.
int accept_winding(ContourCache& cache, CharKind kind, const Config& cfg, WindingStats* stats) {
    int nodes = cfg.contour_start_nodes;
    cache.ensure(nodes);
    KindSamples s = kind_samples(cache, kind);
    require_clearance(s, cache.disk(), kind, cfg);

    auto winding = [&](const KindSamples& ks) {
        cplx s0 = contour_power(cache, ks, 0, true);
        long m = std::lround(s0.real());
        double dist = std::abs(s0 - cplx(double(m)));
        return std::pair<long, double>(m, dist);
    };

    auto [m_prev, d_prev] = winding(s);
    while (nodes < cfg.contour_max_nodes) {
        nodes *= 2;
        if (stats) stats->adaptations++;
        cache.ensure(nodes);
        s = kind_samples(cache, kind);
        require_clearance(s, cache.disk(), kind, cfg);
        auto [m, d] = winding(s);
        if (m == m_prev && d <= cfg.winding_window && d_prev <= cfg.winding_window && m >= 0)
            return int(m);
        m_prev = m;
        d_prev = d;
    }
    if (stats) stats->rejections++;
    std::ostringstream os;
    os << "winding number failed to stabilize for " << to_string(kind) << " on disk (center "
       << cache.disk().center.real() << "+" << cache.disk().center.imag() << "i, radius "
       << cache.disk().radius << ")";
    throw Error(Errc::non_integer_winding, os.str());
}

// Monic polynomial coefficients (ascending, a[m] = 1) from power sums via
// Newton's identities; sums[k] = sigma_k for k = 1..m.
std::vector<cplx> newton_identities(const std::vector<cplx>& sums, int m) {
    std::vector<cplx> e(size_t(m) + 1, cplx(0.0));
    e[0] = 1.0;
    for (int k = 1; k <= m; ++k) {
        cplx acc(0.0);
        double sign = 1.0;
        for (int i = 1; i <= k; ++i) {
            acc += sign * e[size_t(k - i)] * sums[size_t(i)];
            sign = -sign;
        }
        e[size_t(k)] = acc / double(k);
    }
    std::vector<cplx> a(size_t(m) + 1);
    a[size_t(m)] = 1.0;
    for (int k = 1; k <= m; ++k) a[size_t(m - k)] = (k % 2 ? -e[size_t(k)] : e[size_t(k)]);
    return a;
}

std::vector<cplx> companion_roots(const std::vector<cplx>& a) {
    const int m = int(a.size()) - 1;
    if (m == 0) return {};
    if (m == 1) return {-a[0]};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) C(i, m - 1) = -a[size_t(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> roots(size_t(m));
    for (int i = 0; i < m; ++i) roots[size_t(i)] = es.eigenvalues()(i);
    return roots;
}

// Newton iteration on chi (Schroeder-corrected for multiplicity > 1).
cplx refine_root(const Potential& p, CharKind kind, const Config& cfg, cplx start, int mult,
                 const Disk& disk, double* residual_out) {
    cplx best = start;
    double best_res = std::abs(evaluate_char(p, start, kind, cfg).value);
    cplx lam = start;
    const double max_step = 0.5 * disk.radius;
    for (int it = 0; it < 30; ++it) {
        CharValue cv = evaluate_char(p, lam, kind, cfg);
        double res = std::abs(cv.value);
        if (res < best_res) {
            best_res = res;
            best = lam;
        }
        if (res == 0.0 || std::abs(cv.dvalue) == 0.0) break;
        cplx step = double(mult) * cv.value / cv.dvalue;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        if (std::abs(step) > max_step) step *= max_step / std::abs(step);
        lam -= step;
        if (std::abs(lam - disk.center) > 1.2 * disk.radius) break;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(lam))) {
            double r2 = std::abs(evaluate_char(p, lam, kind, cfg).value);
            if (r2 < best_res) {
                best_res = r2;
                best = lam;
            }
            break;
        }
    }
    if (residual_out) *residual_out = best_res;
    return best;
}

// Single-linkage clustering at threshold tau; returns groups of indices.
std::vector<std::vector<int>> link_clusters(const std::vector<cplx>& pts, double tau) {
    const int n = int(pts.size());
    std::vector<int> parent(size_t(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(pts[size_t(i)] - pts[size_t(j)]) <= tau) parent[size_t(find(i))] = find(j);
    std::vector<std::vector<int>> groups;
    std::vector<int> slot(size_t(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (slot[size_t(r)] < 0) {
            slot[size_t(r)] = int(groups.size());
            groups.emplace_back();
        }
        groups[size_t(slot[size_t(r)])].push_back(i);
    }
    return groups;
}

} // namespace

namespace detail {

int count_zeros_cached(ContourCache& cache, CharKind kind, const Config& cfg,
                       WindingStats* stats) {
    return accept_winding(cache, kind, cfg, stats);
}

std::vector<cplx> power_sums_cached(ContourCache& cache, CharKind kind, int n_max,
                                    const Config& cfg, WindingStats* stats, bool scaled) {
    int m = accept_winding(cache, kind, cfg, stats);
    KindSamples s = kind_samples(cache, kind);
    std::vector<cplx> sums(size_t(n_max) + 1);
    sums[0] = cplx(double(m));
    for (int n = 1; n <= n_max; ++n) sums[size_t(n)] = contour_power(cache, s, n, scaled);
    return sums;
}

std::vector<RootCluster> roots_in_disk_cached(const Potential& p, ContourCache& cache,
                                              CharKind kind, const Config& cfg,
                                              WindingStats* stats) {
    const Disk disk = cache.disk();
    const int m = accept_winding(cache, kind, cfg, stats);
    if (m == 0) return {};
    if (m > cfg.max_disk_roots) {
        std::ostringstream os;
        os << "roots_in_disk: " << m << " roots exceed the supported maximum "
           << cfg.max_disk_roots;
        throw Error(Errc::bad_input, os.str());
    }

    KindSamples s = kind_samples(cache, kind);
    const double scale = s.max_abs;

    std::vector<cplx> sigma(size_t(m) + 1);
    sigma[0] = cplx(double(m));
    for (int n = 1; n <= m; ++n) sigma[size_t(n)] = contour_power(cache, s, n, true);

    std::vector<cplx> coeffs = newton_identities(sigma, m);
    std::vector<cplx> raw = companion_roots(coeffs);
    for (auto& z : raw) z = disk.center + disk.radius * z;

    // Newton polish of the individual polynomial roots. Near a multiple root
    // the polished values stay smeared; clustering below handles that.
    std::vector<cplx> polished(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) polished[i] = refine_root(p, kind, cfg, raw[i], 1, disk, nullptr);

    const double tol_res = cfg.residual_rel * scale;
    const double tau0 = cfg.cluster_radius_rel * (1.0 + std::abs(disk.center));
    const double tau_max = 1e-2 * (1.0 + std::abs(disk.center));

    std::string last_error = "cluster refinement failed";
    for (double tau = tau0; tau <= tau_max * 1.0001; tau *= 4.0) {
        auto groups = link_clusters(polished, tau);
        std::vector<RootCluster> clusters;
        clusters.reserve(groups.size());
        bool ok = true;
        for (const auto& g : groups) {
            cplx centroid(0.0);
            for (int idx : g) centroid += polished[size_t(idx)];
            centroid /= double(g.size());
            RootCluster rc;
            rc.multiplicity = int(g.size());
            rc.value = refine_root(p, kind, cfg, centroid, rc.multiplicity, disk, &rc.residual);
            if (!(rc.residual <= tol_res)) {
                ok = false;
                std::ostringstream os;
                os << "residual " << rc.residual << " above " << tol_res << " near ("
                   << rc.value.real() << "," << rc.value.imag() << ")";
                last_error = os.str();
                break;
            }
            clusters.push_back(rc);
        }
        if (!ok) continue;

        for (size_t i = 0; i < clusters.size(); ++i)
            for (size_t j = i + 1; j < clusters.size(); ++j)
                if (std::abs(clusters[i].value - clusters[j].value) <
                    cfg.cluster_separation * tau)
                    throw Error(Errc::cluster_ambiguity,
                                "clusters not separated by the required multiple of the cluster "
                                "radius; shrink the disk");

        int total = 0;
        for (const auto& c : clusters) total += c.multiplicity;
        if (total != m)
            throw Error(Errc::cluster_ambiguity, "cluster multiplicities do not sum to the count");
        std::sort(clusters.begin(), clusters.end(), [](const RootCluster& x, const RootCluster& y) {
            if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
            return x.value.imag() < y.value.imag();
        });
        return clusters;
    }
    throw Error(Errc::cluster_ambiguity, "roots_in_disk: " + last_error);
}

} // namespace detail

int count_zeros(const Potential& p, const Disk& disk, CharKind kind, const Config& cfg,
                WindingStats* stats) {
    ContourCache cache(p, disk, cfg);
    return detail::count_zeros_cached(cache, kind, cfg, stats);
}

std::vector<cplx> power_sums(const Potential& p, const Disk& disk, CharKind kind, int n_max,
                             const Config& cfg, WindingStats* stats) {
    ContourCache cache(p, disk, cfg);
    return detail::power_sums_cached(cache, kind, n_max, cfg, stats, false);
}

std::vector<RootCluster> roots_in_disk(const Potential& p, const Disk& disk, CharKind kind,
                                       const Config& cfg, WindingStats* stats) {
    ContourCache cache(p, disk, cfg);
    return detail::roots_in_disk_cached(p, cache, kind, cfg, stats);
}

LayoutReport localize_spectrum(const Potential& p, int R, int n_scan, const Config& cfg) {
    if (R < 0 || n_scan < R)
        throw Error(Errc::bad_input, "localize_spectrum: need R >= 0 and n_scan >= R");
    LayoutReport report;
    report.R = R;
    report.n_scan = n_scan;

    auto run_pair = [&](const Disk& disk, int n, bool is_ball, int exp_p, int exp_d) {
        // one contour shared by both kinds
        ContourCache cache(p, disk, cfg);
        for (auto [kind, expected] :
             {std::pair<CharKind, int>{CharKind::chi_p, exp_p}, {CharKind::chi_D, exp_d}}) {
            DiskCheck chk;
            chk.n = n;
            chk.is_ball = is_ball;
            chk.kind = kind;
            chk.expected = expected;
            try {
                chk.got = detail::count_zeros_cached(cache, kind, cfg, &report.stats);
                chk.pass = (chk.got == expected);
            } catch (const Error& e) {
                chk.error = e.what();
                chk.pass = false;
            }
            report.checks.push_back(chk);
        }
    };

    run_pair(counting_ball(R), R, true, 4 * R + 2, 2 * R + 1);
    for (int n = R + 1; n <= n_scan; ++n) {
        run_pair(counting_disk(n), n, false, 2, 1);
        run_pair(counting_disk(-n), -n, false, 2, 1);
    }
    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const DiskCheck& c) { return c.pass; });
    return report;
}

int select_R(const Potential& p, int n_scan, const Config& cfg) {
    if (n_scan < 0) throw Error(Errc::bad_input, "select_R: n_scan must be >= 0");

    // Disk counts are independent of R; compute them once per |n|.
    struct Counts {
        int p = -1, d = -1;
        bool ok = false;
    };
    std::vector<Counts> disk(size_t(n_scan) + 1); // index |n|; [0] unused
    auto disk_counts = [&](int n) -> Counts {
        Counts c;
        try {
            WindingStats st;
            for (int sign : {+1, -1}) {
                ContourCache cache(p, counting_disk(sign * n), cfg);
                int cp = detail::count_zeros_cached(cache, CharKind::chi_p, cfg, &st);
                int cd = detail::count_zeros_cached(cache, CharKind::chi_D, cfg, &st);
                if (cp != 2 || cd != 1) return c; // ok stays false
            }
            c.p = 2;
            c.d = 1;
            c.ok = true;
        } catch (const Error&) {
        }
        return c;
    };
    for (int n = 1; n <= n_scan; ++n) disk[size_t(n)] = disk_counts(n);

    for (int R = 0; R <= n_scan; ++R) {
        bool disks_ok = true;
        for (int n = R + 1; n <= n_scan; ++n) disks_ok = disks_ok && disk[size_t(n)].ok;
        if (!disks_ok) continue;
        try {
            WindingStats st;
            ContourCache cache(p, counting_ball(R), cfg);
            int cp = detail::count_zeros_cached(cache, CharKind::chi_p, cfg, &st);
            int cd = detail::count_zeros_cached(cache, CharKind::chi_D, cfg, &st);
            if (cp == 4 * R + 2 && cd == 2 * R + 1) return R;
        } catch (const Error&) {
        }
    }
    throw Error(Errc::no_valid_r, "select_R: no valid R within the scan range");
}

} // namespace zs
