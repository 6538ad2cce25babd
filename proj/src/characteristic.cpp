#include "zs/characteristic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

namespace zs {

const char* to_string(CharKind k) {
    switch (k) {
        case CharKind::delta: return "delta";
        case CharKind::chi_p: return "chi_p";
        case CharKind::chi_p_plus: return "chi_p_plus";
        case CharKind::chi_p_minus: return "chi_p_minus";
        case CharKind::chi_D: return "chi_D";
    }
    return "?";
}

CharKind char_kind_from_string(const std::string& s) {
    if (s == "delta") return CharKind::delta;
    if (s == "chi_p") return CharKind::chi_p;
    if (s == "chi_p_plus") return CharKind::chi_p_plus;
    if (s == "chi_p_minus") return CharKind::chi_p_minus;
    if (s == "chi_D" || s == "chi_d") return CharKind::chi_D;
    throw Error(Errc::bad_input, "unknown characteristic kind: " + s);
}

namespace {

inline CharValue delta_of(const TransferResult& tr) {
    return {tr.endpoint.trace(), tr.dlambda.trace()};
}

inline CharValue chiD_of(const TransferResult& tr) {
    const cplx half_over_i(0.0, -0.5); // 1/(2i)
    cplx v = (tr.endpoint.m4 + tr.endpoint.m3 - tr.endpoint.m2 - tr.endpoint.m1) * half_over_i;
    cplx d = (tr.dlambda.m4 + tr.dlambda.m3 - tr.dlambda.m2 - tr.dlambda.m1) * half_over_i;
    return {v, d};
}

inline CharValue derive_kind(CharKind kind, const CharValue& delta, const CharValue& chiD) {
    switch (kind) {
        case CharKind::delta: return delta;
        case CharKind::chi_p:
            return {delta.value * delta.value - 4.0, 2.0 * delta.value * delta.dvalue};
        case CharKind::chi_p_plus: return {delta.value - 2.0, delta.dvalue};
        case CharKind::chi_p_minus: return {delta.value + 2.0, delta.dvalue};
        case CharKind::chi_D: return chiD;
    }
    return {};
}

} // namespace

CharValue char_from_transfer(const TransferResult& tr, CharKind kind) {
    return derive_kind(kind, delta_of(tr), chiD_of(tr));
}

CharValue evaluate_char(const Potential& p, cplx lambda, CharKind kind, const Config& cfg) {
    TransferOptions opt;
    opt.with_dlambda = true;
    return char_from_transfer(fundamental_matrix(p, lambda, opt, cfg), kind);
}

ContourCache::ContourCache(const Potential& p, const Disk& disk, const Config& cfg)
    : p_(p), disk_(disk), cfg_(cfg) {}

void ContourCache::ensure(int nodes) {
    int have = int(lambda_.size());
    if (have >= nodes) return;
    if (have > 0 && nodes % have != 0)
        throw Error(Errc::bad_input, "ContourCache: node counts must refine by doubling");

    std::vector<cplx> lambda(size_t(nodes));
    std::vector<CharValue> delta(size_t(nodes)), chiD(size_t(nodes));
    int stride = have > 0 ? nodes / have : 0;

    std::vector<int> fresh;
    fresh.reserve(size_t(nodes));
    for (int j = 0; j < nodes; ++j) {
        double theta = 2.0 * kPi * double(j) / double(nodes);
        lambda[size_t(j)] = disk_.center + disk_.radius * std::exp(cplx(0.0, theta));
        if (stride && j % stride == 0) {
            delta[size_t(j)] = delta_[size_t(j / stride)];
            chiD[size_t(j)] = chiD_[size_t(j / stride)];
        } else {
            fresh.push_back(j);
        }
    }

    auto work = [&](size_t lo, size_t hi) {
        TransferOptions opt;
        for (size_t i = lo; i < hi; ++i) {
            int j = fresh[i];
            TransferResult tr = fundamental_matrix(p_, lambda[size_t(j)], opt, cfg_);
            delta[size_t(j)] = delta_of(tr);
            chiD[size_t(j)] = chiD_of(tr);
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (hw > 1 && fresh.size() >= 64) {
        size_t mid = fresh.size() / 2;
        auto fut = std::async(std::launch::async, work, size_t(0), mid);
        work(mid, fresh.size());
        fut.get();
    } else {
        work(0, fresh.size());
    }

    lambda_ = std::move(lambda);
    delta_ = std::move(delta);
    chiD_ = std::move(chiD);
}

std::vector<CharValue> ContourCache::kind_values(CharKind kind) const {
    std::vector<CharValue> out(lambda_.size());
    for (size_t j = 0; j < lambda_.size(); ++j) out[j] = derive_kind(kind, delta_[j], chiD_[j]);
    return out;
}

ContourSamples char_on_contour(const Potential& p, const Disk& disk, int nodes, CharKind kind,
                               const Config& cfg) {
    if (nodes < 64) throw Error(Errc::bad_input, "char_on_contour: need at least 64 nodes");
    ContourCache cache(p, disk, cfg);
    cache.ensure(nodes);

    ContourSamples out;
    out.disk = disk;
    out.nodes = nodes;
    out.lambda = cache.lambdas();
    out.values = cache.kind_values(kind);
    out.min_abs = std::numeric_limits<double>::infinity();
    out.max_abs = 0.0;
    for (int j = 0; j < nodes; ++j) {
        double m = std::abs(out.values[size_t(j)].value);
        if (m < out.min_abs) {
            out.min_abs = m;
            out.worst_node = j;
        }
        out.max_abs = std::max(out.max_abs, m);
    }
    out.clear = out.min_abs > cfg.clearance_rel * out.max_abs;
    return out;
}

} // namespace zs
