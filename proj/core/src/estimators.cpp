#include "singulab/estimators.hpp"

#include "singulab/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace singulab {

namespace {

constexpr double kZeroTolerance = 1e-13;
constexpr double kJacobianStep = 1e-6;
constexpr double kRankThreshold = 1e-8;
constexpr double kKernelTolerance = 1e-4;

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

std::vector<double> displaced(const std::vector<double>& base, const std::vector<double>& dir,
                              double t) {
    std::vector<double> p(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[i] + t * dir[i];
    return p;
}

std::optional<std::vector<double>> try_evaluate(const MapExpr& F, const std::vector<double>& x) {
    try {
        return F.evaluate(x);
    } catch (const EvalDomainError&) {
        return std::nullopt;
    }
}

struct Regression {
    double slope = 0.0;
    double stderr2 = 0.0; // two standard errors
};

std::optional<Regression> least_squares_slope(const std::vector<double>& xs,
                                              const std::vector<double>& ys) {
    const std::size_t m = xs.size();
    if (m < 2) return std::nullopt;
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(m);
    mean_y /= static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    if (sxx == 0.0) return std::nullopt;
    Regression reg;
    reg.slope = sxy / sxx;
    if (m > 2) {
        double rss = 0.0;
        double intercept = mean_y - reg.slope * mean_x;
        for (std::size_t i = 0; i < m; ++i) {
            double r = ys[i] - (intercept + reg.slope * xs[i]);
            rss += r * r;
        }
        reg.stderr2 = 2.0 * std::sqrt(rss / static_cast<double>(m - 2) / sxx);
    }
    return reg;
}

} // namespace

OrderEstimate estimate_order(const MapExpr& F, const std::vector<double>& x0,
                             const SampleCloud& cloud) {
    validate_cloud(cloud);
    if (cloud.radii.size() < 4) throw DomainMismatchError("order estimate needs at least 4 radii");
    if (static_cast<int>(x0.size()) != F.arity())
        throw DomainMismatchError("base point dimension mismatch");

    // germ convention: an undefined base value counts as 0
    std::vector<double> base_value = try_evaluate(F, x0).value_or(
        std::vector<double>(static_cast<std::size_t>(F.coarity()), 0.0));

    OrderEstimate estimate;
    estimate.value = std::numeric_limits<double>::infinity();
    bool any_sample = false, any_nonzero = false, any_slope = false;
    for (const auto& dir : cloud.directions) {
        std::vector<double> xs, ys;
        for (double t : cloud.radii) {
            auto value = try_evaluate(F, displaced(x0, dir, t));
            if (!value) continue;
            any_sample = true;
            double d = 0.0;
            for (std::size_t i = 0; i < value->size(); ++i) {
                double diff = (*value)[i] - base_value[i];
                d += diff * diff;
            }
            d = std::sqrt(d);
            if (d <= 0.0) continue;
            any_nonzero = true;
            xs.push_back(std::log(t));
            ys.push_back(std::log(d));
        }
        auto reg = least_squares_slope(xs, ys);
        if (!reg) continue;
        any_slope = true;
        if (reg->slope < estimate.value) {
            estimate.value = reg->slope;
            estimate.confidence = reg->stderr2;
        }
    }
    if (!any_nonzero) {
        estimate.infinite_like = any_sample;
        estimate.degenerate = !any_sample;
        estimate.value = 0.0;
        return estimate;
    }
    if (!any_slope) {
        estimate.degenerate = true;
        estimate.value = 0.0;
    }
    return estimate;
}

EquivReport asymptotic_ratio_check(const MapExpr& F, const MapExpr& G, const SampleCloud& cloud) {
    validate_cloud(cloud);
    if (F.arity() != G.arity() || F.coarity() != G.coarity())
        throw DomainMismatchError("ratio check needs maps of equal arity and coarity");
    EquivReport report;
    report.c_lower = std::numeric_limits<double>::infinity();
    double worst_deviation = -1.0;
    for (const auto& dir : cloud.directions) {
        for (double t : cloud.radii) {
            std::vector<double> x = displaced(cloud.base, dir, t);
            auto fv = try_evaluate(F, x);
            auto gv = try_evaluate(G, x);
            if (!fv || !gv) continue;
            double nf = norm(*fv), ng = norm(*gv);
            bool f_zero = nf <= kZeroTolerance, g_zero = ng <= kZeroTolerance;
            if (f_zero != g_zero) {
                if (!report.violated) report.worst_point = x;
                report.violated = true;
                continue;
            }
            if (f_zero) continue;
            ++report.sample_count;
            double ratio = ng / nf;
            report.c_lower = std::min(report.c_lower, ratio);
            report.c_upper = std::max(report.c_upper, ratio);
            double deviation = std::fabs(std::log(ratio));
            if (!report.violated && deviation > worst_deviation) {
                worst_deviation = deviation;
                report.worst_point = x;
            }
        }
    }
    if (report.sample_count == 0) {
        report.c_lower = report.c_upper = 1.0;
    }
    return report;
}

HolderEstimate holder_exponent_estimate(const MapExpr& phi, const std::vector<double>& x0,
                                        const SampleCloud& cloud) {
    validate_cloud(cloud);
    if (static_cast<int>(x0.size()) != phi.arity())
        throw DomainMismatchError("base point dimension mismatch");
    std::vector<double> slopes;
    for (std::size_t a = 0; a < cloud.directions.size(); ++a) {
        for (std::size_t b = a + 1; b < cloud.directions.size(); ++b) {
            std::vector<double> separation(x0.size());
            for (std::size_t i = 0; i < x0.size(); ++i)
                separation[i] = cloud.directions[a][i] - cloud.directions[b][i];
            if (norm(separation) < 1e-9) continue;
            std::vector<double> xs, ys;
            for (double t : cloud.radii) {
                auto pa = try_evaluate(phi, displaced(x0, cloud.directions[a], t));
                auto pb = try_evaluate(phi, displaced(x0, cloud.directions[b], t));
                if (!pa || !pb) continue;
                std::vector<double> diff(pa->size());
                for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = (*pa)[i] - (*pb)[i];
                double dy = norm(diff);
                if (dy <= 0.0) continue;
                xs.push_back(std::log(t * norm(separation)));
                ys.push_back(std::log(dy));
            }
            auto reg = least_squares_slope(xs, ys);
            if (reg) slopes.push_back(reg->slope);
        }
    }
    HolderEstimate estimate;
    if (slopes.empty()) {
        estimate.degenerate = true;
        return estimate;
    }
    std::sort(slopes.begin(), slopes.end());
    const std::size_t mid = slopes.size() / 2;
    estimate.value = slopes.size() % 2 == 1 ? slopes[mid] : 0.5 * (slopes[mid - 1] + slopes[mid]);
    return estimate;
}

PseudoLipschitzReport pseudo_lipschitz_derivative_estimate(const MapExpr& phi,
                                                           const std::vector<double>& x,
                                                           const std::vector<double>& v,
                                                           const std::vector<long>& j_list) {
    if (static_cast<int>(x.size()) != phi.arity() || v.size() != x.size())
        throw DomainMismatchError("point or direction dimension mismatch");
    for (std::size_t i = 0; i < j_list.size(); ++i)
        if (j_list[i] < 1 || (i > 0 && j_list[i] <= j_list[i - 1]))
            throw DomainMismatchError("j_list must be strictly increasing and positive");

    PseudoLipschitzReport report;
    auto base = try_evaluate(phi, x);
    for (long j : j_list) {
        PseudoLipschitzEntry entry;
        entry.j = j;
        std::vector<double> shifted(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            shifted[i] = x[i] + v[i] / static_cast<double>(j);
        auto value = base ? try_evaluate(phi, shifted) : std::nullopt;
        if (value) {
            entry.ok = true;
            entry.value.resize(value->size());
            for (std::size_t i = 0; i < value->size(); ++i)
                entry.value[i] = static_cast<double>(j) * ((*value)[i] - (*base)[i]);
        }
        report.entries.push_back(std::move(entry));
    }

    std::vector<const PseudoLipschitzEntry*> tail;
    for (auto it = report.entries.rbegin(); it != report.entries.rend() && tail.size() < 3; ++it)
        if (it->ok) tail.push_back(&*it);
    report.cauchy_tail = std::numeric_limits<double>::infinity();
    if (tail.size() >= 2) {
        report.cauchy_tail = 0.0;
        for (std::size_t a = 0; a < tail.size(); ++a)
            for (std::size_t b = a + 1; b < tail.size(); ++b) {
                std::vector<double> diff(tail[a]->value.size());
                for (std::size_t i = 0; i < diff.size(); ++i)
                    diff[i] = tail[a]->value[i] - tail[b]->value[i];
                report.cauchy_tail = std::max(report.cauchy_tail, norm(diff));
            }
    }
    return report;
}

std::vector<std::vector<double>> numeric_jacobian(const MapExpr& F, const std::vector<double>& x) {
    const int n = F.arity(), p = F.coarity();
    std::vector<std::vector<double>> jac(static_cast<std::size_t>(p),
                                         std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        std::vector<double> forward = x, backward = x;
        forward[static_cast<std::size_t>(i)] += kJacobianStep;
        backward[static_cast<std::size_t>(i)] -= kJacobianStep;
        std::vector<double> fv = F.evaluate(forward);
        std::vector<double> bv = F.evaluate(backward);
        for (int r = 0; r < p; ++r)
            jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
                (fv[static_cast<std::size_t>(r)] - bv[static_cast<std::size_t>(r)]) /
                (2.0 * kJacobianStep);
    }
    return jac;
}

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& rows) {
    Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return m;
}

struct SvdSplit {
    int rank = 0;
    Eigen::MatrixXd kernel; // columns span the numeric kernel
};

SvdSplit rank_and_kernel(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    SvdSplit split;
    double largest = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    double threshold = kRankThreshold * std::max(largest, 1.0);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > threshold) ++split.rank;
    split.kernel = svd.matrixV().rightCols(m.cols() - split.rank);
    return split;
}

} // namespace

std::vector<RankCheckPoint> rank_and_singular_check(const MapExpr& F, const MapExpr& G,
                                                    const MapExpr& phi,
                                                    const std::vector<std::vector<double>>& points) {
    std::vector<RankCheckPoint> reports;
    for (const auto& x : points) {
        RankCheckPoint report;
        report.point = x;
        try {
            Eigen::MatrixXd jf = to_eigen(numeric_jacobian(F, x));
            Eigen::MatrixXd jphi = to_eigen(numeric_jacobian(phi, x));
            std::vector<double> image = phi.evaluate(x);
            Eigen::MatrixXd jg = to_eigen(numeric_jacobian(G, image));
            report.ok = true;
            SvdSplit f_split = rank_and_kernel(jf);
            SvdSplit g_split = rank_and_kernel(jg);
            report.rank_f = f_split.rank;
            report.rank_g_at_phi = g_split.rank;
            report.kernels_match = f_split.rank == g_split.rank;
            double g_scale = std::max(jg.norm(), 1.0);
            for (Eigen::Index c = 0; report.kernels_match && c < f_split.kernel.cols(); ++c) {
                Eigen::VectorXd w = f_split.kernel.col(c);
                Eigen::VectorXd u = jphi * w;
                double residual = (jg * u).norm();
                if (residual > kKernelTolerance * std::max(1.0, g_scale * u.norm()))
                    report.kernels_match = false;
            }
        } catch (const EvalDomainError&) {
            report.ok = false;
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace singulab
