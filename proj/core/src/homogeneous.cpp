#include "singulab/homogeneous.hpp"

#include "singulab/errors.hpp"
#include "singulab/germ.hpp"
#include "singulab/milnor.hpp"

#include <cmath>
#include <numbers>

namespace singulab {

namespace {

void require_isolated_initial_part(const Polynomial& f, long max_steps) {
    if (f.is_zero()) throw NotIsolatedError("zero germ has no isolated initial part");
    if (!is_algebraically_isolated(f.lowest_component(), max_steps))
        throw NotIsolatedError("initial part not algebraically isolated");
}

long int_pow(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// quasi-uniform point on the unit sphere: van der Corput coordinates pushed
// through Box-Muller, then normalized
std::vector<double> sphere_point(int dimension, unsigned long index) {
    auto van_der_corput = [](unsigned long i, unsigned base) {
        double value = 0.0, scale = 1.0 / base;
        for (; i > 0; i /= base) {
            value += static_cast<double>(i % base) * scale;
            scale /= base;
        }
        return value;
    };
    static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::vector<double> point(static_cast<std::size_t>(dimension));
    for (int i = 0; i + 1 < dimension + 1; i += 2) {
        double u1 = van_der_corput(index + 1, primes[static_cast<std::size_t>(i) % 10]);
        double u2 = van_der_corput(index + 1, primes[static_cast<std::size_t>(i + 1) % 10]);
        u1 = std::max(u1, 1e-12);
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        point[static_cast<std::size_t>(i)] = radius * std::cos(angle);
        if (i + 1 < dimension) point[static_cast<std::size_t>(i + 1)] = radius * std::sin(angle);
    }
    double norm = 0.0;
    for (double c : point) norm += c * c;
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
        point.assign(static_cast<std::size_t>(dimension), 0.0);
        point[0] = 1.0;
        return point;
    }
    for (double& c : point) c /= norm;
    return point;
}

} // namespace

HomogeneityReport analyze_homogeneity(const Polynomial& f, long max_steps) {
    HomogeneityReport report;
    if (f.is_zero()) return report;
    report.is_homogeneous = f.order() == f.degree();
    if (report.is_homogeneous) report.degree = f.order();
    report.initial_isolated = is_algebraically_isolated(f.lowest_component(), max_steps);
    return report;
}

long homogeneous_milnor_formula(const Polynomial& f, long max_steps) {
    require_isolated_initial_part(f, max_steps);
    return int_pow(f.order() - 1, f.variable_count());
}

long determinacy_bound(const Polynomial& f, long max_steps) {
    return homogeneous_milnor_formula(f, max_steps) + 1;
}

Polynomial jet(const Polynomial& f, int k) { return f.jet(k); }

RescaledFamily make_rescaled_family(const Polynomial& g) {
    if (g.is_zero()) throw DomainMismatchError("rescaled family of the zero germ");
    RescaledFamily fam;
    fam.base = g;
    fam.m = g.order();
    for (int d = fam.m; d <= g.degree(); ++d)
        fam.parts.push_back(g.homogeneous_component(d));
    return fam;
}

Polynomial rescaled_member(const RescaledFamily& fam, const Rational& t) {
    Polynomial member(fam.base.variable_count());
    Rational weight(1);
    for (const Polynomial& part : fam.parts) {
        member += part.scaled(weight);
        weight *= t;
    }
    return member;
}

GradientScanReport gradient_nonvanishing_scan(const RescaledFamily& fam, const Rational& t0,
                                              double eps, int samples, unsigned seed,
                                              long max_steps) {
    require_isolated_initial_part(fam.base, max_steps);
    if (eps <= 0 || samples < 1 || t0 <= 0)
        throw DomainMismatchError("scan needs positive radius, samples, and t0");
    const int n = fam.base.variable_count();
    constexpr int kTGridSize = 16;
    constexpr double kZeroTolerance = 1e-9;
    const double t_max = to_double(t0);

    GradientScanReport report;
    report.min_gradient_norm = std::numeric_limits<double>::infinity();
    std::vector<std::vector<Polynomial>> part_gradients;
    for (const Polynomial& part : fam.parts) {
        std::vector<Polynomial> grad;
        for (int i = 0; i < n; ++i) grad.push_back(part.derivative(i));
        part_gradients.push_back(std::move(grad));
    }
    const unsigned long base_index = static_cast<unsigned long>(seed) * 1000003UL;
    for (int s = 0; s < samples; ++s) {
        std::vector<double> point = sphere_point(n, base_index + static_cast<unsigned long>(s));
        for (double& c : point) c *= eps;
        for (int g = 1; g <= kTGridSize; ++g) {
            double t = t_max * static_cast<double>(g) / kTGridSize;
            double norm_sq = 0.0;
            for (int i = 0; i < n; ++i) {
                double partial = 0.0, weight = 1.0;
                for (const auto& grad : part_gradients) {
                    partial += weight * grad[static_cast<std::size_t>(i)].evaluate(point);
                    weight *= t;
                }
                norm_sq += partial * partial;
            }
            double norm = std::sqrt(norm_sq);
            if (norm < report.min_gradient_norm) {
                report.min_gradient_norm = norm;
                if (norm < kZeroTolerance) {
                    report.has_witness = true;
                    report.witness = point;
                    report.witness_t = t;
                }
            }
        }
    }
    report.ok = !report.has_witness;
    return report;
}

FormulaCheck verify_milnor_equals_formula(const Polynomial& f, long max_steps) {
    FormulaCheck check;
    check.mu_formula = homogeneous_milnor_formula(f, max_steps);
    MilnorResult exact = milnor_number(f, max_steps);
    check.exact_finite = exact.finite;
    check.mu_exact = exact.finite ? exact.value : 0;
    check.agree = exact.finite && exact.value == check.mu_formula;
    return check;
}

} // namespace singulab
