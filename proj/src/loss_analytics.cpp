#include "pentaloss/loss_analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace pentaloss {

double pre_failure(double P) {
    if (P < 0.0 || P > 1.0) {
        throw std::invalid_argument("pre_failure: probability out of range");
    }
    double q = 1.0 - P;
    double v = P * P * P * (P * P + 5.0 * P * q + 10.0 * q * q);
    // Rounding can overshoot the exact value by an ulp near the endpoints;
    // the true map never leaves [0,1].
    return std::min(1.0, std::max(0.0, v));
}

Rational pre_failure_exact(const Rational& P) {
    if (P < 0 || P > 1) {
        throw std::invalid_argument("pre_failure: probability out of range");
    }
    Rational q = 1 - P;
    return P * P * P * (P * P + 5 * P * q + 10 * q * q);
}

const LossPolynomial& pre_failure_polynomial() {
    static const LossPolynomial poly(std::vector<Rational>{0, 0, 0, 10, -15, 6});
    return poly;
}

double iterate_levels(const FailureFn& base, double p, int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    double v = p;
    for (int i = 0; i < levels; ++i) v = base(v);
    return v;
}

Rational iterate_levels_exact(const LossPolynomial& base, const Rational& p, int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    Rational v = p;
    for (int i = 0; i < levels; ++i) v = base.eval(v);
    return v;
}

ThresholdResult find_threshold(const FailureFn& base, double delta, double tolerance) {
    double a = delta, b = 1.0 - delta;
    auto g = [&](double p) { return base(p) - p; };
    double ga = g(a), gb = g(b);
    if (!((ga < 0.0 && gb > 0.0) || (ga > 0.0 && gb < 0.0))) {
        return {false, 0.0};
    }
    while (b - a > tolerance) {
        double m = 0.5 * (a + b);
        double gm = g(m);
        if (gm == 0.0) return {true, m};
        if ((gm < 0.0) == (ga < 0.0)) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    return {true, 0.5 * (a + b)};
}

OverheadResult overhead_for_target(const FailureFn& base, double p, double epsilon,
                                   int max_levels) {
    if (epsilon <= 0.0 || epsilon >= 1.0) {
        throw std::invalid_argument("epsilon must lie in (0,1)");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("probability out of range");
    }
    OverheadResult out;
    double v = p;
    std::uint64_t q = 1;
    for (int n = 1; n <= max_levels; ++n) {
        v = base(v);
        q *= 5;
        if (v <= epsilon) {
            out.reachable = true;
            out.levels = n;
            out.qubits = q;
            out.achieved = v;
            return out;
        }
    }
    out.reachable = false;
    out.levels = max_levels;
    out.qubits = q;
    out.achieved = v;
    return out;
}

double gamma_effective(double gamma, double p, int levels) {
    if (gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability out of range");
    if (levels < 0 || levels > 62) throw std::invalid_argument("levels out of range");
    if (p == 0.0) return 0.0;
    double log10r = std::exp2(levels) * (std::log10(gamma) + std::log10(p)) - std::log10(gamma);
    if (log10r > 308.0) return HUGE_VAL;
    if (log10r < -308.0) return 0.0;
    return std::pow(10.0, log10r);
}

AsymptoticFit asymptotic_coefficient(const FailureFn& base) {
    // Least squares of ln f against (1, ln P, P) over log-spaced samples of
    // [1e-4, 1e-2]. The extra P column soaks up the next-order term of the
    // polynomial so the leading exponent and coefficient come back clean.
    constexpr int kPoints = 25;
    const double lo = 1e-4, hi = 1e-2;
    AsymptoticFit fit;
    double ata[3][3] = {};
    double atb[3] = {};
    for (int i = 0; i < kPoints; ++i) {
        double t = static_cast<double>(i) / (kPoints - 1);
        double P = lo * std::pow(hi / lo, t);
        double f = base(P);
        if (!(f > 0.0) || !std::isfinite(f)) {
            fit.degenerate = true;
            return fit;
        }
        double row[3] = {1.0, std::log(P), P};
        double y = std::log(f);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) ata[a][b] += row[a] * row[b];
            atb[a] += row[a] * y;
        }
    }
    // 3x3 Gaussian elimination with partial pivoting.
    double m[3][4];
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) m[a][b] = ata[a][b];
        m[a][3] = atb[a];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        }
        if (std::abs(m[piv][col]) < 1e-12) {
            fit.degenerate = true;
            return fit;
        }
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double factor = m[r][col] / m[col][col];
            for (int b = col; b < 4; ++b) m[r][b] -= factor * m[col][b];
        }
    }
    fit.coefficient = std::exp(m[0][3] / m[0][0]);
    fit.exponent = m[1][3] / m[1][1];
    return fit;
}

std::vector<CurvePoint> sample_curves(LossMode mode, const FailureFn& base, int level_lo,
                                      int level_hi, double start, double end, double step) {
    if (level_lo < 1 || level_hi < level_lo) {
        throw std::invalid_argument("bad level range");
    }
    if (step <= 0.0 || end < start) {
        throw std::invalid_argument("bad grid");
    }
    std::vector<CurvePoint> out;
    long steps = std::lround((end - start) / step);
    for (int level = level_lo; level <= level_hi; ++level) {
        for (long k = 0; k <= steps; ++k) {
            double p = start + static_cast<double>(k) * step;
            if (p > 1.0) break;
            out.push_back({mode, level, p, iterate_levels(base, p, level)});
        }
    }
    return out;
}

}  // namespace pentaloss
