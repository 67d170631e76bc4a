#include "funkineq/core/quadrature.hpp"

#include "funkineq/core/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace funkineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double checked(const RealFn& g, double x)
{
    double v = g(x);
    if (!std::isfinite(v))
        throw NonFiniteIntegrand("integrand not finite at x=" + std::to_string(x));
    return v;
}

template <unsigned N>
Integral gk(const RealFn& g, double a, double b, double tol)
{
    // boost's error estimate misbehaves on very short intervals (it stalls at
    // full depth), so always hand it [-1, 1]
    double err = 0, l1 = 0;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto h = [&](double t) { return checked(g, mid + half * t); };
    double v = boost::math::quadrature::gauss_kronrod<double, N>::integrate(h, -1.0, 1.0, 15, tol,
                                                                            &err, &l1);
    return {v * half, err * half};
}

Integral gauss_kronrod_piece(const RealFn& g, double a, double b, int order, double tol)
{
    if (order <= 15)
        return gk<15>(g, a, b, tol);
    if (order <= 21)
        return gk<21>(g, a, b, tol);
    if (order <= 31)
        return gk<31>(g, a, b, tol);
    if (order <= 41)
        return gk<41>(g, a, b, tol);
    if (order <= 51)
        return gk<51>(g, a, b, tol);
    return gk<61>(g, a, b, tol);
}

double simpson_rec(const RealFn& g, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, double& err)
{
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = checked(g, lm), frm = checked(g, rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15 * tol) {
        err += std::abs(diff) / 15;
        return left + right + diff / 15;
    }
    return simpson_rec(g, a, m, fa, flm, fm, left, tol / 2, depth - 1, err) +
           simpson_rec(g, m, b, fm, frm, fb, right, tol / 2, depth - 1, err);
}

Integral simpson_piece(const RealFn& g, double a, double b, int panels, double tol)
{
    Integral out;
    double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double l = a + i * h, r = l + h, m = 0.5 * (l + r);
        double fl = checked(g, l), fm = checked(g, m), fr = checked(g, r);
        double whole = h / 6 * (fl + 4 * fm + fr);
        double err = 0;
        out.value += simpson_rec(g, l, r, fl, fm, fr, whole, tol / panels, 40, err);
        out.error += err;
    }
    return out;
}

Integral tanh_sinh_piece(const RealFn& g, double a, double b, int order, double tol)
{
    boost::math::quadrature::tanh_sinh<double> ts(std::clamp(order, 4, 15));
    double err = 0, l1 = 0;
    std::size_t levels = 0;
    auto h = [&](double x) { return checked(g, x); };
    double v = ts.integrate(h, a, b, tol, &err, &l1, &levels);
    return {v, err};
}

std::vector<double> cut_points(double a, double b, const std::vector<double>& breaks)
{
    std::vector<double> pts{a};
    for (double x : breaks)
        if (x > a && x < b)
            pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Radius beyond which |g| (or exp(L - M)) is negligible. `small` returns true
// when the integrand is negligible at x.
double find_radius(const std::function<bool(double)>& small, double r0, double rmax, int side)
{
    double r = r0;
    while (true) {
        bool ok = true;
        for (double s : {1.0, 1.25, 1.5, 2.0})
            if (!small(side * r * s))
                ok = false;
        if (ok)
            return side * r;
        if (r >= rmax)
            throw NonFiniteIntegrand("integrand does not decay before radius " +
                                     std::to_string(rmax));
        r = std::min(rmax, r * 1.5);
    }
}

} // namespace

std::string scheme_name(Scheme s)
{
    switch (s) {
    case Scheme::gauss_hermite:
        return "gauss-hermite";
    case Scheme::adaptive_simpson:
        return "adaptive-simpson";
    case Scheme::tanh_sinh:
        return "tanh-sinh";
    case Scheme::gauss_kronrod:
        return "gauss-kronrod";
    }
    return "?";
}

Scheme parse_scheme(const std::string& s)
{
    if (s == "gauss-hermite")
        return Scheme::gauss_hermite;
    if (s == "adaptive-simpson")
        return Scheme::adaptive_simpson;
    if (s == "tanh-sinh")
        return Scheme::tanh_sinh;
    if (s == "gauss-kronrod")
        return Scheme::gauss_kronrod;
    throw DomainError("unknown quadrature scheme: " + s);
}

QuadratureConfig QuadratureConfig::from_env()
{
    QuadratureConfig q;
    if (const char* s = std::getenv("FUNKINEQ_QUAD_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0 && v < 100000)
            q.order = static_cast<int>(v);
    }
    return q;
}

Integral integrate(const RealFn& g, double a, double b, const QuadratureConfig& q,
                   const std::vector<double>& breaks)
{
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw DomainError("integrate: finite interval required");
    if (a == b)
        return {};
    double sign = 1;
    if (a > b) {
        std::swap(a, b);
        sign = -1;
    }
    auto pts = cut_points(a, b, breaks);
    Integral out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Integral p;
        switch (q.scheme) {
        case Scheme::adaptive_simpson:
            p = simpson_piece(g, pts[i], pts[i + 1], std::max(1, q.order),
                              std::max(q.abs_tol, 1e-14));
            break;
        case Scheme::tanh_sinh:
            p = tanh_sinh_piece(g, pts[i], pts[i + 1], q.order, q.rel_tol);
            break;
        default: // gauss-hermite has no meaning on a bounded piece
            p = gauss_kronrod_piece(g, pts[i], pts[i + 1], q.order, q.rel_tol);
            break;
        }
        out.value += p.value;
        out.error += p.error;
    }
    double scale = std::max(q.abs_tol, q.rel_tol * std::abs(out.value));
    // boost reports |G - K| on the finest panels, which overstates the true
    // error by orders of magnitude on smooth pieces
    if (!(out.error <= 1e4 * scale))
        throw ToleranceNotMet("integrate: error estimate " + std::to_string(out.error) +
                              " exceeds tolerance");
    out.value *= sign;
    return out;
}

Integral integrate_line(const RealFn& g, double lo, double hi, const QuadratureConfig& q,
                        const std::vector<double>& breaks)
{
    if (std::isfinite(lo) && std::isfinite(hi))
        return integrate(g, lo, hi, q, breaks);
    double r0 = q.truncation_radius;
    double scale = 0;
    for (int i = 0; i <= 400; ++i) {
        double x = -r0 + 2 * r0 * i / 400.0;
        if (x >= lo && x <= hi)
            scale = std::max(scale, std::abs(checked(g, x)));
    }
    scale = std::max(scale, 1e-300);
    auto small = [&](double x) {
        return std::abs(checked(g, x)) * std::abs(x) <= q.tail_epsilon * scale;
    };
    double a = std::isfinite(lo) ? lo : std::min(find_radius(small, r0, q.max_radius, -1), hi);
    double b = std::isfinite(hi) ? hi : std::max(find_radius(small, r0, q.max_radius, +1), lo);
    return integrate(g, a, b, q, breaks);
}

LogIntegral integrate_log(const RealFn& L, double lo, double hi, const QuadratureConfig& q,
                          const std::vector<double>& breaks)
{
    auto Lc = [&](double x) {
        double v = L(x);
        if (std::isnan(v) || v == kInf)
            throw NonFiniteIntegrand("log-integrand not finite at x=" + std::to_string(x));
        return v;
    };
    double r0 = q.truncation_radius;
    double a0 = std::isfinite(lo) ? lo : -r0;
    double b0 = std::isfinite(hi) ? hi : r0;
    double M = -kInf;
    const int n = 800;
    for (int i = 0; i <= n; ++i)
        M = std::max(M, Lc(a0 + (b0 - a0) * i / n));
    for (double x : breaks)
        if (x >= a0 && x <= b0)
            M = std::max(M, Lc(x));
    if (M == -kInf)
        throw NonFiniteIntegrand("log-integrand is -inf on the sample grid");

    double logeps = std::log(q.tail_epsilon);
    auto small = [&](double x) { return Lc(x) - M + std::log(std::abs(x)) <= logeps; };
    double a = std::isfinite(lo) ? lo : find_radius(small, r0, q.max_radius, -1);
    double b = std::isfinite(hi) ? hi : find_radius(small, r0, q.max_radius, +1);
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        // the shift may need refreshing once the window grows
        for (int i = 0; i <= n; ++i)
            M = std::max(M, Lc(a + (b - a) * i / n));
    }
    auto g = [&](double x) { return std::exp(Lc(x) - M); };
    Integral I = integrate(g, a, b, q, breaks);
    if (!(I.value > 0))
        throw NonFiniteIntegrand("integrate_log: non-positive integral");
    return {M + std::log(I.value), I.error / I.value};
}

GaussHermiteRule gauss_hermite_rule(int n)
{
    // Golub-Welsch: Jacobi matrix of the He_k recurrence, off-diagonal sqrt(k)
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        J(k, k - 1) = std::sqrt(static_cast<double>(k));
        J(k - 1, k) = J(k, k - 1);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussHermiteRule r;
    r.nodes = es.eigenvalues();
    r.weights = es.eigenvectors().row(0).transpose().array().square();
    return r;
}

} // namespace funkineq
