#include "funkineq/rearrangement/rearrangement.hpp"

#include "funkineq/core/errors.hpp"
#include "funkineq/core/measure.hpp"
#include "funkineq/core/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace funkineq {

namespace {

// gamma([a, b]) without cancellation in either tail
double gauss_mass(double a, double b)
{
    if (a >= 0)
        return normal_sf(a) - normal_sf(b);
    return normal_cdf(b) - normal_cdf(a);
}

double interp(const Eigen::VectorXd& xs, const Eigen::VectorXd& ys, double t)
{
    const long n = xs.size();
    if (t <= xs[0])
        return ys[0];
    if (t >= xs[n - 1])
        return ys[n - 1];
    long j = std::upper_bound(xs.data(), xs.data() + n, t) - xs.data();
    double w = (t - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return (1 - w) * ys[j - 1] + w * ys[j];
}

} // namespace

double RearrangementTable::eval(double t) const { return interp(x, value, t); }

double RearrangementTable::deriv(double t) const { return interp(ux, uslope, t); }

namespace {

constexpr int kSamples = 200001;

// f on a uniform grid of [-R, R], linear in between and constant beyond
struct Sampled {
    std::vector<double> x, y, cell;
    double tail;
};

Sampled sample(const Function1D& f, double R)
{
    Sampled s{std::vector<double>(kSamples), std::vector<double>(kSamples),
              std::vector<double>(kSamples, 0.0), normal_cdf(-R)};
    for (int i = 0; i < kSamples; ++i) {
        s.x[i] = -R + 2 * R * i / (kSamples - 1);
        s.y[i] = f(s.x[i]);
        if (!std::isfinite(s.y[i]))
            throw NonFiniteIntegrand("gaussian_rearrangement: f is not finite on [-R, R]");
    }
    for (int i = 1; i < kSamples; ++i)
        s.cell[i] = gauss_mass(s.x[i - 1], s.x[i]);
    return s;
}

// gamma(f <= a) at ascending levels
std::vector<double> sublevel_masses(const Sampled& s, const std::vector<double>& a)
{
    const std::size_t L = a.size();
    std::vector<double> full(L + 1, 0.0), part(L, 0.0);
    auto first_at_least = [&](double v) {
        return static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), v) - a.begin());
    };
    full[first_at_least(s.y.front())] += s.tail;
    full[first_at_least(s.y.back())] += s.tail;
    for (int i = 1; i < kSamples; ++i) {
        double xa = s.x[i - 1], xb = s.x[i], ya = s.y[i - 1], yb = s.y[i];
        std::size_t top = first_at_least(std::max(ya, yb));
        full[top] += s.cell[i];
        for (std::size_t j = first_at_least(std::min(ya, yb)); j < top; ++j) {
            double c = xa + (a[j] - ya) / (yb - ya) * (xb - xa);
            part[j] += ya < yb ? gauss_mass(xa, c) : gauss_mass(c, xb);
        }
    }
    std::vector<double> D(L);
    double run = 0;
    for (std::size_t j = 0; j < L; ++j) {
        run += full[j];
        D[j] = std::min(1.0, run + part[j]);
    }
    return D;
}

double quantile_of(double d)
{
    if (d <= 0)
        return -INFINITY;
    if (d >= 1)
        return INFINITY;
    return d < 0.5 ? normal_quantile(d) : -normal_quantile(1 - d);
}

} // namespace

Rearranged gaussian_rearrangement(const Function1D& f, int grid_size, double R)
{
    if (grid_size < 16)
        throw DomainError("gaussian_rearrangement: grid_size >= 16");
    const int n = grid_size;
    Sampled s = sample(f, R);
    double lo = *std::min_element(s.y.begin(), s.y.end());
    double hi = *std::max_element(s.y.begin(), s.y.end());
    double scale = std::max({1.0, std::abs(lo), std::abs(hi)});

    // levels a_j with D_j = gamma(f <= a_j); f* = inf{a : Phi(x) <= D(a)} interpolated between
    // the knots (Phi^{-1}(D_j), a_j). Start uniform over the range of f, then bisect every
    // level cell whose midpoint misses the interpolant by more than 1/(8n) in mass.
    std::vector<double> a, D;
    if (hi - lo > 1e-14 * scale) {
        for (int j = 0; j <= n; ++j)
            a.push_back(lo + (hi - lo) * j / n);
        a.back() = hi;
        D = sublevel_masses(s, a);
        const double tol = 0.125 / n;
        std::vector<std::size_t> cand(n);
        std::iota(cand.begin(), cand.end(), 0);
        for (int round = 0; round < 64 && !cand.empty(); ++round) {
            std::vector<double> mid;
            std::vector<std::size_t> open;
            for (std::size_t j : cand)
                if (a[j + 1] - a[j] > 1e-13 * scale) {
                    mid.push_back(0.5 * (a[j] + a[j + 1]));
                    open.push_back(j);
                }
            if (open.empty())
                break;
            std::vector<double> Dm = sublevel_masses(s, mid);
            std::vector<std::pair<double, double>> add;
            for (std::size_t k = 0; k < open.size(); ++k) {
                std::size_t j = open[k];
                double x0 = quantile_of(D[j]), x1 = quantile_of(D[j + 1]);
                double err = std::isinf(x0) || std::isinf(x1)
                                 ? D[j + 1] - D[j]
                                 : std::abs(normal_cdf(0.5 * (x0 + x1)) - Dm[k]);
                if (err > tol)
                    add.push_back({mid[k], Dm[k]});
            }
            if (add.empty())
                break;
            std::vector<double> na, nD;
            std::vector<std::size_t> next;
            std::size_t k = 0;
            for (std::size_t j = 0; j < a.size(); ++j) {
                na.push_back(a[j]);
                nD.push_back(D[j]);
                if (k < add.size() && j + 1 < a.size() && add[k].first < a[j + 1]) {
                    next.push_back(na.size() - 1);
                    na.push_back(add[k].first);
                    nD.push_back(add[k].second);
                    next.push_back(na.size() - 1);
                    ++k;
                }
            }
            a.swap(na);
            D.swap(nD);
            cand.swap(next);
        }
    }

    std::vector<double> xs, vs, ms;
    double prev = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double x = quantile_of(D[j]);
        // equal quantiles: keep the smallest level
        if (!std::isfinite(x) || (!xs.empty() && x <= xs.back()))
            continue;
        xs.push_back(x);
        vs.push_back(a[j]);
        ms.push_back(D[j] - prev);
        prev = D[j];
    }
    if (xs.empty()) { // constant f
        xs.push_back(0.0);
        vs.push_back(lo);
        ms.push_back(1.0);
    }
    ms.back() += 1 - prev;
    for (std::size_t j = 1; j < xs.size(); ++j)
        if (!(vs[j] >= vs[j - 1]))
            throw ToleranceNotMet("gaussian_rearrangement: table not monotone");

    const double h = 2 * R / n;
    auto tab = std::make_shared<RearrangementTable>();
    const long k = static_cast<long>(xs.size());
    tab->x = Eigen::Map<Eigen::VectorXd>(xs.data(), k);
    tab->value = Eigen::Map<Eigen::VectorXd>(vs.data(), k);
    tab->mass = Eigen::Map<Eigen::VectorXd>(ms.data(), k);

    // uniform resampling for f*': centered differences, boundary cells excluded
    tab->ux = Eigen::VectorXd::LinSpaced(n + 1, -R, R);
    tab->uslope = Eigen::VectorXd::Zero(n + 1);
    tab->umass.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        double u = tab->ux[i];
        if (i > 0 && i < n)
            tab->uslope[i] = (tab->eval(u + h) - tab->eval(u - h)) / (2 * h);
        double a = i == 0 ? -INFINITY : u - 0.5 * h;
        double b = i == n ? INFINITY : u + 0.5 * h;
        tab->umass[i] = std::isinf(a) ? normal_cdf(b) : (std::isinf(b) ? normal_sf(a) : gauss_mass(a, b));
    }

    std::shared_ptr<const RearrangementTable> ct = tab;
    FamilyTag tag = f.tag();
    tag.name = "rearranged(" + f.tag().str() + ")";
    tag.params.clear();
    // knots double as kinks so quadrature splits on them
    std::vector<double> kinks(xs.begin(), xs.end());
    Function1D fs([ct](double t) { return ct->eval(t); }, [ct](double t) { return ct->deriv(t); },
                  {}, std::move(kinks), tag);
    return {fs, ct};
}

std::vector<double> gaussian_superlevel_masses(const RealFn& f, const std::vector<double>& ts,
                                               int n, double R)
{
    std::vector<double> xs(n), ys(n), cell(n, 0.0);
    for (int i = 0; i < n; ++i) {
        xs[i] = -R + 2 * R * i / (n - 1);
        ys[i] = f(xs[i]);
    }
    for (int i = 1; i < n; ++i)
        cell[i] = gauss_mass(xs[i - 1], xs[i]);
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) {
        double total = 0;
        if (ys[0] > t)
            total += normal_cdf(-R);
        for (int i = 1; i < n; ++i) {
            double xa = xs[i - 1], xb = xs[i], ya = ys[i - 1], yb = ys[i];
            bool ia = ya > t, ib = yb > t;
            if (ia && ib) {
                total += cell[i];
            } else if (ia != ib) {
                double c = xa + (t - ya) / (yb - ya) * (xb - xa);
                total += ia ? gauss_mass(xa, c) : gauss_mass(c, xb);
            }
        }
        if (ys[n - 1] > t)
            total += normal_sf(R);
        out.push_back(total);
    }
    return out;
}

double gaussian_superlevel_mass(const RealFn& f, double t, int n, double R)
{
    return gaussian_superlevel_masses(f, {t}, n, R).front();
}

EquimeasurabilityResult equimeasurability_check(const Function1D& f, const Function1D& fstar,
                                                const QuadratureConfig& q)
{
    const double R = 10.0;
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i <= 20000; ++i) {
        double v = f(-R + 2 * R * i / 20000.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double level = 0;
    if (hi > lo) {
        std::vector<double> ts;
        for (int k = 0; k < 100; ++k)
            ts.push_back(lo + (hi - lo) * (k + 0.5) / 100.0);
        auto a = gaussian_superlevel_masses([&](double x) { return f(x); }, ts, 200001, R);
        auto b = gaussian_superlevel_masses([&](double x) { return fstar(x); }, ts, 200001, R);
        for (std::size_t k = 0; k < ts.size(); ++k)
            level = std::max(level, std::abs(a[k] - b[k]));
    }
    auto mu = MeasureSpec::gaussian();
    EquimeasurabilityResult r{level, 0.0, {"equimeasurability", {}}};
    r.report.add("level-sets", "|gamma(f>t) - gamma(f*>t)| <= 2e-3", level, 2e-3, level <= 2e-3);
    double la;
    try {
        la = log_exp_moment([&](double x) { return f(x); }, mu, q, f.kinks()).log_value;
    } catch (const NonFiniteIntegrand&) {
        // e.g. f = x^2: the table is bounded, so there is nothing to compare
        r.exp_defect = INFINITY;
        r.report.add("exp-moment", "skipped: int e^f diverges", INFINITY, 1e-3, true);
        return r;
    }
    double lb = log_exp_moment([&](double x) { return fstar(x); }, mu, q, fstar.kinks()).log_value;
    r.exp_defect = std::abs(std::expm1(lb - la));
    r.report.add("exp-moment", "int e^f = int e^{f*} within 1e-3 relative", r.exp_defect, 1e-3,
                 r.exp_defect <= 1e-3);
    return r;
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::needs_review:
        return "needs_review";
    case Verdict::fail:
        return "fail";
    }
    return "?";
}

PolyaSzegoResult polya_szego_check(const Function1D& f, const RealFn& G, const Rearranged& r,
                                   const QuadratureConfig& q)
{
    auto mu = MeasureSpec::gaussian();
    double lhs = weighted_integral([&](double x) { return G(std::abs(f.deriv(x))); }, mu, q,
                                   f.kinks())
                     .value;
    const auto& t = *r.table;
    double rhs = 0;
    for (long j = 0; j < t.ux.size(); ++j)
        rhs += t.umass[j] * G(std::abs(t.uslope[j]));
    double d = lhs - rhs;
    Verdict v = d >= 0 ? Verdict::pass : (d >= -1e-4 ? Verdict::needs_review : Verdict::fail);
    return {lhs, rhs, d, v};
}

PolyaSzegoResult polya_szego_check(const Function1D& f, const RealFn& G, int grid_size,
                                   const QuadratureConfig& q)
{
    return polya_szego_check(f, G, gaussian_rearrangement(f, grid_size), q);
}

MonotoneEnvelope monotone_split(const Function1D& g, double R, int cells)
{
    QuadratureConfig q;
    double g0 = g(0.0);
    auto pos = [g](double x) { return std::max(g.deriv(x), 0.0); };
    auto neg = [g](double x) { return std::max(-g.deriv(-x), 0.0); };
    std::vector<double> kp, kn;
    // (g')_+ and (g')_- have kinks at the kinks of g and where g' changes sign
    std::vector<double> ks(g.kinks());
    double span = std::max(R, 40.0);
    auto z = sign_changes([&](double x) { return g.deriv(x); }, -span, span, 16000);
    ks.insert(ks.end(), z.begin(), z.end());
    for (double k : ks) {
        if (k > 0)
            kp.push_back(k);
        if (k < 0)
            kn.push_back(-k);
    }
    std::sort(kp.begin(), kp.end());
    std::sort(kn.begin(), kn.end());

    double h = R / cells;
    auto table = [&](const RealFn& d, const std::vector<double>& ks) {
        auto t = std::make_shared<std::vector<double>>(cells + 1, 0.0);
        for (int i = 0; i < cells; ++i)
            (*t)[i + 1] = (*t)[i] + integrate(d, i * h, (i + 1) * h, q, ks).value;
        return t;
    };
    auto P = table(pos, kp);
    auto N = table(neg, kn);

    auto make = [h, cells, R](std::shared_ptr<std::vector<double>> t, RealFn d,
                              std::vector<double> ks, std::string nm) {
        auto f = [t, d, h, cells, R, ks](double x) {
            if (x <= 0)
                return 0.0;
            QuadratureConfig qq;
            int i = std::min(cells, static_cast<int>(x / h));
            double base = (*t)[i];
            double from = std::min(i * h, R);
            return base + integrate(d, from, x, qq, ks).value;
        };
        return Function1D(f, [d](double x) { return x <= 0 ? 0.0 : d(x); },
                          {0.0, INFINITY}, ks, {nm, {}});
    };
    MonotoneEnvelope env{make(P, pos, kp, "f_plus"), make(N, neg, kn, "f_minus"),
                         {"monotone-split", {}}};

    double dom = -INFINITY, mono = INFINITY, slope = -INFINITY;
    for (int i = 0; i <= cells; ++i) {
        double x = i * h;
        dom = std::max(dom, (g(x) - g0) - (*P)[i]);
        dom = std::max(dom, (g(-x) - g0) - (*N)[i]);
        if (i > 0)
            mono = std::min({mono, (*P)[i] - (*P)[i - 1], (*N)[i] - (*N)[i - 1]});
        slope = std::max(slope, pos(x) - std::abs(g.deriv(x)));
    }
    env.checks.add("domination", "g(x)-g(0) <= f+(x), g(-x)-g(0) <= f-(x)", dom, 1e-9,
                   dom <= 1e-9);
    env.checks.add("monotone", "f+, f- non-decreasing", mono, 0.0, mono >= 0);
    env.checks.add("slope", "f+' <= |g'|", slope, 0.0, slope <= 0);
    return env;
}

F2Result f2(const RealFn& F, double x)
{
    if (x == 0)
        return {2 * F(0.0), 0.0, true, 0.0};
    auto obj = [&](double s) { return F(s) + F(x - s); };
    Argmax m = grid_max(obj, 0.0, x, 1001, 1e-14);
    double fx = F(x), f0 = F(0.0);
    bool within = m.value <= 2 * fx + 1e-12 * std::max(1.0, std::abs(fx));
    return {m.value, m.x, within, std::abs(m.value - fx - f0)};
}

} // namespace funkineq
