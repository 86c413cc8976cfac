#include "hyperflux/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hyperflux {

namespace {

// Gauss-Kronrod 15/7 on [-1,1]: abscissa, Gauss weight, Kronrod weight.
// Row 0 is the center node.
const double kNW[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.000000000000000, 0.204432940075298},
    {0.586087235467691, 0.000000000000000, 0.169004726639267},
    {0.864864423359769, 0.000000000000000, 0.104790010322250},
    {0.991455371120813, 0.000000000000000, 0.022935322010529},
};

struct Panel {
    Value k15;
    double err;
};

// One GK15/7 panel of g(t) over [t0,t1]; g already includes the Jacobian.
Panel gk_panel(const std::function<Value(double)>& g, double t0, double t1,
               long& evals) {
    const double mid = 0.5 * (t0 + t1);
    const double h = 0.5 * (t1 - t0);

    Value y0 = g(mid);
    evals++;
    Value k15 = y0 * kNW[0][2];
    Value g7 = y0 * kNW[0][1];
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kNW[i][0];
        Value yi = g(mid + dx);
        Value yj = g(mid - dx);
        evals += 2;
        Value s = yi + yj;
        k15 += s * kNW[i][2];
        if (kNW[i][1] != 0.0) g7 += s * kNW[i][1];
    }
    k15 *= h;
    g7 *= h;
    const double diff = (k15 - g7).seminorm();
    // standard inflation of the raw embedded difference
    const double err = diff * std::min(1.0, std::pow(200.0 * diff, 0.5)) + 1e-300;
    return {k15, std::max(err, diff)};
}

struct SegmentQuad {
    Value value;
    double err;
};

SegmentQuad integrate_parametrised(const std::function<Value(double)>& g,
                                   const QuadConfig& cfg, long& evals) {
    struct Item {
        double t0, t1, err;
        Value val;
        int depth;
    };

    Panel p0 = gk_panel(g, 0.0, 1.0, evals);
    std::vector<Item> items{{0.0, 1.0, p0.err, p0.k15, 0}};
    bool depth_hit = false;

    auto tol_ok = [&](double total_err, double total_norm) {
        return total_err <= std::max(cfg.abs_tol, cfg.rel_tol * total_norm);
    };

    for (;;) {
        double total_err = 0.0;
        double total_norm = 0.0;
        int worst = -1;
        double worst_err = 0.0;
        for (size_t i = 0; i < items.size(); ++i) {
            total_err += items[i].err;
            total_norm += items[i].val.seminorm();
            if (items[i].err > worst_err) {
                worst_err = items[i].err;
                worst = int(i);
            }
        }
        if (tol_ok(total_err, total_norm) || worst < 0) break;
        if (items[worst].depth >= cfg.max_depth) {
            depth_hit = true;
            break;
        }
        Item it = items[worst];
        const double tm = 0.5 * (it.t0 + it.t1);
        Panel pa = gk_panel(g, it.t0, tm, evals);
        Panel pb = gk_panel(g, tm, it.t1, evals);
        items[worst] = {it.t0, tm, pa.err, pa.k15, it.depth + 1};
        items.push_back({tm, it.t1, pb.err, pb.k15, it.depth + 1});
        if (items.size() > 100000)
            throw accuracy_error("quadrature exceeded panel budget", worst_err);
    }

    // deterministic reduction in parameter order
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.t0 < b.t0; });
    Value total = items[0].val;
    double err = items[0].err;
    for (size_t i = 1; i < items.size(); ++i) {
        total += items[i].val;
        err += items[i].err;
    }
    if (depth_hit && err > std::max(cfg.abs_tol, cfg.rel_tol * total.seminorm()) * 50.0)
        throw accuracy_error("quadrature did not reach tolerance at max_depth", err);
    return {total, err};
}

}  // namespace

IntegralResult integrate_path(const std::function<Value(cplx)>& f,
                              const ContourPath& path, const QuadConfig& cfg) {
    IntegralResult res;
    bool first = true;
    long evals = 0;
    // split tolerance across segments by length share
    const double total_len = path.length();
    for (const auto& seg : path.segments) {
        const double share = total_len > 0 ? seg.length() / total_len : 1.0;
        QuadConfig local = cfg;
        local.abs_tol = cfg.abs_tol * std::max(share, 0.05);
        auto g = [&](double t) -> Value {
            const cplx z = seg.point(t);
            Value v = f(z);
            if (!v.finite())
                throw evaluation_error("integrand not finite", z);
            v *= seg.derivative(t);
            return v;
        };
        SegmentQuad sq = integrate_parametrised(g, local, evals);
        if (first) {
            res.value = sq.value;
            first = false;
        } else {
            res.value += sq.value;
        }
        res.err_estimate += sq.err;
    }
    res.evaluations = evals;
    return res;
}

IntegralResult integrate_path_scalar(const std::function<cplx(cplx)>& f,
                                     const ContourPath& path, const QuadConfig& cfg) {
    return integrate_path([&](cplx z) { return Value::scalar(f(z)); }, path, cfg);
}

IntegralResult integrate_segment(const std::function<Value(cplx)>& f, cplx p, cplx q,
                                 const QuadConfig& cfg) {
    ContourPath path;
    path.segments.push_back(PathSegment::line(p, q));
    return integrate_path(f, path, cfg);
}

double choose_truncation(const GrowthCertificate& decay, double kernel_rate,
                         double tol, double* tail_bound) {
    if (!(tol > 0.0)) throw precondition_error("choose_truncation needs tol > 0");
    const double kappa = decay.rate(std::abs(kernel_rate)) + kernel_rate;
    if (kappa >= 0.0)
        throw divergence_error(
            "combined growth/kernel exponent is non-negative: integral diverges",
            kappa);
    const double C = std::max(decay.C, 1e-300);
    // solve C e^{kappa R}/|kappa| = tol
    double R = std::log(C / (tol * (-kappa))) / (-kappa);
    if (R < 1.0) R = 1.0;
    if (tail_bound) *tail_bound = C * std::exp(kappa * R) / (-kappa);
    return R;
}

}  // namespace hyperflux
