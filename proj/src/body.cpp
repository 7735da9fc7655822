#include "curvopt/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <variant>

#include <Eigen/Dense>

#include "curvopt/errors.hpp"
#include "curvopt/lp.hpp"

namespace curvopt {

namespace {

constexpr double kInteriorMargin = 1e-9;
constexpr double kFeasTol = 1e-9;
// Facet enumeration visits every d-subset of vertices; this caps the work.
constexpr double kMaxFacetSubsets = 2e6;

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v *= static_cast<double>(n - k + i) / i;
    return v;
}

struct BallData {
    double radius;
};

struct EllipsoidData {
    Matrix shape;
    Matrix inverse;
    double eig_min;
    double eig_max;
};

struct LpBallData {
    double p;
    double radius;
};

struct HPolyData {
    Matrix rows;
    Vector offsets;
    double inscribed_r;
    double circum_R;
    bool circum_exact;
};

struct Facet {
    Vector normal;  // unit Euclidean norm, outward
    double offset;  // distance from the origin, > 0 for valid bodies
};

struct VPolyData {
    std::vector<Vector> vertices;
    std::vector<Facet> facets;
    double inscribed_r;
    double circum_R;
};

double lp_norm(const Vector& x, double p) {
    if (std::isinf(p)) return x.lpNorm<Eigen::Infinity>();
    if (p == 1.0) return x.lpNorm<1>();
    if (p == 2.0) return x.norm();
    double s = 0.0;
    for (int i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), p);
    return std::pow(s, 1.0 / p);
}

void require_finite(const Vector& v, const char* what) {
    if (!v.allFinite()) throw InvalidBodyError(std::string(what) + ": non-finite entry");
}

// Enumerates the supporting hyperplanes of conv(vertices) spanned by
// d-subsets. Every facet hyperplane is among them, and every hyperplane
// found supports the hull, so the minimum offset is the exact inscribed
// radius at the origin.
std::vector<Facet> enumerate_facets(const std::vector<Vector>& verts, int d) {
    const int n = static_cast<int>(verts.size());
    if (binomial(n, d) > kMaxFacetSubsets)
        throw UnsupportedKindError(
            "vertex polytope too large for exact facet enumeration (C(n,d) over limit)");

    double scale = 1.0;
    for (const auto& v : verts) scale = std::max(scale, v.lpNorm<Eigen::Infinity>());
    const double tol = 1e-9 * scale;

    std::vector<Facet> facets;
    auto add_unique = [&](const Vector& normal, double offset) {
        for (const auto& f : facets)
            if (std::abs(f.offset - offset) < 1e-9 * scale &&
                (f.normal - normal).lpNorm<Eigen::Infinity>() < 1e-9)
                return;
        facets.push_back({normal, offset});
    };

    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Vector normal;
        if (d == 1) {
            normal = Vector::Ones(1);
        } else {
            Matrix diff(d - 1, d);
            for (int j = 1; j < d; ++j) diff.row(j - 1) = verts[idx[j]] - verts[idx[0]];
            Eigen::FullPivLU<Matrix> lu(diff);
            lu.setThreshold(1e-10);
            if (lu.dimensionOfKernel() == 1) normal = lu.kernel().col(0);
        }
        if (normal.size() == d) {
            normal.normalize();
            const double h = normal.dot(verts[idx[0]]);
            double lo = h, hi = h;
            for (const auto& v : verts) {
                double t = normal.dot(v);
                lo = std::min(lo, t);
                hi = std::max(hi, t);
            }
            if (hi <= h + tol) add_unique(normal, h);
            else if (lo >= h - tol) add_unique(-normal, -h);
        }

        // next d-combination of {0..n-1}
        int k = d - 1;
        while (k >= 0 && idx[k] == n - d + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return facets;
}

VPolyData build_vpoly(const std::vector<Vector>& vertices, int d) {
    if (static_cast<int>(vertices.size()) < d + 1)
        throw InvalidBodyError("vertex polytope: needs at least dim+1 vertices");
    for (const auto& v : vertices) {
        if (v.size() != d) throw InvalidBodyError("vertex polytope: inconsistent vertex dimension");
        require_finite(v, "vertex polytope");
    }
    Matrix span(static_cast<int>(vertices.size()) - 1, d);
    for (size_t i = 1; i < vertices.size(); ++i)
        span.row(static_cast<int>(i) - 1) = vertices[i] - vertices[0];
    Eigen::FullPivLU<Matrix> lu(span);
    lu.setThreshold(1e-10);
    if (lu.rank() < d)
        throw InvalidBodyError("vertex polytope: vertices do not affinely span the space");

    VPolyData data;
    data.vertices = vertices;
    data.facets = enumerate_facets(vertices, d);
    if (data.facets.empty()) throw InvalidBodyError("vertex polytope: no supporting facets found");
    data.inscribed_r = std::numeric_limits<double>::infinity();
    for (const auto& f : data.facets) data.inscribed_r = std::min(data.inscribed_r, f.offset);
    if (!(data.inscribed_r >= kInteriorMargin))
        throw InvalidBodyError(
            "vertex polytope: origin not strictly interior (containment margin below 1e-9)");
    data.circum_R = 0.0;
    for (const auto& v : vertices) data.circum_R = std::max(data.circum_R, v.norm());
    return data;
}

double vpoly_facet_gauge(const VPolyData& P, const Vector& x, int* best_index = nullptr) {
    double best = 0.0;
    int arg = 0;
    for (size_t f = 0; f < P.facets.size(); ++f) {
        double ratio = P.facets[f].normal.dot(x) / P.facets[f].offset;
        if (ratio > best) {
            best = ratio;
            arg = static_cast<int>(f);
        }
    }
    if (best_index) *best_index = arg;
    return best;
}

// Gauge by bisection on lambda with the facet membership oracle
// (x in lambda K iff <n_f, x> <= lambda h_f for every facet).
double vpoly_gauge(const VPolyData& P, const Vector& x) {
    const double nx = x.norm();
    if (nx == 0.0) return 0.0;
    auto inside = [&](double lam) {
        for (const auto& f : P.facets)
            if (f.normal.dot(x) > lam * f.offset) return false;
        return true;
    };
    double lo = nx / P.circum_R;
    double hi = nx / P.inscribed_r;
    if (inside(lo)) return lo;
    for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (inside(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

HPolyData build_hpoly(const Matrix& rows, const Vector& offsets) {
    const int m = static_cast<int>(rows.rows());
    const int d = static_cast<int>(rows.cols());
    if (m == 0 || d == 0) throw InvalidBodyError("halfspace polytope: empty system");
    if (offsets.size() != m)
        throw InvalidBodyError("halfspace polytope: rows/offsets size mismatch");
    if (!rows.allFinite() || !offsets.allFinite())
        throw InvalidBodyError("halfspace polytope: non-finite entry");
    for (int i = 0; i < m; ++i) {
        if (rows.row(i).norm() == 0.0) throw InvalidBodyError("halfspace polytope: zero row");
        if (!(offsets[i] > 0.0))
            throw InvalidBodyError("halfspace polytope: offset not positive (origin not interior)");
    }
    // Bounded iff the support value is finite along every +-e_i.
    for (int i = 0; i < d; ++i) {
        for (double sgn : {1.0, -1.0}) {
            Vector c = Vector::Zero(d);
            c[i] = sgn;
            if (lp::maximize(rows, offsets, c).status != lp::Status::Optimal)
                throw InvalidBodyError("halfspace polytope: unbounded (support infinite along axis)");
        }
    }

    HPolyData data;
    data.rows = rows;
    data.offsets = offsets;
    data.inscribed_r = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i)
        data.inscribed_r = std::min(data.inscribed_r, offsets[i] / rows.row(i).norm());

    // Circumscribed radius via the polar: R = 1 / r(conv{a_i/b_i}), exact
    // when facet enumeration of the polar is tractable; otherwise the
    // coordinate box bound (a valid over-estimate).
    if (binomial(m, d) <= kMaxFacetSubsets) {
        std::vector<Vector> pv(m);
        for (int i = 0; i < m; ++i) pv[i] = rows.row(i).transpose() / offsets[i];
        auto facets = enumerate_facets(pv, d);
        double polar_r = std::numeric_limits<double>::infinity();
        for (const auto& f : facets) polar_r = std::min(polar_r, f.offset);
        data.circum_R = 1.0 / polar_r;
        data.circum_exact = true;
    } else {
        double sq = 0.0;
        for (int i = 0; i < d; ++i) {
            Vector c = Vector::Zero(d);
            c[i] = 1.0;
            double hi = lp::maximize(rows, offsets, c).value;
            c[i] = -1.0;
            double lo = lp::maximize(rows, offsets, c).value;
            double w = std::max(hi, lo);
            sq += w * w;
        }
        data.circum_R = std::sqrt(sq);
        data.circum_exact = false;
    }
    return data;
}

EllipsoidData build_ellipsoid(const Matrix& shape) {
    const int d = static_cast<int>(shape.rows());
    if (d == 0 || shape.cols() != d) throw InvalidBodyError("ellipsoid: shape matrix not square");
    if (!shape.allFinite()) throw InvalidBodyError("ellipsoid: non-finite entry");
    double scale = std::max(1.0, shape.cwiseAbs().maxCoeff());
    if ((shape - shape.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw InvalidBodyError("ellipsoid: shape matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> es(shape);
    EllipsoidData data;
    data.shape = 0.5 * (shape + shape.transpose());
    data.eig_min = es.eigenvalues().minCoeff();
    data.eig_max = es.eigenvalues().maxCoeff();
    if (!(data.eig_min > 1e-12 * std::max(1.0, data.eig_max)))
        throw InvalidBodyError("ellipsoid: shape matrix not positive definite");
    data.inverse = es.eigenvectors() *
                   es.eigenvalues().cwiseInverse().asDiagonal() *
                   es.eigenvectors().transpose();
    return data;
}

}  // namespace

struct ConvexBody::Impl {
    int dim;
    std::variant<BallData, EllipsoidData, LpBallData, HPolyData, VPolyData> data;
};

ConvexBody::ConvexBody(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ConvexBody ConvexBody::ball(int dim, double radius) {
    if (dim < 1) throw InvalidBodyError("ball: dimension must be >= 1");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidBodyError("ball: radius must be positive and finite");
    return ConvexBody(std::make_shared<Impl>(Impl{dim, BallData{radius}}));
}

ConvexBody ConvexBody::ellipsoid(const Matrix& shape) {
    auto data = build_ellipsoid(shape);
    int dim = static_cast<int>(shape.rows());
    return ConvexBody(std::make_shared<Impl>(Impl{dim, std::move(data)}));
}

ConvexBody ConvexBody::lp_ball(int dim, double p, double radius) {
    if (dim < 1) throw InvalidBodyError("lp ball: dimension must be >= 1");
    if (!(p >= 1.0)) throw InvalidBodyError("lp ball: exponent must satisfy p >= 1");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidBodyError("lp ball: radius must be positive and finite");
    return ConvexBody(std::make_shared<Impl>(Impl{dim, LpBallData{p, radius}}));
}

ConvexBody ConvexBody::halfspace_polytope(const Matrix& rows, const Vector& offsets) {
    auto data = build_hpoly(rows, offsets);
    int dim = static_cast<int>(rows.cols());
    return ConvexBody(std::make_shared<Impl>(Impl{dim, std::move(data)}));
}

ConvexBody ConvexBody::vertex_polytope(const std::vector<Vector>& vertices) {
    if (vertices.empty()) throw InvalidBodyError("vertex polytope: no vertices");
    int dim = static_cast<int>(vertices.front().size());
    auto data = build_vpoly(vertices, dim);
    return ConvexBody(std::make_shared<Impl>(Impl{dim, std::move(data)}));
}

ConvexBody ConvexBody::cube(int dim, double half_side) {
    Matrix rows(2 * dim, dim);
    rows.setZero();
    Vector offsets = Vector::Constant(2 * dim, half_side);
    for (int i = 0; i < dim; ++i) {
        rows(2 * i, i) = 1.0;
        rows(2 * i + 1, i) = -1.0;
    }
    return halfspace_polytope(rows, offsets);
}

ConvexBody ConvexBody::cross_polytope(int dim, double radius) {
    std::vector<Vector> verts;
    verts.reserve(2 * dim);
    for (int i = 0; i < dim; ++i) {
        Vector v = Vector::Zero(dim);
        v[i] = radius;
        verts.push_back(v);
        v[i] = -radius;
        verts.push_back(v);
    }
    return vertex_polytope(verts);
}

BodyKind ConvexBody::kind() const {
    switch (impl_->data.index()) {
        case 0: return BodyKind::Ball;
        case 1: return BodyKind::Ellipsoid;
        case 2: return BodyKind::LpBall;
        case 3: return BodyKind::HalfspacePolytope;
        default: return BodyKind::VertexPolytope;
    }
}

int ConvexBody::dim() const { return impl_->dim; }

double ConvexBody::gauge(const Vector& x) const {
    if (x.size() != impl_->dim) throw DomainError("gauge: dimension mismatch");
    const auto& data = impl_->data;
    if (const auto* b = std::get_if<BallData>(&data)) return x.norm() / b->radius;
    if (const auto* e = std::get_if<EllipsoidData>(&data))
        return std::sqrt(std::max(0.0, x.dot(e->shape * x)));
    if (const auto* l = std::get_if<LpBallData>(&data)) return lp_norm(x, l->p) / l->radius;
    if (const auto* h = std::get_if<HPolyData>(&data)) {
        double best = 0.0;
        for (int i = 0; i < h->rows.rows(); ++i)
            best = std::max(best, h->rows.row(i).dot(x) / h->offsets[i]);
        return best;
    }
    return vpoly_gauge(std::get<VPolyData>(data), x);
}

Vector ConvexBody::gauge_subgradient(const Vector& x) const {
    if (x.size() != impl_->dim) throw DomainError("gauge_subgradient: dimension mismatch");
    if (x.norm() == 0.0) throw ZeroPointError("gauge_subgradient undefined at x = 0");
    const auto& data = impl_->data;
    if (const auto* b = std::get_if<BallData>(&data)) return x / (b->radius * x.norm());
    if (const auto* e = std::get_if<EllipsoidData>(&data)) {
        Vector ax = e->shape * x;
        return ax / std::sqrt(x.dot(ax));
    }
    if (const auto* l = std::get_if<LpBallData>(&data)) {
        const int d = impl_->dim;
        Vector g = Vector::Zero(d);
        if (std::isinf(l->p)) {
            int best = 0;
            for (int i = 1; i < d; ++i)
                if (std::abs(x[i]) > std::abs(x[best])) best = i;
            g[best] = (x[best] >= 0.0 ? 1.0 : -1.0) / l->radius;
        } else if (l->p == 1.0) {
            for (int i = 0; i < d; ++i)
                g[i] = (x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0)) / l->radius;
        } else {
            double np = lp_norm(x, l->p);
            for (int i = 0; i < d; ++i) {
                double a = std::abs(x[i]);
                if (a > 0.0)
                    g[i] = (x[i] > 0.0 ? 1.0 : -1.0) * std::pow(a / np, l->p - 1.0) / l->radius;
            }
        }
        return g;
    }
    if (const auto* h = std::get_if<HPolyData>(&data)) {
        int best = 0;
        double best_ratio = h->rows.row(0).dot(x) / h->offsets[0];
        for (int i = 1; i < h->rows.rows(); ++i) {
            double ratio = h->rows.row(i).dot(x) / h->offsets[i];
            if (ratio > best_ratio + 0.0) {  // strict: keeps the smallest index on ties
                best_ratio = ratio;
                best = i;
            }
        }
        return h->rows.row(best).transpose() / h->offsets[best];
    }
    const auto& P = std::get<VPolyData>(data);
    int best = 0;
    vpoly_facet_gauge(P, x, &best);
    return P.facets[best].normal / P.facets[best].offset;
}

double ConvexBody::support(const Vector& c) const {
    if (c.size() != impl_->dim) throw DomainError("support: dimension mismatch");
    const auto& data = impl_->data;
    if (const auto* b = std::get_if<BallData>(&data)) return b->radius * c.norm();
    if (const auto* e = std::get_if<EllipsoidData>(&data))
        return std::sqrt(std::max(0.0, c.dot(e->inverse * c)));
    if (const auto* l = std::get_if<LpBallData>(&data))
        return l->radius * lp_norm(c, dual_exponent(l->p));
    if (const auto* h = std::get_if<HPolyData>(&data)) {
        auto res = lp::maximize(h->rows, h->offsets, c);
        if (res.status != lp::Status::Optimal)
            throw DegenerateBodyError("support: linear program did not reach an optimum");
        return res.value;
    }
    const auto& P = std::get<VPolyData>(data);
    double best = P.vertices[0].dot(c);
    for (size_t j = 1; j < P.vertices.size(); ++j) best = std::max(best, P.vertices[j].dot(c));
    return best;
}

Vector ConvexBody::support_argmax(const Vector& c) const {
    if (c.size() != impl_->dim) throw DomainError("support_argmax: dimension mismatch");
    const int d = impl_->dim;
    const auto& data = impl_->data;
    const bool zero_dir = (c.lpNorm<Eigen::Infinity>() == 0.0);

    if (const auto* b = std::get_if<BallData>(&data)) {
        if (zero_dir) return b->radius * Vector::Unit(d, 0);
        return b->radius * c / c.norm();
    }
    if (const auto* e = std::get_if<EllipsoidData>(&data)) {
        if (zero_dir) {
            Vector anchor = Vector::Unit(d, 0);
            return anchor / gauge(anchor);
        }
        Vector y = e->inverse * c;
        return y / std::sqrt(c.dot(y));
    }
    if (const auto* l = std::get_if<LpBallData>(&data)) {
        if (zero_dir) return l->radius * Vector::Unit(d, 0);
        Vector x(d);
        if (std::isinf(l->p)) {
            for (int i = 0; i < d; ++i) x[i] = (c[i] >= 0.0 ? 1.0 : -1.0) * l->radius;
        } else if (l->p == 1.0) {
            int best = 0;
            for (int i = 1; i < d; ++i)
                if (std::abs(c[i]) > std::abs(c[best])) best = i;
            x.setZero();
            x[best] = (c[best] >= 0.0 ? 1.0 : -1.0) * l->radius;
        } else {
            const double q = dual_exponent(l->p);
            const double nq = lp_norm(c, q);
            for (int i = 0; i < d; ++i) {
                double a = std::abs(c[i]);
                x[i] = a > 0.0 ? (c[i] > 0.0 ? 1.0 : -1.0) * l->radius * std::pow(a / nq, q - 1.0)
                               : 0.0;
            }
        }
        return x;
    }
    if (const auto* h = std::get_if<HPolyData>(&data)) {
        Vector dir = zero_dir ? Vector(Vector::Unit(d, 0)) : c;
        auto res = lp::maximize(h->rows, h->offsets, dir);
        if (res.status != lp::Status::Optimal)
            throw DegenerateBodyError("support_argmax: linear program did not reach an optimum");
        return res.x;
    }
    const auto& P = std::get<VPolyData>(data);
    int best = 0;
    double best_val = P.vertices[0].dot(c);
    for (size_t j = 1; j < P.vertices.size(); ++j) {
        double v = P.vertices[j].dot(c);
        if (v > best_val) {
            best_val = v;
            best = static_cast<int>(j);
        }
    }
    return P.vertices[best];
}

ConvexBody ConvexBody::polar() const {
    const int d = impl_->dim;
    const auto& data = impl_->data;
    if (const auto* b = std::get_if<BallData>(&data)) return ball(d, 1.0 / b->radius);
    if (const auto* e = std::get_if<EllipsoidData>(&data)) return ellipsoid(e->inverse);
    if (const auto* l = std::get_if<LpBallData>(&data))
        return lp_ball(d, dual_exponent(l->p), 1.0 / l->radius);
    if (const auto* h = std::get_if<HPolyData>(&data)) {
        std::vector<Vector> verts(h->rows.rows());
        for (int i = 0; i < h->rows.rows(); ++i)
            verts[i] = h->rows.row(i).transpose() / h->offsets[i];
        return vertex_polytope(verts);
    }
    const auto& P = std::get<VPolyData>(data);
    Matrix rows(static_cast<int>(P.vertices.size()), d);
    for (size_t j = 0; j < P.vertices.size(); ++j) rows.row(static_cast<int>(j)) = P.vertices[j];
    return halfspace_polytope(rows, Vector::Ones(rows.rows()));
}

Membership ConvexBody::membership(const Vector& x, double delta) const {
    if (!(delta > 0.0)) throw DomainError("membership: delta must be positive");
    const double g = gauge(x);
    const double scaled = delta / sandwich_radii().r;
    if (g <= 1.0 - scaled) return Membership::Inside;
    if (g >= 1.0 + scaled) return Membership::Outside;
    return Membership::Boundary;
}

SandwichRadii ConvexBody::sandwich_radii() const {
    const int d = impl_->dim;
    const auto& data = impl_->data;
    if (const auto* b = std::get_if<BallData>(&data)) return {b->radius, b->radius};
    if (const auto* e = std::get_if<EllipsoidData>(&data))
        return {1.0 / std::sqrt(e->eig_max), 1.0 / std::sqrt(e->eig_min)};
    if (const auto* l = std::get_if<LpBallData>(&data)) {
        // Extremes of the lp norm over the Euclidean sphere: attained at a
        // canonical axis and at the diagonal.
        double stretch = std::isinf(l->p) ? std::sqrt(static_cast<double>(d))
                                          : std::pow(static_cast<double>(d), 0.5 - 1.0 / l->p);
        if (l->p <= 2.0) return {l->radius * stretch, l->radius};  // stretch <= 1 here
        return {l->radius, l->radius * stretch};
    }
    if (const auto* h = std::get_if<HPolyData>(&data)) return {h->inscribed_r, h->circum_R};
    const auto& P = std::get<VPolyData>(data);
    return {P.inscribed_r, P.circum_R};
}

double ConvexBody::ball_radius() const {
    if (const auto* b = std::get_if<BallData>(&impl_->data)) return b->radius;
    throw UnsupportedKindError("ball_radius: not a ball");
}

const Matrix& ConvexBody::ellipsoid_shape() const {
    if (const auto* e = std::get_if<EllipsoidData>(&impl_->data)) return e->shape;
    throw UnsupportedKindError("ellipsoid_shape: not an ellipsoid");
}

double ConvexBody::lp_exponent() const {
    if (const auto* l = std::get_if<LpBallData>(&impl_->data)) return l->p;
    throw UnsupportedKindError("lp_exponent: not an lp ball");
}

double ConvexBody::lp_radius() const {
    if (const auto* l = std::get_if<LpBallData>(&impl_->data)) return l->radius;
    throw UnsupportedKindError("lp_radius: not an lp ball");
}

const Matrix& ConvexBody::halfspace_rows() const {
    if (const auto* h = std::get_if<HPolyData>(&impl_->data)) return h->rows;
    throw UnsupportedKindError("halfspace_rows: not a halfspace polytope");
}

const Vector& ConvexBody::halfspace_offsets() const {
    if (const auto* h = std::get_if<HPolyData>(&impl_->data)) return h->offsets;
    throw UnsupportedKindError("halfspace_offsets: not a halfspace polytope");
}

const std::vector<Vector>& ConvexBody::vertices() const {
    if (const auto* v = std::get_if<VPolyData>(&impl_->data)) return v->vertices;
    throw UnsupportedKindError("vertices: not a vertex polytope");
}

double dual_exponent(double p) {
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

}  // namespace curvopt
