#pragma once

#include <memory>
#include <vector>

#include <Eigen/Core>

namespace curvopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class BodyKind { Ball, Ellipsoid, LpBall, HalfspacePolytope, VertexPolytope };

enum class Membership { Inside, Outside, Boundary };

// Inscribed and circumscribed Euclidean radii: B(r) subset K subset B(R).
struct SandwichRadii {
    double r = 0.0;
    double R = 0.0;
};

// A convex body in R^d with the origin in its interior, exposed through its
// gauge (Minkowski functional), support function and related oracles.
//
// Bodies are immutable after construction and cheap to copy; all operations
// are const and safe to call concurrently. Construction validates the
// invariants of each kind (parameter domains, boundedness, origin strictly
// interior) and throws InvalidBodyError naming the first violated one.
class ConvexBody {
public:
    static ConvexBody ball(int dim, double radius);
    static ConvexBody ellipsoid(const Matrix& shape);
    static ConvexBody lp_ball(int dim, double p, double radius);
    static ConvexBody halfspace_polytope(const Matrix& rows, const Vector& offsets);
    static ConvexBody vertex_polytope(const std::vector<Vector>& vertices);

    // [-h, h]^dim as a HalfspacePolytope with rows +e1, -e1, +e2, -e2, ...
    static ConvexBody cube(int dim, double half_side = 1.0);
    // conv{ +-radius e_i } as a VertexPolytope.
    static ConvexBody cross_polytope(int dim, double radius = 1.0);

    BodyKind kind() const;
    int dim() const;

    // Gauge ||x||_K = inf{ lambda > 0 : x in lambda K }. Total; positively
    // homogeneous and subadditive. Exact closed forms except VertexPolytope,
    // which uses bisection against its membership oracle (precision well
    // below 1e-10).
    double gauge(const Vector& x) const;

    // A subgradient g of the gauge at x != 0 with <g, x> = ||x||_K and
    // g in the polar body. Ties (polytopes) break at the smallest index.
    // Throws ZeroPointError at x = 0.
    Vector gauge_subgradient(const Vector& x) const;

    // Support function sigma_K(c) = max{ <c, x> : x in K }.
    double support(const Vector& c) const;

    // A maximizer of <c, .> over K. Deterministic: ties break at the
    // smallest vertex index (vertex bodies) or via the fixed simplex pivot
    // order (halfspace bodies). c = 0 returns the body's anchor point.
    Vector support_argmax(const Vector& c) const;

    // Closed-form polar body. Ball(rho) -> Ball(1/rho), LpBall(p) ->
    // LpBall(q), Ellipsoid(A) -> Ellipsoid(A^-1), and polytopes swap
    // representation.
    ConvexBody polar() const;

    // Classifies x against the boundary with Euclidean tolerance delta,
    // converted to gauge units through the inscribed radius.
    Membership membership(const Vector& x, double delta) const;

    SandwichRadii sandwich_radii() const;

    // Parameter accessors; throw UnsupportedKindError on kind mismatch.
    double ball_radius() const;
    const Matrix& ellipsoid_shape() const;
    double lp_exponent() const;
    double lp_radius() const;
    const Matrix& halfspace_rows() const;
    const Vector& halfspace_offsets() const;
    const std::vector<Vector>& vertices() const;

private:
    struct Impl;
    explicit ConvexBody(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// Dual exponent q with 1/p + 1/q = 1 (p = 1 <-> q = inf).
double dual_exponent(double p);

}  // namespace curvopt
