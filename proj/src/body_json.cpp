#include "curvopt/body_json.hpp"

#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "curvopt/errors.hpp"

namespace curvopt {

namespace {

using nlohmann::json;

double parse_exponent(const json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
        throw InvalidBodyError("lp ball: exponent string must be \"inf\"");
    }
    return v.get<double>();
}

Vector parse_vector(const json& v, int dim, const char* what) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
        throw InvalidBodyError(std::string(what) + ": expected array of length dim");
    Vector out(dim);
    for (int i = 0; i < dim; ++i) out[i] = v[i].get<double>();
    return out;
}

const json& require(const json& spec, const char* field) {
    auto it = spec.find(field);
    if (it == spec.end())
        throw InvalidBodyError(std::string("body spec: missing field \"") + field + "\"");
    return *it;
}

}  // namespace

ConvexBody body_from_json(const json& spec) {
    const auto kind = require(spec, "kind").get<std::string>();
    const int dim = require(spec, "dim").get<int>();
    if (dim < 1) throw InvalidBodyError("body spec: dim must be >= 1");

    if (kind == "ball") return ConvexBody::ball(dim, require(spec, "radius").get<double>());
    if (kind == "lp_ball")
        return ConvexBody::lp_ball(dim, parse_exponent(require(spec, "p")),
                                   require(spec, "radius").get<double>());
    if (kind == "ellipsoid") {
        const auto& rows = require(spec, "shape");
        if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
            throw InvalidBodyError("ellipsoid: shape must be a dim x dim array");
        Matrix shape(dim, dim);
        for (int i = 0; i < dim; ++i) shape.row(i) = parse_vector(rows[i], dim, "ellipsoid shape");
        return ConvexBody::ellipsoid(shape);
    }
    if (kind == "halfspace_polytope") {
        const auto& rows = require(spec, "rows");
        const auto& offs = require(spec, "offsets");
        if (!rows.is_array() || rows.empty())
            throw InvalidBodyError("halfspace polytope: rows must be a non-empty array");
        Matrix a(static_cast<int>(rows.size()), dim);
        for (int i = 0; i < a.rows(); ++i)
            a.row(i) = parse_vector(rows[i], dim, "halfspace polytope row");
        if (!offs.is_array() || offs.size() != rows.size())
            throw InvalidBodyError("halfspace polytope: offsets must match rows");
        Vector b(a.rows());
        for (int i = 0; i < a.rows(); ++i) b[i] = offs[i].get<double>();
        return ConvexBody::halfspace_polytope(a, b);
    }
    if (kind == "vertex_polytope") {
        const auto& vs = require(spec, "vertices");
        if (!vs.is_array() || vs.empty())
            throw InvalidBodyError("vertex polytope: vertices must be a non-empty array");
        std::vector<Vector> verts;
        verts.reserve(vs.size());
        for (const auto& v : vs) verts.push_back(parse_vector(v, dim, "vertex"));
        return ConvexBody::vertex_polytope(verts);
    }
    throw InvalidBodyError("body spec: unknown kind \"" + kind + "\"");
}

ConvexBody load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open body spec file: " + path);
    json spec;
    try {
        in >> spec;
    } catch (const json::exception& e) {
        throw InvalidBodyError("body spec parse error in " + path + ": " + e.what());
    }
    return body_from_json(spec);
}

json body_to_json(const ConvexBody& body) {
    json out;
    out["dim"] = body.dim();
    switch (body.kind()) {
        case BodyKind::Ball:
            out["kind"] = "ball";
            out["radius"] = body.ball_radius();
            break;
        case BodyKind::Ellipsoid: {
            out["kind"] = "ellipsoid";
            json rows = json::array();
            const auto& a = body.ellipsoid_shape();
            for (int i = 0; i < a.rows(); ++i) {
                json row = json::array();
                for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
                rows.push_back(row);
            }
            out["shape"] = rows;
            break;
        }
        case BodyKind::LpBall:
            out["kind"] = "lp_ball";
            if (std::isinf(body.lp_exponent())) out["p"] = "inf";
            else out["p"] = body.lp_exponent();
            out["radius"] = body.lp_radius();
            break;
        case BodyKind::HalfspacePolytope: {
            out["kind"] = "halfspace_polytope";
            json rows = json::array();
            const auto& a = body.halfspace_rows();
            for (int i = 0; i < a.rows(); ++i) {
                json row = json::array();
                for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
                rows.push_back(row);
            }
            out["rows"] = rows;
            json offs = json::array();
            for (int i = 0; i < body.halfspace_offsets().size(); ++i)
                offs.push_back(body.halfspace_offsets()[i]);
            out["offsets"] = offs;
            break;
        }
        case BodyKind::VertexPolytope: {
            out["kind"] = "vertex_polytope";
            json vs = json::array();
            for (const auto& v : body.vertices()) {
                json row = json::array();
                for (int i = 0; i < v.size(); ++i) row.push_back(v[i]);
                vs.push_back(row);
            }
            out["vertices"] = vs;
            break;
        }
    }
    return out;
}

}  // namespace curvopt
