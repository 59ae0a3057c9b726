#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "cuspidal/expr.hpp"
#include "cuspidal/jet.hpp"

namespace cusp {

struct Domain {
    double u_min = -1.0, u_max = 1.0;
    double v_min = -1.0, v_max = 1.0;

    bool contains(double u, double v) const { return u >= u_min && u <= u_max && v >= v_min && v <= v_max; }
    double diameter() const;
    Eigen::Vector2d center() const { return {0.5 * (u_min + u_max), 0.5 * (v_min + v_max)}; }
};

/// A parametrized surface f(u,v) = (x, y, z) over a rectangle.
/// co_orientation = -1 selects the opposite unit normal.
struct SurfaceDefinition {
    std::string name = "surface";
    Expr x, y, z;
    Domain domain;
    int co_orientation = 1;
};

/// Surface file problem with a 1-based line/column (0 when not applicable).
class SurfaceFileError : public std::runtime_error {
public:
    SurfaceFileError(const std::string& origin, int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// Parses the INI-like surface format:
///
///   # comment
///   [surface]
///   name = fplus
///   x = u
///   y = 3*u^2 + v^2/2
///   z = v^3/3 + u^4 + u^2*v^2
///   u_range = -1, 1
///   v_range = -1, 1
///   co_orientation = +1
SurfaceDefinition parse_surface_text(std::string_view text, const std::string& origin = "<string>");
SurfaceDefinition load_surface_file(const std::filesystem::path& path);
/// Canonical text form accepted by parse_surface_text.
std::string to_surface_text(const SurfaceDefinition& s);

Eigen::Vector3d surface_point(const SurfaceDefinition& s, double u, double v);
JetVec2d surface_jet(const SurfaceDefinition& s, double u, double v, int order);
/// Jet of f(U, V) for chart jets U, V (the pullback of f through a chart).
JetVec2d pullback(const SurfaceDefinition& s, const Jet2& U, const Jet2& V);

/// x -> R x + b applied to the coordinate functions.
SurfaceDefinition rigid_motion(const SurfaceDefinition& s, const Eigen::Matrix3d& R, const Eigen::Vector3d& b);
/// f(u, v) -> f(U(u, v), V(u, v)) on a new parameter domain.
SurfaceDefinition reparametrize(const SurfaceDefinition& s, const Expr& U, const Expr& V, const Domain& domain);

}  // namespace cusp
