#pragma once

// Exact checks on the plane curves behind the group computations: nodes of
// the cubic pencil, its singular members, the torus-type sextic and the
// local intersection of its two branches.

#include <string>
#include <vector>

#include "zvk/multipoly.hpp"

namespace zvk {

struct Point2 {
  QEps x;
  QEps y;
};

struct SingularPointReport {
  Point2 point;
  bool f_vanishes = false;
  bool fx_vanishes = false;
  bool fy_vanishes = false;
  QEps f_value;
  QEps hessian_det;

  bool is_singular() const { return f_vanishes && fx_vanishes && fy_vanishes; }
  bool is_node() const { return is_singular() && !hessian_det.is_zero(); }
};

/// f must only involve the variables x and y.
SingularPointReport verify_node(const MultiPoly& f, const Point2& pt,
                                const std::string& x = "x", const std::string& y = "y");

/// b(-x^2 - x y^2 + y) + (x^3 - x y + y^3), with b a variable.
MultiPoly cubic_pencil();
/// The pencil member at b; over Q(eps) when b is not rational.
MultiPoly cubic_pencil(const QEps& b);

struct TorusReport {
  bool identity = false;
  /// f1 f2 - (u - a/2)^2; constant when the identity holds.
  MultiPoly difference;
  QEps constant;
};

/// With u = y^3 + y^2 + x^2 checks u (u - a) = (u - a/2)^2 + c for a constant c.
TorusReport verify_torus_structure(const mpq_class& a = mpq_class(4, 27));

struct SingularParameters {
  /// Res_x(Res_y(f, f_y), Res_y(f_x, f_y)) as a polynomial in b.
  MultiPoly elimination;
  MultiPoly squarefree;
  bool divisible_by_27b3_minus_1 = false;
};

/// Throws if an intermediate resultant vanishes identically.
SingularParameters singular_parameters();

/// Order in zbar of Res_ybar(g, h). Throws if g or h does not vanish at the
/// origin, if the resultant is zero (common factor), or if the curves meet
/// zbar = 0 somewhere other than the origin, including at infinity.
unsigned intersection_multiplicity_origin(const MultiPoly& g, const MultiPoly& h,
                                          const std::string& ybar = "ybar",
                                          const std::string& zbar = "zbar");

/// The two cubic factors of the sextic in the chart x = 1.
MultiPoly chart_factor(const mpq_class& shift);

struct CurveCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Every curve check, in a fixed order.
std::vector<CurveCheck> curve_checks();

}  // namespace zvk
