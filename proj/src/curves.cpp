#include "zvk/curves.hpp"

#include <algorithm>

#include "zvk/error.hpp"

namespace zvk {

namespace {

MultiPoly var(const std::string& name, Field field = Field::Rational) {
  return MultiPoly::variable(name, field);
}

MultiPoly num(const QEps& c, Field field = Field::Rational) { return MultiPoly(c, field); }

// ---------------------------------------------------- dense Q[b] helpers

using Dense = std::vector<mpq_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const MultiPoly& p, const std::string& v) {
  for (const auto& name : p.variables()) {
    if (name != v) throw Error("expected a polynomial in " + v + " only");
  }
  Dense d(p.degree(v) + 1);
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw Error("expected rational coefficients");
    d[e.empty() ? 0 : e[0]] = c.a();
  }
  trim(d);
  return d;
}

MultiPoly from_dense(const Dense& d, const std::string& v) {
  MultiPoly p;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) p += num(d[i]) * pow(var(v), static_cast<unsigned>(i));
  }
  return p;
}

// Quotient and remainder over Q.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  if (b.empty()) throw Error("division by the zero polynomial");
  trim(a);
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class t = a.back() / b.back();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= t * b[i];
    trim(a);
  }
  return {q, a};
}

Dense monic_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

bool is_monomial_in(const MultiPoly& p, const std::string& v) {
  return !p.is_zero() && p.terms().size() == 1 &&
         std::all_of(p.variables().begin(), p.variables().end(),
                     [&v](const std::string& n) { return n == v; });
}

std::string describe(const SingularPointReport& r) {
  if (r.is_node()) return "node";
  if (r.is_singular()) return "singular, degenerate Hessian";
  return "not singular (f = " + r.f_value.to_string() + ")";
}

}  // namespace

SingularPointReport verify_node(const MultiPoly& f, const Point2& pt, const std::string& x,
                                const std::string& y) {
  for (const auto& v : f.variables()) {
    if (v != x && v != y) throw Error("verify_node: polynomial uses variable " + v);
  }
  const std::map<std::string, QEps> at{{x, pt.x}, {y, pt.y}};
  const MultiPoly fx = f.derivative(x);
  const MultiPoly fy = f.derivative(y);
  SingularPointReport r;
  r.point = pt;
  r.f_value = f.evaluate(at);
  r.f_vanishes = r.f_value.is_zero();
  r.fx_vanishes = fx.evaluate(at).is_zero();
  r.fy_vanishes = fy.evaluate(at).is_zero();
  const QEps fxx = fx.derivative(x).evaluate(at);
  const QEps fyy = fy.derivative(y).evaluate(at);
  const QEps fxy = fx.derivative(y).evaluate(at);
  r.hessian_det = fxx * fyy - fxy * fxy;
  return r;
}

MultiPoly cubic_pencil() {
  const MultiPoly x = var("x");
  const MultiPoly y = var("y");
  const MultiPoly b = var("b");
  return b * (-(x * x) - x * y * y + y) + (pow(x, 3) - x * y + pow(y, 3));
}

MultiPoly cubic_pencil(const QEps& b) {
  const Field field = b.is_rational() ? Field::Rational : Field::Eisenstein;
  return cubic_pencil().with_field(field).substitute({{"b", num(b, field)}});
}

TorusReport verify_torus_structure(const mpq_class& a) {
  const MultiPoly x = var("x");
  const MultiPoly y = var("y");
  const MultiPoly u = pow(y, 3) + y * y + x * x;
  TorusReport r;
  r.difference = u * (u - num(a)) - pow(u - num(mpq_class(a / 2)), 2);
  r.identity = r.difference.is_constant();
  r.constant = r.difference.constant_term();
  return r;
}

SingularParameters singular_parameters() {
  const MultiPoly f = cubic_pencil();
  const MultiPoly fx = f.derivative("x");
  const MultiPoly fy = f.derivative("y");
  const MultiPoly r1 = resultant(f, fy, "y");
  const MultiPoly r2 = resultant(fx, fy, "y");
  if (r1.is_zero() || r2.is_zero()) throw Error("singular_parameters: degenerate elimination in y");
  SingularParameters out;
  out.elimination = resultant(r1, r2, "x");
  if (out.elimination.is_zero()) throw Error("singular_parameters: degenerate elimination in x");

  const Dense e = to_dense(out.elimination, "b");
  const Dense sq = divmod(e, monic_gcd(e, derivative(e))).first;
  out.squarefree = from_dense(sq, "b");
  const Dense target{mpq_class(-1), 0, 0, mpq_class(27)};
  out.divisible_by_27b3_minus_1 = divmod(sq, target).second.empty();
  return out;
}

unsigned intersection_multiplicity_origin(const MultiPoly& g, const MultiPoly& h,
                                          const std::string& ybar, const std::string& zbar) {
  const std::map<std::string, QEps> origin{{ybar, 0}, {zbar, 0}};
  for (const MultiPoly* p : {&g, &h}) {
    for (const auto& v : p->variables()) {
      if (v != ybar && v != zbar) throw Error("intersection: polynomial uses variable " + v);
    }
    if (!p->evaluate(origin).is_zero()) throw Error("intersection: curve misses the origin");
  }
  const MultiPoly res = resultant(g, h, ybar);
  if (res.is_zero()) throw Error("intersection: common factor (resultant vanishes)");

  // The projection to zbar must not see other intersections over zbar = 0.
  const MultiPoly zero(QEps(0), g.field());
  const auto on_line = [&](const MultiPoly& p) { return p.substitute({{zbar, zero}}); };
  const bool g_lead = !on_line(g.coefficient(ybar, g.degree(ybar))).is_zero();
  const bool h_lead = !on_line(h.coefficient(ybar, h.degree(ybar))).is_zero();
  if (!g_lead && !h_lead) throw Error("intersection: curves meet zbar = 0 at infinity");
  const MultiPoly g0 = on_line(g);
  const MultiPoly h0 = on_line(h);
  bool only_origin = false;
  if (g0.is_zero() || h0.is_zero()) {
    const MultiPoly& other = g0.is_zero() ? h0 : g0;
    only_origin = !other.is_zero() && (other.is_constant() || is_monomial_in(other, ybar));
  } else {
    // Strip the root at ybar = 0; what is left must share no root.
    const MultiPoly y = MultiPoly::variable(ybar, g.field());
    const MultiPoly gs = divide_exact(g0, pow(y, g0.valuation(ybar)));
    const MultiPoly hs = divide_exact(h0, pow(y, h0.valuation(ybar)));
    only_origin = !resultant(gs, hs, ybar).is_zero();
  }
  if (!only_origin) throw Error("intersection: curves meet zbar = 0 away from the origin");
  return res.valuation(zbar);
}

MultiPoly chart_factor(const mpq_class& shift) {
  const MultiPoly y = var("ybar");
  const MultiPoly z = var("zbar");
  return pow(y, 3) + y * y * z + z - num(shift) * pow(z, 3);
}

std::vector<CurveCheck> curve_checks() {
  std::vector<CurveCheck> out;
  const QEps eps = QEps::eps();
  const QEps eps_inv = eps.inverse();
  const auto node_check = [&out](std::string name, const MultiPoly& f, Point2 pt,
                                 std::string expected) {
    const auto report = verify_node(f, pt);
    const std::string computed = describe(report);
    out.push_back({std::move(name), expected, computed, computed == expected});
  };

  const MultiPoly f_eps = cubic_pencil(eps / QEps(3));
  node_check("f_{eps/3} node at ((2/5)eps^-1, (1/5)eps)", f_eps,
             {mpq_class(2, 5) * eps_inv, mpq_class(1, 5) * eps}, "node");
  node_check("f_{eps/3} node at ((2/5)eps, (1/5)eps^-1)", f_eps,
             {mpq_class(2, 5) * eps, mpq_class(1, 5) * eps_inv}, "node");
  node_check("f_{1/3} node at (2/5, 1/5)", cubic_pencil(mpq_class(1, 3)),
             {mpq_class(2, 5), mpq_class(1, 5)}, "node");
  node_check("f_0 node at (0, 0)", cubic_pencil(0), {0, 0}, "node");
  node_check("f_1 at (2/5, 1/5)", cubic_pencil(1), {mpq_class(2, 5), mpq_class(1, 5)},
             "not singular (f = 2/125)");

  const SingularParameters sp = singular_parameters();
  out.push_back({"elimination polynomial divisible by 27b^3 - 1", "divisible",
                 sp.divisible_by_27b3_minus_1 ? "divisible" : "not divisible",
                 sp.divisible_by_27b3_minus_1});
  const QEps at_one = sp.squarefree.evaluate({{"b", 1}});
  out.push_back({"elimination polynomial at b = 1", "nonzero",
                 at_one.is_zero() ? "0" : "nonzero", !at_one.is_zero()});

  const TorusReport torus = verify_torus_structure();
  const std::string constant = torus.identity ? torus.constant.to_string() : "not constant";
  out.push_back({"torus structure constant", "-4/729", constant, constant == "-4/729"});

  const MultiPoly u = pow(var("y"), 3) + var("y") * var("y") + var("x") * var("x");
  const MultiPoly sextic = u * (u - num(mpq_class(4, 27)));
  const MultiPoly chart = sextic.homogenize("w").substitute(
      {{"x", num(1)}, {"y", var("ybar")}, {"w", var("zbar")}});
  const MultiPoly g = chart_factor(0);
  const MultiPoly h = chart_factor(mpq_class(4, 27));
  const MultiPoly expected_chart = g * h;
  out.push_back({"sextic in the chart x = 1", expected_chart.to_string(), chart.to_string(),
                 chart == expected_chart});

  const unsigned mult = intersection_multiplicity_origin(g, h);
  out.push_back({"intersection multiplicity of the chart factors at the origin", "9",
                 std::to_string(mult), mult == 9});
  return out;
}

}  // namespace zvk
