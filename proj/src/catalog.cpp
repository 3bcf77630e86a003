#include "superhom/catalog.hpp"

#include "superhom/error.hpp"

namespace superhom {

namespace {

Scalar P(const char* text) { return ParamFraction::parse(text); }

Vector4 vec(Scalar a, Scalar b, Scalar c, Scalar d) { return Vector4{{std::move(a), std::move(b), std::move(c), std::move(d)}}; }

LieAlgebra4 engel_base() {
  LieAlgebra4 L;
  L.set_bracket(1, 2, Vector4::basis(3));
  L.set_bracket(1, 3, Vector4::basis(4));
  return L;
}

void check_family(int id) {
  if (id < 1 || id > kFamilyCount) throw Error(ErrorCode::InvalidArgument, "family id must be 1..6");
}

void check_type(int id) {
  if (id < 1 || id > kClassTypeCount) throw Error(ErrorCode::InvalidArgument, "class type id must be 1..12");
}

}  // namespace

LieAlgebra4 engel_ansatz() {
  LieAlgebra4 L = engel_base();
  const int pairs[4][2] = {{1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (const auto& pr : pairs) {
    Vector4 v;
    for (int k = 1; k <= 4; ++k)
      v.c[k - 1] = ParamFraction::variable("C" + std::to_string(pr[0]) + std::to_string(pr[1]) + std::to_string(k));
    L.set_bracket(pr[0], pr[1], v);
  }
  L.origin.source = "ansatz";
  return L;
}

LieAlgebra4 family(int id) {
  check_family(id);
  LieAlgebra4 L = engel_base();
  switch (id) {
    case 1:
      L.set_bracket(1, 4, vec(0, 0, P("C143"), P("C144")));
      L.set_bracket(2, 3, vec(0, 0, P("-C144*C234 + C244"), P("C234")));
      L.set_bracket(2, 4, vec(0, 0, P("C143*C234"), P("C244")));
      break;
    case 2: {
      const Scalar K = P("C144^2 + 4*C143");
      const Scalar u = P("C144*C234 - 2*C244");
      const Scalar C144 = P("C144");
      const Scalar C234 = P("C234");
      const Scalar eighth = Scalar(Rational(1, 8));
      L.set_bracket(1, 4, vec(-(eighth * K * u), -(eighth * K * C144), P("C143"), C144));
      const Scalar f = K * P("C144*C234 - C244") * P("1/(2*C144^2)");
      L.set_bracket(2, 3, vec(-(f * u), -(f * C144), P("-C144*C234 + C244"), C234));
      L.set_bracket(2, 4, vec(-(eighth * u * K * C234), -(eighth * K * C144 * C234),
                              P("-(C144^3*C234 + 2*C143*C144*C234 - C144^2*C244 - 4*C143*C244)/(2*C144)"),
                              P("C244")));
      // Forced by Jacobi from the three brackets above.
      const Scalar g = K * P("C144*C234 - C244") * P("1/(8*C144^2)");
      L.set_bracket(3, 4, vec(g * u * K, g * C144 * K, g * P("2*C144^2"), g * P("-4*C144")));
      L.add_nonzero(ParamPolynomial::variable("C144"));
      break;
    }
    case 3: {
      L.set_bracket(1, 4, vec(P("-C142*C244/C144"), P("C142"), P("C143"), P("C144")));
      L.set_bracket(2, 3, vec(0, 0, 0, P("C244/C144")));
      const Scalar s = P("C244/C144^2");
      L.set_bracket(2, 4, vec(s * P("-C142*C244"), s * P("C142*C144"), s * P("C143*C144"), s * P("C144^2")));
      L.add_nonzero(ParamPolynomial::variable("C144"));
      break;
    }
    case 4:
      L.set_bracket(2, 3, vec(P("C231"), 0, P("C244"), P("C234")));
      L.set_bracket(2, 4, vec(0, 0, 0, P("C244")));
      break;
    case 5:
      L.set_bracket(1, 4, vec(P("-C142*C234"), P("C142"), P("C143"), 0));
      L.set_bracket(2, 3, vec(0, 0, 0, P("C234")));
      L.set_bracket(2, 4, vec(P("-C142*C234^2"), P("C142*C234"), P("C143*C234"), 0));
      break;
    case 6:
      L.set_bracket(1, 4, vec(0, 0, P("C143"), 0));
      L.set_bracket(2, 3, vec(P("C231"), P("C344"), 0, P("C234")));
      L.set_bracket(2, 4, vec(0, 0, P("C143*C234 + C344"), 0));
      L.set_bracket(3, 4, vec(P("-C143*C231"), P("-C143*C344"), 0, P("C344")));
      break;
  }
  L.origin.source = "family";
  L.origin.id = id;
  return L;
}

std::string family_alphabet(int id) {
  std::string out;
  for (const auto& p : family(id).parameters()) out += (out.empty() ? "" : ",") + p;
  return out;
}

std::string class_type_parameters(int id) {
  check_type(id);
  switch (id) {
    case 2: case 11: return "a";
    case 5: case 6: return "ab";
    case 9: return "b";
    default: return "";
  }
}

std::string class_type_constraint(int id) {
  check_type(id);
  switch (id) {
    case 5: return "ab != 0";
    case 6: return "a != 0 and b >= 0";
    case 9: return "-1 < b <= 1";
    default: return "";
  }
}

void check_class_params(int id, const ClassParams& params) {
  std::string uses = class_type_parameters(id);
  auto violation = [&](const std::string& what) {
    throw Error(ErrorCode::ConstraintViolation, "Type[" + std::to_string(id) + "]: " + what);
  };
  if (params.a && uses.find('a') == std::string::npos) violation("has no parameter a");
  if (params.b && uses.find('b') == std::string::npos) violation("has no parameter b");
  const auto& a = params.a;
  const auto& b = params.b;
  switch (id) {
    case 5:
      if ((a && *a == 0) || (b && *b == 0)) violation("requires ab != 0");
      break;
    case 6:
      if (a && *a == 0) violation("requires a != 0");
      if (b && *b < 0) violation("requires b >= 0");
      break;
    case 9:
      if (b && (*b <= -1 || *b > 1)) violation("requires -1 < b <= 1");
      break;
    default:
      break;
  }
}

LieAlgebra4 class_type(int id, const ClassParams& params) {
  check_type(id);
  check_class_params(id, params);
  const Scalar a = params.a ? Scalar(*params.a) : ParamFraction::variable("a");
  const Scalar b = params.b ? Scalar(*params.b) : ParamFraction::variable("b");
  LieAlgebra4 L;
  const Vector4 y1 = Vector4::basis(1), y2 = Vector4::basis(2), y3 = Vector4::basis(3);
  const Scalar one(1), two(2);
  switch (id) {
    case 1:
      L.set_bracket(2, 4, y1);
      L.set_bracket(3, 4, y2);
      break;
    case 2:
      L.set_bracket(1, 4, a * y1);
      L.set_bracket(2, 4, y2);
      L.set_bracket(3, 4, y2 + y3);
      break;
    case 3:
      L.set_bracket(1, 4, y1);
      L.set_bracket(3, 4, y2);
      break;
    case 4:
      L.set_bracket(1, 4, y1);
      L.set_bracket(2, 4, y1 + y2);
      L.set_bracket(3, 4, y2 + y3);
      break;
    case 5:
      L.set_bracket(1, 4, y1);
      L.set_bracket(2, 4, a * y2);
      L.set_bracket(3, 4, b * y3);
      break;
    case 6:
      L.set_bracket(1, 4, a * y1);
      L.set_bracket(2, 4, b * y2 - y3);
      L.set_bracket(3, 4, y2 + b * y3);
      break;
    case 7:
      L.set_bracket(1, 4, two * y1);
      L.set_bracket(2, 3, y1);
      L.set_bracket(2, 4, y2);
      L.set_bracket(3, 4, y2 + y3);
      break;
    case 8:
      L.set_bracket(2, 3, y1);
      L.set_bracket(2, 4, y2);
      L.set_bracket(3, 4, Scalar(-1) * y3);
      break;
    case 9:
      L.set_bracket(1, 4, (one + b) * y1);
      L.set_bracket(2, 3, y1);
      L.set_bracket(2, 4, y2);
      L.set_bracket(3, 4, b * y3);
      break;
    case 10:
      L.set_bracket(2, 3, y1);
      L.set_bracket(2, 4, Scalar(-1) * y3);
      L.set_bracket(3, 4, y2);
      break;
    case 11:
      L.set_bracket(1, 4, two * a * y1);
      L.set_bracket(2, 3, y1);
      L.set_bracket(2, 4, a * y2 - y3);
      L.set_bracket(3, 4, y2 + a * y3);
      break;
    case 12:
      L.set_bracket(1, 3, y1);
      L.set_bracket(1, 4, Scalar(-1) * y2);
      L.set_bracket(2, 3, y2);
      L.set_bracket(2, 4, y1);
      break;
  }
  L.origin.source = "classType";
  L.origin.id = id;
  if (params.a) L.origin.params["a"] = params.a->get_str();
  if (params.b) L.origin.params["b"] = params.b->get_str();
  return L;
}

}  // namespace superhom
