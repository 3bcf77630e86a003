#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superhom/lie_algebra.hpp"

namespace superhom {

inline constexpr int kFamilyCount = 6;
inline constexpr int kClassTypeCount = 12;

// [y1,y2]=y3 and [y1,y3]=y4 fixed; the other four brackets carry the free
// parameters C14k, C23k, C24k, C34k.
LieAlgebra4 engel_ansatz();

// The six Engel-type families; 2 and 3 assume C144 != 0.
LieAlgebra4 family(int id);
std::string family_alphabet(int id);

struct ClassParams {
  std::optional<Rational> a;
  std::optional<Rational> b;
};

// Parameters a, b the type depends on ("a", "b", "ab" or "").
std::string class_type_parameters(int id);
// Human-readable parameter constraint, empty when unconstrained.
std::string class_type_constraint(int id);
// Unset parameters stay symbolic. Throws ConstraintViolation.
LieAlgebra4 class_type(int id, const ClassParams& params = {});
// Throws ConstraintViolation when a supplied value breaks the constraint.
void check_class_params(int id, const ClassParams& params);

}  // namespace superhom
