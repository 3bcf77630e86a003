#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superhom/graded.hpp"
#include "superhom/poly_matrix.hpp"

namespace superhom {

enum class ComplexKind { Tangent, Cotangent, Extended };

std::string kind_name(ComplexKind kind);
// "tangent", "cotangent", "extended" (case-insensitive); throws InvalidArgument.
ComplexKind parse_kind(const std::string& text);

// One letter of a chain word: a basis element of a graded component.
struct Letter {
  GradedComponent component;
  std::size_t index = 0;

  int grade() const { return component.grade(); }
  // Desuspension parity (grade + 1) mod 2: 1 means letters anticommute.
  int wedge_parity() const { return (component.grade() + 1) & 1; }
  std::string label() const { return GradedElement::basis_label(component, index); }
};

// Letter alphabet of a complex, in component order then basis order.
const std::vector<Letter>& letters(ComplexKind kind);
std::vector<GradedComponent> components(ComplexKind kind);

struct WeightSignature {
  std::vector<std::pair<GradedComponent, unsigned>> occupancy;  // counts > 0 only
  unsigned m = 0;
  int weight = 0;

  std::string to_string() const;
  bool operator==(const WeightSignature&) const = default;
};

std::vector<WeightSignature> enumerate_signatures(ComplexKind kind, int weight, unsigned m);

// A chain word: nondecreasing letter indices into letters(kind).
using Word = std::vector<std::size_t>;

struct WeightedChainBasis {
  ComplexKind kind = ComplexKind::Tangent;
  int weight = 0;
  unsigned m = 0;
  std::vector<WeightSignature> signatures;
  std::vector<Word> words;
  std::map<Word, std::size_t> position;

  std::size_t dimension() const { return words.size(); }
  std::string word_label(std::size_t i) const;
};

WeightedChainBasis chain_basis(ComplexKind kind, int weight, unsigned m);
// Π C(dim, count) over even components times Π C(dim+count-1, count) over odd ones.
std::size_t signature_dimension(const WeightSignature& sig);
// Smallest and largest m with a possibly nonempty chain space.
std::pair<unsigned, unsigned> chain_range(ComplexKind kind, int weight);

// ∂: C_m -> C_{m-1}, denominators cleared by a common monomial.
PolyMatrix boundary_matrix(ComplexKind kind, int weight, unsigned m, const LieAlgebra4& L);

struct BettiRow {
  unsigned m = 0;
  std::size_t dim = 0;
  std::size_t ker = 0;
  long betti = 0;
  bool operator==(const BettiRow&) const = default;
};

struct BettiReport {
  ComplexKind kind = ComplexKind::Tangent;
  AlgebraOrigin algebra;
  int weight = 0;
  std::vector<BettiRow> rows;
  long euler = 0;
  RankMode mode;
  std::optional<Assignment> specialization;

  long betti_euler() const;
};

BettiReport homology_report(ComplexKind kind, int weight, const LieAlgebra4& L, const RankMode& mode);
RankResult strata_report(ComplexKind kind, int weight, unsigned m, const LieAlgebra4& L, const Assignment& at);

}  // namespace superhom
