#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace baxterize {

enum class Family {
  GLq,        // two-projector deformation family, any n >= 2
  StandardSO, // orthogonal three-projector family (supported N: 3, 4)
  StandardSp, // symplectic three-projector family (supported N: 4)
  ExoticSO,   // two-projector singlet family, N >= 3
  ExoticSp,   // two-projector singlet family, even N >= 4
  S03,        // 4x4 family with complex projectors
  S14,        // 4x4 family with three projectors and free coefficient
  AffineSl2,  // 4x4 affine vector-representation family
  Vertex6,    // six-vertex trigonometric family
  Vertex8,    // eight-vertex family, truncated infinite products
  Nested,     // nested projector sequence, any dimension (basis only)
};

/// Selects between the two printed coefficient choices for the neutral
/// projector of the standard orthogonal/symplectic families.
enum class CoefficientVariant { A, B };

struct FamilySpec {
  Family family = Family::GLq;
  std::size_t n = 2;       // base dimension N (nested: total dimension)
  double q = 1.0;          // deformation, q = e^h
  int epsilon = +1;        // +1 orthogonal, -1 symplectic
  double gamma = 1.0;      // six-vertex anisotropy
  double p = 0.1;          // eight-vertex nome, 0 < p < 1
  int truncation = 40;     // eight-vertex product truncation order
  CoefficientVariant variant = CoefficientVariant::A;

  /// Throws std::invalid_argument when parameters are outside the family's
  /// domain (e.g. q = 1 for GLq, odd N for the symplectic families).
  void validate() const;

  std::string describe() const;
};

std::string family_name(Family family);
std::optional<Family> family_from_name(const std::string &name);

}  // namespace baxterize
