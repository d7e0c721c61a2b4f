#include "baxterize/family.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace baxterize {

namespace {

void require(bool ok, const std::string &msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void FamilySpec::validate() const {
  switch (family) {
    case Family::GLq:
      require(n >= 2, "GLq requires n >= 2");
      require(q > 0.0, "GLq requires q > 0");
      require(std::abs(q - 1.0) > 1e-12,
              "GLq requires q != 1 (repeated eigenvalues)");
      break;
    case Family::StandardSO:
      require(n == 3 || n == 4,
              "standard orthogonal family is cataloged for N = 3, 4 only");
      require(q > 0.0 && std::abs(q - 1.0) > 1e-12,
              "standard orthogonal family requires q > 0, q != 1");
      break;
    case Family::StandardSp:
      require(n == 4, "standard symplectic family is cataloged for N = 4 only");
      require(q > 0.0 && std::abs(q - 1.0) > 1e-12,
              "standard symplectic family requires q > 0, q != 1");
      break;
    case Family::ExoticSO:
      require(n >= 3, "exotic orthogonal family requires N >= 3");
      require(q > 0.0, "exotic family requires q > 0");
      break;
    case Family::ExoticSp:
      require(n >= 4 && n % 2 == 0,
              "exotic symplectic family requires even N >= 4");
      require(q > 0.0, "exotic family requires q > 0");
      break;
    case Family::S03:
      require(n == 2, "S03 is a 4x4 family (N = 2)");
      break;
    case Family::S14:
      require(n == 2, "S14 is a 4x4 family (N = 2)");
      require(std::abs(q) > 1e-300, "S14 requires q != 0");
      break;
    case Family::AffineSl2:
      require(n == 2, "affine sl2 family is 4x4 (N = 2)");
      require(q > 0.0 && std::abs(q - 1.0) > 1e-12,
              "affine sl2 family requires q > 0, q != 1");
      break;
    case Family::Vertex6:
      require(n == 2, "six-vertex family is 4x4 (N = 2)");
      require(gamma > 0.0, "six-vertex family requires gamma > 0");
      break;
    case Family::Vertex8:
      require(n == 2, "eight-vertex family is 4x4 (N = 2)");
      require(p > 0.0 && p < 1.0, "eight-vertex nome must satisfy 0 < p < 1");
      require(q > 0.0, "eight-vertex family requires q > 0");
      require(truncation >= 1, "eight-vertex truncation must be >= 1");
      break;
    case Family::Nested:
      require(n >= 2, "nested sequence requires total dimension >= 2");
      break;
  }
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  os << family_name(family) << " n=" << n;
  switch (family) {
    case Family::Vertex6:
      os << " gamma=" << gamma;
      break;
    case Family::Vertex8:
      os << " p=" << p << " q=" << q << " trunc=" << truncation;
      break;
    case Family::Nested:
      break;
    case Family::StandardSO:
    case Family::StandardSp:
      os << " q=" << q
         << " variant=" << (variant == CoefficientVariant::A ? "a" : "b");
      break;
    default:
      os << " q=" << q;
      break;
  }
  return os.str();
}

std::string family_name(Family family) {
  switch (family) {
    case Family::GLq: return "glq";
    case Family::StandardSO: return "soq";
    case Family::StandardSp: return "spq";
    case Family::ExoticSO: return "exotic-so";
    case Family::ExoticSp: return "exotic-sp";
    case Family::S03: return "s03";
    case Family::S14: return "s14";
    case Family::AffineSl2: return "affine";
    case Family::Vertex6: return "vertex6";
    case Family::Vertex8: return "vertex8";
    case Family::Nested: return "nested";
  }
  return "unknown";
}

std::optional<Family> family_from_name(const std::string &name) {
  if (name == "glq") return Family::GLq;
  if (name == "soq") return Family::StandardSO;
  if (name == "spq") return Family::StandardSp;
  if (name == "exotic-so") return Family::ExoticSO;
  if (name == "exotic-sp") return Family::ExoticSp;
  if (name == "s03") return Family::S03;
  if (name == "s14") return Family::S14;
  if (name == "affine") return Family::AffineSl2;
  if (name == "vertex6") return Family::Vertex6;
  if (name == "vertex8") return Family::Vertex8;
  if (name == "nested") return Family::Nested;
  return std::nullopt;
}

}  // namespace baxterize
